#include "luinv/perm.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace luinv {

namespace detail {
// Library-internal construction of already-canonical orbit keys.
struct OrbitKeyAccess {
  static OrbitKey make(PermTuple canonical_tuple, bool connected) {
    return OrbitKey(std::move(canonical_tuple), connected);
  }
};
}  // namespace detail

namespace {

OrbitKey make_key(PermTuple canonical_tuple, bool connected) {
  return detail::OrbitKeyAccess::make(std::move(canonical_tuple), connected);
}

// Conjugator searches scan all m! relabelings; components of star products
// can exceed desk scale, so keep an explicit cap.
constexpr int kMaxCanonicalDegree = 11;
// Enumeration materializes the full S_m table when arity >= 2.
constexpr int kMaxTableDegree = 10;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max())
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(p);
}

std::uint64_t factorial_u64(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

struct Dsu {
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
  std::vector<int> parent;
};

}  // namespace

Permutation Permutation::identity(int size) {
  if (size < 1) throw PreconditionError("permutation size must be positive");
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images_one_based) {
  std::vector<int> images(images_one_based.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = images_one_based[i] - 1;
  return from_images(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images_zero_based) {
  const int m = static_cast<int>(images_zero_based.size());
  if (m < 1) throw ParseError("permutation must have at least one point");
  std::vector<char> seen(m, 0);
  for (int v : images_zero_based) {
    if (v < 0 || v >= m || seen[v])
      throw ParseError("permutation images are not a bijection on {1..m}");
    seen[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images_zero_based);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return from_images(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw ShapeError("compose: size mismatch");
  std::vector<int> images(p.size());
  for (int i = 0; i < p.size(); ++i) images[i] = p.apply(q.apply(i));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

PermTuple::PermTuple(std::vector<Permutation> slots) : slots_(std::move(slots)) {
  if (slots_.empty())
    throw PreconditionError("tuple arity must be at least 1 (k >= 2)");
  m_ = slots_.front().size();
  if (m_ < 1) throw PreconditionError("tuple degree must be positive");
  for (const auto& s : slots_)
    if (s.size() != m_) throw ShapeError("tuple slots must share one degree");
}

std::strong_ordering operator<=>(const PermTuple& a, const PermTuple& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.slots_.size() <=> b.slots_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.slots_.size(); ++i)
    if (auto c = a.slots_[i] <=> b.slots_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

PermTuple conjugate(const PermTuple& t, const Permutation& pi) {
  if (pi.size() != t.degree()) throw ShapeError("conjugate: size mismatch");
  const Permutation pi_inv = pi.inverse();
  std::vector<Permutation> slots;
  slots.reserve(t.arity());
  for (const auto& s : t.slots()) {
    std::vector<int> images(t.degree());
    for (int x = 0; x < t.degree(); ++x) images[x] = pi.apply(s.apply(pi_inv.apply(x)));
    slots.push_back(Permutation::from_images(std::move(images)));
  }
  return PermTuple(std::move(slots));
}

std::strong_ordering operator<=>(const OrbitKey& a, const OrbitKey& b) {
  return a.tuple_ <=> b.tuple_;
}

OrbitKey::OrbitKey(const PermTuple& representative)
    : OrbitKey(canonical_form(representative).key) {}

bool is_connected(const PermTuple& t) {
  const int m = t.degree();
  Dsu dsu(m);
  for (const auto& s : t.slots())
    for (int x = 0; x < m; ++x) dsu.unite(x, s.apply(x));
  const int root = dsu.find(0);
  for (int x = 1; x < m; ++x)
    if (dsu.find(x) != root) return false;
  return true;
}

CanonicalResult canonical_form(const PermTuple& t) {
  const int m = t.degree();
  const int r = t.arity();
  if (m > kMaxCanonicalDegree)
    throw BudgetError("canonical_form: degree " + std::to_string(m) +
                      " exceeds the conjugator-search cap of " +
                      std::to_string(kMaxCanonicalDegree));

  // Lexicographic minimum over all m! conjugations. Candidates are scanned
  // in ascending order with entry-level early exit against the incumbent.
  std::vector<int> best(static_cast<std::size_t>(r) * m);
  for (int i = 0; i < r; ++i)
    std::copy(t.slot(i).images().begin(), t.slot(i).images().end(),
              best.begin() + static_cast<std::size_t>(i) * m);
  std::vector<int> witness(m);
  std::iota(witness.begin(), witness.end(), 0);

  std::vector<int> pi(m), pi_inv(m);
  std::vector<int> scratch(best.size());
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin(), pi.end())) {
    for (int x = 0; x < m; ++x) pi_inv[pi[x]] = x;
    bool better = false;
    bool worse = false;
    for (int i = 0; i < r && !worse; ++i) {
      const auto& sigma = t.slot(i).images();
      for (int x = 0; x < m; ++x) {
        const int v = pi[sigma[pi_inv[x]]];
        scratch[static_cast<std::size_t>(i) * m + x] = v;
        if (!better) {
          const int b = best[static_cast<std::size_t>(i) * m + x];
          if (v < b) {
            better = true;
          } else if (v > b) {
            worse = true;
            break;
          }
        }
      }
    }
    if (better && !worse) {
      best.swap(scratch);
      witness = pi;
    }
  }

  std::vector<Permutation> slots;
  slots.reserve(r);
  for (int i = 0; i < r; ++i)
    slots.push_back(Permutation::from_images(
        std::vector<int>(best.begin() + static_cast<std::size_t>(i) * m,
                         best.begin() + static_cast<std::size_t>(i + 1) * m)));
  PermTuple canonical(std::move(slots));
  const bool connected = is_connected(t);
  return CanonicalResult{make_key(std::move(canonical), connected),
                         Permutation::from_images(std::move(witness))};
}

std::vector<OrbitKey> components(const PermTuple& t) {
  const int m = t.degree();
  const int r = t.arity();
  Dsu dsu(m);
  for (const auto& s : t.slots())
    for (int x = 0; x < m; ++x) dsu.unite(x, s.apply(x));

  // Blocks keyed by root; ascending scan keeps labels sorted inside a block,
  // so local relabeling preserves the relative order of the originals.
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(m, -1);
  for (int x = 0; x < m; ++x) {
    const int root = dsu.find(x);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(x);
  }

  std::vector<OrbitKey> out;
  out.reserve(blocks.size());
  std::vector<int> local(m, -1);
  for (const auto& block : blocks) {
    for (std::size_t pos = 0; pos < block.size(); ++pos) local[block[pos]] = static_cast<int>(pos);
    std::vector<Permutation> slots;
    slots.reserve(r);
    for (const auto& s : t.slots()) {
      std::vector<int> images(block.size());
      for (std::size_t pos = 0; pos < block.size(); ++pos)
        images[pos] = local[s.apply(block[pos])];
      slots.push_back(Permutation::from_images(std::move(images)));
    }
    out.push_back(canonical_form(PermTuple(std::move(slots))).key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermTuple star(const PermTuple& t1, const PermTuple& t2) {
  if (t1.arity() != t2.arity()) throw ShapeError("star: arity mismatch");
  const int m1 = t1.degree();
  const int m2 = t2.degree();
  std::vector<Permutation> slots;
  slots.reserve(t1.arity());
  for (int i = 0; i < t1.arity(); ++i) {
    std::vector<int> images(m1 + m2);
    for (int a = 0; a < m1; ++a) images[a] = t1.slot(i).apply(a);
    for (int a = 0; a < m2; ++a) images[m1 + a] = t2.slot(i).apply(a) + m1;
    slots.push_back(Permutation::from_images(std::move(images)));
  }
  return PermTuple(std::move(slots));
}

std::uint64_t enumeration_cost(int k, int m) {
  const std::uint64_t fact = factorial_u64(m);
  std::uint64_t cost = 1;
  for (int i = 0; i < k - 1; ++i) cost = saturating_mul(cost, fact);
  cost = saturating_mul(cost, static_cast<std::uint64_t>(m));
  cost = saturating_mul(cost, static_cast<std::uint64_t>(k - 1));
  return cost;
}

namespace {

// All of S_m in lexicographic order, flat int8 rows.
struct PermTable {
  int m = 0;
  std::size_t count = 0;
  std::vector<std::int8_t> flat;
  const std::int8_t* row(std::size_t i) const { return flat.data() + i * m; }
};

PermTable build_perm_table(int m) {
  PermTable tab;
  tab.m = m;
  tab.count = static_cast<std::size_t>(factorial_u64(m));
  tab.flat.reserve(tab.count * m);
  std::vector<std::int8_t> p(m);
  std::iota(p.begin(), p.end(), std::int8_t{0});
  do {
    tab.flat.insert(tab.flat.end(), p.begin(), p.end());
  } while (std::next_permutation(p.begin(), p.end()));
  return tab;
}

std::vector<std::int8_t> cycle_type_of(const std::int8_t* images, int m) {
  std::vector<std::int8_t> lengths;
  std::vector<char> seen(m, 0);
  for (int x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::int8_t len = 0;
    for (int y = x; !seen[y]; y = images[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// flags[i] is true iff table row i is the lex-least member of its conjugacy
// class; ascending scan order makes the first row of each cycle type least.
std::vector<char> class_lexmin_flags(const PermTable& tab) {
  std::vector<char> flags(tab.count, 0);
  std::set<std::vector<std::int8_t>> seen;
  for (std::size_t i = 0; i < tab.count; ++i)
    flags[i] = seen.insert(cycle_type_of(tab.row(i), tab.m)).second ? 1 : 0;
  return flags;
}

bool rows_connected(const std::vector<const std::int8_t*>& rows, int m) {
  Dsu dsu(m);
  for (const std::int8_t* row : rows)
    for (int x = 0; x < m; ++x) dsu.unite(x, row[x]);
  const int root = dsu.find(0);
  for (int x = 1; x < m; ++x)
    if (dsu.find(x) != root) return false;
  return true;
}

PermTuple tuple_from_rows(const std::vector<const std::int8_t*>& rows, int m) {
  std::vector<Permutation> slots;
  slots.reserve(rows.size());
  for (const std::int8_t* row : rows)
    slots.push_back(Permutation::from_images(std::vector<int>(row, row + m)));
  return PermTuple(std::move(slots));
}

// Centralizer of sigma, stored as (pi, pi_inverse) flat rows; the identity
// is omitted since it never rejects anything.
struct Centralizer {
  int m = 0;
  std::size_t count = 0;
  std::vector<std::int8_t> pis;
  std::vector<std::int8_t> inverses;
};

Centralizer centralizer_of(const PermTable& tab, const std::int8_t* sigma) {
  Centralizer z;
  z.m = tab.m;
  for (std::size_t i = 1; i < tab.count; ++i) {
    const std::int8_t* pi = tab.row(i);
    bool commutes = true;
    for (int x = 0; x < tab.m; ++x) {
      if (pi[sigma[x]] != sigma[pi[x]]) {
        commutes = false;
        break;
      }
    }
    if (!commutes) continue;
    z.pis.insert(z.pis.end(), pi, pi + tab.m);
    for (int x = 0; x < tab.m; ++x) z.inverses.push_back(0);
    std::int8_t* inv = z.inverses.data() + z.count * tab.m;
    for (int x = 0; x < tab.m; ++x) inv[pi[x]] = static_cast<std::int8_t>(x);
    ++z.count;
  }
  return z;
}

// True iff no centralizer element conjugates the rest-slots to something
// lexicographically smaller; ties keep the tuple canonical.
bool rest_is_minimal(const std::vector<const std::int8_t*>& rest, int m, const Centralizer& z) {
  for (std::size_t c = 0; c < z.count; ++c) {
    const std::int8_t* pi = z.pis.data() + c * m;
    const std::int8_t* inv = z.inverses.data() + c * m;
    for (const std::int8_t* sigma : rest) {
      for (int x = 0; x < m; ++x) {
        const std::int8_t v = pi[sigma[inv[x]]];
        if (v != sigma[x]) {
          if (v < sigma[x]) return false;
          goto next_candidate;
        }
      }
    }
  next_candidate:;
  }
  return true;
}

// Orbits of S_m^1 need no table: a permutation is canonical iff it is the
// first of its cycle type in ascending order.
std::vector<OrbitKey> enumerate_arity_one(int m, bool connected_only) {
  std::vector<OrbitKey> out;
  std::set<std::vector<std::int8_t>> seen;
  std::vector<std::int8_t> p(m);
  std::iota(p.begin(), p.end(), std::int8_t{0});
  do {
    auto type = cycle_type_of(p.data(), m);
    const bool transitive = type.size() == 1;
    if (connected_only && !transitive) continue;
    if (!seen.insert(std::move(type)).second) continue;
    out.push_back(make_key(
        PermTuple({Permutation::from_images(std::vector<int>(p.begin(), p.end()))}),
        transitive));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<OrbitKey> enumerate_orbits(int k, int m, bool connected_only,
                                       const EnumerateOptions& opts) {
  if (k < 2) throw PreconditionError("enumerate_orbits: k >= 2 required");
  if (m < 1) throw PreconditionError("enumerate_orbits: m >= 1 required");
  const std::uint64_t cost = enumeration_cost(k, m);
  if (cost > opts.budget)
    throw BudgetError("enumerate_orbits: estimated " + std::to_string(cost) +
                      " elementary steps exceed the budget of " + std::to_string(opts.budget) +
                      "; use the counting formulas instead");
  const int r = k - 1;
  if (r == 1) return enumerate_arity_one(m, connected_only);
  if (m > kMaxTableDegree)
    throw BudgetError("enumerate_orbits: degree " + std::to_string(m) +
                      " exceeds the S_m table cap of " + std::to_string(kMaxTableDegree));

  const PermTable tab = build_perm_table(m);
  const std::vector<char> lexmin = class_lexmin_flags(tab);

  // A canonical tuple has a class-least first slot; the remaining slots must
  // be minimal under the first slot's centralizer. Scanning first slots in
  // ascending order and rest-tuples in odometer order yields sorted output.
  std::vector<std::size_t> heads;
  for (std::size_t i = 0; i < tab.count; ++i)
    if (lexmin[i]) heads.push_back(i);

  auto process_head = [&](std::size_t head) {
    std::vector<OrbitKey> local;
    const std::int8_t* sigma1 = tab.row(head);
    const Centralizer z = centralizer_of(tab, sigma1);
    const bool full_group = (z.count + 1 == tab.count);

    std::vector<std::size_t> rest_idx(r - 1, 0);
    std::vector<const std::int8_t*> rest(r - 1);
    std::vector<const std::int8_t*> rows(r);
    rows[0] = sigma1;
    for (;;) {
      for (int j = 0; j < r - 1; ++j) rest[j] = tab.row(rest_idx[j]);
      bool keep;
      if (full_group && r == 2) {
        keep = lexmin[rest_idx[0]] != 0;  // centralizer is all of S_m
      } else {
        keep = rest_is_minimal(rest, m, z);
      }
      if (keep) {
        for (int j = 0; j < r - 1; ++j) rows[j + 1] = rest[j];
        const bool connected = rows_connected(rows, m);
        if (!connected_only || connected)
          local.push_back(make_key(tuple_from_rows(rows, m), connected));
      }
      int j = r - 2;
      for (; j >= 0; --j) {
        if (++rest_idx[j] < tab.count) break;
        rest_idx[j] = 0;
      }
      if (j < 0) break;
    }
    return local;
  };

  std::vector<std::vector<OrbitKey>> per_head(heads.size());
  if (opts.jobs > 1 && heads.size() > 1) {
    std::vector<std::future<std::vector<OrbitKey>>> futures;
    futures.reserve(heads.size());
    for (std::size_t h = 0; h < heads.size(); ++h)
      futures.push_back(std::async(std::launch::async,
                                   [&process_head, &heads, h] { return process_head(heads[h]); }));
    for (std::size_t h = 0; h < heads.size(); ++h) per_head[h] = futures[h].get();
  } else {
    for (std::size_t h = 0; h < heads.size(); ++h) per_head[h] = process_head(heads[h]);
  }

  std::vector<OrbitKey> out;
  for (auto& chunk : per_head)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

CoveringGraph to_covering_graph(const PermTuple& t) {
  CoveringGraph g;
  g.num_vertices = t.degree();
  g.edges.reserve(static_cast<std::size_t>(t.arity()) * t.degree());
  for (int i = 0; i < t.arity(); ++i)
    for (int l = 0; l < t.degree(); ++l)
      g.edges.push_back(CoveringEdge{l + 1, t.slot(i).apply(l) + 1, i + 1});
  return g;
}

PermTuple from_covering_graph(const CoveringGraph& g) {
  const int m = g.num_vertices;
  if (m < 1) throw PreconditionError("covering graph needs at least one vertex");
  int r = 0;
  for (const auto& e : g.edges) r = std::max(r, e.color);
  if (r < 1) throw PreconditionError("covering graph needs at least one color");

  std::vector<std::vector<int>> out_target(r, std::vector<int>(m, -1));
  std::vector<std::vector<char>> in_seen(r, std::vector<char>(m, 0));
  for (const auto& e : g.edges) {
    if (e.source < 1 || e.source > m || e.target < 1 || e.target > m || e.color < 1)
      throw PreconditionError("covering edge out of range");
    auto& tgt = out_target[e.color - 1][e.source - 1];
    if (tgt != -1) throw PreconditionError("vertex has two outgoing edges of one color");
    tgt = e.target - 1;
    auto& in = in_seen[e.color - 1][e.target - 1];
    if (in) throw PreconditionError("vertex has two incoming edges of one color");
    in = 1;
  }
  std::vector<Permutation> slots;
  slots.reserve(r);
  for (int i = 0; i < r; ++i) {
    for (int v = 0; v < m; ++v)
      if (out_target[i][v] < 0)
        throw PreconditionError("missing color-" + std::to_string(i + 1) +
                                " edge at vertex " + std::to_string(v + 1));
    slots.push_back(Permutation::from_images(out_target[i]));
  }
  return PermTuple(std::move(slots));
}

}  // namespace luinv
