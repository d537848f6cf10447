#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "luinv/errors.hpp"

namespace luinv {

// A permutation of {1..m} in one-line notation. Points are 0-based
// internally; the 1-based one-line form appears only at I/O boundaries.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int size);

  // images_one_based[l] = sigma(l+1), values in 1..m. Throws ParseError if
  // the sequence is not a bijection.
  static Permutation from_one_line(const std::vector<int>& images_one_based);

  // Trusted constructor from a 0-based image map. Validates bijectivity.
  static Permutation from_images(std::vector<int> images_zero_based);

  int size() const { return static_cast<int>(images_.size()); }
  // 0-based application.
  int apply(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  bool is_identity() const;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

// result(l) = p(q(l)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// An r-tuple of permutations of the same degree m. Encodes an m-fold
// covering of the bouquet graph with r colored loops: slot i is the
// color-i edge permutation. r = k-1 for pure-state invariants, r = k for
// mixed-state ones.
class PermTuple {
public:
  explicit PermTuple(std::vector<Permutation> slots);

  int degree() const { return m_; }
  int arity() const { return static_cast<int>(slots_.size()); }
  const Permutation& slot(int i) const { return slots_[i]; }
  const std::vector<Permutation>& slots() const { return slots_; }

  friend bool operator==(const PermTuple&, const PermTuple&) = default;
  // Lexicographic on the concatenated one-line notations.
  friend std::strong_ordering operator<=>(const PermTuple& a, const PermTuple& b);

private:
  int m_ = 0;
  std::vector<Permutation> slots_;
};

// pi . (s_1,...,s_r) = (pi s_1 pi^-1, ..., pi s_r pi^-1).
PermTuple conjugate(const PermTuple& t, const Permutation& pi);

namespace detail {
struct OrbitKeyAccess;
}

// The canonical representative of a simultaneous-conjugation orbit,
// i.e. one isomorphism class of coverings and one invariant polynomial.
class OrbitKey {
public:
  // Canonicalizes the given representative.
  explicit OrbitKey(const PermTuple& representative);

  const PermTuple& tuple() const { return tuple_; }
  int degree() const { return tuple_.degree(); }
  int arity() const { return tuple_.arity(); }
  bool connected() const { return connected_; }

  friend bool operator==(const OrbitKey& a, const OrbitKey& b) {
    return a.tuple_ == b.tuple_;
  }
  // Total order: by degree, then arity, then tuple entries.
  friend std::strong_ordering operator<=>(const OrbitKey& a, const OrbitKey& b);

private:
  OrbitKey(PermTuple canonical_tuple, bool connected)
      : tuple_(std::move(canonical_tuple)), connected_(connected) {}

  friend struct detail::OrbitKeyAccess;

  PermTuple tuple_;
  bool connected_;
};

struct CanonicalResult {
  OrbitKey key;
  Permutation witness;  // conjugate(t, witness) == key.tuple()
};

// Lexicographic minimum of the orbit over all m! conjugations.
CanonicalResult canonical_form(const PermTuple& t);

// Connected components as canonical orbits (sorted multiset); block labels
// keep their relative order before canonicalization.
std::vector<OrbitKey> components(const PermTuple& t);

struct EnumerateOptions {
  std::uint64_t budget = 1'000'000'000;  // elementary-step cap
  int jobs = 1;
};

// Exactly one canonical representative per orbit of S_m^(k-1) under
// simultaneous conjugation, in ascending canonical order.
std::vector<OrbitKey> enumerate_orbits(int k, int m, bool connected_only,
                                       const EnumerateOptions& opts = {});

// True iff the group generated by the slots acts transitively on {1..m}.
bool is_connected(const PermTuple& t);

// Block-diagonal join: slot i acts as t1's slot on {1..m1} and as the
// shifted copy of t2's slot on {m1+1..m1+m2}. Disjoint union of coverings.
PermTuple star(const PermTuple& t1, const PermTuple& t2);

// Nominal elementary-step estimate for enumerate_orbits(k, m, .):
// (m!)^(k-1) * m * (k-1), saturating at uint64 max.
std::uint64_t enumeration_cost(int k, int m);

struct CoveringEdge {
  int source;  // 1-based vertex
  int target;  // 1-based vertex
  int color;   // 1-based color
  friend bool operator==(const CoveringEdge&, const CoveringEdge&) = default;
};

// An m-fold covering of the bouquet with r loops: per color, the edges
// form a perfect matching of out/in degree one at every vertex.
struct CoveringGraph {
  int num_vertices = 0;
  std::vector<CoveringEdge> edges;  // ordered by (color, source)
};

CoveringGraph to_covering_graph(const PermTuple& t);
// Inverse of to_covering_graph. Validates the per-color degree invariant.
PermTuple from_covering_graph(const CoveringGraph& g);

}  // namespace luinv
