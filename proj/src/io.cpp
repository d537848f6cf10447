#include "luinv/io.hpp"

#include <limits>
#include <sstream>

namespace luinv {

namespace {

std::vector<int> int_array(const Json& node, const char* what) {
  if (!node.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Complex complex_from_json(const Json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    throw ParseError("coefficients must be [re, im] pairs");
  return Complex(node[0].get<double>(), node[1].get<double>());
}

std::vector<Complex> coeffs_from_json(const Json& doc, std::size_t expected) {
  if (!doc.contains("coeffs")) throw ParseError("state document lacks \"coeffs\"");
  const Json& arr = doc.at("coeffs");
  if (!arr.is_array() || arr.size() != expected)
    throw ParseError("state has " + std::to_string(arr.size()) + " coefficients, expected " +
                     std::to_string(expected));
  std::vector<Complex> out;
  out.reserve(expected);
  for (const auto& c : arr) out.push_back(complex_from_json(c));
  return out;
}

Json coeffs_to_json(const std::vector<Complex>& coeffs) {
  Json arr = Json::array();
  for (const Complex& c : coeffs) arr.push_back(Json::array({c.real(), c.imag()}));
  return arr;
}

SystemShape shape_from_json(const Json& doc) {
  if (!doc.contains("dims")) throw ParseError("state document lacks \"dims\"");
  SystemShape shape{int_array(doc.at("dims"), "dims")};
  shape.validate(1);
  return shape;
}

}  // namespace

Json tuple_to_json(const PermTuple& t, int parties) {
  Json perms = Json::array();
  for (const auto& s : t.slots()) perms.push_back(s.one_line());
  return Json{{"k", parties}, {"m", t.degree()}, {"perms", std::move(perms)}};
}

Json orbit_to_json(const OrbitKey& key, int parties) {
  Json doc = tuple_to_json(key.tuple(), parties);
  doc["connected"] = key.connected();
  return doc;
}

ParsedOrbit orbit_from_json(const Json& doc) {
  if (!doc.contains("k") || !doc.contains("m") || !doc.contains("perms"))
    throw ParseError("orbit document needs \"k\", \"m\" and \"perms\"");
  const int parties = doc.at("k").get<int>();
  const int m = doc.at("m").get<int>();
  const Json& perms = doc.at("perms");
  if (!perms.is_array() || perms.empty()) throw ParseError("\"perms\" must be a non-empty array");

  std::vector<Permutation> slots;
  slots.reserve(perms.size());
  for (const auto& p : perms) {
    Permutation perm = Permutation::from_one_line(int_array(p, "perms entry"));
    if (perm.size() != m) throw ParseError("permutation length disagrees with \"m\"");
    slots.push_back(std::move(perm));
  }
  PermTuple tuple(std::move(slots));

  InvariantKind kind;
  if (doc.contains("kind")) {
    const std::string s = doc.at("kind").get<std::string>();
    if (s == "pure")
      kind = InvariantKind::pure;
    else if (s == "mixed")
      kind = InvariantKind::mixed;
    else
      throw ParseError("\"kind\" must be \"pure\" or \"mixed\"");
    const int expected = kind == InvariantKind::pure ? parties - 1 : parties;
    if (tuple.arity() != expected)
      throw ParseError("orbit has " + std::to_string(tuple.arity()) + " permutations, " +
                       s + " kind with k=" + std::to_string(parties) + " needs " +
                       std::to_string(expected));
  } else if (tuple.arity() == parties - 1) {
    kind = InvariantKind::pure;
  } else if (tuple.arity() == parties) {
    kind = InvariantKind::mixed;
  } else {
    throw ParseError("orbit has " + std::to_string(tuple.arity()) +
                     " permutations, expected k-1 (pure) or k (mixed) with k=" +
                     std::to_string(parties));
  }
  return ParsedOrbit{std::move(tuple), parties, kind};
}

Json spec_to_json(const InvariantSpec& spec, int parties) {
  Json doc = orbit_to_json(spec.orbit, parties);
  doc["kind"] = spec.kind == InvariantKind::pure ? "pure" : "mixed";
  return doc;
}

Json state_to_json(const PureState& psi) {
  return Json{{"dims", psi.shape.dims}, {"coeffs", coeffs_to_json(psi.coeffs)}};
}

Json state_to_json(const MixedState& rho) {
  return Json{{"kind", "mixed"}, {"dims", rho.shape.dims}, {"coeffs", coeffs_to_json(rho.coeffs)}};
}

bool is_mixed_state_json(const Json& doc) {
  return doc.contains("kind") && doc.at("kind").is_string() &&
         doc.at("kind").get<std::string>() == "mixed";
}

PureState pure_from_json(const Json& doc) {
  PureState psi;
  psi.shape = shape_from_json(doc);
  psi.coeffs = coeffs_from_json(doc, static_cast<std::size_t>(psi.shape.total_dim()));
  return psi;
}

MixedState mixed_from_json(const Json& doc) {
  MixedState rho;
  rho.shape = shape_from_json(doc);
  const std::size_t n = static_cast<std::size_t>(rho.shape.total_dim());
  rho.coeffs = coeffs_from_json(doc, n * n);
  return rho;
}

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json count_table_to_json(const CountTable& table) {
  Json dims = Json::array();
  for (const BigInt& d : table.dims) dims.push_back(bigint_to_json(d));
  Json connected = Json::array();
  for (const BigInt& u : table.connected) connected.push_back(bigint_to_json(u));
  return Json{{"k", table.k},
              {"max_m", table.max_m},
              {"dims", std::move(dims)},
              {"connected", std::move(connected)}};
}

std::string count_table_to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "degree,dim,connected\n";
  for (int m = 1; m <= table.max_m; ++m)
    out << m << ',' << table.dims[m - 1].str() << ',' << table.connected[m - 1].str() << '\n';
  return out.str();
}

Json report_to_json(const CheckReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.details)
    cases.push_back(Json{{"label", c.label}, {"residual", c.residual}, {"ok", c.ok}});
  Json doc{{"name", report.name},
           {"passed", report.passed},
           {"tolerance", report.tolerance},
           {"max_residual", report.max_residual},
           {"details", std::move(cases)}};
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

std::string covering_to_dot(const CoveringGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 1; v <= g.num_vertices; ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges)
    out << "  " << e.source << " -> " << e.target << " [label=\"c" << e.color << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace luinv
