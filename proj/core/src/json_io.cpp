#include "lpc/json_io.hpp"

#include <set>
#include <string>

namespace lpc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  fail(errc::json_schema_error, what);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

IntVec as_int_vector(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(as_int(x, what));
  return v;
}

IntMat as_int_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) bad(std::string(what) + " must be a nonempty array of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(as_int_vector(r, what));
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) bad(std::string(what) + " has ragged rows");
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols; ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

}  // namespace

DatumBundle datum_from_json(const json& j) {
  if (!j.is_object()) bad("datum must be a JSON object");
  static const std::set<std::string> known = {
      "rank", "simple_roots", "simple_coroots", "galois_generators",
      "galois_lattice_matrices"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) bad("unknown datum field '" + it.key() + "'");
  for (const char* req : {"rank", "simple_roots", "simple_coroots"})
    if (!j.contains(req)) bad(std::string("datum is missing '") + req + "'");

  int rank = static_cast<int>(as_int(j["rank"], "rank"));
  auto read_rows = [&](const json& arr, const char* what) {
    if (!arr.is_array()) bad(std::string(what) + " must be an array");
    std::vector<IntVec> rows;
    for (const auto& r : arr) rows.push_back(as_int_vector(r, what));
    return rows;
  };
  BasedRootDatum datum =
      BasedRootDatum::create(rank, read_rows(j["simple_roots"], "simple_roots"),
                             read_rows(j["simple_coroots"], "simple_coroots"));

  GaloisAction action = GaloisAction::trivial(datum);
  if (j.contains("galois_generators")) {
    const json& gens = j["galois_generators"];
    if (!gens.is_array()) bad("galois_generators must be an array");
    std::vector<std::vector<int>> perms;
    for (const auto& g : gens) {
      IntVec v = as_int_vector(g, "galois generator");
      std::vector<int> p;
      for (auto x : v) p.push_back(static_cast<int>(x));
      perms.push_back(std::move(p));
    }
    std::vector<IntMat> mats;
    if (j.contains("galois_lattice_matrices")) {
      const json& jm = j["galois_lattice_matrices"];
      if (!jm.is_array()) bad("galois_lattice_matrices must be an array");
      for (const auto& m : jm) mats.push_back(as_int_matrix(m, "lattice matrix"));
    }
    action = GaloisAction::create(datum, std::move(perms), std::move(mats));
  } else if (j.contains("galois_lattice_matrices")) {
    bad("galois_lattice_matrices requires galois_generators");
  }
  return DatumBundle{std::move(datum), std::move(action)};
}

json datum_to_json(const BasedRootDatum& d) {
  json roots = json::array();
  for (const auto& r : d.simple_roots()) roots.push_back(r);
  json coroots = json::array();
  for (const auto& r : d.simple_coroots()) coroots.push_back(r);
  return json{{"rank", d.rank()},
              {"simple_roots", std::move(roots)},
              {"simple_coroots", std::move(coroots)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("rational must be a string \"p/q\" or an integer");
}

json rational_to_json(const Rational& r) { return r.str(); }

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) bad("vector must be an array of rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json ratvec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(rational_to_json(r));
  return out;
}

Segment segment_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    bad("segment must be an array [sl2_dim, rho_name, rho_dim, exponent]");
  Segment s;
  s.sl2_dim = static_cast<int>(as_int(j[0], "sl2_dim"));
  if (!j[1].is_string()) bad("rho name must be a string");
  s.rho.name = j[1].get<std::string>();
  s.rho.dim = static_cast<int>(as_int(j[2], "rho_dim"));
  s.exponent = rational_from_json(j[3]);
  return s;
}

json segment_to_json(const Segment& s) {
  return json::array({s.sl2_dim, s.rho.name, s.rho.dim, rational_to_json(s.exponent)});
}

GLnLParameter lparam_from_json(const json& j) {
  if (!j.is_object()) bad("parameter must be a JSON object");
  for (const char* req : {"n", "d", "segments"})
    if (!j.contains(req)) bad(std::string("parameter is missing '") + req + "'");
  if (!j["segments"].is_array()) bad("segments must be an array");
  std::vector<Segment> segs;
  for (const auto& s : j["segments"]) segs.push_back(segment_from_json(s));
  return GLnLParameter::create(static_cast<int>(as_int(j["n"], "n")),
                               static_cast<int>(as_int(j["d"], "d")),
                               std::move(segs));
}

json lparam_to_json(const GLnLParameter& p) {
  json segs = json::array();
  for (const Segment& s : p.segments()) segs.push_back(segment_to_json(s));
  return json{{"n", p.n()}, {"d", p.d()}, {"segments", std::move(segs)}};
}

GLnStandardTriple triple_from_json(const json& j) {
  if (!j.is_object()) bad("triple must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "d" && k != "blocks" && k != "n" && k != "mode")
      bad("unknown triple field '" + k + "'");
  }
  for (const char* req : {"d", "blocks"})
    if (!j.contains(req)) bad(std::string("triple is missing '") + req + "'");
  if (!j["blocks"].is_array()) bad("blocks must be an array");
  int d = static_cast<int>(as_int(j["d"], "d"));
  std::vector<TripleBlock> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_object()) bad("block must be a JSON object");
    for (const char* req : {"m", "beta", "tempered"})
      if (!b.contains(req)) bad(std::string("block is missing '") + req + "'");
    TripleBlock tb;
    tb.m = static_cast<int>(as_int(b["m"], "m"));
    tb.beta = rational_from_json(b["beta"]);
    if (!b["tempered"].is_array()) bad("tempered must be an array");
    for (const auto& s : b["tempered"]) tb.tempered.push_back(segment_from_json(s));
    blocks.push_back(std::move(tb));
  }
  GLnStandardTriple t = GLnStandardTriple::create(d, std::move(blocks));
  if (j.contains("n") && as_int(j["n"], "n") != t.n())
    bad("triple field n does not match the block dimensions");
  return t;
}

json triple_to_json(const GLnStandardTriple& t, int n) {
  json blocks = json::array();
  for (const TripleBlock& b : t.blocks()) {
    json segs = json::array();
    for (const Segment& s : b.tempered) segs.push_back(segment_to_json(s));
    blocks.push_back(json{{"m", b.m},
                          {"beta", rational_to_json(b.beta)},
                          {"tempered", std::move(segs)}});
  }
  return json{{"d", t.d()}, {"n", n}, {"blocks", std::move(blocks)}};
}

json intmat_to_json(const IntMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json word_to_json(const std::vector<int>& word) {
  json out = json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

json subset_to_json(const ParabolicSubset& I) {
  json out = json::array();
  for (int i : I.indices) out.push_back(i + 1);
  return out;
}

}  // namespace lpc
