#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liaison/errors.hpp"
#include "liaison/hilbert.hpp"
#include "liaison/layers.hpp"
#include "liaison/lifting.hpp"
#include "liaison/linkage.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

using Json = nlohmann::ordered_json;

namespace schema {
inline constexpr const char* ideal = "liaison.ideal/1";
inline constexpr const char* hvector = "liaison.hvector/1";
inline constexpr const char* decomposition = "liaison.decomposition/1";
inline constexpr const char* matrix = "liaison.matrix/1";
inline constexpr const char* lifted = "liaison.lifted/1";
inline constexpr const char* certificate = "liaison.certificate/1";
inline constexpr const char* report = "liaison.report/1";
}  // namespace schema

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline void expect_schema(const Json& j, const char* name) {
  if (j.is_object() && j.contains("schema") && j.at("schema").get<std::string>() != name)
    throw InputError("expected schema " + std::string(name) + ", got " + j.at("schema").get<std::string>());
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

// --- monomials and ideals --------------------------------------------------

inline Json to_json(const Monomial& m) {
  Json a = Json::array();
  for (auto e : m.exponents()) a.push_back(e);
  return a;
}

inline Monomial monomial_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("monomial must be an array of " + std::to_string(n) + " exponents");
  std::vector<Exponent> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw InputError("exponents must be non-negative integers");
    e.push_back(x.get<Exponent>());
  }
  return Monomial(std::move(e));
}

inline Json to_json(const MonomialIdeal& J) {
  Json gens = Json::array();
  for (const auto& g : J.generators()) gens.push_back(to_json(g));
  return Json{{"schema", schema::ideal}, {"n", J.ambient()}, {"gens", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  return detail::guarded("ideal", [&] {
    detail::expect_schema(j, schema::ideal);
    const auto& nj = detail::field(j, "n");
    if (!nj.is_number_integer() || nj.get<std::int64_t>() < 0) throw InputError("\"n\" must be a non-negative integer");
    const auto n = nj.get<std::size_t>();
    const auto& gj = detail::field(j, "gens");
    if (!gj.is_array()) throw InputError("\"gens\" must be an array");
    std::vector<Monomial> gens;
    for (const auto& g : gj) gens.push_back(monomial_from_json(g, n));
    return MonomialIdeal(n, std::move(gens));
  });
}

// --- Hilbert functions and layers -----------------------------------------

inline Json to_json(const HVector& h) {
  Json kind = h.is_artinian() ? Json("artinian") : Json{{"truncated", *h.horizon()}};
  return Json{{"schema", schema::hvector}, {"h", h.values()}, {"kind", std::move(kind)}};
}

inline HVector hvector_from_json(const Json& j) {
  return detail::guarded("h-vector", [&] {
    detail::expect_schema(j, schema::hvector);
    auto values = detail::field(j, "h").get<std::vector<std::int64_t>>();
    const auto& kind = detail::field(j, "kind");
    if (kind.is_string() && kind.get<std::string>() == "artinian") return HVector::artinian(std::move(values));
    if (kind.is_object() && kind.contains("truncated")) {
      const auto horizon = kind.at("truncated").get<std::size_t>();
      if (values.size() != horizon + 1) throw InputError("truncated h-vector length does not match its horizon");
      return HVector::truncated(std::move(values));
    }
    throw InputError("h-vector kind must be \"artinian\" or {\"truncated\": d}");
  });
}

inline Json to_json(const LayerDecomposition& D) {
  Json layers = Json::array();
  for (const auto& L : D.layers) layers.push_back(to_json(L));
  return Json{{"schema", schema::decomposition}, {"alpha", D.alpha()}, {"layers", std::move(layers)}};
}

// --- matrices and lifts ---------------------------------------------------

inline Json to_json(const LiftingMatrix& A) {
  Json kind;
  switch (A.kind) {
    case MatrixKind::bf: kind = "bf"; break;
    case MatrixKind::t_lift: kind = Json{{"t", A.t}, {"seed", A.seed}}; break;
    case MatrixKind::custom: kind = "custom"; break;
  }
  Json rows = Json::array();
  for (const auto& row : A.rows) {
    Json r = Json::array();
    for (const auto& L : row) r.push_back(L.coefficients);
    rows.push_back(std::move(r));
  }
  return Json{{"schema", schema::matrix}, {"kind", std::move(kind)}, {"n", A.x_count}, {"t", A.t},
              {"row_variables", A.row_variables}, {"rows", std::move(rows)}};
}

inline LiftingMatrix matrix_from_json(const Json& j) {
  return detail::guarded("matrix", [&] {
    detail::expect_schema(j, schema::matrix);
    LiftingMatrix A;
    const auto& kind = detail::field(j, "kind");
    if (kind.is_string() && kind.get<std::string>() == "bf") {
      A.kind = MatrixKind::bf;
    } else if (kind.is_string() && kind.get<std::string>() == "custom") {
      A.kind = MatrixKind::custom;
    } else if (kind.is_object()) {
      A.kind = MatrixKind::t_lift;
      A.seed = detail::field(kind, "seed").get<std::uint64_t>();
    } else {
      throw InputError("matrix kind must be \"bf\", \"custom\" or {\"t\", \"seed\"}");
    }
    A.x_count = detail::field(j, "n").get<std::size_t>();
    A.t = detail::field(j, "t").get<unsigned>();
    if (A.kind == MatrixKind::t_lift && kind.at("t").get<unsigned>() != A.t)
      throw InputError("matrix kind t disagrees with \"t\"");
    A.row_variables = detail::field(j, "row_variables").get<std::vector<std::size_t>>();
    for (const auto& r : detail::field(j, "rows")) {
      std::vector<LinearForm> row;
      for (const auto& c : r) {
        LinearForm L{c.get<std::vector<std::int64_t>>()};
        if (L.ambient() != A.ambient()) throw InputError("linear form has the wrong number of coefficients");
        row.push_back(std::move(L));
      }
      A.rows.push_back(std::move(row));
    }
    if (A.rows.size() != A.row_variables.size()) throw InputError("matrix rows and row_variables differ in length");
    return A;
  });
}

inline Json to_json(const PointConfiguration& P) {
  Json pts = Json::array();
  for (const auto& p : P.points)
    pts.push_back(Json{{"label", to_json(p.label)}, {"coordinates", p.coordinates}});
  return pts;
}

inline Json to_json(const LiftedIdeal& I, const std::optional<PointConfiguration>& points = std::nullopt) {
  Json gens = Json::array();
  for (const auto& g : I.generators) {
    Json f = Json::array();
    for (const auto& r : g.factors) f.push_back(Json::array({r.row, r.column}));
    gens.push_back(std::move(f));
  }
  Json j{{"schema", schema::lifted},
         {"source", to_json(I.source)},
         {"matrix", to_json(I.matrix)},
         {"matrix_hash", matrix_fingerprint(I.matrix)},
         {"generators", std::move(gens)}};
  if (points) j["points"] = to_json(*points);
  return j;
}

/// Reads a lifted ideal; the stored matrix hash must match the embedded matrix
/// and the generators must be the lifts of the source's generators.
inline LiftedIdeal lifted_from_json(const Json& j) {
  return detail::guarded("lifted ideal", [&] {
    detail::expect_schema(j, schema::lifted);
    LiftedIdeal I{ideal_from_json(detail::field(j, "source")), matrix_from_json(detail::field(j, "matrix")), {}};
    const auto hash = detail::field(j, "matrix_hash").get<std::string>();
    if (hash != matrix_fingerprint(I.matrix))
      throw VerificationError("matrix hash mismatch: stored " + hash + ", computed " + matrix_fingerprint(I.matrix));
    for (const auto& g : detail::field(j, "generators")) {
      LiftedGenerator lg;
      for (const auto& r : g) lg.factors.push_back({r.at(0).get<std::size_t>(), r.at(1).get<std::size_t>()});
      I.generators.push_back(std::move(lg));
    }
    if (I.generators.size() != I.source.size()) throw VerificationError("lifted generators do not match the source");
    for (std::size_t k = 0; k < I.generators.size(); ++k)
      if (!(I.generators[k] == bar(I.source.generators()[k], I.matrix)))
        throw VerificationError("lifted generator " + std::to_string(k + 1) + " is not the lift of its source");
    return I;
  });
}

// --- polynomials, records and certificates --------------------------------

inline Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(Json::array({c, to_json(m)}));
  return Json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j, const PrimeField& field, std::size_t ambient) {
  Polynomial f(field, ambient, detail::field(j, "degree").get<unsigned>());
  for (const auto& t : detail::field(j, "terms")) {
    const auto c = t.at(0).get<std::uint64_t>();
    if (c == 0 || c >= field.prime()) throw InputError("coefficient " + std::to_string(c) + " is not a nonzero residue");
    f.add_term(monomial_from_json(t.at(1), ambient), c);
  }
  return f;
}

inline Json to_json(const IdealRecord& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  Json j{{"label", r.label}, {"ambient", r.ambient}, {"gens", std::move(gens)}};
  j["source"] = r.source ? to_json(*r.source) : Json(nullptr);
  if (r.source && !r.source->is_zero() && !r.source->is_unit()) j["height"] = height(*r.source);
  j["gorenstein"] = r.generically_gorenstein == GorensteinTag::yes ? "yes" : "unknown";
  return j;
}

inline IdealRecord record_from_json(const Json& j, const PrimeField& field) {
  IdealRecord r;
  r.label = detail::field(j, "label").get<std::string>();
  r.ambient = detail::field(j, "ambient").get<std::size_t>();
  for (const auto& g : detail::field(j, "gens")) r.generators.push_back(polynomial_from_json(g, field, r.ambient));
  if (j.contains("source") && !j.at("source").is_null()) r.source = ideal_from_json(j.at("source"));
  const auto tag = detail::field(j, "gorenstein").get<std::string>();
  if (tag != "yes" && tag != "unknown") throw InputError("gorenstein tag must be \"yes\" or \"unknown\"");
  r.generically_gorenstein = tag == "yes" ? GorensteinTag::yes : GorensteinTag::unknown;
  return r;
}

inline Json to_json(const CheckList& checks) {
  Json j = Json::object();
  for (const auto& c : checks.items())
    j[c.name] = Json{{"pass", c.status != CheckStatus::fail}, {"status", to_string(c.status)}, {"witness", c.witness}};
  return j;
}

inline CheckList checks_from_json(const Json& j) {
  CheckList out;
  for (const auto& [name, v] : j.items()) {
    const auto s = detail::field(v, "status").get<std::string>();
    const CheckStatus status = s == "pass" ? CheckStatus::pass : s == "skip" ? CheckStatus::skip : CheckStatus::fail;
    out.add(name, status, detail::field(v, "witness").get<std::string>());
  }
  return out;
}

inline Json to_json(const BasicDoubleLink& L) {
  return Json{{"base", to_json(L.base)},
              {"divisor", to_json(L.divisor)},
              {"multiplier", to_json(L.multiplier)},
              {"result", to_json(L.result)},
              {"checks", to_json(L.checks)}};
}

inline BasicDoubleLink link_from_json(const Json& j, const PrimeField& field) {
  auto base = record_from_json(detail::field(j, "base"), field);
  const auto N = base.ambient;
  return BasicDoubleLink{std::move(base), record_from_json(detail::field(j, "divisor"), field),
                         polynomial_from_json(detail::field(j, "multiplier"), field, N),
                         record_from_json(detail::field(j, "result"), field),
                         checks_from_json(detail::field(j, "checks"))};
}

inline Json to_json(const HypersurfaceChain& ch) {
  Json V = Json::array(), F = Json::array(), L = Json::array();
  for (const auto& v : ch.varieties) V.push_back(to_json(v));
  for (const auto& f : ch.forms) F.push_back(to_json(f));
  for (const auto& l : ch.links) L.push_back(to_json(l));
  return Json{{"varieties", std::move(V)}, {"forms", std::move(F)}, {"links", std::move(L)},
              {"checks", to_json(ch.checks)}};
}

inline HypersurfaceChain chain_from_json(const Json& j, const PrimeField& field) {
  HypersurfaceChain ch;
  for (const auto& v : detail::field(j, "varieties")) ch.varieties.push_back(record_from_json(v, field));
  if (ch.varieties.empty()) throw InputError("chain without varieties");
  for (const auto& f : detail::field(j, "forms"))
    ch.forms.push_back(polynomial_from_json(f, field, ch.varieties.front().ambient));
  for (const auto& l : detail::field(j, "links")) ch.links.push_back(link_from_json(l, field));
  if (ch.links.empty()) throw InputError("chain without links");
  ch.checks = checks_from_json(detail::field(j, "checks"));
  return ch;
}

inline Json to_json(const CertificateStep& s) {
  Json data{{"input", to_json(s.input)}, {"output", to_json(s.output)}, {"level_ideal", to_json(s.level_ideal)}};
  if (s.layer0) data["layer0"] = to_json(*s.layer0);
  if (s.residual) data["residual"] = to_json(*s.residual);
  if (s.matrix) data["matrix"] = to_json(*s.matrix);
  if (s.chain) data["chain"] = to_json(*s.chain);
  if (s.link) data["link"] = to_json(*s.link);
  return Json{{"kind", to_string(s.kind)}, {"data", std::move(data)}, {"checks", to_json(s.checks)}};
}

inline StepKind step_kind_from_string(const std::string& k) {
  if (k == "bdl") return StepKind::bdl;
  if (k == "chain") return StepKind::chain;
  if (k == "cone-descent") return StepKind::cone_descent;
  if (k == "hyperplane-descent") return StepKind::hyperplane_descent;
  throw InputError("unknown step kind \"" + k + "\"");
}

inline CertificateStep step_from_json(const Json& j, const PrimeField& field) {
  CertificateStep s;
  s.kind = step_kind_from_string(detail::field(j, "kind").get<std::string>());
  const auto& d = detail::field(j, "data");
  s.input = record_from_json(detail::field(d, "input"), field);
  s.output = record_from_json(detail::field(d, "output"), field);
  s.level_ideal = ideal_from_json(detail::field(d, "level_ideal"));
  if (d.contains("layer0")) s.layer0 = ideal_from_json(d.at("layer0"));
  if (d.contains("residual")) s.residual = ideal_from_json(d.at("residual"));
  if (d.contains("matrix")) s.matrix = matrix_from_json(d.at("matrix"));
  if (d.contains("chain")) s.chain = chain_from_json(d.at("chain"), field);
  if (d.contains("link")) s.link = link_from_json(d.at("link"), field);
  s.checks = checks_from_json(detail::field(j, "checks"));
  return s;
}

inline LeafTag leaf_from_string(const std::string& s) {
  if (s == "licci") return LeafTag::licci;
  if (s == "principal") return LeafTag::principal;
  if (s == "unit") return LeafTag::unit;
  throw InputError("unknown leaf tag \"" + s + "\"");
}

inline Json to_json(const GlicciCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  Json j{{"schema", schema::certificate}, {"mode", c.mode}, {"root", to_json(c.root)}};
  j["matrix"] = c.matrix ? to_json(*c.matrix) : Json(nullptr);
  j["prime"] = c.prime;
  j["dmax"] = c.dmax;
  j["steps"] = std::move(steps);
  j["leaf"] = to_string(c.leaf);
  j["leaf_ideal"] = to_json(c.leaf_ideal);
  return j;
}

inline GlicciCertificate certificate_from_json(const Json& j) {
  return detail::guarded("certificate", [&] {
    detail::expect_schema(j, schema::certificate);
    GlicciCertificate c;
    c.mode = detail::field(j, "mode").get<std::string>();
    c.root = ideal_from_json(detail::field(j, "root"));
    if (j.contains("matrix") && !j.at("matrix").is_null()) c.matrix = matrix_from_json(j.at("matrix"));
    c.prime = detail::field(j, "prime").get<std::uint64_t>();
    c.dmax = detail::field(j, "dmax").get<unsigned>();
    const PrimeField field(c.prime);
    for (const auto& s : detail::field(j, "steps")) c.steps.push_back(step_from_json(s, field));
    c.leaf = leaf_from_string(detail::field(j, "leaf").get<std::string>());
    c.leaf_ideal = record_from_json(detail::field(j, "leaf_ideal"), field);
    return c;
  });
}

inline Json to_json(const VerificationReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back(Json{{"scope", e.scope}, {"check", e.check}, {"status", to_string(e.status)},
                           {"witness", e.witness}});
  return Json{{"schema", schema::report}, {"passed", rep.passed()}, {"entries", std::move(entries)}};
}

}  // namespace liaison
