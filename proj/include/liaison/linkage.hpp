#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/hilbert.hpp"
#include "liaison/layers.hpp"
#include "liaison/lifting.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/oracle.hpp"
#include "liaison/polynomial.hpp"

namespace liaison {

/// Field and degree horizon every oracle check runs with. Certificates are
/// "mod p through dmax" statements.
struct OracleContext {
  PrimeField field{PrimeField::default_prime};
  unsigned dmax = 0;
};

/// Whether the scheme of an ideal is known to be generically Gorenstein.
/// Lifts by a validated matrix are reduced and get `yes`; bare monomial ideals
/// are `unknown` and may not serve as the base of a link.
enum class GorensteinTag { yes, unknown };

/// An ideal as stored in a certificate: explicit generators over Z/p plus the
/// monomial ideal it was lifted from (or equals), which carries its height.
struct IdealRecord {
  std::string label;
  std::size_t ambient = 0;
  std::vector<Polynomial> generators;
  std::optional<MonomialIdeal> source;
  GorensteinTag generically_gorenstein = GorensteinTag::unknown;
};

inline IdealRecord monomial_record(std::string label, const MonomialIdeal& J, const PrimeField& field) {
  return {std::move(label), J.ambient(), as_polynomials(J, field), J, GorensteinTag::unknown};
}

inline IdealRecord lifted_record(std::string label, const LiftedIdeal& I, const PrimeField& field) {
  return {std::move(label), I.matrix.ambient(), expand(I, field), I.source, GorensteinTag::yes};
}

inline IdealRecord unit_record(std::string label, std::size_t ambient, const PrimeField& field) {
  return {std::move(label), ambient, {Polynomial::constant(field, ambient, 1)}, MonomialIdeal::unit(ambient),
          GorensteinTag::unknown};
}

inline bool is_unit_record(const IdealRecord& r) { return r.source && r.source->is_unit(); }

enum class CheckStatus { pass, fail, skip };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string witness;
};

class CheckList {
 public:
  void add(std::string name, CheckStatus status, std::string witness = {}) {
    items_.push_back({std::move(name), status, std::move(witness)});
  }
  /// Keeps the witness only when the check fails.
  void require(std::string name, bool ok, std::string witness = {}) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::string() : std::move(witness));
  }
  /// Keeps the witness either way.
  void report(std::string name, bool ok, std::string witness) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness));
  }

  const std::vector<Check>& items() const { return items_; }
  std::vector<Check>& items() { return items_; }

  bool ok() const { return !first_failure().has_value(); }

  std::optional<Check> first_failure() const {
    for (const auto& c : items_)
      if (c.status == CheckStatus::fail) return c;
    return std::nullopt;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : items_)
      if (c.name == name) return &c;
    return nullptr;
  }

 private:
  std::vector<Check> items_;
};

namespace detail {

inline std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

inline std::optional<std::size_t> record_height(const IdealRecord& r) {
  if (!r.source || r.source->is_unit() || r.source->is_zero()) return std::nullopt;
  return height(*r.source);
}

inline std::vector<std::int64_t> iterated_difference(std::vector<std::int64_t> v, std::size_t k) {
  for (std::size_t r = 0; r < k; ++r) v = first_difference(v);
  return v;
}

}  // namespace detail

/// The record's Hilbert function, differenced once per extra variable of its
/// ring, equals the Hilbert function of its source. This is what makes the
/// source's height (and Cohen-Macaulay shape) the record's.
inline Check source_consistency(const IdealRecord& r, const OracleContext& ctx, std::string name) {
  if (!r.source) return {std::move(name), CheckStatus::fail, r.label + ": no source monomial ideal recorded"};
  if (r.source->ambient() > r.ambient)
    return {std::move(name), CheckStatus::fail, r.label + ": source has more variables than the record"};
  const auto h_rec = hilbert_oracle(r.generators, r.ambient, ctx.dmax, ctx.field);
  const auto h_src = hilbert_function(*r.source, ctx.dmax);
  const auto lhs = detail::iterated_difference(h_rec.values(), r.ambient - r.source->ambient());
  for (unsigned d = 0; d <= ctx.dmax; ++d)
    if (lhs[d] != h_src.at(d)) {
      std::ostringstream os;
      os << r.label << ": degree " << d << " differenced oracle value " << lhs[d] << " != source value "
         << h_src.at(d);
      return {std::move(name), CheckStatus::fail, os.str()};
    }
  return {std::move(name), CheckStatus::pass, r.label + ": " + h_rec.to_string()};
}

struct DegreeReading {
  bool stable = false;
  std::int64_t degree = 0;
};

/// Degree of a scheme from its truncated Hilbert function: the eventually
/// constant value of Δ^{krull-1} h (the total length when krull = 0). Stable
/// means the last two values agree (or h vanishes at the horizon).
inline DegreeReading degree_from_hilbert(const HVector& h, std::int64_t krull) {
  const auto top = static_cast<std::size_t>(h.last_degree());
  if (krull <= 0) return {h.values()[top] == 0, h.sum()};
  const auto g = detail::iterated_difference(h.values(), static_cast<std::size_t>(krull - 1));
  if (top == 0) return {false, g[0]};
  return {g[top] == g[top - 1], g[top]};
}

/// One basic double link: result = base + A · divisor, where base ⊆ divisor,
/// the divisor has codimension one more than the base and A is a nonzerodivisor
/// on the base. With divisor (1) this is a plain hypersurface section.
struct BasicDoubleLink {
  IdealRecord base;
  IdealRecord divisor;
  Polynomial multiplier;
  IdealRecord result;
  CheckList checks;

  bool is_section() const { return is_unit_record(divisor); }
};

inline std::vector<Polynomial> sum_with_multiple(const IdealRecord& base, const Polynomial& A,
                                                 const IdealRecord& divisor) {
  std::vector<Polynomial> gens = base.generators;
  for (const auto& g : divisor.generators) gens.push_back(A * g);
  return gens;
}

/// Every side condition and consequence of a basic double link, recomputed.
inline CheckList check_basic_double_link(const BasicDoubleLink& link, const OracleContext& ctx) {
  CheckList out;
  const auto& F = ctx.field;
  const std::size_t N = link.base.ambient;
  if (link.divisor.ambient != N || link.result.ambient != N || link.multiplier.ambient() != N) {
    out.require("same-ring", false, "base, divisor, multiplier and result live in different rings");
    return out;
  }
  const bool section = link.is_section();
  out.require("base-generically-gorenstein", link.base.generically_gorenstein == GorensteinTag::yes,
              link.base.label + " is not tagged generically Gorenstein");

  auto uncontained = first_uncontained(link.base.generators, link.divisor.generators, N, ctx.dmax, F);
  out.require("base-in-divisor", !uncontained,
              uncontained ? "generator " + std::to_string(*uncontained + 1) + " of " + link.base.label +
                                " is not in " + link.divisor.label
                          : "");

  out.items().push_back(source_consistency(link.base, ctx, "base-source-hilbert"));
  const auto hb = detail::record_height(link.base);
  std::optional<std::size_t> hd;
  if (section) {
    out.report("codim-gap", hb.has_value(), hb ? "hypersurface section of a codim " + std::to_string(*hb) + " base"
                                                : "base height unknown");
  } else {
    out.items().push_back(source_consistency(link.divisor, ctx, "divisor-source-hilbert"));
    hd = detail::record_height(link.divisor);
    const bool gap = hb && hd && *hd == *hb + 1;
    out.report("codim-gap", gap,
                "codim(divisor) = " + (hd ? std::to_string(*hd) : std::string("?")) +
                    ", codim(base) = " + (hb ? std::to_string(*hb) : std::string("?")));
  }

  GradedIdeal base_ideal(F, N, link.base.generators);
  const auto colon = colon_stable(base_ideal, link.multiplier, ctx.dmax);
  out.report("multiplier-nonzerodivisor", colon.stable,
              colon.stable ? "I : A = I through degree " + std::to_string(ctx.dmax)
                           : "I : A != I at degree " + std::to_string(*colon.first_failing_degree));

  const bool sum_ok = ideals_equal_up_to(link.result.generators, sum_with_multiple(link.base, link.multiplier,
                                                                                   link.divisor),
                                         N, ctx.dmax, F);
  out.require("result-is-sum", sum_ok, sum_ok ? "" : link.result.label + " differs from base + A * divisor");

  const auto h_base = hilbert_oracle(link.base.generators, N, ctx.dmax, F);
  const auto h_div = hilbert_oracle(link.divisor.generators, N, ctx.dmax, F);
  const auto h_res = hilbert_oracle(link.result.generators, N, ctx.dmax, F);
  const std::int64_t d = link.multiplier.degree();
  std::vector<std::int64_t> residual;
  bool zero = true;
  for (std::int64_t t = 0; t <= static_cast<std::int64_t>(ctx.dmax); ++t) {
    const auto r = h_res.at(t) - (h_base.at(t) - h_base.at(t - d) + h_div.at(t - d));
    residual.push_back(r);
    zero = zero && r == 0;
  }
  out.report("hilbert-identity", zero, "residuals: " + detail::join(residual));

  if (!hb || (!section && !hd)) {
    out.require("degree-identity", false, "heights unknown");
    return out;
  }
  const auto krull_base = static_cast<std::int64_t>(N) - static_cast<std::int64_t>(*hb);
  const auto krull_div = section ? krull_base - 1 : static_cast<std::int64_t>(N) - static_cast<std::int64_t>(*hd);
  const auto deg_base = degree_from_hilbert(h_base, krull_base);
  const auto deg_div = section ? DegreeReading{true, 0} : degree_from_hilbert(h_div, krull_div);
  const auto deg_res = degree_from_hilbert(h_res, krull_div);
  std::ostringstream w;
  w << "deg " << deg_res.degree << " = " << d << " * " << deg_base.degree << " + " << deg_div.degree;
  if (deg_base.stable && deg_div.stable && deg_res.stable) {
    out.report("degree-identity", deg_res.degree == d * deg_base.degree + deg_div.degree, w.str());
  } else if (krull_div <= 1) {
    out.require("degree-identity", false, "horizon " + std::to_string(ctx.dmax) + " too small to read degrees");
  } else {
    out.add("degree-identity", CheckStatus::skip, "Hilbert functions not yet polynomial at the horizon");
  }
  return out;
}

inline BasicDoubleLink basic_double_link(IdealRecord base, IdealRecord divisor, const Polynomial& A,
                                         std::optional<MonomialIdeal> result_source, std::string result_label,
                                         const OracleContext& ctx) {
  BasicDoubleLink link{std::move(base), std::move(divisor), A, {}, {}};
  link.result = IdealRecord{std::move(result_label), link.base.ambient,
                            sum_with_multiple(link.base, A, link.divisor), std::move(result_source),
                            GorensteinTag::unknown};
  link.checks = check_basic_double_link(link, ctx);
  if (auto f = link.checks.first_failure())
    throw VerificationError("basic double link " + link.result.label + ": " + f->name + " failed: " + f->witness);
  return link;
}

/// Successive hypersurface sections of nested schemes V_1 ⊂ ... ⊂ V_r by
/// F_1..F_r, assembled as Z_i = I_{V_i} + F_i · I_{Z_{i-1}} with Z_0 = (1).
struct HypersurfaceChain {
  std::vector<IdealRecord> varieties;  // I_{V_1}..I_{V_r}
  std::vector<Polynomial> forms;       // F_1..F_r
  std::vector<BasicDoubleLink> links;  // link i produces Z_{i+1}
  CheckList checks;

  const IdealRecord& result() const { return links.back().result; }
};

/// I_{V_r} + F_r I_{V_{r-1}} + F_r F_{r-1} I_{V_{r-2}} + ... + (F_r ... F_1)
inline std::vector<Polynomial> chain_formula_generators(const std::vector<IdealRecord>& V,
                                                        const std::vector<Polynomial>& F, const PrimeField& field) {
  std::vector<Polynomial> gens;
  Polynomial prefix = Polynomial::constant(field, V.front().ambient, 1);
  for (std::size_t i = V.size(); i-- > 0;) {
    for (const auto& g : V[i].generators) gens.push_back(prefix * g);
    prefix = prefix * F[i];
  }
  gens.push_back(prefix);
  return gens;
}

inline CheckList check_hypersurface_chain(const HypersurfaceChain& ch, const OracleContext& ctx) {
  CheckList out;
  const auto& F = ctx.field;
  const std::size_t r = ch.varieties.size();
  if (r == 0 || ch.forms.size() != r || ch.links.size() != r) {
    out.require("shape", false, "need r >= 1 varieties, forms and links");
    return out;
  }
  const std::size_t N = ch.varieties.front().ambient;

  std::string bad;
  for (std::size_t i = 1; i < r && bad.empty(); ++i)
    if (auto k = first_uncontained(ch.varieties[i].generators, ch.varieties[i - 1].generators, N, ctx.dmax, F))
      bad = ch.varieties[i].label + " generator " + std::to_string(*k + 1) + " not in " + ch.varieties[i - 1].label;
  out.require("nested-varieties", bad.empty(), bad);

  bad.clear();
  for (std::size_t j = 0; j < r && bad.empty(); ++j) {
    GradedIdeal Vj(F, N, ch.varieties[j].generators);
    for (std::size_t i = j; i < r && bad.empty(); ++i) {
      auto rep = colon_stable(Vj, ch.forms[i], ctx.dmax);
      if (!rep.stable)
        bad = "F_" + std::to_string(i + 1) + " is a zero divisor on " + ch.varieties[j].label + " in degree " +
              std::to_string(*rep.first_failing_degree);
    }
  }
  out.require("sections-avoid-components", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < r && bad.empty(); ++i) {
    const auto& L = ch.links[i];
    if (L.base.generators != ch.varieties[i].generators) bad = "link " + std::to_string(i + 1) + " base is not V_i";
    else if (!(L.multiplier == ch.forms[i])) bad = "link " + std::to_string(i + 1) + " multiplier is not F_i";
    else if (i == 0 && !L.is_section()) bad = "first link must be a plain section";
    else if (i > 0 && L.divisor.generators != ch.links[i - 1].result.generators)
      bad = "link " + std::to_string(i + 1) + " divisor is not the previous result";
  }
  out.require("links-compose", bad.empty(), bad);

  const auto formula = chain_formula_generators(ch.varieties, ch.forms, F);
  out.require("sum-of-sections-ideal", ideals_equal_up_to(ch.result().generators, formula, N, ctx.dmax, F),
              "Z differs from the nested-sections formula");

  // h_Z(t) = h_{W_r}(t) + h_{W_{r-1}}(t - d_r) + ... + h_{W_1}(t - d_r - ... - d_2)
  const auto hZ = hilbert_oracle(ch.result().generators, N, ctx.dmax, F);
  std::vector<std::int64_t> predicted(ctx.dmax + 1, 0);
  std::int64_t shift = 0;
  for (std::size_t i = r; i-- > 0;) {
    auto gens = ch.varieties[i].generators;
    gens.push_back(ch.forms[i]);
    const auto hW = hilbert_oracle(gens, N, ctx.dmax, F);
    for (std::int64_t t = 0; t <= static_cast<std::int64_t>(ctx.dmax); ++t) predicted[t] += hW.at(t - shift);
    shift += ch.forms[i].degree();
  }
  std::vector<std::int64_t> residual;
  bool zero = true;
  for (unsigned t = 0; t <= ctx.dmax; ++t) {
    residual.push_back(hZ.at(t) - predicted[t]);
    zero = zero && residual.back() == 0;
  }
  out.report("sum-of-sections-hilbert", zero, "residuals: " + detail::join(residual));
  return out;
}

/// Builds Z from V_1..V_r and F_1..F_r, one basic double link at a time.
/// z_sources[i] is the monomial ideal Z_{i+1} is a lift of (for its height).
inline HypersurfaceChain hypersurface_chain(std::vector<IdealRecord> V, std::vector<Polynomial> F,
                                            const std::vector<std::optional<MonomialIdeal>>& z_sources,
                                            const OracleContext& ctx) {
  if (V.empty() || F.size() != V.size() || z_sources.size() != V.size())
    throw InputError("hypersurface chain needs matching, nonempty lists of varieties, forms and sources");
  HypersurfaceChain ch;
  IdealRecord divisor = unit_record("Z_0", V.front().ambient, ctx.field);
  for (std::size_t i = 0; i < V.size(); ++i) {
    auto link = basic_double_link(V[i], divisor, F[i], z_sources[i], "Z_" + std::to_string(i + 1), ctx);
    divisor = link.result;
    ch.links.push_back(std::move(link));
  }
  ch.varieties = std::move(V);
  ch.forms = std::move(F);
  ch.checks = check_hypersurface_chain(ch, ctx);
  if (auto f = ch.checks.first_failure())
    throw VerificationError("hypersurface chain: " + f->name + " failed: " + f->witness);
  return ch;
}

// ---------------------------------------------------------------------------
// Certificates

enum class LeafTag { licci, principal, unit };

inline std::string to_string(LeafTag t) {
  switch (t) {
    case LeafTag::licci: return "licci";
    case LeafTag::principal: return "principal";
    case LeafTag::unit: return "unit";
  }
  return "?";
}

enum class StepKind { bdl, chain, cone_descent, hyperplane_descent };

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::bdl: return "bdl";
    case StepKind::chain: return "chain";
    case StepKind::cone_descent: return "cone-descent";
    case StepKind::hyperplane_descent: return "hyperplane-descent";
  }
  return "?";
}

/// One step of a certificate. Which optional payload is set depends on kind:
///  chain              level_ideal, matrix, chain
///  bdl                level_ideal (J), layer0 (I_0), residual (I'), matrix (bf), link
///  hyperplane-descent level_ideal (J = I_0 + (x_1)), layer0
///  cone-descent       level_ideal (cone in n variables), residual (base in n-1)
struct CertificateStep {
  StepKind kind = StepKind::chain;
  IdealRecord input;
  IdealRecord output;
  MonomialIdeal level_ideal;
  std::optional<MonomialIdeal> layer0;
  std::optional<MonomialIdeal> residual;
  std::optional<LiftingMatrix> matrix;
  std::optional<HypersurfaceChain> chain;
  std::optional<BasicDoubleLink> link;
  CheckList checks;
};

struct GlicciCertificate {
  std::string mode;  // "artinian" (subject: the lift of root) or "borel" (subject: root)
  MonomialIdeal root;
  std::optional<LiftingMatrix> matrix;
  std::uint64_t prime = PrimeField::default_prime;
  unsigned dmax = 0;
  std::vector<CertificateStep> steps;
  LeafTag leaf = LeafTag::unit;
  IdealRecord leaf_ideal;
};

/// Smallest horizon at which certificate degree readings can stabilize.
inline unsigned minimum_horizon(const MonomialIdeal& J) { return J.max_generator_degree() + 1; }

/// max generator degree + n, raised to socle degree + 2 of the Artinian
/// reduction when there is one, so that degree readings stabilize.
inline unsigned default_horizon(const MonomialIdeal& J) {
  unsigned d = J.max_generator_degree() + static_cast<unsigned>(J.ambient());
  if (J.is_zero() || J.is_unit()) return d;
  std::optional<MonomialIdeal> base;
  if (is_artinian(J)) base = J;
  else if (is_borel_fixed(J))
    if (auto cone = is_cm_borel(J)) base = cone->base;
  if (base) d = std::max(d, static_cast<unsigned>(artinian_h_vector(*base).size()) + 1);
  return d;
}

namespace detail {

inline std::optional<LeafTag> leaf_for(const MonomialIdeal& J) {
  if (J.is_unit()) return LeafTag::unit;
  if (J.is_zero()) return std::nullopt;
  const auto h = height(J);
  if (h == 1 && J.size() == 1) return LeafTag::principal;
  if (h <= 2) return LeafTag::licci;
  return std::nullopt;
}

/// M_i = sum_{k<i} x_1^k I_{alpha-i+k} + (x_1^i): the monomial ideal whose
/// column-shifted lift is the i-th partial union of sections.
inline MonomialIdeal partial_section_source(const LayerDecomposition& D, unsigned i) {
  const auto n = D.ambient;
  std::vector<Monomial> gens{Monomial::variable(n, 0, i)};
  for (unsigned k = 0; k < i; ++k) {
    const auto layer = extend(D.layers[D.alpha() - i + k], D.layer_variables, n);
    const auto shift = Monomial::variable(n, 0, k);
    for (const auto& g : layer.generators()) gens.push_back(g * shift);
  }
  return MonomialIdeal(n, std::move(gens));
}

inline bool records_equal(const IdealRecord& a, const IdealRecord& b, const OracleContext& ctx) {
  if (a.ambient != b.ambient) return false;
  return ideals_equal_up_to(a.generators, b.generators, a.ambient, ctx.dmax, ctx.field);
}

inline IdealRecord direct_lift_record(const MonomialIdeal& J, const LiftingMatrix& A, const OracleContext& ctx,
                                      std::string label) {
  return lifted_record(std::move(label), lift_ideal(J, A, ctx.field), ctx.field);
}

}  // namespace detail

/// Checks of a chain step beyond those of its chain and links.
inline CheckList check_chain_step(const CertificateStep& s, const OracleContext& ctx) {
  CheckList out;
  if (!s.matrix || !s.chain) {
    out.require("payload", false, "chain step without matrix or chain");
    return out;
  }
  const auto& J = s.level_ideal;
  out.require("level-artinian", is_artinian(J) && J.ambient() >= 3, J.to_string());
  const auto report = validate_matrix(*s.matrix, J, ctx.field);
  out.report("matrix-valid", report.valid, report.summary());
  if (!report.valid || !is_artinian(J)) return out;
  const auto direct = detail::direct_lift_record(J, *s.matrix, ctx, "lift");
  out.require("input-is-lift", detail::records_equal(s.input, direct, ctx), "input differs from the lift of " + J.to_string());
  out.require("lift-equals-chain", detail::records_equal(s.input, s.chain->result(), ctx),
              "the union of sections differs from the lifted ideal");
  const auto D = decompose(J);
  const auto A1 = s.matrix->without_first_row();
  const auto top = detail::direct_lift_record(D.layers[D.alpha() - 1], A1, ctx, "V_1");
  out.require("output-is-top-layer-lift", detail::records_equal(s.output, top, ctx) &&
                                              s.output.source == D.layers[D.alpha() - 1],
              "output is not the lift of I_{alpha-1}");
  bool forms_ok = s.chain->forms.size() == D.alpha();
  for (std::size_t i = 0; forms_ok && i < s.chain->forms.size(); ++i)
    forms_ok = s.chain->forms[i] == s.matrix->entry(0, D.alpha() - 1 - i).to_polynomial(ctx.field);
  out.require("sections-are-first-row", forms_ok, "F_i is not L_{1,alpha-i+1}");
  return out;
}

/// Glicci certificate for the lift of an Artinian monomial ideal: peel off x_1
/// layers as a chain of hypersurface sections, then recurse on the top layer's
/// lift until codimension two.
inline GlicciCertificate glicci_certificate_artinian(const MonomialIdeal& J, const LiftingMatrix& A,
                                                     const OracleContext& ctx) {
  if (J.ambient() == 0) throw InputError("need at least one variable");
  if (!is_artinian(J)) throw InputError("artinian certificate needs an Artinian ideal, got " + J.to_string());
  if (ctx.dmax < minimum_horizon(J))
    throw HorizonError("horizon " + std::to_string(ctx.dmax) + " too small: need at least " +
                       std::to_string(minimum_horizon(J)));
  const auto report = validate_matrix(A, J, ctx.field);
  if (!report.valid) throw VerificationError("lifting matrix rejected: " + report.summary());

  GlicciCertificate cert;
  cert.mode = "artinian";
  cert.root = J;
  cert.matrix = A;
  cert.prime = ctx.field.prime();
  cert.dmax = ctx.dmax;

  MonomialIdeal level = J;
  LiftingMatrix matrix = A;
  while (level.ambient() >= 3 && !level.is_unit()) {
    const auto D = decompose(level);
    const unsigned alpha = D.alpha();
    const auto A1 = matrix.without_first_row();
    std::vector<IdealRecord> V;
    std::vector<Polynomial> F;
    std::vector<std::optional<MonomialIdeal>> sources;
    for (unsigned i = 1; i <= alpha; ++i) {
      V.push_back(detail::direct_lift_record(D.layers[alpha - i], A1, ctx, "V_" + std::to_string(i)));
      F.push_back(matrix.entry(0, alpha - i).to_polynomial(ctx.field));
      sources.push_back(detail::partial_section_source(D, i));
    }
    CertificateStep step;
    step.kind = StepKind::chain;
    step.level_ideal = level;
    step.matrix = matrix;
    step.input = detail::direct_lift_record(level, matrix, ctx, "Z");
    step.chain = hypersurface_chain(V, F, sources, ctx);
    step.output = step.chain->varieties.front();
    step.checks = check_chain_step(step, ctx);
    if (auto f = step.checks.first_failure())
      throw VerificationError("chain step: " + f->name + " failed: " + f->witness);
    cert.steps.push_back(std::move(step));
    level = D.layers[alpha - 1];
    matrix = A1;
  }
  auto leaf = detail::leaf_for(level);
  if (!leaf) throw std::logic_error("artinian recursion ended without a leaf");
  cert.leaf = *leaf;
  cert.leaf_ideal = cert.steps.empty() ? detail::direct_lift_record(level, matrix, ctx, "Z")
                                       : cert.steps.back().output;
  return cert;
}

/// J with one factor x_1 removed from every x_1-divisible minimal generator,
/// together with the x_1-free generators: the I' with J = I_0 + x_1 I'.
inline MonomialIdeal strip_first_variable(const MonomialIdeal& J) {
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) gens.push_back(g[0] > 0 ? g.with_exponent(0, g[0] - 1) : g);
  return MonomialIdeal(J.ambient(), std::move(gens));
}

/// I_0 · S: the x_1-free part of J as an ideal of S.
inline MonomialIdeal layer_zero(const MonomialIdeal& J) {
  auto sub = restrict(J, detail::other_variables(J.ambient(), 0));
  return extend(sub.ideal, sub.variables, J.ambient());
}

inline CheckList check_bilink_step(const CertificateStep& s, const OracleContext& ctx) {
  CheckList out;
  if (!s.layer0 || !s.residual || !s.link || !s.matrix) {
    out.require("payload", false, "bilink step is missing data");
    return out;
  }
  const auto& J = s.level_ideal;
  const auto& I0 = *s.layer0;
  const auto& Ip = *s.residual;
  const auto& F = ctx.field;
  const std::size_t n = J.ambient();
  const auto cm = is_borel_fixed(J) ? is_cm_borel(J) : std::nullopt;
  out.require("level-cm-borel", cm.has_value(), J.to_string());
  if (!cm) return out;
  const std::size_t c = cm->c;

  out.require("layer-split", I0 == layer_zero(J) && Ip == strip_first_variable(J) &&
                                 sum(I0, multiply(Ip, Monomial::variable(n, 0))) == J,
              "J != I_0 + x_1 I'");
  const bool ip_cm = is_borel_fixed(Ip) && !Ip.is_unit() && is_cm_borel(Ip).has_value() && height(Ip) == c;
  out.require("residual-cm-same-height", ip_cm, "I' = " + Ip.to_string());
  out.require("layer0-in-residual", Ip.contains(I0), "I_0 not contained in I'");

  const auto lifted = lift_ideal(I0, *s.matrix, F);
  std::string bad_term;
  for (const auto& g : lifted.generators) {
    const auto p = expand(g, lifted.matrix, F);
    for (const auto& [m, coef] : p.terms())
      if (!Ip.contains(m) && bad_term.empty()) bad_term = m.to_string();
  }
  out.require("lifted-layer0-terms-in-residual", bad_term.empty(), "term " + bad_term + " not in I'");

  const bool heights = !I0.is_zero() && height(I0) == c - 1 &&
                       hilbert_oracle(expand(lifted, F), n, ctx.dmax, F).values() == hilbert_function(I0, ctx.dmax).values();
  out.require("layer0-heights", heights, "ht(I_0) or h(bar I_0) mismatch");

  std::vector<Polynomial> bar_j = expand(lifted, F);
  for (const auto& g : Ip.generators()) bar_j.push_back(Polynomial::monomial(F, g * Monomial::variable(n, 0)));
  out.require("bar-J-equals-J", ideals_equal_up_to(bar_j, as_polynomials(J, F), n, ctx.dmax, F),
              "bar I_0 + x_1 I' != J");

  out.report("initial-degree-drop", Ip.initial_degree() && *Ip.initial_degree() + 1 == *J.initial_degree(),
              "initial degrees " + std::to_string(*J.initial_degree()) + " -> " +
                  (Ip.initial_degree() ? std::to_string(*Ip.initial_degree()) : std::string("none")));

  const auto& L = *s.link;
  const bool wiring = L.base.source == I0 && L.divisor.source == Ip && L.result.source == J &&
                L.multiplier == Polynomial::monomial(F, Monomial::variable(n, 0)) &&
                ideals_equal_up_to(L.base.generators, expand(lifted, F), n, ctx.dmax, F);
  out.require("link-wiring", wiring, "link is not bar I_0 + x_1 * I'");
  out.require("input-is-J", detail::records_equal(s.input, monomial_record("J", J, F), ctx), "input differs from J");
  out.require("output-is-residual", detail::records_equal(s.output, monomial_record("I'", Ip, F), ctx),
              "output differs from I'");
  return out;
}

inline CheckList check_hyperplane_step(const CertificateStep& s, const OracleContext& ctx) {
  CheckList out;
  if (!s.layer0) {
    out.require("payload", false, "hyperplane step is missing I_0");
    return out;
  }
  const auto& J = s.level_ideal;
  const std::size_t n = J.ambient();
  out.require("initial-degree-one", J.initial_degree() == 1u, J.to_string());
  out.require("is-hyperplane-section", sum(*s.layer0, MonomialIdeal(n, {Monomial::variable(n, 0)})) == J &&
                                           *s.layer0 == layer_zero(J),
              "J != I_0 + (x_1)");
  out.require("input-is-J", detail::records_equal(s.input, monomial_record("J", J, ctx.field), ctx), "");
  out.require("output-is-layer0", detail::records_equal(s.output, monomial_record("I_0", *s.layer0, ctx.field), ctx),
              "");
  return out;
}

inline CheckList check_cone_step(const CertificateStep& s, const OracleContext& ctx) {
  CheckList out;
  if (!s.residual) {
    out.require("payload", false, "cone step is missing the base ideal");
    return out;
  }
  const auto& cone = s.level_ideal;
  const auto& base = *s.residual;
  const std::size_t n = cone.ambient();
  bool ok = base.ambient() + 1 == n && extend(base, detail::other_variables(n, 0), n) == cone;
  out.require("is-cone", ok, cone.to_string() + " is not a cone over " + base.to_string());
  out.require("same-height", ok && !base.is_zero() && !base.is_unit() && height(base) == height(cone), "");
  out.require("input-is-cone", detail::records_equal(s.input, monomial_record("I_0", cone, ctx.field), ctx), "");
  out.require("output-is-base", detail::records_equal(s.output, monomial_record("J_0", base, ctx.field), ctx), "");
  return out;
}

/// Glicci certificate for a Cohen-Macaulay Borel-fixed ideal: bilink J to I'
/// while the initial degree exceeds one, then descend to the hyperplane
/// section I_0 + (x_1) and the cone base J_0, and repeat in one fewer variable.
inline GlicciCertificate glicci_certificate_borel(const MonomialIdeal& J, const OracleContext& ctx) {
  if (J.is_zero() || J.is_unit()) throw InputError("borel certificate needs a proper nonzero ideal");
  if (!is_borel_fixed(J)) throw VerificationError("not Borel-fixed: " + J.to_string());
  if (!is_cm_borel(J))
    throw VerificationError("not Cohen-Macaulay: Borel-fixed ideal " + J.to_string() +
                            " is not equidimensional (no pure power of x_c or extra variables occur)");
  if (ctx.dmax < minimum_horizon(J))
    throw HorizonError("horizon " + std::to_string(ctx.dmax) + " too small: need at least " +
                       std::to_string(minimum_horizon(J)));
  const auto& F = ctx.field;
  GlicciCertificate cert;
  cert.mode = "borel";
  cert.root = J;
  cert.prime = F.prime();
  cert.dmax = ctx.dmax;

  MonomialIdeal cur = J;
  while (true) {
    if (auto leaf = detail::leaf_for(cur)) {
      cert.leaf = *leaf;
      cert.leaf_ideal = monomial_record("leaf", cur, F);
      break;
    }
    const std::size_t n = cur.ambient();
    const auto I0 = layer_zero(cur);
    if (*cur.initial_degree() == 1) {
      CertificateStep hyper;
      hyper.kind = StepKind::hyperplane_descent;
      hyper.level_ideal = cur;
      hyper.layer0 = I0;
      hyper.input = monomial_record("J", cur, F);
      hyper.output = monomial_record("I_0", I0, F);
      hyper.checks = check_hyperplane_step(hyper, ctx);
      if (auto f = hyper.checks.first_failure())
        throw VerificationError("hyperplane descent: " + f->name + " failed: " + f->witness);
      cert.steps.push_back(std::move(hyper));

      CertificateStep cone;
      cone.kind = StepKind::cone_descent;
      cone.level_ideal = I0;
      cone.residual = restrict(I0, detail::other_variables(n, 0)).ideal;
      cone.input = monomial_record("I_0", I0, F);
      cone.output = monomial_record("J_0", *cone.residual, F);
      cone.checks = check_cone_step(cone, ctx);
      if (auto f = cone.checks.first_failure())
        throw VerificationError("cone descent: " + f->name + " failed: " + f->witness);
      cur = *cone.residual;
      cert.steps.push_back(std::move(cone));
      continue;
    }
    const auto Ip = strip_first_variable(cur);
    const auto A = default_matrix_bf(n, std::max(1u, I0.max_generator_degree()));
    const auto lifted = lift_ideal(I0, A, F);
    CertificateStep step;
    step.kind = StepKind::bdl;
    step.level_ideal = cur;
    step.layer0 = I0;
    step.residual = Ip;
    step.matrix = A;
    step.input = monomial_record("J", cur, F);
    step.output = monomial_record("I'", Ip, F);
    step.link = basic_double_link(lifted_record("bar I_0", lifted, F), monomial_record("I'", Ip, F),
                                  Polynomial::monomial(F, Monomial::variable(n, 0)), cur, "bar J", ctx);
    step.checks = check_bilink_step(step, ctx);
    if (auto f = step.checks.first_failure())
      throw VerificationError("bilink: " + f->name + " failed: " + f->witness);
    cert.steps.push_back(std::move(step));
    cur = Ip;
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Replay

struct ReportEntry {
  std::string scope;  // "root", "step 3", "step 1 / link 2", "leaf"
  std::string check;
  CheckStatus status = CheckStatus::fail;
  std::string witness;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool passed() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::fail) return false;
    return true;
  }

  std::optional<ReportEntry> first_failure() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::fail) return e;
    return std::nullopt;
  }

  std::string to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << to_string(e.status) << "  " << e.scope << "  " << e.check;
      if (!e.witness.empty()) os << "  [" << e.witness << "]";
      os << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline void append(VerificationReport& rep, const std::string& scope, const CheckList& checks) {
  for (const auto& c : checks.items()) rep.entries.push_back({scope, c.name, c.status, c.witness});
}

}  // namespace detail

/// Replays every check of a certificate from its stored data.
inline VerificationReport verify_certificate(const GlicciCertificate& cert) {
  VerificationReport rep;
  const OracleContext ctx{PrimeField(cert.prime), cert.dmax};
  const auto& F = ctx.field;

  CheckList root;
  std::optional<IdealRecord> expected_first_input;
  if (cert.mode == "artinian") {
    root.require("root-artinian", is_artinian(cert.root) && cert.root.ambient() > 0, cert.root.to_string());
    root.require("horizon", cert.dmax >= minimum_horizon(cert.root),
                 "dmax " + std::to_string(cert.dmax) + " < " + std::to_string(minimum_horizon(cert.root)));
    if (!cert.matrix) {
      root.require("matrix", false, "artinian certificate without a lifting matrix");
    } else {
      const auto mr = validate_matrix(*cert.matrix, cert.root, F);
      root.report("matrix-valid", mr.valid, mr.summary());
      if (mr.valid && is_artinian(cert.root))
        expected_first_input = detail::direct_lift_record(cert.root, *cert.matrix, ctx, "Z");
    }
  } else if (cert.mode == "borel") {
    const bool cm = !cert.root.is_zero() && !cert.root.is_unit() && is_borel_fixed(cert.root) &&
                    is_cm_borel(cert.root).has_value();
    root.require("root-cm-borel", cm, cert.root.to_string());
    root.require("horizon", cert.dmax >= minimum_horizon(cert.root),
                 "dmax " + std::to_string(cert.dmax) + " < " + std::to_string(minimum_horizon(cert.root)));
    expected_first_input = monomial_record("J", cert.root, F);
  } else {
    root.require("mode", false, "unknown mode " + cert.mode);
  }
  if (expected_first_input) {
    const IdealRecord& first = cert.steps.empty() ? cert.leaf_ideal : cert.steps.front().input;
    root.require("root-is-first-input", detail::records_equal(first, *expected_first_input, ctx),
                 "first ideal of the certificate is not the root");
  }
  detail::append(rep, "root", root);

  unsigned last_bilink_degree = 0;  // 0: no bilink since the last descent
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& s = cert.steps[k];
    const std::string scope = "step " + std::to_string(k + 1) + " (" + to_string(s.kind) + ")";
    CheckList checks;
    switch (s.kind) {
      case StepKind::chain: {
        checks = check_chain_step(s, ctx);
        if (s.chain) {
          for (std::size_t i = 0; i < s.chain->links.size(); ++i)
            detail::append(rep, scope + " / link " + std::to_string(i + 1),
                           check_basic_double_link(s.chain->links[i], ctx));
          detail::append(rep, scope + " / chain", check_hypersurface_chain(*s.chain, ctx));
        }
        break;
      }
      case StepKind::bdl: {
        checks = check_bilink_step(s, ctx);
        if (s.link) detail::append(rep, scope + " / link", check_basic_double_link(*s.link, ctx));
        const unsigned deg = s.level_ideal.initial_degree().value_or(0);
        if (last_bilink_degree > 0)
          checks.report("descending-initial-degree", deg + 1 == last_bilink_degree,
                        std::to_string(last_bilink_degree) + " -> " + std::to_string(deg));
        last_bilink_degree = deg;
        break;
      }
      case StepKind::hyperplane_descent:
        checks = check_hyperplane_step(s, ctx);
        last_bilink_degree = 0;
        break;
      case StepKind::cone_descent:
        checks = check_cone_step(s, ctx);
        break;
    }
    if (k + 1 < cert.steps.size())
      checks.require("output-is-next-input", detail::records_equal(s.output, cert.steps[k + 1].input, ctx),
                     "step output differs from the next step's input");
    else
      checks.require("output-is-leaf", detail::records_equal(s.output, cert.leaf_ideal, ctx),
                     "last output differs from the leaf ideal");
    detail::append(rep, scope, checks);
  }

  CheckList leaf;
  const auto& li = cert.leaf_ideal;
  if (!li.source) {
    leaf.require("leaf-valid", false, "leaf has no source ideal");
  } else {
    const auto tag = detail::leaf_for(*li.source);
    leaf.report("leaf-valid", tag && *tag == cert.leaf,
                 "claimed " + to_string(cert.leaf) + " for " + li.source->to_string());
    if (!li.source->is_unit()) leaf.items().push_back(source_consistency(li, ctx, "leaf-source-hilbert"));
  }
  detail::append(rep, "leaf", leaf);
  return rep;
}

/// All basic double links of a certificate, in order.
inline std::vector<const BasicDoubleLink*> certificate_links(const GlicciCertificate& cert) {
  std::vector<const BasicDoubleLink*> out;
  for (const auto& s : cert.steps) {
    if (s.chain)
      for (const auto& l : s.chain->links) out.push_back(&l);
    if (s.link) out.push_back(&*s.link);
  }
  return out;
}

}  // namespace liaison
