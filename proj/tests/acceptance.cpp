// Acceptance criteria 1-9. Prints one [PASS]/[FAIL] line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/borel_enum.hpp"
#include "support/brute.hpp"

using namespace liaison;

namespace {

using Clock = std::chrono::steady_clock;

/// Thrown by expect() to stop a criterion at the first broken claim.
struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

std::string show(const std::vector<std::int64_t>& v) { return HVector::truncated(v).to_string(); }

const std::vector<std::int64_t> worked_h{1, 3, 6, 10, 4, 2};

MonomialIdeal worked_ideal() { return lex_ideal_from_hvector(HVector::artinian(worked_h), 3); }

const MonomialIdeal bf_rmk(3, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}});

OracleContext context(unsigned dmax) { return OracleContext{PrimeField(), dmax}; }

/// Random Artinian O-sequence in n variables: each value at most the Macaulay
/// bound of the previous one, capped to keep the ideals small.
std::vector<std::int64_t> random_o_sequence(std::mt19937& rng, std::size_t n, std::int64_t cap) {
  std::vector<std::int64_t> h{1};
  if (n == 0) return h;
  h.push_back(static_cast<std::int64_t>(n));
  for (unsigned d = 1; h.size() < 6; ++d) {
    const auto bound = std::min<std::int64_t>(static_cast<std::int64_t>(macaulay_bound(h.back(), d)), cap);
    const auto next = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound + 1));
    if (next == 0) break;
    h.push_back(next);
  }
  return h;
}

// --- criteria ----------------------------------------------------------------

std::string criterion1() {
  const auto J = worked_ideal();
  expect(artinian_h_vector(J).values() == worked_h, "lex ideal has h " + artinian_h_vector(J).to_string());
  const auto D = decompose(J);
  const std::vector<std::vector<std::int64_t>> rows{{1, 2, 3, 4, 4, 2}, {1, 2, 3}, {1, 2}, {1}};
  expect(D.alpha() == 4 && D.layers[4].is_unit(), "expected alpha = 4 with I_4 = (1)");
  std::vector<std::int64_t> sums(worked_h.size(), 0);
  for (unsigned j = 0; j < 4; ++j) {
    const auto h = artinian_h_vector(D.layers[j]).values();
    expect(h == rows[j], "I_" + std::to_string(j) + " has h " + show(h));
    for (std::size_t d = 0; d < h.size(); ++d) sums.at(d + j) += h[d];
  }
  expect(sums == worked_h, "column sums " + show(sums));
  expect(recompose(D) == J, "layers do not recompose J");
  return "rows (1,2,3,4,4,2) (1,2,3) (1,2) (1), column sums (1,3,6,10,4,2)";
}

std::string criterion2() {
  const PrimeField F;
  const auto J = worked_ideal();
  const auto A = default_matrix_tlift(3, 1, J.max_generator_degree(), 1);
  const auto I = lift_ideal(J, A, F);
  const auto gens = expand(I, F);
  const unsigned dmax = 8;
  const auto h = hilbert_oracle(gens, 4, dmax, F);
  const auto delta = first_difference(h.values());
  auto want = worked_h;
  want.resize(dmax + 1, 0);
  expect(delta == want, "delta h = " + show(delta));
  const auto pts = point_model(J, A, F);
  expect(pts.size() == 26, std::to_string(pts.size()) + " points");
  std::set<std::vector<PrimeField::Element>> distinct;
  for (const auto& p : pts.points) {
    expect(distinct.insert(p.coordinates).second, "repeated point");
    for (const auto& g : gens) expect(g.evaluate(p.coordinates) == 0, "generator does not vanish at a point");
  }
  expect(graded_dim(gens, 4, 1, F) == 0, "dim I_1 != 0");
  return "delta h = (1,3,6,10,4,2) through 8, 26 distinct points, dim I_1 = 0";
}

std::string criterion3() {
  std::mt19937 rng(3);
  std::size_t degrees = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto g = brute::random_gens(rng, n, 6, 1 + rng() % 6);
    const auto J = brute::ideal(n, g);
    const auto D = decompose_along(J, 0);
    const unsigned dmax = default_horizon(J);
    for (unsigned s = 0; s <= dmax; ++s, ++degrees)
      expect(hf_via_layers(D, s) == brute::hilbert(g, n, s), J.to_string() + " at degree " + std::to_string(s));
  }
  return "200 ideals, " + std::to_string(degrees) + " degrees compared";
}

std::string criterion4() {
  expect(is_borel_fixed(bf_rmk), "(x1^3, x1^2*x2, x1*x2^2) not Borel-fixed");
  expect(!is_lex_segment(bf_rmk), "(x1^3, x1^2*x2, x1*x2^2) reported lex");
  const auto w = lex_segment_witness(bf_rmk);
  expect(w && *w == Monomial({2, 0, 1}), "witness " + (w ? w->to_string() : std::string("none")));
  std::mt19937 rng(4);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto h = random_o_sequence(rng, n, 12);
    const auto J = lex_ideal_from_hvector(HVector::artinian(h), n);
    expect(is_borel_fixed(J) && brute::borel_fixed(brute::gens_of(J), n), "lex ideal for " + show(h) + " not Borel");
    expect(is_lex_segment(J), "builder output for " + show(h) + " not lex");
    ++built;
  }
  return "witness x1^2*x3; " + std::to_string(built) + " builder ideals Borel-fixed";
}

std::string criterion5() {
  std::size_t total = 0, cm = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    total += borel_enum::for_each_borel_ideal(n, 4, [&](const MonomialIdeal& J) {
      const auto c = height(J);
      const bool ii = is_equidimensional(J);
      const bool iii = has_cm_borel_shape(J, c);
      const bool iv = cone_over_artinian_borel(J, c).has_value();
      expect(ii == iii && iii == iv, J.to_string() + ": conditions disagree");
      expect(ii == brute::unmixed(brute::gens_of(J), n), J.to_string() + ": unmixedness differs from brute force");
      cm += ii;
    });
  const auto c = height(bf_rmk);
  expect(!is_equidimensional(bf_rmk) && !has_cm_borel_shape(bf_rmk, c) && !cone_over_artinian_borel(bf_rmk, c),
         "(x1^3, x1^2*x2, x1*x2^2) passes a condition");
  return std::to_string(total) + " Borel-fixed ideals, " + std::to_string(cm) + " Cohen-Macaulay";
}

/// Certificates shared by criteria 6 and 7.
struct Corpus {
  std::vector<GlicciCertificate> certs;
  std::vector<std::string> names;
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    const auto J = worked_ideal();
    out.certs.push_back(glicci_certificate_artinian(J, default_matrix_tlift(3, 1, J.max_generator_degree(), 1),
                                                    context(default_horizon(J))));
    out.names.push_back("worked example");
    std::mt19937 rng(6);
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = 3 + k % 2;
      const auto h = random_o_sequence(rng, n, 8);
      const auto K = lex_ideal_from_hvector(HVector::artinian(h), n);
      out.certs.push_back(glicci_certificate_artinian(K, default_matrix_tlift(n, 1, K.max_generator_degree(), 1 + k),
                                                      context(default_horizon(K))));
      out.names.push_back("lift of " + K.to_string());
    }
    for (std::size_t n = 1; n <= 4; ++n)
      borel_enum::for_each_borel_ideal(n, 3, [&](const MonomialIdeal& B) {
        if (!is_cm_borel(B)) return;
        out.certs.push_back(glicci_certificate_borel(B, context(default_horizon(B))));
        out.names.push_back(B.to_string());
      });
    return out;
  }();
  return c;
}

std::string criterion6() {
  const auto& c = corpus();
  std::size_t links = 0, zero_dim = 0;
  for (std::size_t k = 0; k < c.certs.size(); ++k)
    for (const auto* L : certificate_links(c.certs[k])) {
      ++links;
      const auto ctx = context(c.certs[k].dmax);
      const auto checks = check_basic_double_link(*L, ctx);
      const auto* hi = checks.find("hilbert-identity");
      expect(hi && hi->status == CheckStatus::pass, c.names[k] + ": " + (hi ? hi->witness : "no Hilbert identity"));
      const auto* di = checks.find("degree-identity");
      expect(di != nullptr, c.names[k] + ": no degree identity");
      const auto hd = L->is_section() ? std::optional<std::size_t>(height(*L->base.source) + 1)
                                      : std::optional<std::size_t>(height(*L->divisor.source));
      if (L->base.ambient - *hd <= 1) {
        ++zero_dim;
        expect(di->status == CheckStatus::pass, c.names[k] + ": " + di->witness);
      } else {
        expect(di->status != CheckStatus::fail, c.names[k] + ": " + di->witness);
      }
    }
  return std::to_string(links) + " links in " + std::to_string(c.certs.size()) + " certificates, " +
         std::to_string(zero_dim) + " zero-dimensional degree identities";
}

std::string criterion7() {
  const auto& c = corpus();
  const auto first = glicci_certificate_borel(MonomialIdeal::maximal_power(3, 2), context(6));
  expect(first.steps.size() == 3 && first.steps[0].kind == StepKind::bdl, "(x1,x2,x3)^2: expected one bilink");
  std::size_t borel = 0, bilinks = 0;
  auto check_cert = [&](const GlicciCertificate& cert, const std::string& name) {
    const auto rep = verify_certificate(cert);
    if (const auto f = rep.first_failure()) expect(false, name + ": " + f->scope + " " + f->check);
    unsigned prev = 0;
    for (const auto& s : cert.steps) {
      if (s.kind == StepKind::hyperplane_descent) prev = 0;
      if (s.kind != StepKind::bdl) continue;
      ++bilinks;
      for (const char* name_ : {"bar-J-equals-J", "initial-degree-drop", "lifted-layer0-terms-in-residual"}) {
        const auto* ch = s.checks.find(name_);
        expect(ch && ch->status == CheckStatus::pass, name + ": " + name_);
      }
      const unsigned deg = *s.level_ideal.initial_degree();
      expect(prev == 0 || deg + 1 == prev, name + ": initial degree " + std::to_string(prev) + " -> " +
                                               std::to_string(deg));
      expect(*s.residual->initial_degree() + 1 == deg, name + ": residual initial degree");
      prev = deg;
    }
  };
  check_cert(first, "(x1,x2,x3)^2");
  for (std::size_t k = 0; k < c.certs.size(); ++k)
    if (c.certs[k].mode == "borel") {
      ++borel;
      check_cert(c.certs[k], c.names[k]);
    }
  expect(borel > 0, "no Cohen-Macaulay Borel ideals enumerated");
  return std::to_string(borel) + " CM Borel ideals certified, " + std::to_string(bilinks) + " bilinks";
}

std::string criterion8() {
  std::mt19937 rng(8);
  int done = 0;
  while (done < 20) {
    const unsigned d = done % 3;
    const unsigned t = d + 1;
    const std::size_t n = 1 + rng() % 3;
    const auto g = HVector::artinian(random_o_sequence(rng, n, 6));
    const auto J = lex_ideal_from_hvector(g, n);
    const unsigned dmax = default_horizon(J) + t;
    const auto H = partial_sum(g, t, dmax);
    expect(is_k_differentiable(H, t), "H = " + H.to_string() + " not " + std::to_string(t) + "-differentiable");
    const auto back = difference(H, t);
    const auto J2 = lex_ideal_from_hvector(back.to_artinian(), n);
    expect(J2 == J, "lex-build of delta^t H differs");
    const PrimeField F;
    const auto I = lift_ideal(J2, default_matrix_tlift(n, t, std::max(1u, J2.max_generator_degree()), 100 + done), F);
    const auto h = hilbert_oracle(I, dmax, F);
    expect(h.values() == H.values(), "lift of " + J2.to_string() + " has h " + h.to_string() + ", H = " + H.to_string());
    ++done;
  }
  return "20 O-sequences, t = 1..3";
}

std::string criterion9() {
  // tampering
  const auto J = worked_ideal();
  const auto A = default_matrix_tlift(3, 1, J.max_generator_degree(), 1);
  const auto good = glicci_certificate_artinian(J, A, context(default_horizon(J)));
  const PrimeField F;
  int tampered = 0;
  for (std::size_t i = 0; i < good.steps[0].chain->links.size(); ++i) {
    auto cert = good;
    auto& link = cert.steps[0].chain->links[i];
    link.multiplier = link.multiplier + Polynomial::linear(F, {0, 1, 0, 0});
    const auto rep = verify_certificate(cert);
    expect(!rep.passed(), "tampered link " + std::to_string(i + 1) + " accepted");
    const auto want = "step 1 (chain) / link " + std::to_string(i + 1);
    expect(rep.first_failure()->scope == want, "failure reported at " + rep.first_failure()->scope + ", not " + want);
    ++tampered;
  }
  const auto borel = glicci_certificate_borel(MonomialIdeal::maximal_power(4, 2), context(7));
  for (std::size_t k = 0; k < borel.steps.size(); ++k) {
    auto cert = borel;
    cert.steps[k].level_ideal = MonomialIdeal::maximal_power(cert.steps[k].level_ideal.ambient(), 3);
    const auto rep = verify_certificate(cert);
    expect(!rep.passed(), "tampered step " + std::to_string(k + 1) + " accepted");
    expect(rep.first_failure()->scope.rfind("step " + std::to_string(k + 1) + " ", 0) == 0,
           "failure for step " + std::to_string(k + 1) + " reported at " + rep.first_failure()->scope);
    ++tampered;
  }

  // non-O-sequences: first violation against an independent bound
  std::mt19937 rng(9);
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> h{1};
    for (std::size_t k = 0, len = 1 + rng() % 5; k < len; ++k) h.push_back(1 + static_cast<std::int64_t>(rng() % 8));
    std::optional<unsigned> first;
    for (unsigned d = 1; d + 1 < h.size() && !first; ++d)
      if (static_cast<std::uint64_t>(h[d + 1]) > brute::macaulay_bound(static_cast<std::uint64_t>(h[d]), d)) first = d + 1;
    const auto v = first_macaulay_violation(HVector::artinian(h));
    expect(v.has_value() == first.has_value(), show(h) + ": violation presence differs");
    if (!first) continue;
    expect(v->degree == *first, show(h) + ": violation at " + std::to_string(v->degree) + ", expected " +
                                    std::to_string(*first));
    bool threw = false;
    try {
      lex_ideal_from_hvector(HVector::artinian(h), static_cast<std::size_t>(h[1]));
    } catch (const InputError&) {
      threw = true;
    }
    expect(threw, show(h) + " accepted by lex-build");
    ++rejected;
  }

  // non-CM Borel ideals are rejected up front
  std::size_t non_cm = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    borel_enum::for_each_borel_ideal(n, 3, [&](const MonomialIdeal& B) {
      if (is_cm_borel(B)) return;
      ++non_cm;
      try {
        glicci_certificate_borel(B, context(default_horizon(B)));
        expect(false, B.to_string() + " accepted");
      } catch (const VerificationError& e) {
        expect(std::string(e.what()).rfind("not Cohen-Macaulay", 0) == 0, B.to_string() + ": " + e.what());
      }
    });
  return std::to_string(tampered) + " tampered certificates, " + std::to_string(rejected) + " non-O-sequences, " +
         std::to_string(non_cm) + " non-CM Borel ideals rejected";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example layer table", 1, criterion1},
      {2, "lifting of the worked example", 10, criterion2},
      {3, "Hilbert recursion over layers", 30, criterion3},
      {4, "Borel and lex fixtures", 10, criterion4},
      {5, "Borel Cohen-Macaulay conditions agree", 60, criterion5},
      {6, "basic double link identities", 120, criterion6},
      {7, "Borel bilink loop", 120, criterion7},
      {8, "differentiable O-sequence pipeline", 120, criterion8},
      {9, "negative controls", 120, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failed& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      detail += "; over the time budget";
    }
    std::ostringstream time;
    time.setf(std::ios::fixed);
    time.precision(2);
    time << secs << " s";
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title << " (" << time.str() << "): " << detail
              << std::endl;
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
