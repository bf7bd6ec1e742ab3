// liaison: build, analyze, lift and certify monomial ideals from the command line.
//
// Exit codes: 0 success, 2 input error, 3 verification failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liaison/liaison.hpp"

using namespace liaison;

namespace {

constexpr int exit_input = 2;
constexpr int exit_verification = 3;

struct RunConfig {
  std::uint64_t prime = PrimeField::default_prime;
  bool prime_given = false;
  std::uint64_t seed = 1;
  std::optional<unsigned> dmax;
  bool json = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

/// Files always get JSON; stdout gets the human text unless --json.
void emit(const RunConfig& cfg, const Json& doc, const std::string& human) {
  if (!cfg.out.empty()) write_file(cfg.out, doc.dump(2) + "\n");
  if (cfg.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + s);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

unsigned horizon_for(const RunConfig& cfg, const MonomialIdeal& J) {
  const unsigned d = cfg.dmax.value_or(default_horizon(J));
  if (d < minimum_horizon(J))
    throw HorizonError("horizon too small: dmax " + std::to_string(d) + " < " + std::to_string(minimum_horizon(J)) +
                       " (max generator degree + 1)");
  return d;
}

std::size_t lift_columns(const MonomialIdeal& J) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < J.ambient(); ++i) c = std::max<std::size_t>(c, J.max_exponent(i));
  return c;
}

LiftingMatrix matrix_from_spec(const std::string& spec, const MonomialIdeal& J, std::uint64_t seed) {
  if (spec == "bf") return default_matrix_bf(J.ambient(), lift_columns(J));
  if (spec.rfind("t:", 0) == 0) {
    const auto t = parse_list(spec.substr(2));
    if (t.size() != 1 || t[0] < 1) throw InputError("matrix spec t:<t> needs t >= 1");
    return default_matrix_tlift(J.ambient(), static_cast<unsigned>(t[0]), lift_columns(J), seed);
  }
  throw InputError("matrix must be bf or t:<t>, got " + spec);
}

/// Validates at the configured prime, then once more at the next prime.
std::uint64_t validated_prime(const LiftingMatrix& A, const MonomialIdeal& J, std::uint64_t p, std::ostream& log) {
  auto rep = validate_matrix(A, J, PrimeField(p));
  if (rep.valid) return p;
  const auto q = PrimeField::next_prime(p);
  log << "matrix invalid mod " << p << " (" << rep.summary() << "), retrying mod " << q << "\n";
  auto rep2 = validate_matrix(A, J, PrimeField(q));
  if (rep2.valid) return q;
  throw VerificationError("lifting matrix rejected: " + rep2.summary());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- lex-build --------------------------------------------------------------

int cmd_lex_build(const RunConfig& cfg, const std::string& h_text, std::size_t n) {
  const auto h = HVector::artinian(parse_list(h_text));
  if (auto v = first_macaulay_violation(h)) throw InputError("not an O-sequence: " + v->message());
  const auto J = lex_ideal_from_hvector(h, n);
  std::ostringstream os;
  os << "h = " << h.to_string() << ", n = " << n << "\n" << "J = " << J.to_string() << "\n";
  emit(cfg, to_json(J), os.str());
  return 0;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, const std::string& path) {
  const auto J = ideal_from_json(parse_json(read_file(path)));
  std::ostringstream os;
  Json doc{{"ideal", to_json(J)}};
  os << "ideal: " << J.to_string() << "\n" << "variables: " << J.ambient() << "\n";
  if (J.is_unit() || J.is_zero()) {
    const char* what = J.is_unit() ? "unit ideal: the quotient ring is zero" : "zero ideal: the quotient is the polynomial ring";
    os << "degenerate: " << what << "\n";
    doc["degenerate"] = J.is_unit() ? "unit" : "zero";
    emit(cfg, doc, os.str());
    return 0;
  }
  const bool artinian = is_artinian(J);
  const bool borel = is_borel_fixed(J);
  const auto lex_missing = lex_segment_witness(J);
  const auto ht = height(J);
  const bool equi = is_equidimensional(J);
  const auto cm = borel ? is_cm_borel(J) : std::nullopt;
  os << "Artinian: " << yes_no(artinian) << "\n";
  os << "Borel-fixed: " << yes_no(borel) << ", lex-segment: " << yes_no(!lex_missing);
  if (lex_missing) os << " (missing " << lex_missing->to_string() << ")";
  os << "\n" << "height: " << ht << "\n" << "equidimensional: " << yes_no(equi) << "\n";
  os << "CM-Borel: " << (borel ? yes_no(cm.has_value()) : std::string("n/a (not Borel-fixed)")) << "\n";
  doc["artinian"] = artinian;
  doc["borel_fixed"] = borel;
  doc["lex_segment"] = !lex_missing;
  doc["lex_witness"] = lex_missing ? to_json(*lex_missing) : Json(nullptr);
  doc["height"] = ht;
  doc["equidimensional"] = equi;
  doc["cm_borel"] = borel ? Json(cm.has_value()) : Json(nullptr);

  const auto D = decompose_along(J, 0);
  Json rows = Json::array();
  if (artinian) {
    const auto h = artinian_h_vector(J);
    os << "h-vector: " << h.to_string() << "\n";
    os << "layers along x1 (alpha = " << D.alpha() << "):\n";
    doc["h"] = to_json(h);
    std::vector<std::int64_t> sums(h.size(), 0);
    for (unsigned j = 0; j < D.layers.size(); ++j) {
      const auto hj = artinian_h_vector(D.layers[j]);
      if (hj.size() == 0) continue;
      os << "  I_" << j << "  " << hj.to_string() << "  " << D.layers[j].to_string() << "\n";
      rows.push_back(Json{{"j", j}, {"layer", to_json(D.layers[j])}, {"h", hj.values()}});
      for (std::size_t d = 0; d < hj.size() && d + j < sums.size(); ++d) sums[d + j] += hj.values()[d];
    }
    os << "shifted column sums: " << HVector::artinian(sums).to_string() << "\n";
    doc["column_sums"] = sums;
  } else {
    const unsigned dmax = horizon_for(cfg, J);
    const auto h = hilbert_function(J, dmax);
    os << "Hilbert function through " << dmax << ": " << h.to_string() << "\n";
    os << "layers along x1 (alpha = " << D.alpha() << "):\n";
    doc["h"] = to_json(h);
    const auto hrows = layer_hilbert_rows(D, dmax);
    for (unsigned j = 0; j < hrows.size(); ++j) {
      os << "  I_" << j << "  " << hrows[j].to_string() << "  " << D.layers[j].to_string() << "\n";
      rows.push_back(Json{{"j", j}, {"layer", to_json(D.layers[j])}, {"h", hrows[j].values()}});
    }
  }
  doc["alpha"] = D.alpha();
  doc["layers"] = std::move(rows);
  emit(cfg, doc, os.str());
  return 0;
}

// --- lift / verify-lift -----------------------------------------------------

int cmd_lift(const RunConfig& cfg, const std::string& path, const std::string& spec, const std::string& matrix_path) {
  const auto J = ideal_from_json(parse_json(read_file(path)));
  const auto A = matrix_path.empty() ? matrix_from_spec(spec, J, cfg.seed)
                                     : matrix_from_json(parse_json(read_file(matrix_path)));
  std::ostringstream os;
  const auto p = validated_prime(A, J, cfg.prime, os);
  const PrimeField field(p);
  const auto I = lift_ideal(J, A, field);
  std::optional<PointConfiguration> points;
  if (A.t == 1 && A.kind == MatrixKind::t_lift && is_artinian(J)) points = point_model(J, A, field);

  os << "source: " << J.to_string() << "\n";
  os << "matrix: " << to_string(A.kind) << ", " << A.row_count() << " rows over " << A.ambient()
     << " variables, hash " << matrix_fingerprint(A) << "\n";
  for (std::size_t r = 0; r < A.row_count(); ++r) {
    os << "  row " << r + 1 << ":";
    for (const auto& L : A.rows[r]) os << "  " << L.to_string(A.x_count);
    os << "\n";
  }
  os << "generators: " << I.generators.size() << "\n";
  if (points) os << "points: " << points->size() << "\n";
  Json doc = to_json(I, points);
  doc["prime"] = p;
  emit(cfg, doc, os.str());
  return 0;
}

int cmd_verify_lift(const RunConfig& cfg, const std::string& path) {
  const auto doc = parse_json(read_file(path));
  const auto I = lifted_from_json(doc);
  std::uint64_t p = cfg.prime;
  if (!cfg.prime_given && doc.contains("prime")) p = doc.at("prime").get<std::uint64_t>();
  const PrimeField field(p);
  const auto& J = I.source;
  const auto& A = I.matrix;
  const unsigned dmax = horizon_for(cfg, J);
  CheckList checks;

  const auto rep = validate_matrix(A, J, field);
  checks.report("matrix-valid", rep.valid, rep.summary());
  if (rep.valid) {
    const auto gens = expand(I, field);
    const auto N = A.ambient();
    const auto h_lift = hilbert_oracle(gens, N, dmax, field);
    const auto h_src = hilbert_function(J, dmax);
    auto diff = h_lift.values();
    for (unsigned k = 0; k < A.t; ++k) diff = first_difference(diff);
    checks.report("hilbert-relation", diff == h_src.values(),
                  "delta^" + std::to_string(A.t) + " h = " + HVector::truncated(diff).to_string() +
                      ", source " + h_src.to_string());

    std::mt19937_64 engine(cfg.seed);
    std::vector<std::int64_t> coeffs(N);
    for (auto& c : coeffs) c = static_cast<std::int64_t>(engine() % (p - 1)) + 1;
    const auto ell = Polynomial::linear(field, coeffs);
    const auto colon = colon_stable(gens, ell, N, dmax, field);
    const std::string found =
        colon.stable ? "I : l = I through degree " + std::to_string(dmax) + " for a random linear form l"
                     : "I : l != I at degree " + std::to_string(*colon.first_failing_degree);
    if (J.is_unit() || J.is_zero()) {
      checks.add("saturation", CheckStatus::skip, J.is_unit() ? "unit ideal" : "zero ideal");
    } else if (A.t == 0) {
      // no new variables: I is saturated exactly when J is
      bool j_saturated = true;
      for (const auto& q : associated_primes(J)) j_saturated = j_saturated && q.size() < J.ambient();
      checks.report("saturation", colon.stable == j_saturated,
                    found + (j_saturated ? ", J saturated" : ", J not saturated"));
    } else {
      checks.report("saturation", colon.stable, found);
    }

    const auto lin_I = graded_dim(gens, N, 1, field);
    const auto lin_J = static_cast<std::size_t>(monomial_count(J.ambient(), 1)) -
                       static_cast<std::size_t>(count_standard_monomials(J, 1));
    checks.report("non-degenerate", lin_I == lin_J,
                  "dim I_1 = " + std::to_string(lin_I) + ", dim J_1 = " + std::to_string(lin_J));

    if (A.t == 1 && A.kind == MatrixKind::t_lift && is_artinian(J)) {
      try {
        const auto pts = point_model(J, A, field);
        const auto expected = artinian_h_vector(J).sum();
        checks.report("point-model", static_cast<std::int64_t>(pts.size()) == expected,
                      std::to_string(pts.size()) + " distinct points, h sums to " + std::to_string(expected));
        bool vanish = true;
        for (const auto& g : gens)
          for (const auto& pt : pts.points) vanish = vanish && g.evaluate(pt.coordinates) == 0;
        checks.report("points-vanish", vanish, "expanded generators evaluated at every point");
      } catch (const VerificationError& e) {
        checks.report("point-model", false, e.what());
      }
    }
  }

  std::ostringstream os;
  os << "lifted ideal of " << J.to_string() << " (prime " << p << ", dmax " << dmax << ")\n";
  for (const auto& c : checks.items())
    os << "  " << to_string(c.status) << "  " << c.name << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
  os << (checks.ok() ? "all checks passed\n" : "verification FAILED\n");
  emit(cfg, Json{{"schema", schema::report}, {"passed", checks.ok()}, {"checks", to_json(checks)}}, os.str());
  return checks.ok() ? 0 : exit_verification;
}

// --- glicci / verify ----------------------------------------------------------

std::string step_log(const GlicciCertificate& cert) {
  std::ostringstream os;
  os << "certificate (" << cert.mode << " mode) for "
     << (cert.mode == "artinian" ? "the lift of " + cert.root.to_string() : cert.root.to_string()) << "\n";
  os << "prime " << cert.prime << ", dmax " << cert.dmax << "\n";
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& s = cert.steps[k];
    os << "step " << k + 1 << ": " << to_string(s.kind) << "  " << s.level_ideal.to_string() << "\n";
    std::vector<const BasicDoubleLink*> links;
    if (s.chain)
      for (const auto& l : s.chain->links) links.push_back(&l);
    if (s.link) links.push_back(&*s.link);
    for (const auto* l : links) {
      os << "  " << l->result.label << " = " << l->base.label << " + (" << l->multiplier.to_string() << ") * "
         << l->divisor.label;
      if (const auto* c = l->checks.find("hilbert-identity")) os << "  " << c->witness;
      if (const auto* c = l->checks.find("degree-identity")) os << "  " << c->witness;
      os << "\n";
    }
  }
  os << "leaf: " << to_string(cert.leaf);
  if (cert.leaf_ideal.source) os << "  " << cert.leaf_ideal.source->to_string();
  os << "\n";
  return os.str();
}

int cmd_glicci(const RunConfig& cfg, const std::string& path, const std::string& mode, const std::string& spec) {
  const auto J = ideal_from_json(parse_json(read_file(path)));
  const unsigned dmax = horizon_for(cfg, J);
  GlicciCertificate cert;
  std::ostringstream os;
  if (mode == "artinian") {
    if (!is_artinian(J)) throw InputError("artinian mode needs an Artinian ideal");
    const auto A = matrix_from_spec(spec, J, cfg.seed);
    const auto p = validated_prime(A, J, cfg.prime, os);
    cert = glicci_certificate_artinian(J, A, OracleContext{PrimeField(p), dmax});
  } else if (mode == "borel") {
    cert = glicci_certificate_borel(J, OracleContext{PrimeField(cfg.prime), dmax});
  } else {
    throw InputError("mode must be artinian or borel");
  }
  os << step_log(cert);
  emit(cfg, to_json(cert), os.str());
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& path) {
  const auto cert = certificate_from_json(parse_json(read_file(path)));
  const auto rep = verify_certificate(cert);
  std::ostringstream os;
  os << rep.to_text();
  std::size_t skipped = 0;
  for (const auto& e : rep.entries) skipped += e.status == CheckStatus::skip;
  if (auto f = rep.first_failure())
    os << "verification FAILED at " << f->scope << ": " << f->check << (f->witness.empty() ? "" : " [" + f->witness + "]")
       << "\n";
  else
    os << "certificate verified: " << rep.entries.size() - skipped << " checks passed, " << skipped << " skipped\n";
  emit(cfg, to_json(rep), os.str());
  return rep.passed() ? 0 : exit_verification;
}

// --- paper-example -------------------------------------------------------------

int cmd_example(const RunConfig& cfg) {
  const std::vector<std::int64_t> golden_h{1, 3, 6, 10, 4, 2};
  const std::vector<std::vector<std::int64_t>> golden_rows{{1, 2, 3, 4, 4, 2}, {1, 2, 3}, {1, 2}, {1}};
  const std::int64_t golden_points = 26;
  std::ostringstream os;
  std::vector<std::string> diffs;
  auto compare = [&](const std::string& what, const auto& got, const auto& want, const std::string& shown) {
    const bool ok = got == want;
    os << (ok ? "match     " : "MISMATCH  ") << what << "  " << shown << "\n";
    if (!ok) diffs.push_back(what);
  };

  const auto h = HVector::artinian(golden_h);
  const auto J = lex_ideal_from_hvector(h, 3);
  const unsigned dmax = horizon_for(cfg, J);
  os << "J = " << J.to_string() << "\n";
  compare("h-vector", artinian_h_vector(J).values(), golden_h, artinian_h_vector(J).to_string());

  const auto D = decompose(J);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& L : D.layers)
    if (!L.is_unit()) rows.push_back(artinian_h_vector(L).values());
  for (std::size_t j = 0; j < std::max(rows.size(), golden_rows.size()); ++j) {
    const auto got = j < rows.size() ? rows[j] : std::vector<std::int64_t>{};
    const auto want = j < golden_rows.size() ? golden_rows[j] : std::vector<std::int64_t>{};
    compare("layer I_" + std::to_string(j), got, want, HVector::artinian(got).to_string());
  }
  std::vector<std::int64_t> sums(golden_h.size(), 0);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t d = 0; d < rows[j].size() && d + j < sums.size(); ++d) sums[d + j] += rows[j][d];
  compare("shifted column sums", sums, golden_h, HVector::artinian(sums).to_string());

  const auto A = default_matrix_tlift(3, 1, lift_columns(J), cfg.seed);
  const auto p = validated_prime(A, J, cfg.prime, os);
  const PrimeField field(p);
  const auto I = lift_ideal(J, A, field);
  const auto h_lift = hilbert_oracle(I, dmax, field);
  const auto delta = first_difference(h_lift.values());
  compare("delta h of the lift", delta, hilbert_function(J, dmax).values(), HVector::truncated(delta).to_string());
  const auto pts = point_model(J, A, field);
  compare("points", static_cast<std::int64_t>(pts.size()), golden_points, std::to_string(pts.size()));
  compare("dim I_1", graded_dim(expand(I, field), A.ambient(), 1, field), std::size_t{0},
          std::to_string(graded_dim(expand(I, field), A.ambient(), 1, field)));

  const auto cert = glicci_certificate_artinian(J, A, OracleContext{field, dmax});
  const auto rep = verify_certificate(cert);
  os << step_log(cert);
  compare("certificate replay", rep.passed(), true, rep.passed() ? "all checks pass" : rep.first_failure()->check);
  compare("leaf", to_string(cert.leaf), std::string("licci"), to_string(cert.leaf));

  os << (diffs.empty() ? "all golden comparisons pass\n" : "golden comparisons FAILED\n");
  Json doc{{"passed", diffs.empty()}, {"mismatches", diffs}, {"points", pts.size()}, {"prime", p}, {"dmax", dmax}};
  if (!cfg.out.empty()) doc["certificate"] = to_json(cert);
  emit(cfg, doc, os.str());
  return diffs.empty() ? 0 : exit_verification;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("LIAISON_PRIME")) {
    try {
      cfg.prime = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: LIAISON_PRIME is not a number: " << env << "\n";
      return exit_input;
    }
  }

  CLI::App app{"Monomial ideals, liftings and Gorenstein-liaison certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t prime_flag = 0;
  unsigned dmax_flag = 0;
  auto* prime_opt = app.add_option("--prime", prime_flag, "Field characteristic (default 32003 or $LIAISON_PRIME)");
  app.add_option("--seed", cfg.seed, "Seed for random matrices and spot checks");
  auto* dmax_opt = app.add_option("--dmax", dmax_flag, "Degree horizon for oracle checks");
  app.add_flag("--json", cfg.json, "Write JSON to stdout");
  app.add_option("--out", cfg.out, "Write JSON to this file");

  std::string h_text, path, matrix_spec = "t:1", matrix_file, mode = "artinian";
  std::size_t n = 0;
  auto* lex = app.add_subcommand("lex-build", "Lex-segment ideal with a given Artinian h-vector");
  lex->set_help_flag("--help", "Print this help message and exit");
  lex->add_option("--h", h_text, "Comma-separated h-vector")->required();
  lex->add_option("--n", n, "Number of variables")->required();
  auto* analyze = app.add_subcommand("analyze", "Flags, height and x1-layers of an ideal");
  analyze->add_option("ideal", path)->required();
  auto* lift = app.add_subcommand("lift", "Lift an ideal by a bf or t-lift matrix");
  lift->add_option("ideal", path)->required();
  lift->add_option("--matrix", matrix_spec, "bf or t:<t>");
  lift->add_option("--matrix-file", matrix_file, "Matrix JSON to use instead");
  auto* verify_lift = app.add_subcommand("verify-lift", "Oracle checks for a lifted ideal");
  verify_lift->add_option("lifted", path)->required();
  auto* glicci = app.add_subcommand("glicci", "Build a glicci certificate");
  glicci->add_option("ideal", path)->required();
  glicci->add_option("--mode", mode, "artinian or borel");
  glicci->add_option("--matrix", matrix_spec, "Lifting matrix for artinian mode (t:<t>)");
  auto* verify = app.add_subcommand("verify", "Replay every check of a certificate");
  verify->add_option("certificate", path)->required();
  auto* example = app.add_subcommand("paper-example", "The h = (1,3,6,10,4,2) example end to end");
  example->alias("worked-example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input;
  }
  if (prime_opt->count()) {
    cfg.prime = prime_flag;
    cfg.prime_given = true;
  }
  if (dmax_opt->count()) cfg.dmax = dmax_flag;

  try {
    PrimeField check(cfg.prime);
    (void)check;
    if (lex->parsed()) return cmd_lex_build(cfg, h_text, n);
    if (analyze->parsed()) return cmd_analyze(cfg, path);
    if (lift->parsed()) return cmd_lift(cfg, path, matrix_spec, matrix_file);
    if (verify_lift->parsed()) return cmd_verify_lift(cfg, path);
    if (glicci->parsed()) return cmd_glicci(cfg, path, mode, matrix_spec);
    if (verify->parsed()) return cmd_verify(cfg, path);
    if (example->parsed()) return cmd_example(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return exit_verification;
  }
  return exit_input;
}
