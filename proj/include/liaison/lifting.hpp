#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/layers.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/prime_field.hpp"

namespace liaison {

/// A linear form sum_k c_k y_k over R = K[x_1..x_n, u_1..u_t]; the x's come first.
struct LinearForm {
  std::vector<std::int64_t> coefficients;

  std::size_t ambient() const { return coefficients.size(); }

  bool is_zero_mod(const PrimeField& field) const {
    for (auto c : coefficients)
      if (field.reduce(c) != 0) return false;
    return true;
  }

  Polynomial to_polynomial(const PrimeField& field) const { return Polynomial::linear(field, coefficients); }

  PrimeField::Element evaluate(const PrimeField& field, const std::vector<PrimeField::Element>& point) const {
    PrimeField::Element v = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      v = field.add(v, field.mul(field.reduce(coefficients[k]), point[k]));
    return v;
  }

  /// e.g. "x2 + 2*x1"; the highest-index x is printed first, then the other
  /// x's, then the u's (variables past x_count print as u1, u2, ...).
  std::string to_string(std::size_t x_count) const {
    std::vector<std::size_t> order;
    for (std::size_t k = std::min(x_count, coefficients.size()); k-- > 0;) order.push_back(k);
    for (std::size_t k = x_count; k < coefficients.size(); ++k) order.push_back(k);
    std::ostringstream os;
    bool first = true;
    for (auto k : order) {
      const auto c = coefficients[k];
      if (c == 0) continue;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const auto mag = c < 0 ? -c : c;
      if (mag != 1) os << mag << '*';
      if (k < x_count) os << 'x' << (k + 1);
      else os << 'u' << (k - x_count + 1);
    }
    return first ? "0" : os.str();
  }

  bool operator==(const LinearForm&) const = default;
};

enum class MatrixKind { bf, t_lift, custom };

inline std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::bf: return "bf";
    case MatrixKind::t_lift: return "t-lift";
    case MatrixKind::custom: return "custom";
  }
  return "?";
}

/// The lifting matrix: row r holds the linear forms L_{r,1}, L_{r,2}, ... used
/// to lift the variable row_variables[r]. All forms live in the same ring R.
struct LiftingMatrix {
  MatrixKind kind = MatrixKind::custom;
  unsigned t = 0;            // number of u variables in R
  std::uint64_t seed = 0;    // t-lift only
  std::size_t x_count = 0;   // number of x variables in R
  std::vector<std::size_t> row_variables;
  std::vector<std::vector<LinearForm>> rows;

  std::size_t ambient() const { return x_count + t; }
  std::size_t row_count() const { return rows.size(); }

  std::size_t columns() const {
    if (rows.empty()) return 0;
    std::size_t c = rows.front().size();
    for (const auto& r : rows) c = std::min(c, r.size());
    return c;
  }

  const LinearForm& entry(std::size_t row, std::size_t column) const { return rows.at(row).at(column); }

  /// The bf matrix keeps x_1 unlifted: its first row is x_1, x_1, ...
  bool is_identity_row(std::size_t r) const { return kind == MatrixKind::bf && row_variables.at(r) == 0; }

  /// A' : the same forms with the first row removed, lifting the remaining variables.
  LiftingMatrix without_first_row() const {
    if (rows.empty()) throw InputError("cannot drop a row from an empty lifting matrix");
    LiftingMatrix m = *this;
    m.rows.erase(m.rows.begin());
    m.row_variables.erase(m.row_variables.begin());
    return m;
  }

  bool operator==(const LiftingMatrix&) const = default;
};

/// bf style: row j is x_j, x_j + x_1, x_j + 2 x_1, ...; x_1 itself stays unlifted.
inline LiftingMatrix default_matrix_bf(std::size_t n, std::size_t columns) {
  LiftingMatrix A;
  A.kind = MatrixKind::bf;
  A.x_count = n;
  for (std::size_t j = 0; j < n; ++j) {
    A.row_variables.push_back(j);
    std::vector<LinearForm> row;
    for (std::size_t i = 0; i < columns; ++i) {
      LinearForm L{std::vector<std::int64_t>(n, 0)};
      L.coefficients[j] = 1;
      if (j != 0) L.coefficients[0] = static_cast<std::int64_t>(i);
      row.push_back(std::move(L));
    }
    A.rows.push_back(std::move(row));
  }
  return A;
}

/// t-lift style: L_{j,i} = x_j + sum_k c_{j,i,k} u_k with coefficients drawn
/// from a seeded mt19937_64 in [1, 32002], distinct within each row.
inline LiftingMatrix default_matrix_tlift(std::size_t n, unsigned t, std::size_t columns, std::uint64_t seed) {
  if (t == 0) throw InputError("t-lift matrix needs t >= 1");
  LiftingMatrix A;
  A.kind = MatrixKind::t_lift;
  A.t = t;
  A.seed = seed;
  A.x_count = n;
  std::mt19937_64 engine(seed);
  constexpr std::uint64_t range = 32002;
  for (std::size_t j = 0; j < n; ++j) {
    A.row_variables.push_back(j);
    std::set<std::vector<std::int64_t>> used;
    std::vector<LinearForm> row;
    while (row.size() < columns) {
      std::vector<std::int64_t> pert(t);
      for (auto& c : pert) c = static_cast<std::int64_t>(engine() % range) + 1;
      if (!used.insert(pert).second) continue;
      LinearForm L{std::vector<std::int64_t>(n + t, 0)};
      L.coefficients[j] = 1;
      for (unsigned k = 0; k < t; ++k) L.coefficients[n + k] = pert[k];
      row.push_back(std::move(L));
    }
    A.rows.push_back(std::move(row));
  }
  return A;
}

/// Outcome of checking a lifting matrix against the ideal it should lift.
struct MatrixReport {
  bool valid = true;
  bool exhaustive = true;                 // selection check covered every selection
  std::uint64_t selections_checked = 0;
  std::vector<std::string> violations;    // "(a) ...", "(b) ...", "shape ..."

  std::string summary() const {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << " (" << selections_checked << " selections, "
       << (exhaustive ? "exhaustive" : "sampled") << ")";
    for (const auto& v : violations) os << "\n  " << v;
    return os.str();
  }
};

namespace detail {

inline bool proportional(const PrimeField& field, const LinearForm& a, const LinearForm& b) {
  std::vector<std::vector<PrimeField::Element>> m(2);
  for (auto c : a.coefficients) m[0].push_back(field.reduce(c));
  for (auto c : b.coefficients) m[1].push_back(field.reduce(c));
  return matrix_rank(field, m, a.ambient()) < 2;
}

}  // namespace detail

/// Checks the standing assumptions on A for lifting J:
///  (a) the used entries of each row are pairwise non-proportional;
///  (b) every choice of one used entry per row is linearly independent
///      (exhaustive up to 10^6 choices, seeded sampling beyond).
/// (b) makes the row products a complete intersection and the t = 1 point
/// model well defined with distinct points.
inline MatrixReport validate_matrix(const LiftingMatrix& A, const MonomialIdeal& J, const PrimeField& field,
                                    std::uint64_t sample_seed = 0) {
  MatrixReport rep;
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  if (A.row_count() != J.ambient()) {
    fail("shape: matrix has " + std::to_string(A.row_count()) + " rows but the ideal has " +
         std::to_string(J.ambient()) + " variables");
    return rep;
  }
  std::vector<std::size_t> used(A.row_count());
  for (std::size_t r = 0; r < A.row_count(); ++r) {
    used[r] = J.max_exponent(r);
    if (A.rows[r].size() < used[r])
      fail("shape: row " + std::to_string(r + 1) + " has " + std::to_string(A.rows[r].size()) +
           " columns but " + std::to_string(used[r]) + " are needed");
    for (const auto& L : A.rows[r])
      if (L.ambient() != A.ambient()) fail("shape: entry of row " + std::to_string(r + 1) + " has the wrong length");
  }
  if (!rep.valid) return rep;
  for (std::size_t r = 0; r < A.row_count(); ++r) {
    for (std::size_t i = 0; i < used[r]; ++i) {
      const auto& L = A.rows[r][i];
      if (L.is_zero_mod(field)) fail("shape: L_{" + std::to_string(r + 1) + "," + std::to_string(i + 1) + "} is zero");
      if (A.kind == MatrixKind::t_lift) {
        for (std::size_t k = 0; k < A.x_count; ++k)
          if (k != A.row_variables[r] && field.reduce(L.coefficients[k]) != 0)
            fail("t-lift: L_{" + std::to_string(r + 1) + "," + std::to_string(i + 1) + "} involves x" +
                 std::to_string(k + 1));
      }
    }
    if (A.is_identity_row(r)) continue;
    for (std::size_t i = 0; i < used[r]; ++i)
      for (std::size_t k = i + 1; k < used[r]; ++k)
        if (detail::proportional(field, A.rows[r][i], A.rows[r][k]))
          fail("(a) row " + std::to_string(r + 1) + ": entries " + std::to_string(i + 1) + " and " +
               std::to_string(k + 1) + " are proportional");
  }
  if (!rep.valid) return rep;

  std::vector<std::size_t> active;
  long double total = 1;
  for (std::size_t r = 0; r < A.row_count(); ++r)
    if (used[r] > 0) {
      active.push_back(r);
      total *= static_cast<long double>(used[r]);
    }
  if (active.empty()) return rep;

  auto check_selection = [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<PrimeField::Element>> m;
    for (std::size_t q = 0; q < active.size(); ++q) {
      std::vector<PrimeField::Element> row;
      for (auto c : A.rows[active[q]][cols[q]].coefficients) row.push_back(field.reduce(c));
      m.push_back(std::move(row));
    }
    ++rep.selections_checked;
    if (matrix_rank(field, m, A.ambient()) < active.size()) {
      std::ostringstream os;
      os << "(b) dependent selection:";
      for (std::size_t q = 0; q < active.size(); ++q) os << " L_{" << active[q] + 1 << "," << cols[q] + 1 << "}";
      fail(os.str());
    }
  };

  constexpr long double exhaustive_limit = 1e6;
  std::vector<std::size_t> cols(active.size(), 0);
  if (total <= exhaustive_limit) {
    while (true) {
      check_selection(cols);
      std::size_t q = 0;
      while (q < active.size() && ++cols[q] == used[active[q]]) cols[q++] = 0;
      if (q == active.size()) break;
      if (rep.violations.size() > 20) break;
    }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 engine(sample_seed);
    for (int s = 0; s < 200000 && rep.violations.size() <= 20; ++s) {
      for (std::size_t q = 0; q < active.size(); ++q) cols[q] = engine() % used[active[q]];
      check_selection(cols);
    }
  }
  return rep;
}

/// Reference to the entry L_{row+1, column+1} of a lifting matrix (0-based).
struct FactorRef {
  std::size_t row = 0;
  std::size_t column = 0;
  bool operator==(const FactorRef&) const = default;
};

/// A lifted monomial m̄ as an unexpanded product of matrix entries.
struct LiftedGenerator {
  std::vector<FactorRef> factors;
  std::size_t degree() const { return factors.size(); }
  bool operator==(const LiftedGenerator&) const = default;
};

/// m̄ = prod_j prod_{i <= a_j} L_{j,i}
inline LiftedGenerator bar(const Monomial& m, const LiftingMatrix& A) {
  if (m.ambient() != A.row_count())
    throw InputError("monomial has " + std::to_string(m.ambient()) + " variables but the matrix has " +
                     std::to_string(A.row_count()) + " rows");
  LiftedGenerator g;
  for (std::size_t r = 0; r < m.ambient(); ++r) {
    if (A.rows[r].size() < m[r])
      throw InputError("lifting " + m.to_string() + " needs " + std::to_string(m[r]) + " columns in row " +
                       std::to_string(r + 1));
    for (std::size_t i = 0; i < m[r]; ++i) g.factors.push_back({r, i});
  }
  return g;
}

/// I = (m̄_1, ..., m̄_r) for the minimal generators m_k of J.
struct LiftedIdeal {
  MonomialIdeal source;
  LiftingMatrix matrix;
  std::vector<LiftedGenerator> generators;
};

inline LiftedIdeal lift_ideal(const MonomialIdeal& J, const LiftingMatrix& A, const PrimeField& field) {
  auto report = validate_matrix(A, J, field);
  if (!report.valid) throw VerificationError("lifting matrix rejected: " + report.summary());
  LiftedIdeal I{J, A, {}};
  for (const auto& g : J.generators()) I.generators.push_back(bar(g, A));
  return I;
}

/// FNV-1a fingerprint of the matrix entries, for integrity of stored liftings.
inline std::string matrix_fingerprint(const LiftingMatrix& A) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::int64_t>(A.kind));
  mix(A.t);
  mix(static_cast<std::int64_t>(A.x_count));
  for (std::size_t r = 0; r < A.rows.size(); ++r) {
    mix(static_cast<std::int64_t>(A.row_variables[r]));
    mix(static_cast<std::int64_t>(A.rows[r].size()));
    for (const auto& L : A.rows[r])
      for (auto c : L.coefficients) mix(c);
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// A point of P^{N-1} over Z/p, normalized so its first nonzero coordinate is 1,
/// labeled by the standard monomial that produced it.
struct LabeledPoint {
  Monomial label;
  std::vector<PrimeField::Element> coordinates;
};

struct PointConfiguration {
  std::vector<LabeledPoint> points;
  std::size_t size() const { return points.size(); }
};

/// Explicit zero-scheme of a t = 1 lifting of an Artinian ideal: for each
/// standard monomial x^c the point where L_{j, c_j + 1} vanishes for all j.
/// Verifies that every lifted generator vanishes at every point and that the
/// points are pairwise distinct.
inline PointConfiguration point_model(const MonomialIdeal& J, const LiftingMatrix& A, const PrimeField& field) {
  if (!is_artinian(J)) throw InputError("point model needs an Artinian ideal, got " + J.to_string());
  if (A.row_count() != J.ambient() || A.ambient() != A.row_count() + 1)
    throw InputError("point model needs an n x * matrix over n + 1 variables (t = 1)");
  const std::size_t n = J.ambient();
  const std::size_t N = A.ambient();
  PointConfiguration pc;
  for (unsigned d = 0;; ++d) {
    const auto standard = standard_monomials(J, d);
    if (standard.empty()) break;
    for (const auto& c : standard) {
      EchelonBasis sys(field, N);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<PrimeField::Element> row;
        for (auto v : A.entry(j, c[j]).coefficients) row.push_back(field.reduce(v));
        sys.insert(std::move(row));
      }
      if (sys.rank() != n)
        throw VerificationError("point model: singular system for standard monomial " + c.to_string());
      std::vector<bool> is_pivot(N, false);
      for (auto p : sys.pivots()) is_pivot[p] = true;
      std::size_t free = 0;
      while (is_pivot[free]) ++free;
      std::vector<PrimeField::Element> pt(N, 0);
      pt[free] = 1;
      for (std::size_t r = 0; r < sys.rank(); ++r) pt[sys.pivots()[r]] = field.neg(sys.rows()[r][free]);
      std::size_t lead = 0;
      while (pt[lead] == 0) ++lead;
      const auto s = field.inv(pt[lead]);
      for (auto& x : pt) x = field.mul(x, s);
      pc.points.push_back({c, std::move(pt)});
    }
  }
  // Each m̄ vanishes at p_c: if a does not divide c then a_j > c_j for some j,
  // and L_{j, c_j + 1} is one of the factors of m̄.
  for (const auto& g : J.generators()) {
    const auto lifted = bar(g, A);
    for (const auto& p : pc.points) {
      bool vanishes = false;
      for (const auto& f : lifted.factors)
        if (A.entry(f.row, f.column).evaluate(field, p.coordinates) == 0) vanishes = true;
      if (!vanishes)
        throw VerificationError("point model: lift of " + g.to_string() + " does not vanish at the point of " +
                                p.label.to_string());
    }
  }
  std::set<std::vector<PrimeField::Element>> distinct;
  for (const auto& p : pc.points)
    if (!distinct.insert(p.coordinates).second)
      throw VerificationError("point model: repeated point for standard monomial " + p.label.to_string());
  return pc;
}

/// The lifted ideal rewritten along the x_1-layers of J:
///   I = bar I_0 + L_{1,1} bar I_1 + ... + L_{1,1}...L_{1,alpha} bar I_alpha,
/// with bar I_j lifted by A' (A minus its first row). For Artinian or Borel-fixed
/// J the last layer is (1), leaving the pure product L_{1,1}...L_{1,alpha}.
struct LayeredLift {
  struct Term {
    unsigned j = 0;
    MonomialIdeal layer;                       // I_j, ambient n-1
    std::vector<LiftedGenerator> lifted;       // bar I_j, refs into A (rows >= 1)
  };
  unsigned alpha = 0;
  std::vector<Term> terms;

  /// Flattened generator list, each term multiplied by its row-1 prefix.
  std::vector<LiftedGenerator> generators() const {
    std::vector<LiftedGenerator> out;
    for (const auto& t : terms) {
      for (const auto& g : t.lifted) {
        LiftedGenerator h;
        for (std::size_t i = 0; i < t.j; ++i) h.factors.push_back({0, i});
        h.factors.insert(h.factors.end(), g.factors.begin(), g.factors.end());
        out.push_back(std::move(h));
      }
    }
    return out;
  }
};

inline LayeredLift lifted_layer_formula(const MonomialIdeal& J, const LiftingMatrix& A) {
  if (A.row_count() != J.ambient()) throw InputError("matrix rows do not match the ideal's variables");
  const auto D = decompose_along(J, 0);
  const auto A1 = A.without_first_row();
  LayeredLift out;
  out.alpha = D.alpha();
  for (unsigned j = 0; j <= D.alpha(); ++j) {
    LayeredLift::Term term{j, D.layers[j], {}};
    for (const auto& g : D.layers[j].generators()) {
      auto lifted = bar(g, A1);
      for (auto& f : lifted.factors) f.row += 1;
      term.lifted.push_back(std::move(lifted));
    }
    if (A.rows[0].size() < j) throw InputError("row 1 of the matrix is too short for the layer formula");
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace liaison
