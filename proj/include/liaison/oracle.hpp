#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/hilbert.hpp"
#include "liaison/lifting.hpp"
#include "liaison/monomial.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/prime_field.hpp"

namespace liaison {

/// The degree-d monomials of N variables in deglex order (largest first), with
/// reverse lookup. This order is the column layout of every coefficient matrix.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t ambient, unsigned degree)
      : ambient_(ambient), degree_(degree), monomials_(monomials_of_degree(ambient, degree)) {
    index_.reserve(monomials_.size());
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
  }

  std::size_t ambient() const { return ambient_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t k) const { return monomials_[k]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::size_t index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial " + m.to_string() + " not in basis");
    return it->second;
  }

 private:
  std::size_t ambient_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Shared, immutable bases keyed by (variables, degree).
inline const MonomialBasis& monomial_basis(std::size_t ambient, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{ambient, degree}];
  if (!slot) slot = std::make_unique<MonomialBasis>(ambient, degree);
  return *slot;
}

/// Dense coefficient row of a homogeneous polynomial in its degree's basis.
inline std::vector<PrimeField::Element> coefficient_row(const Polynomial& f) {
  const auto& B = monomial_basis(f.ambient(), f.degree());
  std::vector<PrimeField::Element> row(B.size(), 0);
  for (const auto& [m, c] : f.terms()) row[B.index(m)] = c;
  return row;
}

/// Graded pieces I_d of a homogeneous ideal over Z/p, built degree by degree:
/// I_d is spanned by x_i · I_{d-1} and the generators of degree d.
class GradedIdeal {
 public:
  using Element = PrimeField::Element;

  GradedIdeal(const PrimeField& field, std::size_t ambient, std::vector<Polynomial> generators)
      : field_(field), ambient_(ambient), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.ambient() != ambient_) throw InputError("generator lives in a ring with the wrong number of variables");
  }

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  std::size_t dim(unsigned d) {
    build(d);
    return full_[d] ? monomial_basis(ambient_, d).size() : pieces_[d].rank();
  }

  /// Hilbert function of R/I at d.
  std::int64_t quotient_dim(unsigned d) {
    return static_cast<std::int64_t>(monomial_basis(ambient_, d).size()) - static_cast<std::int64_t>(dim(d));
  }

  /// Normal form of a degree-d row modulo I_d.
  std::vector<Element> reduce(std::vector<Element> row, unsigned d) {
    build(d);
    if (full_[d]) return std::vector<Element>(row.size(), 0);
    return pieces_[d].reduce(std::move(row));
  }

  bool contains(const Polynomial& f) {
    if (f.is_zero()) return true;
    return EchelonBasis::is_zero(reduce(coefficient_row(f), f.degree()));
  }

 private:
  void build(unsigned d) {
    while (pieces_.size() <= d) {
      const auto next = static_cast<unsigned>(pieces_.size());
      const auto& B = monomial_basis(ambient_, next);
      EchelonBasis piece(field_, B.size());
      bool full = false;
      if (next > 0 && full_[next - 1]) {
        full = true;
      } else {
        if (next > 0) {
          const auto& prev = monomial_basis(ambient_, next - 1);
          for (const auto& row : pieces_[next - 1].rows()) {
            for (std::size_t i = 0; i < ambient_ && !piece.full(); ++i) {
              std::vector<Element> shifted(B.size(), 0);
              for (std::size_t k = 0; k < row.size(); ++k)
                if (row[k]) shifted[B.index(prev.monomial(k) * Monomial::variable(ambient_, i))] = row[k];
              piece.insert(std::move(shifted));
            }
            if (piece.full()) break;
          }
        }
        for (const auto& g : generators_)
          if (g.degree() == next && !g.is_zero() && !piece.full()) piece.insert(coefficient_row(g));
        full = piece.full() && B.size() > 0;
      }
      pieces_.push_back(full ? EchelonBasis(field_, B.size()) : std::move(piece));
      full_.push_back(full);
    }
  }

  PrimeField field_;
  std::size_t ambient_;
  std::vector<Polynomial> generators_;
  std::vector<EchelonBasis> pieces_;
  std::vector<bool> full_;
};

inline Polynomial expand(const LiftedGenerator& g, const LiftingMatrix& A, const PrimeField& field) {
  Polynomial p = Polynomial::constant(field, A.ambient(), 1);
  for (const auto& f : g.factors) p = p * A.entry(f.row, f.column).to_polynomial(field);
  return p;
}

inline std::vector<Polynomial> expand(const std::vector<LiftedGenerator>& gens, const LiftingMatrix& A,
                                      const PrimeField& field) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(expand(g, A, field));
  return out;
}

inline std::vector<Polynomial> expand(const LiftedIdeal& I, const PrimeField& field) {
  return expand(I.generators, I.matrix, field);
}

/// The generators of a monomial ideal as polynomials.
inline std::vector<Polynomial> as_polynomials(const MonomialIdeal& J, const PrimeField& field) {
  std::vector<Polynomial> out;
  for (const auto& g : J.generators()) out.push_back(Polynomial::monomial(field, g));
  return out;
}

/// dim_K (I)_d
inline std::size_t graded_dim(const std::vector<Polynomial>& gens, std::size_t ambient, unsigned d,
                              const PrimeField& field) {
  GradedIdeal I(field, ambient, gens);
  return I.dim(d);
}

/// h_{R/I}(d) for 0 <= d <= dmax, truncated at dmax.
inline HVector hilbert_oracle(const std::vector<Polynomial>& gens, std::size_t ambient, unsigned dmax,
                              const PrimeField& field) {
  GradedIdeal I(field, ambient, gens);
  std::vector<std::int64_t> v;
  for (unsigned d = 0; d <= dmax; ++d) v.push_back(I.quotient_dim(d));
  return HVector::truncated(std::move(v));
}

inline HVector hilbert_oracle(const LiftedIdeal& I, unsigned dmax, const PrimeField& field) {
  return hilbert_oracle(expand(I, field), I.matrix.ambient(), dmax, field);
}

/// Index of the first generator of a (of degree <= dmax) not in (b), if any.
inline std::optional<std::size_t> first_uncontained(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                                    std::size_t ambient, unsigned dmax, const PrimeField& field) {
  GradedIdeal B(field, ambient, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].degree() <= dmax && !B.contains(a[k])) return k;
  return std::nullopt;
}

/// (a)_d ⊆ (b)_d for all d <= dmax. Checking generators suffices.
inline bool contains_up_to(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t ambient,
                           unsigned dmax, const PrimeField& field) {
  return !first_uncontained(a, b, ambient, dmax, field).has_value();
}

inline bool ideals_equal_up_to(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                               std::size_t ambient, unsigned dmax, const PrimeField& field) {
  return contains_up_to(a, b, ambient, dmax, field) && contains_up_to(b, a, ambient, dmax, field);
}

struct ColonReport {
  bool stable = true;
  std::optional<unsigned> first_failing_degree;
  std::int64_t kernel_dim = 0;  // at the failing degree
  std::int64_t ideal_dim = 0;
};

/// Certifies I : f = I through degree dmax: for each d, the g of degree d with
/// f·g ∈ I form a space of dimension exactly dim I_d.
inline ColonReport colon_stable(GradedIdeal& I, const Polynomial& f, unsigned dmax) {
  const auto& field = I.field();
  const auto ambient = I.ambient();
  ColonReport rep;
  for (unsigned d = 0; d <= dmax; ++d) {
    const auto& B = monomial_basis(ambient, d);
    const unsigned target = d + f.degree();
    EchelonBasis images(field, monomial_basis(ambient, target).size());
    for (const auto& m : B.monomials()) images.insert(I.reduce(coefficient_row(f.times(m)), target));
    const auto kernel = static_cast<std::int64_t>(B.size() - images.rank());
    const auto inside = static_cast<std::int64_t>(I.dim(d));
    if (kernel != inside) {
      rep.stable = false;
      rep.first_failing_degree = d;
      rep.kernel_dim = kernel;
      rep.ideal_dim = inside;
      return rep;
    }
  }
  return rep;
}

inline ColonReport colon_stable(const std::vector<Polynomial>& gens, const Polynomial& f, std::size_t ambient,
                                unsigned dmax, const PrimeField& field) {
  GradedIdeal I(field, ambient, gens);
  return colon_stable(I, f, dmax);
}

/// Coefficient matrix of the degree-d multiples m·g as CSV: one header line of
/// column monomials, then one line per multiple (generators in order, m deglex).
inline void write_coefficient_csv(std::ostream& os, const std::vector<Polynomial>& gens, std::size_t ambient,
                                  unsigned d) {
  const auto& B = monomial_basis(ambient, d);
  os << "multiple";
  for (const auto& m : B.monomials()) os << ',' << m.to_string();
  os << '\n';
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].degree() > d) continue;
    for (const auto& m : monomial_basis(ambient, d - gens[k].degree()).monomials()) {
      os << "g" << k + 1 << '*' << m.to_string();
      for (auto c : coefficient_row(gens[k].times(m))) os << ',' << c;
      os << '\n';
    }
  }
}

}  // namespace liaison
