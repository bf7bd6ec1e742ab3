#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/monomial.hpp"
#include "liaison/prime_field.hpp"

namespace liaison {

/// A homogeneous polynomial over Z/p in a fixed number of variables.
/// Terms are kept deglex-largest first with no zero coefficients; the degree
/// tag is meaningful even for the zero polynomial.
class Polynomial {
 public:
  using Element = PrimeField::Element;
  using Terms = std::map<Monomial, Element, DegLexGreater>;

  Polynomial(const PrimeField& field, std::size_t ambient, unsigned degree)
      : field_(field), ambient_(ambient), degree_(degree) {}

  static Polynomial constant(const PrimeField& field, std::size_t ambient, std::int64_t c) {
    Polynomial p(field, ambient, 0);
    p.add_term(Monomial::unit(ambient), field.reduce(c));
    return p;
  }

  static Polynomial monomial(const PrimeField& field, const Monomial& m, std::int64_t c = 1) {
    Polynomial p(field, m.ambient(), m.degree());
    p.add_term(m, field.reduce(c));
    return p;
  }

  /// sum_i c_i x_i
  static Polynomial linear(const PrimeField& field, const std::vector<std::int64_t>& coefficients) {
    Polynomial p(field, coefficients.size(), 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      p.add_term(Monomial::variable(coefficients.size(), i), field.reduce(coefficients[i]));
    return p;
  }

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Monomial& m, Element c) {
    if (m.ambient() != ambient_) throw InputError("term ambient does not match polynomial ambient");
    if (m.degree() != degree_)
      throw InputError("term " + m.to_string() + " breaks homogeneity of degree " + std::to_string(degree_));
    c %= field_.prime();
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
      throw InputError("sum of polynomials of different degrees");
    Polynomial r = a.is_zero() ? Polynomial(a.field_, a.ambient_, b.degree_) : a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r(a.field_, a.ambient_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
    return r;
  }

  Polynomial times(const Monomial& m) const {
    Polynomial r(field_, ambient_, degree_ + m.degree());
    for (const auto& [t, c] : terms_) r.add_term(t * m, c);
    return r;
  }

  Polynomial scaled(Element s) const {
    Polynomial r(field_, ambient_, degree_);
    for (const auto& [t, c] : terms_) r.add_term(t, field_.mul(c, s));
    return r;
  }

  /// Value at a point given by coordinates in Z/p.
  Element evaluate(const std::vector<Element>& point) const {
    if (point.size() != ambient_) throw InputError("point dimension does not match polynomial ambient");
    Element total = 0;
    for (const auto& [m, c] : terms_) {
      Element v = c;
      for (std::size_t i = 0; i < ambient_; ++i) v = field_.mul(v, field_.pow(point[i], m[i]));
      total = field_.add(total, v);
    }
    return total;
  }

  bool operator==(const Polynomial& o) const {
    return ambient_ == o.ambient_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (c != 1 || m.is_unit()) {
        os << c;
        if (!m.is_unit()) os << '*';
      }
      if (!m.is_unit()) os << m.to_string();
    }
    return os.str();
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.ambient_ != b.ambient_) throw InputError("polynomials live in different rings");
    if (!(a.field_ == b.field_)) throw InputError("polynomials over different primes");
  }

  PrimeField field_;
  std::size_t ambient_;
  unsigned degree_;
  Terms terms_;
};

}  // namespace liaison
