#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
/// The number of variables (the ambient) is part of the value.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial unit(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1) {
    std::vector<Exponent> e(n, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t ambient() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  unsigned degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
  }

  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// Number of variables with a positive exponent.
  std::size_t support_size() const {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
  }

  /// Index of the single variable of a pure power x_i^k (k >= 1).
  std::optional<std::size_t> pure_power_variable() const {
    if (support_size() != 1) return std::nullopt;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) return i;
    return std::nullopt;
  }

  bool is_pure_power() const { return pure_power_variable().has_value(); }

  bool involves(std::size_t i) const { return exps_[i] > 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial with_exponent(std::size_t i, Exponent e) const {
    Monomial m = *this;
    m.exps_.at(i) = e;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }

  /// a / gcd(a, b): the generator of (a) : b.
  friend Monomial colon(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i)
      m.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
    return m;
  }

  bool operator==(const Monomial&) const = default;

  /// Human form, e.g. "x1^2*x3"; variables are 1-based.
  std::string to_string() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << 'x' << (i + 1);
      if (exps_[i] > 1) os << '^' << exps_[i];
    }
    return os.str();
  }

 private:
  std::vector<Exponent> exps_;
};

/// Degree-lexicographic comparison: first by total degree, then the first
/// differing exponent decides (larger exponent of an earlier variable is larger).
inline std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i)
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  return ea.size() <=> eb.size();
}

struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_compare(a, b) > 0; }
};

/// Serialization order for generator lists: ascending degree, and within a
/// degree the deglex-largest first (x1^3, x1^2*x2, x1*x2^2, ...).
struct GeneratorOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return deglex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
      h ^= e + 0x9e3779b9u;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// All monomials of degree d in n variables, deglex-largest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<Exponent>{});
    return out;
  }
  std::vector<Exponent> e(n, 0);
  // Recursive fill: variable i takes the largest remaining budget first.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      fill(i + 1, left - a);
    }
  };
  fill(0, d);
  return out;
}

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return static_cast<std::uint64_t>(r);
}

/// Number of monomials of degree d in n variables.
inline std::uint64_t monomial_count(std::size_t n, std::int64_t d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<std::int64_t>(n) - 1 + d, d);
}

}  // namespace liaison
