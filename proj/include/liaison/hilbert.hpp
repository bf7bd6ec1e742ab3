#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/monomial_ideal.hpp"

namespace liaison {

/// A finite piece of a Hilbert function h(0), h(1), ...
///
/// Two kinds: an Artinian h-vector (implicitly zero past its last entry,
/// trailing zeros trimmed) and a truncated function known only through a
/// horizon degree. Reading a truncated vector past its horizon is an error.
class HVector {
 public:
  HVector() = default;

  static HVector artinian(std::vector<std::int64_t> values) {
    while (!values.empty() && values.back() == 0) values.pop_back();
    HVector h;
    h.values_ = std::move(values);
    return h;
  }

  /// values.size() must be horizon + 1.
  static HVector truncated(std::vector<std::int64_t> values) {
    if (values.empty()) throw InputError("truncated h-vector needs at least one value");
    HVector h;
    h.horizon_ = static_cast<unsigned>(values.size() - 1);
    h.values_ = std::move(values);
    return h;
  }

  bool is_artinian() const { return !horizon_.has_value(); }
  std::optional<unsigned> horizon() const { return horizon_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Last degree with a known value.
  std::int64_t last_degree() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  std::int64_t at(std::int64_t d) const {
    if (d < 0) return 0;
    if (horizon_ && d > static_cast<std::int64_t>(*horizon_))
      throw HorizonError("h-vector read at degree " + std::to_string(d) + " beyond horizon " +
                         std::to_string(*horizon_));
    if (d >= static_cast<std::int64_t>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(d)];
  }

  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto v : values_) s += v;
    return s;
  }

  /// Equality on degrees 0..upto; throws if either side's horizon is shorter.
  bool agrees_through(const HVector& other, unsigned upto) const {
    for (unsigned d = 0; d <= upto; ++d)
      if (at(d) != other.at(d)) return false;
    return true;
  }

  /// Converts a truncated vector whose last known value is 0 into an Artinian one.
  HVector to_artinian() const {
    if (is_artinian()) return *this;
    if (values_.back() != 0)
      throw HorizonError("truncated h-vector does not vanish at its horizon; cannot treat as Artinian");
    return artinian(values_);
  }

  bool operator==(const HVector&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
    os << ')';
    return os.str();
  }

 private:
  std::vector<std::int64_t> values_;
  std::optional<unsigned> horizon_;
};

/// h_{S/J}(d) for 0 <= d <= dmax, by counting standard monomials.
inline HVector hilbert_function(const MonomialIdeal& J, unsigned dmax) {
  std::vector<std::int64_t> v;
  for (unsigned d = 0; d <= dmax; ++d) v.push_back(static_cast<std::int64_t>(count_standard_monomials(J, d)));
  return HVector::truncated(std::move(v));
}

/// The h-vector of S/J for an Artinian J.
inline HVector artinian_h_vector(const MonomialIdeal& J) {
  if (!is_artinian(J)) throw InputError("artinian_h_vector: " + J.to_string() + " is not Artinian");
  std::vector<std::int64_t> v;
  for (unsigned d = 0;; ++d) {
    const auto c = count_standard_monomials(J, d);
    if (c == 0) break;
    v.push_back(static_cast<std::int64_t>(c));
  }
  return HVector::artinian(std::move(v));
}

/// Macaulay's bound v^<d>: the largest admissible value in degree d+1 after
/// value v in degree d. Uses the d-th binomial representation of v, built
/// greedily from the top binomial.
inline std::uint64_t macaulay_bound(std::uint64_t v, unsigned d) {
  if (d == 0) throw InputError("macaulay_bound needs d >= 1");
  std::uint64_t bound = 0;
  for (unsigned i = d; i >= 1 && v > 0; --i) {
    std::int64_t k = i;
    while (binomial(k + 1, i) <= v) ++k;
    v -= binomial(k, i);
    bound += binomial(k + 1, i + 1);
  }
  return bound;
}

struct MacaulayViolation {
  unsigned degree = 0;       // degree whose value is too large (or negative / bad h(0))
  std::int64_t value = 0;
  std::int64_t bound = 0;

  std::string message() const {
    std::ostringstream os;
    os << "bound " << bound << " < " << value << " at degree " << degree;
    return os.str();
  }
};

/// The first degree at which h fails to be an O-sequence on its stored range.
inline std::optional<MacaulayViolation> first_macaulay_violation(const HVector& h) {
  const auto& v = h.values();
  if (v.empty() || v[0] != 1) return MacaulayViolation{0, v.empty() ? 0 : v[0], 1};
  for (std::size_t d = 1; d < v.size(); ++d) {
    if (v[d] < 0) return MacaulayViolation{static_cast<unsigned>(d), v[d], 0};
  }
  for (std::size_t d = 1; d + 1 < v.size(); ++d) {
    const auto b = static_cast<std::int64_t>(macaulay_bound(static_cast<std::uint64_t>(v[d]), static_cast<unsigned>(d)));
    if (v[d + 1] > b) return MacaulayViolation{static_cast<unsigned>(d + 1), v[d + 1], b};
  }
  return std::nullopt;
}

inline bool is_o_sequence(const HVector& h) { return !first_macaulay_violation(h).has_value(); }

/// v(d) - v(d-1) over the stored range, entries allowed to go negative.
inline std::vector<std::int64_t> first_difference(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - (i ? v[i - 1] : 0);
  return out;
}

/// The k-th difference Δ^k h over the stored range of h. The result is a
/// truncated vector with the same last degree. Throws if any entry goes
/// negative (h is not k times differentiable there).
inline HVector difference(const HVector& h, unsigned k) {
  std::vector<std::int64_t> v = h.values();
  for (unsigned r = 0; r < k; ++r) {
    v = first_difference(v);
    for (std::size_t d = 0; d < v.size(); ++d)
      if (v[d] < 0)
        throw InputError("difference " + std::to_string(r + 1) + " of " + h.to_string() +
                         " is negative at degree " + std::to_string(d));
  }
  if (k == 0) return h;
  return HVector::truncated(std::move(v));
}

/// k-fold running sum of h, evaluated on degrees 0..dmax.
inline HVector partial_sum(const HVector& h, unsigned k, unsigned dmax) {
  std::vector<std::int64_t> v(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) v[d] = h.at(d);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned d = 1; d <= dmax; ++d) v[d] += v[d - 1];
  return HVector::truncated(std::move(v));
}

/// h and its first k differences (over the stored range) are all O-sequences.
inline bool is_k_differentiable(const HVector& h, unsigned k) {
  std::vector<std::int64_t> v = h.values();
  for (unsigned r = 0; r <= k; ++r) {
    if (r > 0) v = first_difference(v);
    if (!is_o_sequence(HVector::truncated(v))) return false;
  }
  return true;
}

/// The Artinian lex-segment ideal of K[x_1..x_n] with h-vector h: in each
/// degree d take the deglex-largest dim S_d - h(d) monomials.
inline MonomialIdeal lex_ideal_from_hvector(const HVector& h_in, std::size_t n) {
  const HVector h = h_in.to_artinian();
  if (auto viol = first_macaulay_violation(h)) throw InputError("not an O-sequence: " + viol->message());
  if (h.at(1) > static_cast<std::int64_t>(n))
    throw InputError("h(1) = " + std::to_string(h.at(1)) + " exceeds the variable count " + std::to_string(n));
  const unsigned top = static_cast<unsigned>(h.size());  // first degree where h vanishes
  std::vector<Monomial> gens;
  std::vector<Monomial> previous;  // degree d-1 part of J
  for (unsigned d = 1; d <= top; ++d) {
    auto all = monomials_of_degree(n, d);
    const auto keep = static_cast<std::size_t>(h.at(d));
    if (keep > all.size()) throw InputError("h(" + std::to_string(d) + ") exceeds dim S_d");
    std::vector<Monomial> current(all.begin(), all.end() - static_cast<std::ptrdiff_t>(keep));
    // Shadow condition: x_i * J_{d-1} ⊆ J_d, guaranteed by Macaulay's theorem.
    std::unordered_set<Monomial, MonomialHash> in_degree(current.begin(), current.end());
    for (const auto& m : previous)
      for (std::size_t i = 0; i < n; ++i)
        if (!in_degree.count(m * Monomial::variable(n, i)))
          throw std::logic_error("lex builder: shadow of degree " + std::to_string(d - 1) +
                                 " escapes the lex segment (O-sequence check is broken)");
    gens.insert(gens.end(), current.begin(), current.end());
    previous = std::move(current);
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace liaison
