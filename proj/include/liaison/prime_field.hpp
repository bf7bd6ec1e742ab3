#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint64_t;

  static constexpr std::uint64_t default_prime = 32003;

  explicit PrimeField(std::uint64_t p = default_prime) : p_(p) {
    if (p < 2 || p >= (1ull << 31) || !is_prime(p))
      throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint64_t prime() const { return p_; }

  Element reduce(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<Element>(r < 0 ? r + p : r);
  }

  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Element inv(Element a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in Z/p");
    return pow(a, p_ - 2);
  }

  /// Smallest prime strictly larger than p (and below 2^31).
  static std::uint64_t next_prime(std::uint64_t p) {
    for (std::uint64_t q = p + 1;; ++q)
      if (is_prime(q)) return q;
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// Row space of a set of vectors over Z/p, kept in reduced row echelon form.
///
/// Rows are inserted one at a time; the pivot of a new row is its first nonzero
/// column after reduction and earlier rows are cleared in that column, so the
/// stored rows depend only on the insertion order.
class EchelonBasis {
 public:
  using Element = PrimeField::Element;
  using Row = std::vector<Element>;

  EchelonBasis(const PrimeField& field, std::size_t columns) : field_(field), columns_(columns) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  bool full() const { return rows_.size() == columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Normal form of v modulo the row space.
  Row reduce(Row v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Element c = v[pivots_[r]];
      if (c == 0) continue;
      const Row& row = rows_[r];
      for (std::size_t k = pivots_[r]; k < columns_; ++k)
        if (row[k]) v[k] = field_.sub(v[k], field_.mul(c, row[k]));
    }
    return v;
  }

  bool contains(const Row& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(Row v) {
    if (full()) return false;
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < columns_ && v[pivot] == 0) ++pivot;
    if (pivot == columns_) return false;
    const Element scale = field_.inv(v[pivot]);
    for (std::size_t k = pivot; k < columns_; ++k) v[k] = field_.mul(v[k], scale);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Element c = rows_[r][pivot];
      if (c == 0) continue;
      for (std::size_t k = pivot; k < columns_; ++k)
        if (v[k]) rows_[r][k] = field_.sub(rows_[r][k], field_.mul(c, v[k]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  static bool is_zero(const Row& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }

 private:
  PrimeField field_;
  std::size_t columns_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of row vectors.
inline std::size_t matrix_rank(const PrimeField& field, const std::vector<std::vector<PrimeField::Element>>& rows,
                               std::size_t columns) {
  EchelonBasis b(field, columns);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

}  // namespace liaison
