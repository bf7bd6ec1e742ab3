#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

/// A monomial ideal in K[x_1..x_n], held by its minimal generators.
///
/// The generator list is always minimal and sorted in GeneratorOrder, so two
/// ideals are equal exactly when their generator lists are equal. The zero
/// ideal has no generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    for (const auto& g : gens)
      if (g.ambient() != n) throw InputError("monomial ambient does not match ideal ambient");
    gens_ = minimal_set(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

  /// (x_1, ..., x_n)^power
  static MonomialIdeal maximal_power(std::size_t n, unsigned power = 1) {
    return MonomialIdeal(n, monomials_of_degree(n, power));
  }

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const {
    if (m.ambient() != n_) throw InputError("monomial ambient does not match ideal ambient");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  unsigned max_generator_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Least degree of a nonzero element; empty for the zero ideal.
  std::optional<unsigned> initial_degree() const {
    if (gens_.empty()) return std::nullopt;
    unsigned d = gens_.front().degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
  }

  /// Largest exponent of x_i among the minimal generators.
  Exponent max_exponent(std::size_t i) const {
    Exponent a = 0;
    for (const auto& g : gens_) a = std::max(a, g[i]);
    return a;
  }

  bool operator==(const MonomialIdeal&) const = default;

  std::string to_string() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  static std::vector<Monomial> minimal_set(std::vector<Monomial> gens) {
    // Sorting by degree lets each candidate be checked only against kept ones.
    std::sort(gens.begin(), gens.end(), GeneratorOrder{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw InputError("ambient mismatch in ideal sum");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// m * J
inline MonomialIdeal multiply(const MonomialIdeal& J, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) gens.push_back(g * m);
  return MonomialIdeal(J.ambient(), std::move(gens));
}

inline MonomialIdeal colon(const MonomialIdeal& J, const Monomial& m) {
  if (m.ambient() != J.ambient()) throw InputError("ambient mismatch in colon");
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(J.ambient(), std::move(gens));
}

/// An ideal of a coordinate subring, with the source indices of its variables.
struct SubringIdeal {
  MonomialIdeal ideal;
  std::vector<std::size_t> variables;  // variables[k] = source index of local variable k
};

/// J ∩ K[x_v : v in vars]: the minimal generators supported on vars.
inline SubringIdeal restrict(const MonomialIdeal& J, std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<bool> allowed(J.ambient(), false);
  for (auto v : vars) allowed.at(v) = true;
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) {
    bool inside = true;
    std::vector<Exponent> local;
    for (std::size_t i = 0; i < J.ambient(); ++i) {
      if (!allowed[i] && g[i] > 0) inside = false;
    }
    if (!inside) continue;
    for (auto v : vars) local.push_back(g[v]);
    gens.emplace_back(std::move(local));
  }
  return {MonomialIdeal(vars.size(), std::move(gens)), std::move(vars)};
}

/// Embeds an ideal of a subring back into n variables: local variable k
/// becomes source variable variables[k].
inline MonomialIdeal extend(const MonomialIdeal& J, const std::vector<std::size_t>& variables,
                            std::size_t n) {
  if (variables.size() != J.ambient()) throw InputError("variable map does not match ideal ambient");
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t k = 0; k < variables.size(); ++k) e.at(variables[k]) = g[k];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Contains a pure power of every variable.
inline bool is_artinian(const MonomialIdeal& J) {
  if (J.is_unit()) return true;
  std::vector<bool> seen(J.ambient(), false);
  for (const auto& g : J.generators())
    if (auto v = g.pure_power_variable()) seen[*v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Borel-fixed (characteristic zero): for every minimal generator m, every i
/// with a_i > 0 and every j < i, (x_j / x_i) m lies in J. Checking minimal
/// generators suffices since the exchange property passes to multiples.
inline bool is_borel_fixed(const MonomialIdeal& J) {
  for (const auto& m : J.generators()) {
    for (std::size_t i = 1; i < J.ambient(); ++i) {
      if (m[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Monomial moved = m.with_exponent(i, m[i] - 1);
        moved = moved.with_exponent(j, moved[j] + 1);
        if (!J.contains(moved)) return false;
      }
    }
  }
  return true;
}

/// A monomial outside J that is deglex-larger than some same-degree monomial
/// of J, or nothing when J is a lex-segment ideal. Degrees above the largest
/// generator degree are not scanned: lex segments have lex-segment shadows.
inline std::optional<Monomial> lex_segment_witness(const MonomialIdeal& J) {
  const unsigned top = J.max_generator_degree();
  for (unsigned d = 0; d <= top; ++d) {
    std::optional<Monomial> first_missing;
    for (const auto& m : monomials_of_degree(J.ambient(), d)) {
      if (!J.contains(m)) {
        if (!first_missing) first_missing = m;
      } else if (first_missing) {
        return first_missing;
      }
    }
  }
  return std::nullopt;
}

inline bool is_lex_segment(const MonomialIdeal& J) { return !lex_segment_witness(J).has_value(); }

/// All degree-d monomials outside J, deglex-largest first.
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& J, unsigned d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(J.ambient(), d))
    if (!J.contains(m)) out.push_back(std::move(m));
  return out;
}

inline std::uint64_t count_standard_monomials(const MonomialIdeal& J, std::int64_t d) {
  if (d < 0) return 0;
  std::uint64_t c = 0;
  for (const auto& m : monomials_of_degree(J.ambient(), static_cast<unsigned>(d)))
    if (!J.contains(m)) ++c;
  return c;
}

/// A pure-power ideal (x_{i1}^{b1}, ..., x_{ik}^{bk}).
struct IrreducibleComponent {
  std::map<std::size_t, Exponent> powers;  // variable index -> positive exponent

  std::size_t height() const { return powers.size(); }

  /// Associated prime, as the set of variables.
  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto& [v, e] : powers) s.insert(v);
    return s;
  }

  /// this ⊆ other as ideals
  bool contained_in(const IrreducibleComponent& other) const {
    for (const auto& [v, e] : powers) {
      auto it = other.powers.find(v);
      if (it == other.powers.end() || it->second > e) return false;
    }
    return true;
  }

  MonomialIdeal to_ideal(std::size_t n) const {
    std::vector<Monomial> gens;
    for (const auto& [v, e] : powers) gens.push_back(Monomial::variable(n, v, e));
    return MonomialIdeal(n, std::move(gens));
  }

  bool operator==(const IrreducibleComponent&) const = default;
  auto operator<=>(const IrreducibleComponent&) const = default;
};

namespace detail {

inline void split_into_components(const MonomialIdeal& J, std::set<IrreducibleComponent>& out) {
  // Pick the deglex-largest generator that is not a pure power.
  const Monomial* pick = nullptr;
  for (const auto& g : J.generators()) {
    if (g.support_size() > 1 && (!pick || deglex_compare(g, *pick) > 0)) pick = &g;
  }
  if (!pick) {
    IrreducibleComponent c;
    for (const auto& g : J.generators()) c.powers[*g.pure_power_variable()] = g[*g.pure_power_variable()];
    out.insert(std::move(c));
    return;
  }
  // (J, u v) = (J, u) ∩ (J, v) for coprime u, v: peel off the lowest variable.
  std::size_t low = 0;
  while ((*pick)[low] == 0) ++low;
  const Monomial u = Monomial::variable(J.ambient(), low, (*pick)[low]);
  const Monomial v = pick->with_exponent(low, 0);
  split_into_components(sum(J, MonomialIdeal(J.ambient(), {u})), out);
  split_into_components(sum(J, MonomialIdeal(J.ambient(), {v})), out);
}

}  // namespace detail

/// Irredundant decomposition J = ∩ C_k into pure-power ideals.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& J) {
  if (J.is_zero()) throw InputError("irreducible decomposition of the zero ideal");
  if (J.is_unit()) throw InputError("irreducible decomposition of the unit ideal");
  std::set<IrreducibleComponent> all;
  detail::split_into_components(J, all);
  // A component containing another one is redundant in the intersection.
  std::vector<IrreducibleComponent> out;
  for (const auto& c : all) {
    bool redundant = std::any_of(all.begin(), all.end(), [&](const IrreducibleComponent& o) {
      return !(o == c) && o.contained_in(c);
    });
    if (!redundant) out.push_back(c);
  }
  return out;
}

/// Associated primes (as variable sets) of J, from the irreducible decomposition.
inline std::set<std::set<std::size_t>> associated_primes(const MonomialIdeal& J) {
  std::set<std::set<std::size_t>> primes;
  for (const auto& c : irreducible_decomposition(J)) primes.insert(c.support());
  return primes;
}

inline std::set<std::set<std::size_t>> minimal_primes(const MonomialIdeal& J) {
  auto primes = associated_primes(J);
  std::set<std::set<std::size_t>> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const auto& q) {
      return q != p && std::includes(p.begin(), p.end(), q.begin(), q.end());
    });
    if (minimal) out.insert(p);
  }
  return out;
}

inline std::size_t height(const MonomialIdeal& J) {
  if (J.is_zero()) throw InputError("height of the zero ideal");
  if (J.is_unit()) throw InputError("height of the unit ideal");
  if (is_artinian(J)) return J.ambient();
  std::size_t h = J.ambient();
  for (const auto& p : minimal_primes(J)) h = std::min(h, p.size());
  return h;
}

/// Every associated prime has the same height (no embedded or lower-dimensional
/// components), i.e. J is unmixed.
inline bool is_equidimensional(const MonomialIdeal& J) {
  if (J.is_zero()) throw InputError("equidimensionality of the zero ideal");
  if (J.is_unit()) throw InputError("equidimensionality of the unit ideal");
  auto primes = associated_primes(J);
  const std::size_t h = primes.begin()->size();
  return std::all_of(primes.begin(), primes.end(), [&](const auto& p) { return p.size() == h; });
}

/// J = B·S for an Artinian Borel-fixed ideal B of K[x_1..x_c].
struct ConePresentation {
  std::size_t c = 0;
  MonomialIdeal base;  // ambient c
};

/// Condition: x_c^k ∈ J for some k and no minimal generator involves x_{c+1}..x_n.
inline bool has_cm_borel_shape(const MonomialIdeal& J, std::size_t c) {
  if (c == 0) return false;
  const bool pure_power = std::any_of(J.generators().begin(), J.generators().end(), [&](const Monomial& g) {
    return g.pure_power_variable() == c - 1;
  });
  const bool extra_vars = std::any_of(J.generators().begin(), J.generators().end(), [&](const Monomial& g) {
    for (std::size_t i = c; i < J.ambient(); ++i)
      if (g[i] > 0) return true;
    return false;
  });
  return pure_power && !extra_vars;
}

/// Presents J as a cone over an Artinian Borel-fixed ideal in its first c
/// variables, if it is one.
inline std::optional<ConePresentation> cone_over_artinian_borel(const MonomialIdeal& J, std::size_t c) {
  std::vector<std::size_t> first(c);
  std::iota(first.begin(), first.end(), std::size_t{0});
  auto sub = restrict(J, first);
  if (sub.ideal.size() != J.size()) return std::nullopt;
  if (!is_artinian(sub.ideal) || !is_borel_fixed(sub.ideal)) return std::nullopt;
  return ConePresentation{c, sub.ideal};
}

/// Cohen-Macaulay test for a Borel-fixed ideal via its shape: with c = height(J),
/// J contains a pure power of x_c and x_{c+1}..x_n never occur. Returns the cone
/// presentation on success.
inline std::optional<ConePresentation> is_cm_borel(const MonomialIdeal& J) {
  if (!is_borel_fixed(J)) throw InputError("is_cm_borel: ideal " + J.to_string() + " is not Borel-fixed");
  const std::size_t c = height(J);
  if (!has_cm_borel_shape(J, c)) return std::nullopt;
  auto cone = cone_over_artinian_borel(J, c);
  if (!cone) throw std::logic_error("CM-Borel shape holds but the cone presentation failed");
  return cone;
}

}  // namespace liaison
