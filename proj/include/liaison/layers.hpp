#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/hilbert.hpp"
#include "liaison/monomial_ideal.hpp"

namespace liaison {

/// J = sum_j x^j · (I_j · S) along one variable x, with I_0 ⊆ I_1 ⊆ ... ⊆ I_alpha
/// ideals of the subring on the remaining variables.
struct LayerDecomposition {
  std::size_t ambient = 0;                  // n, variables of the source ring
  std::size_t variable = 0;                 // the decomposition variable (0 = x_1)
  std::vector<std::size_t> layer_variables;  // source index of each layer variable
  std::vector<MonomialIdeal> layers;        // I_0..I_alpha, ambient n-1

  unsigned alpha() const { return static_cast<unsigned>(layers.size()) - 1; }
};

namespace detail {

inline std::vector<std::size_t> other_variables(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) vars.push_back(i);
  return vars;
}

inline void assert_layer_chain(const std::vector<MonomialIdeal>& layers) {
  for (std::size_t j = 0; j + 1 < layers.size(); ++j)
    if (!layers[j + 1].contains(layers[j]))
      throw InputError("layer chain violated: I_" + std::to_string(j) + " is not contained in I_" +
                       std::to_string(j + 1));
}

}  // namespace detail

/// Decomposes J along x_{k+1}: I_j = (J : x^j) ∩ K[other variables].
inline LayerDecomposition decompose_along(const MonomialIdeal& J, std::size_t k) {
  if (k >= J.ambient()) throw InputError("decomposition variable out of range");
  LayerDecomposition D;
  D.ambient = J.ambient();
  D.variable = k;
  D.layer_variables = detail::other_variables(J.ambient(), k);
  const Exponent alpha = J.max_exponent(k);
  for (Exponent j = 0; j <= alpha; ++j) {
    auto quotient = colon(J, Monomial::variable(J.ambient(), k, j));
    D.layers.push_back(restrict(quotient, D.layer_variables).ideal);
  }
  detail::assert_layer_chain(D.layers);
  return D;
}

/// Decomposition along x_1, with the structural facts that hold for Artinian
/// and Borel-fixed sources asserted.
inline LayerDecomposition decompose(const MonomialIdeal& J) {
  if (J.ambient() == 0) throw InputError("cannot decompose an ideal with no variables");
  auto D = decompose_along(J, 0);
  const auto& top = D.layers.back();
  if (is_artinian(J)) {
    for (const auto& I : D.layers)
      if (!is_artinian(I)) throw std::logic_error("layer of an Artinian ideal is not Artinian");
    if (!top.is_unit()) throw std::logic_error("top layer of an Artinian ideal is not (1)");
  }
  if (!J.is_zero() && is_borel_fixed(J)) {
    if (D.alpha() != *J.initial_degree())
      throw std::logic_error("alpha differs from the initial degree of a Borel-fixed ideal");
    if (!top.is_unit()) throw std::logic_error("top layer of a Borel-fixed ideal is not (1)");
    for (const auto& I : D.layers)
      if (!is_borel_fixed(I)) throw std::logic_error("layer of a Borel-fixed ideal is not Borel-fixed");
  }
  return D;
}

/// sum_j x^j · (I_j · S), minimalized.
inline MonomialIdeal recompose(const LayerDecomposition& D) {
  detail::assert_layer_chain(D.layers);
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < D.layers.size(); ++j) {
    const auto extended = extend(D.layers[j], D.layer_variables, D.ambient);
    const auto shift = Monomial::variable(D.ambient, D.variable, static_cast<Exponent>(j));
    for (const auto& g : extended.generators()) gens.push_back(g * shift);
  }
  return MonomialIdeal(D.ambient, std::move(gens));
}

/// h_{S/J}(s) = sum_{j<alpha} h_{T/I_j}(s-j) + h_{S/I_alpha·S}(s-alpha),
/// with the last term computed in S.
inline std::int64_t hf_via_layers(const LayerDecomposition& D, std::int64_t s) {
  std::int64_t total = 0;
  const std::int64_t alpha = D.alpha();
  for (std::int64_t j = 0; j < alpha; ++j)
    total += static_cast<std::int64_t>(count_standard_monomials(D.layers[static_cast<std::size_t>(j)], s - j));
  const auto top = extend(D.layers.back(), D.layer_variables, D.ambient);
  total += static_cast<std::int64_t>(count_standard_monomials(top, s - alpha));
  return total;
}

/// Per-layer Hilbert functions h_{T/I_j}, each truncated at dmax - j, for the
/// layers below the top one (the rows of a layer table).
inline std::vector<HVector> layer_hilbert_rows(const LayerDecomposition& D, unsigned dmax) {
  std::vector<HVector> rows;
  for (unsigned j = 0; j < D.alpha(); ++j) {
    const auto& I = D.layers[j];
    if (is_artinian(I)) rows.push_back(artinian_h_vector(I));
    else rows.push_back(hilbert_function(I, dmax >= j ? dmax - j : 0));
  }
  return rows;
}

}  // namespace liaison
