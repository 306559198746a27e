#ifndef TAGBAR_DISCRETE_MORSE_HPP
#define TAGBAR_DISCRETE_MORSE_HPP

#include "tagbar/simplicial.hpp"
#include "tagbar/weighted_complex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tagbar
{

/// Combinatorial vector field: sigma -> V(sigma), a cofacet of sigma.
struct CombinatorialVectorField
{
    std::map<Simplex, Simplex> pairs;

    bool is_source(Simplex const& s) const { return pairs.count(s) > 0; }
    bool is_target(Simplex const& s) const;
    bool is_critical(Simplex const& s) const { return !is_source(s) && !is_target(s); }

    bool operator==(CombinatorialVectorField const&) const = default;
};

struct CvfReport
{
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

CvfReport validate_cvf(SimplicialComplex const& k, CombinatorialVectorField const& v);

struct GradientCheck
{
    bool gradient_like = true;
    /// Closed V-path s_0 -> s_1 -> ... -> s_0 (first element repeated at the end).
    std::vector<Simplex> cycle;
};

/// Looks for a closed non-stationary V-path. Throws on an invalid field.
GradientCheck is_gradient_like(SimplicialComplex const& k, CombinatorialVectorField const& v);

/// Critical cells of dimension d in simplex order.
std::vector<Simplex> critical_cells(SimplicialComplex const& k, CombinatorialVectorField const& v, std::size_t d);

/// Morse complex over GF(2): critical cells as basis, boundary by counting
/// V-paths mod 2. Throws if the field is invalid or not gradient-like.
BasedChainComplex morse_complex(SimplicialComplex const& k, CombinatorialVectorField const& v);

/// Morse complex with weight(tau, sigma) = m.distance(tau, sigma).
WeightedComplex morse_weights(SimplicialComplex const& k, CombinatorialVectorField const& v, CellMetric const& m);

/// Random greedy gradient field: facet pairs in shuffled order, each kept
/// when both cells are free and no closed V-path appears.
CombinatorialVectorField greedy_acyclic_matching(SimplicialComplex const& k, std::uint64_t seed);

/// Greedy gradient field following a vertex scalar: only pairs with equal
/// maximal vertex value are considered, lowest values first.
CombinatorialVectorField greedy_acyclic_matching(SimplicialComplex const& k, std::vector<double> const& scalar);

} // namespace tagbar

#endif // TAGBAR_DISCRETE_MORSE_HPP
