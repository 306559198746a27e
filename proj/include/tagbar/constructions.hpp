#ifndef TAGBAR_CONSTRUCTIONS_HPP
#define TAGBAR_CONSTRUCTIONS_HPP

#include "tagbar/factored.hpp"
#include "tagbar/weighted_complex.hpp"

#include <vector>

namespace tagbar
{

struct SimplificationStep
{
    PairRef pair;  ///< a in degree pair.degree, b one below
    double weight; ///< w(a, b)
};

struct SimplificationTrace
{
    std::vector<SimplificationStep> steps;
    /// quotient_maps[i][k]: degree-k map from the complex before step i to the one after.
    std::vector<std::vector<Gf2Matrix>> quotient_maps;
    /// Complexes before each step, then the terminal one (size steps + 1).
    std::vector<BasedChainComplex> complexes;

    BasedChainComplex const& terminal() const { return complexes.back(); }
};

/// Repeatedly simplifies the minimal candidate pair (weight, then tie
/// order) until every differential vanishes.
SimplificationTrace run_simplifications(WeightedComplex const& w);

struct ConstructionX
{
    TaggedBarcode barcode;
    FactoredPresentation presentation;
    SimplificationTrace trace;
};

/// Cumulative construction. Throws if some weight is zero.
ConstructionX construction_X(WeightedComplex const& w);

/// Barcode of construction X from an existing trace.
TaggedBarcode construction_X_barcode(SimplificationTrace const& trace);

/// Isolated-collapse construction (Algorithm 1). Zero weights contribute nothing.
TaggedBarcode construction_Y(WeightedComplex const& w);

TaggedBarcode construction_Y_barcode(SimplificationTrace const& trace);

} // namespace tagbar

#endif // TAGBAR_CONSTRUCTIONS_HPP
