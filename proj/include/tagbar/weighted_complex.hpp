#ifndef TAGBAR_WEIGHTED_COMPLEX_HPP
#define TAGBAR_WEIGHTED_COMPLEX_HPP

#include "tagbar/chain_complex.hpp"
#include "tagbar/ext_real.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tagbar
{

/// A pair (a, b) with a in the basis of `degree` and b in the basis of
/// `degree - 1`.
struct PairRef
{
    std::size_t degree = 0;
    Label a;
    Label b;

    bool operator==(PairRef const&) const = default;
};

std::string to_string(PairRef const& p);

/// Dense table over adjacent-degree basis pairs: table[k-1][a][b].
template <typename T>
using PairTable = std::vector<std::vector<std::vector<T>>>;

/// Based chain complex with a non-negative weight on every adjacent-degree
/// basis pair and a strict total order used to break weight ties.
///
/// The tie order is stored as a rank per pair; smaller rank wins. Only the
/// relative order of ranks matters.
class WeightedComplex
{
public:
    WeightedComplex() = default;

    /// Uses the default tie order (degree of a, position of a, position of b).
    WeightedComplex(BasedChainComplex complex, PairTable<double> weights);

    WeightedComplex(BasedChainComplex complex, PairTable<double> weights, PairTable<std::size_t> tie_ranks);

    static WeightedComplex from_function(
        BasedChainComplex complex,
        std::function<double(std::size_t degree, std::size_t a, std::size_t b)> const& weight);

    BasedChainComplex const& complex() const { return complex_; }
    PairTable<double> const& weights() const { return weights_; }
    PairTable<std::size_t> const& tie_ranks() const { return ranks_; }

    double weight(std::size_t degree, std::size_t a, std::size_t b) const;
    double weight(PairRef const& p) const;
    std::size_t tie_rank(std::size_t degree, std::size_t a, std::size_t b) const;

    /// True when (degree, a, b) precedes (degree2, a2, b2): smaller weight,
    /// then smaller tie rank.
    bool precedes(std::size_t degree, std::size_t a, std::size_t b,
                  std::size_t degree2, std::size_t a2, std::size_t b2) const;

    /// Replaces the tie order by a total order honoring every listed
    /// precedence (first pair before second). Unconstrained pairs keep the
    /// default order. Throws if the precedences are cyclic or name unknown pairs.
    WeightedComplex with_precedences(std::vector<std::pair<PairRef, PairRef>> const& before) const;

    /// Same weights, uniformly random tie order.
    WeightedComplex with_random_tie_order(std::uint64_t seed) const;

    /// Same complex and tie order with every weight replaced.
    WeightedComplex with_weights(PairTable<double> weights) const;

    /// True if the tie order is the default one.
    bool uses_default_tie_order() const;

    /// Lookup by labels. Throws if a label is missing.
    std::pair<std::size_t, std::size_t> pair_indices(PairRef const& p) const;

private:
    void check_shapes() const;

    BasedChainComplex complex_;
    PairTable<double> weights_;
    PairTable<std::size_t> ranks_;
};

/// Default tie ranks: lexicographic on (degree of a, position of a, position of b).
PairTable<std::size_t> default_tie_ranks(BasedChainComplex const& c);

struct GenericityReport
{
    bool generic = true;
    std::optional<PairRef> first;  ///< zero-weight pair, or first of a colliding pair
    std::optional<PairRef> second; ///< second pair of a collision
    std::string reason;
};

/// Generic: every weight strictly positive and all weights pairwise distinct.
GenericityReport is_generic(WeightedComplex const& w);

/// Minimum gap between the distances of two distinct unordered pairs.
///
/// `distances` must be symmetric with zero diagonal. Returns infinity when
/// fewer than two unordered pairs exist.
ExtReal xi(std::vector<std::vector<double>> const& distances);

/// Based chain complex with a filter value per basis element.
struct FilteredComplex
{
    BasedChainComplex complex;
    std::vector<std::vector<double>> filter; ///< filter[k][i] for basis(k)[i]

    double value(std::size_t degree, std::size_t i) const { return filter.at(degree).at(i); }
};

/// First pair (a, b) with b in the boundary of a and filter(b) >= filter(a),
/// if any. Also reports shape mismatches and negative values as violations.
std::optional<std::string> monotonicity_violation(FilteredComplex const& f);

/// Weights |f(a) - f(b)| on all adjacent pairs, default tie order.
/// Throws if the filter is not monotone.
WeightedComplex filter_to_weights(FilteredComplex const& f);

/// Result of quotienting a complex by the disk spanned by a and its boundary.
struct ComplexSimplification
{
    BasedChainComplex complex;
    /// Quotient chain map, one matrix per degree (new basis x old basis).
    std::vector<Gf2Matrix> quotient_map;
};

/// Quotient by the disk of a (degree n, index a) using b (degree n-1,
/// index b) as the pivot. Requires <boundary a, b> != 0.
ComplexSimplification simplify_complex(BasedChainComplex const& c, std::size_t n, std::size_t a,
                                       std::size_t b);

struct WeightedSimplification
{
    WeightedComplex complex;
    std::vector<Gf2Matrix> quotient_map;
};

WeightedSimplification simplify_pair_with_map(WeightedComplex const& w, std::size_t n, std::size_t a,
                                              std::size_t b);

/// Quotient complex; surviving pairs keep their weights and tie order.
WeightedComplex simplify_pair(WeightedComplex const& w, PairRef const& pair);

/// Restriction of a filter to the survivors of simplify_complex(n, a, b).
FilteredComplex simplify_filtered(FilteredComplex const& f, std::size_t n, std::size_t a, std::size_t b);

} // namespace tagbar

#endif // TAGBAR_WEIGHTED_COMPLEX_HPP
