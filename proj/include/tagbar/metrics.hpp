#ifndef TAGBAR_METRICS_HPP
#define TAGBAR_METRICS_HPP

#include "tagbar/factored.hpp"

#include <utility>
#include <vector>

namespace tagbar
{

/// max(|s - s'|, |t - t'|).
ExtReal cost(TaggedInterval const& a, TaggedInterval const& b);

/// t / 2: the price of leaving an interval unmatched.
ExtReal weight(TaggedInterval const& a);

struct MatchingResult
{
    ExtReal epsilon;
    std::vector<std::pair<TaggedInterval, TaggedInterval>> matched;
    std::vector<TaggedInterval> unmatched_a;
    std::vector<TaggedInterval> unmatched_b;
};

/// Optimal matching between two multisets of tagged intervals of one degree.
MatchingResult bottleneck_matching(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b);

ExtReal bottleneck(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b);

/// Maximum over degrees of the bottleneck distance.
ExtReal interleaving_distance(TaggedBarcode const& x, TaggedBarcode const& y);

/// Interleaving distance between two interval functors of degree n.
ExtReal interval_pair_interleaving(std::size_t n, TaggedInterval const& a, TaggedInterval const& b);

} // namespace tagbar

#endif // TAGBAR_METRICS_HPP
