#ifndef TAGBAR_FACTORED_HPP
#define TAGBAR_FACTORED_HPP

#include "tagbar/chain_complex.hpp"
#include "tagbar/ext_real.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tagbar
{

/// Tagged interval [0, s, t): the interval [0, t) with collapse time s.
struct TaggedInterval
{
    ExtReal s;
    ExtReal t;

    bool operator==(TaggedInterval const&) const = default;
    auto operator<=>(TaggedInterval const& o) const
    {
        if (auto c = s <=> o.s; c != 0)
            return c;
        return t <=> o.t;
    }
};

/// Half-open interval [s, t) with s < t.
struct Interval
{
    ExtReal s;
    ExtReal t;

    bool operator==(Interval const&) const = default;
    auto operator<=>(Interval const& o) const
    {
        if (auto c = s <=> o.s; c != 0)
            return c;
        return t <=> o.t;
    }
};

/// Empty string when valid, otherwise the reason.
std::string tagged_interval_problem(std::size_t degree, TaggedInterval const& iv);
std::string interval_problem(Interval const& iv);

std::string to_string(TaggedInterval const& iv);
std::string to_string(Interval const& iv);

/// Per-degree multiset of intervals. Kept sorted; empty degrees are dropped,
/// so equality is multiset equality.
template <typename I>
class GradedBarcode
{
public:
    using Slice = std::vector<I>;

    void add(std::size_t degree, I const& iv, std::size_t multiplicity = 1)
    {
        if (multiplicity == 0)
            return;
        auto& v = slices_[degree];
        v.insert(v.end(), multiplicity, iv);
        std::sort(v.begin(), v.end());
    }

    void add_all(GradedBarcode const& other)
    {
        for (auto const& [d, v] : other.slices_)
            for (auto const& iv : v)
                add(d, iv);
    }

    /// Intervals of one degree, sorted.
    Slice const& degree(std::size_t n) const
    {
        static Slice const empty;
        auto it = slices_.find(n);
        return it == slices_.end() ? empty : it->second;
    }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> out;
        for (auto const& [d, v] : slices_)
            out.push_back(d);
        return out;
    }

    std::map<std::size_t, Slice> const& slices() const { return slices_; }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (auto const& [d, v] : slices_)
            n += v.size();
        return n;
    }

    bool empty() const { return slices_.empty(); }

    bool operator==(GradedBarcode const&) const = default;

private:
    std::map<std::size_t, Slice> slices_;
};

using TaggedBarcode = GradedBarcode<TaggedInterval>;
using IntervalBarcode = GradedBarcode<Interval>;

/// Sequence of chain complexes C^0 -> C^1 -> ... -> C^r, where C^i is the
/// value on [t_i, t_{i+1}) and the last stage persists forever.
struct FactoredPresentation
{
    std::vector<double> critical_times;
    std::vector<BasedChainComplex> stages;
    /// transitions[i-1][k]: dim C^i_k x dim C^{i-1}_k.
    std::vector<std::vector<Gf2Matrix>> transitions;

    /// Single zero stage at time 0.
    static FactoredPresentation zero();

    std::size_t num_stages() const { return stages.size(); }

    /// Highest stored degree + 1 over all stages.
    std::size_t num_degrees() const;

    /// Index of the stage valid at time t (greatest critical time <= t).
    std::size_t stage_at(double t) const;

    /// Map in degree k from stage i-1 to stage i, zero-filled if absent.
    Gf2Matrix transition(std::size_t i, std::size_t k) const;
};

/// Checks times, shapes, the chain map condition and surjectivity.
ValidationReport validate_presentation(FactoredPresentation const& p);

/// Presentation of the interval functor I^n[0,s,t).
FactoredPresentation interval_functor_presentation(std::size_t n, TaggedInterval const& iv);

/// Blockwise sum on the union of the critical times. Labels of summand j
/// are prefixed with "j:".
FactoredPresentation direct_sum(std::vector<FactoredPresentation> const& ps);

/// Barcode of t -> H_n(C^t).
std::vector<Interval> parametrized_homology(FactoredPresentation const& p, std::size_t n);

/// Barcode of t -> im(boundary_n of C^t).
std::vector<Interval> parametrized_boundary(FactoredPresentation const& p, std::size_t n);

/// Tagged barcode of a factored presentation.
TaggedBarcode decompose(FactoredPresentation const& p);

/// Presentation realizing a whole tagged barcode.
FactoredPresentation presentation_of(TaggedBarcode const& b);

} // namespace tagbar

#endif // TAGBAR_FACTORED_HPP
