#include "tagbar/constructions.hpp"

#include <optional>
#include <tuple>

namespace tagbar
{

SimplificationTrace run_simplifications(WeightedComplex const& w)
{
    SimplificationTrace trace;
    WeightedComplex current = w;
    trace.complexes.push_back(current.complex());
    for (;;)
    {
        BasedChainComplex const& c = current.complex();
        std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best;
        for (std::size_t k = 1; k < c.num_degrees(); ++k)
        {
            Gf2Matrix const m = c.boundary(k);
            for (auto const& [b, a] : m.entries())
            {
                if (!best || current.precedes(k, a, b, std::get<0>(*best), std::get<1>(*best),
                                              std::get<2>(*best)))
                    best = std::make_tuple(k, a, b);
            }
        }
        if (!best)
            break;
        auto const [k, a, b] = *best;
        trace.steps.push_back({PairRef{k, c.basis(k)[a], c.basis(k - 1)[b]}, current.weight(k, a, b)});
        auto s = simplify_pair_with_map(current, k, a, b);
        trace.quotient_maps.push_back(std::move(s.quotient_map));
        current = std::move(s.complex);
        trace.complexes.push_back(current.complex());
    }
    return trace;
}

namespace
{

void add_homology(TaggedBarcode& out, BasedChainComplex const& c)
{
    auto const betti = betti_numbers(c);
    for (std::size_t k = 0; k < betti.size(); ++k)
        out.add(k, {ExtReal(0.0), ExtReal::infinity()}, betti[k]);
}

} // namespace

TaggedBarcode construction_X_barcode(SimplificationTrace const& trace)
{
    TaggedBarcode out;
    double t = 0.0;
    for (auto const& step : trace.steps)
    {
        if (step.weight == 0.0)
            throw Error("construction X needs strictly positive weights; " + to_string(step.pair) +
                        " has weight 0");
        t += step.weight;
        out.add(step.pair.degree, {ExtReal(t), ExtReal(t)});
    }
    add_homology(out, trace.terminal());
    return out;
}

ConstructionX construction_X(WeightedComplex const& w)
{
    BasedChainComplex const& c = w.complex();
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        for (std::size_t a = 0; a < c.dim(k); ++a)
            for (std::size_t b = 0; b < c.dim(k - 1); ++b)
                if (w.weight(k, a, b) == 0.0)
                    throw Error("construction X needs strictly positive weights; " +
                                to_string(PairRef{k, c.basis(k)[a], c.basis(k - 1)[b]}) +
                                " has weight 0");
    ConstructionX out;
    out.trace = run_simplifications(w);
    out.barcode = construction_X_barcode(out.trace);

    auto& p = out.presentation;
    p.critical_times.push_back(0.0);
    p.stages.push_back(out.trace.complexes.front());
    double t = 0.0;
    for (std::size_t i = 0; i < out.trace.steps.size(); ++i)
    {
        t += out.trace.steps[i].weight;
        p.critical_times.push_back(t);
        p.stages.push_back(out.trace.complexes[i + 1]);
        p.transitions.push_back(out.trace.quotient_maps[i]);
    }
    return out;
}

TaggedBarcode construction_Y_barcode(SimplificationTrace const& trace)
{
    TaggedBarcode out;
    for (auto const& step : trace.steps)
        if (step.weight > 0.0)
            out.add(step.pair.degree, {ExtReal(step.weight), ExtReal(step.weight)});
    add_homology(out, trace.terminal());
    return out;
}

TaggedBarcode construction_Y(WeightedComplex const& w)
{
    return construction_Y_barcode(run_simplifications(w));
}

} // namespace tagbar
