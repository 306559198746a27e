#include "doctest.h"
#include "support/generators.hpp"

#include "tagbar/constructions.hpp"
#include "tagbar/scalar_persistence.hpp"

#include <set>

using namespace tagbar;

namespace
{

ExtReal const inf = ExtReal::infinity();

FilteredComplex worked_example()
{
    Gf2Matrix d1(2, 1);
    d1.set(0, 0);
    d1.set(1, 0);
    return {BasedChainComplex({{"x", "b"}, {"a"}}, {d1}), {{0.0, 1.0}, {2.0}}};
}

// Columns of m whose filter value is at most v, other columns zeroed.
Gf2Matrix restrict_columns(Gf2Matrix const& m, std::vector<double> const& f, double v)
{
    Gf2Matrix out(m.rows(), m.cols());
    for (auto const& [r, c] : m.entries())
        if (f[c] <= v)
            out.set(r, c);
    return out;
}

// Persistence by rank inclusion-exclusion over sublevel sets.
IntervalBarcode rank_oracle(FilteredComplex const& f)
{
    std::set<double> vals;
    for (auto const& d : f.filter)
        vals.insert(d.begin(), d.end());
    std::vector<double> v(vals.begin(), vals.end());
    std::size_t const m = v.size();
    IntervalBarcode out;
    auto const& c = f.complex;
    for (std::size_t n = 0; n < c.num_degrees(); ++n)
    {
        auto rk = [&](long i, long j) -> long {
            if (i < 0 || j >= static_cast<long>(m))
                return 0;
            // cycles present at v[i], modulo boundaries present at v[j]
            Gf2Matrix present(c.dim(n), 0);
            for (std::size_t e = 0; e < c.dim(n); ++e)
                if (f.filter[n][e] <= v[i])
                    present = present.hconcat(Gf2Matrix::from_entries(c.dim(n), 1, {{e, 0}}));
            Gf2Matrix z = gf2_product(present, gf2_kernel_basis(gf2_product(c.boundary(n), present)));
            Gf2Matrix b = restrict_columns(c.boundary(n + 1), f.filter.size() > n + 1 ? f.filter[n + 1] : std::vector<double>{}, v[j]);
            return static_cast<long>(gf2_rank(z.hconcat(b))) - static_cast<long>(gf2_rank(b));
        };
        for (long i = 0; i < static_cast<long>(m); ++i)
            for (long j = i; j < static_cast<long>(m); ++j)
            {
                long const mult = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1);
                REQUIRE(mult >= 0);
                ExtReal const death = j + 1 < static_cast<long>(m) ? ExtReal(v[j + 1]) : inf;
                out.add(n, {v[i], death}, static_cast<std::size_t>(mult));
            }
    }
    return out;
}

// Same complex with every basis reversed.
FilteredComplex reversed(FilteredComplex const& f)
{
    auto bases = f.complex.bases();
    auto filter = f.filter;
    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 0; k < bases.size(); ++k)
    {
        std::reverse(bases[k].begin(), bases[k].end());
        std::reverse(filter[k].begin(), filter[k].end());
    }
    for (std::size_t k = 1; k < bases.size(); ++k)
    {
        auto const& m = f.complex.boundary(k);
        Gf2Matrix r(m.rows(), m.cols());
        for (auto const& [i, j] : m.entries())
            r.set(m.rows() - 1 - i, m.cols() - 1 - j);
        bnd.push_back(r);
    }
    return {BasedChainComplex(bases, bnd), filter};
}

} // namespace

TEST_CASE("persistence examples")
{
    IntervalBarcode expected;
    expected.add(0, {0.0, inf});
    expected.add(0, {1.0, 2.0});
    CHECK(persistence_barcode(worked_example()) == expected);

    FilteredComplex flat{BasedChainComplex::zero_differential({{"u", "v"}, {"e"}}), {{0.0, 2.0}, {1.0}}};
    IntervalBarcode bars;
    bars.add(0, {0.0, inf});
    bars.add(0, {2.0, inf});
    bars.add(1, {1.0, inf});
    CHECK(persistence_barcode(flat) == bars);

    // vertices a b c, edges ab ac bc
    Gf2Matrix d1 = Gf2Matrix::from_entries(3, 3, {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}});
    FilteredComplex tri{BasedChainComplex({{"a", "b", "c"}, {"ab", "ac", "bc"}}, {d1}), {{0, 1, 2}, {3, 4, 5}}};
    IntervalBarcode tri_bars;
    tri_bars.add(0, {0.0, inf});
    tri_bars.add(0, {1.0, 3.0});
    tri_bars.add(0, {2.0, 4.0});
    tri_bars.add(1, {5.0, inf});
    CHECK(persistence_barcode(tri) == tri_bars);

    FilteredComplex bad{worked_example().complex, {{0.0, 3.0}, {2.0}}};
    CHECK_THROWS_AS(persistence_barcode(bad), Error);
}

TEST_CASE("correspondence map examples")
{
    IntervalBarcode h;
    h.add(0, {0.0, inf});
    TaggedBarcode t;
    t.add(0, {0.0, inf});
    CHECK(correspondence_map(h) == t);

    IntervalBarcode finite;
    finite.add(0, {1.0, 2.0});
    TaggedBarcode shifted;
    shifted.add(1, {1.0, 1.0});
    CHECK(correspondence_map(finite) == shifted);

    TaggedBarcode worked;
    worked.add(1, {1.0, 1.0});
    worked.add(0, {0.0, inf});
    CHECK(correspondence_map(persistence_barcode(worked_example())) == worked);
}

TEST_CASE("verify_correspondence examples")
{
    CHECK(verify_correspondence(worked_example()).ok);
    FilteredComplex flat{BasedChainComplex::zero_differential({{"u", "v"}, {"e"}}), {{0.0, 2.0}, {1.0}}};
    CHECK(verify_correspondence(flat).ok);
}

TEST_CASE("barcodes_match tolerance")
{
    TaggedBarcode a, b, c;
    a.add(1, {1.0, 1.0});
    b.add(1, {1.0 + 1e-12, 1.0 + 1e-12});
    c.add(1, {1.001, 1.001});
    CHECK(barcodes_match(a, b));
    CHECK_FALSE(barcodes_match(a, c));
    CHECK_FALSE(barcode_diff(a, c).empty());
}

TEST_CASE("split check")
{
    Gf2Matrix m(1, 1);
    m.set(0, 0);
    FilteredComplex lone{BasedChainComplex({{"b"}, {"a"}}, {m}), {{0.0}, {1.0}}};
    CHECK(split_check(lone, 1, 0, 0));

    // b is not the latest face of a
    CHECK_FALSE(split_check(worked_example(), 1, 0, 0));
    CHECK(split_check(worked_example(), 1, 0, 1));

    // a is not the earliest coface of b
    Gf2Matrix two(1, 2);
    two.set(0, 0);
    two.set(0, 1);
    FilteredComplex saddle{BasedChainComplex({{"b"}, {"a", "a2"}}, {two}), {{0.0}, {3.0, 1.0}}};
    CHECK_FALSE(split_check(saddle, 1, 0, 0));
    CHECK(split_check(saddle, 1, 1, 0));

    CHECK_THROWS_AS(split_check(FilteredComplex{BasedChainComplex::zero_differential({{"b"}, {"a"}}), {{0.0}, {1.0}}},
                                1, 0, 0),
                    Error);
}

TEST_CASE("persistence against the rank oracle")
{
    testgen::Rng rng(97);
    for (int trial = 0; trial < 150; ++trial)
    {
        auto f = testgen::random_filtered(rng, 3, 12);
        auto pb = persistence_barcode(f);
        CHECK(pb == rank_oracle(f));
        CHECK(persistence_barcode(reversed(f)) == pb);

        auto betti = betti_numbers(f.complex);
        for (std::size_t n = 0; n < f.complex.num_degrees(); ++n)
        {
            std::size_t infinite = 0, finite = 0;
            for (auto const& iv : pb.degree(n))
                (iv.t.is_infinite() ? infinite : finite) += 1;
            CHECK(infinite == betti[n]);
            CHECK(finite == gf2_rank(f.complex.boundary(n + 1)));
        }
    }
}

TEST_CASE("minimal pairs split off a bar")
{
    testgen::Rng rng(101);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial)
    {
        auto f = testgen::random_filtered(rng, 3, 12);
        auto w = filter_to_weights(f);
        auto trace = run_simplifications(w);
        if (trace.steps.empty())
            continue;
        auto const& step = trace.steps.front();
        std::size_t const n = step.pair.degree;
        auto [a, b] = w.pair_indices(step.pair);
        CHECK(split_check(f, n, a, b));

        auto rest = simplify_filtered(f, n, a, b);
        auto expected = persistence_barcode(rest);
        expected.add(n - 1, {f.value(n - 1, b), f.value(n, a)});
        CHECK(persistence_barcode(f) == expected);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("any split pair splits off a bar")
{
    testgen::Rng rng(103);
    for (int trial = 0; trial < 150; ++trial)
    {
        auto f = testgen::random_filtered(rng, 3, 12);
        for (std::size_t n = 1; n < f.complex.num_degrees(); ++n)
            for (auto const& [b, a] : f.complex.boundary(n).entries())
            {
                if (!split_check(f, n, a, b))
                    continue;
                auto expected = persistence_barcode(simplify_filtered(f, n, a, b));
                expected.add(n - 1, {f.value(n - 1, b), f.value(n, a)});
                CHECK(persistence_barcode(f) == expected);
            }
    }
}

TEST_CASE("correspondence on random filtered complexes")
{
    testgen::Rng rng(107);
    for (int trial = 0; trial < 150; ++trial)
    {
        auto f = testgen::random_filtered(rng, 3, 12);
        auto report = verify_correspondence(f, static_cast<std::uint64_t>(trial));
        CHECK_MESSAGE(report.ok, report.diff);

        auto w = filter_to_weights(f);
        auto y = construction_Y(w);
        for (std::uint64_t seed = 0; seed < 3; ++seed)
            CHECK(barcodes_match(construction_Y(w.with_random_tie_order(seed * 7 + 1)), y));
    }
}
