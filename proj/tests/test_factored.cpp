#include "doctest.h"
#include "support/generators.hpp"

#include "tagbar/factored.hpp"

using namespace tagbar;

namespace
{

ExtReal const inf = ExtReal::infinity();

std::vector<std::size_t> stage_dims(FactoredPresentation const& p, std::size_t i)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p.num_degrees(); ++k)
        out.push_back(p.stages[i].dim(k));
    return out;
}

TaggedBarcode single(std::size_t n, ExtReal s, ExtReal t)
{
    TaggedBarcode b;
    b.add(n, TaggedInterval{s, t});
    return b;
}

} // namespace

TEST_CASE("interval validity")
{
    CHECK(tagged_interval_problem(1, {1.0, 2.0}).empty());
    CHECK(tagged_interval_problem(1, {inf, inf}).empty());
    CHECK_FALSE(tagged_interval_problem(1, {2.0, 1.0}).empty());
    CHECK_FALSE(tagged_interval_problem(1, {0.0, 0.0}).empty());
    CHECK_FALSE(tagged_interval_problem(0, {1.0, 2.0}).empty());
    CHECK_FALSE(tagged_interval_problem(1, {inf, 2.0}).empty());
    CHECK(interval_problem({0.0, inf}).empty());
    CHECK_FALSE(interval_problem({1.0, 1.0}).empty());
}

TEST_CASE("interval functor presentations")
{
    auto p = interval_functor_presentation(1, {1.0, 2.0});
    CHECK(p.critical_times == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(stage_dims(p, 0) == std::vector<std::size_t>{1, 1});
    CHECK(stage_dims(p, 1) == std::vector<std::size_t>{0, 1});
    CHECK(p.stages[2].total_dim() == 0);
    CHECK(validate_presentation(p).ok());

    auto sphere = interval_functor_presentation(2, {0.0, inf});
    CHECK(sphere.num_stages() == 1);
    CHECK(sphere.stages[0].dim(2) == 1);
    CHECK(sphere.stages[0].has_zero_differential());

    auto disk = interval_functor_presentation(1, {inf, inf});
    CHECK(disk.num_stages() == 1);
    CHECK(disk.stages[0].boundary(1).get(0, 0));

    auto brief = interval_functor_presentation(1, {1.0, 1.0});
    CHECK(brief.critical_times == std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(interval_functor_presentation(0, {1.0, 2.0}), Error);
}

TEST_CASE("direct sums")
{
    auto z = direct_sum({FactoredPresentation::zero(), FactoredPresentation::zero()});
    CHECK(decompose(z).empty());
    CHECK(z.stages.back().total_dim() == 0);

    auto one = interval_functor_presentation(1, {1.0, 2.0});
    auto two = direct_sum({one, one});
    REQUIRE(two.critical_times == one.critical_times);
    for (std::size_t i = 0; i < one.num_stages(); ++i)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(two.stages[i].dim(k) == 2 * one.stages[i].dim(k));
    CHECK(validate_presentation(two).ok());

    auto s2 = direct_sum({interval_functor_presentation(2, {1.0, 1.0}), interval_functor_presentation(2, {0.0, inf}),
                          interval_functor_presentation(0, {0.0, inf})});
    CHECK(validate_presentation(s2).ok());
    CHECK(s2.critical_times == std::vector<double>{0.0, 1.0});
    CHECK(stage_dims(s2, 0) == std::vector<std::size_t>{1, 1, 2});
    CHECK(stage_dims(s2, 1) == std::vector<std::size_t>{1, 0, 1});
    TaggedBarcode expected;
    expected.add(2, {1.0, 1.0});
    expected.add(2, {0.0, inf});
    expected.add(0, {0.0, inf});
    CHECK(decompose(s2) == expected);
}

TEST_CASE("parametrized homology and boundary of interval functors")
{
    auto p = interval_functor_presentation(1, {1.0, 2.0});
    CHECK(parametrized_homology(p, 1) == std::vector<Interval>{{1.0, 2.0}});
    CHECK(parametrized_homology(p, 0).empty());
    CHECK(parametrized_boundary(p, 1) == std::vector<Interval>{{0.0, 1.0}});

    CHECK(parametrized_homology(interval_functor_presentation(1, {1.0, 1.0}), 1).empty());
    CHECK(parametrized_homology(FactoredPresentation::zero(), 0).empty());
    CHECK(parametrized_boundary(interval_functor_presentation(1, {0.0, inf}), 1).empty());
    CHECK(parametrized_boundary(interval_functor_presentation(1, {inf, inf}), 1) == std::vector<Interval>{{0.0, inf}});
}

TEST_CASE("decompose single interval functors")
{
    CHECK(decompose(interval_functor_presentation(1, {1.0, 2.0})) == single(1, 1.0, 2.0));
    CHECK(decompose(FactoredPresentation::zero()).empty());
    for (auto iv : {TaggedInterval{inf, inf}, TaggedInterval{0.0, inf}, TaggedInterval{2.0, inf},
                    TaggedInterval{0.5, 0.5}, TaggedInterval{0.0, 3.0}})
        CHECK(decompose(interval_functor_presentation(2, iv)) == single(2, iv.s, iv.t));
}

TEST_CASE("validate_presentation catches broken inputs")
{
    auto p = interval_functor_presentation(1, {1.0, 2.0});
    auto unsorted = p;
    unsorted.critical_times = {0.0, 2.0, 1.0};
    CHECK_FALSE(validate_presentation(unsorted).ok());

    auto not_onto = p;
    not_onto.transitions[0][1] = Gf2Matrix(1, 1);
    CHECK_FALSE(validate_presentation(not_onto).ok());

    auto late_start = p;
    late_start.critical_times[0] = 0.5;
    CHECK_FALSE(validate_presentation(late_start).ok());
}

TEST_CASE("stage lookup")
{
    auto p = interval_functor_presentation(1, {1.0, 2.0});
    CHECK(p.stage_at(0.0) == 0);
    CHECK(p.stage_at(0.99) == 0);
    CHECK(p.stage_at(1.0) == 1);
    CHECK(p.stage_at(10.0) == 2);
}

TEST_CASE("round trip and additivity on random barcodes")
{
    testgen::Rng rng(41);
    for (int trial = 0; trial < 150; ++trial)
    {
        auto a = testgen::random_barcode(rng, 6, 3);
        auto b = testgen::random_barcode(rng, 6, 3);
        auto pa = presentation_of(a);
        auto pb = presentation_of(b);
        CHECK(validate_presentation(pa).ok());
        CHECK(decompose(pa) == a);
        TaggedBarcode ab = a;
        ab.add_all(b);
        CHECK(decompose(direct_sum({pa, pb})) == ab);
    }
}

TEST_CASE("homology and boundary bars of random sums")
{
    testgen::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial)
    {
        auto b = testgen::random_barcode(rng, 8, 3);
        auto p = presentation_of(b);
        for (std::size_t n = 0; n <= 3; ++n)
        {
            // oracle: H_n has [s,t) for every s < t; boundary has [0,s) for every s > 0
            std::vector<Interval> h, d;
            for (auto const& iv : b.degree(n))
                if (iv.s < iv.t)
                    h.push_back({iv.s, iv.t});
            for (auto const& iv : b.degree(n))
                if (iv.s > ExtReal(0.0))
                    d.push_back({0.0, iv.s});
            std::sort(h.begin(), h.end());
            std::sort(d.begin(), d.end());
            auto gh = parametrized_homology(p, n);
            auto gd = parametrized_boundary(p, n);
            std::sort(gh.begin(), gh.end());
            std::sort(gd.begin(), gd.end());
            CHECK(gh == h);
            CHECK(gd == d);
            for (auto const& iv : gd)
                CHECK(iv.s == ExtReal(0.0));
        }
    }
}
