// Random inputs and brute-force oracles shared by the unit and acceptance tests.
#ifndef TAGBAR_TESTS_GENERATORS_HPP
#define TAGBAR_TESTS_GENERATORS_HPP

#include "tagbar/discrete_morse.hpp"
#include "tagbar/factored.hpp"
#include "tagbar/metrics.hpp"
#include "tagbar/weighted_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testgen
{

using tagbar::BasedChainComplex;
using tagbar::ExtReal;
using tagbar::Gf2Matrix;
using tagbar::TaggedInterval;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng))
                m.set(r, c);
    return m;
}

/// Builder for complexes as a direct sum of disks and spheres followed by
/// random changes of basis. Optional filter values ride along.
struct ComplexBuilder
{
    std::vector<std::vector<std::string>> bases;
    std::vector<Gf2Matrix> bnd; // bnd[k-1] = boundary(k)
    std::vector<std::vector<double>> filter;

    explicit ComplexBuilder(std::size_t degrees) : bases(degrees), filter(degrees)
    {
        for (std::size_t k = 1; k < degrees; ++k)
            bnd.emplace_back(0, 0);
    }

    std::size_t add(std::size_t k, double f)
    {
        bases[k].push_back("g" + std::to_string(k) + "_" + std::to_string(bases[k].size()));
        filter[k].push_back(f);
        return bases[k].size() - 1;
    }

    BasedChainComplex complex() const { return BasedChainComplex(bases, bnd); }

    // Grows the boundary matrices to the current basis sizes.
    void reshape()
    {
        for (std::size_t k = 1; k < bases.size(); ++k)
        {
            Gf2Matrix m(bases[k - 1].size(), bases[k].size());
            for (auto const& [r, c] : bnd[k - 1].entries())
                m.set(r, c);
            bnd[k - 1] = std::move(m);
        }
    }

    /// Replaces generator j of degree k by g_j + g_i.
    void change_basis(std::size_t k, std::size_t i, std::size_t j)
    {
        if (k >= 1)
            bnd[k - 1].add_column(i, j);
        if (k + 1 < bases.size())
            bnd[k].add_row(j, i);
    }
};

/// Random valid complex: disks and spheres in degrees < `degrees`, then
/// `mixes` random elementary basis changes. If `filtered`, every change
/// keeps the filter monotone and filter values are small integers.
inline ComplexBuilder random_builder(Rng& rng, std::size_t degrees, std::size_t max_generators, bool filtered,
                                     std::size_t mixes = 12)
{
    ComplexBuilder b(degrees);
    std::size_t total = 0;
    std::size_t const target = uniform(rng, 1, max_generators);
    std::vector<std::pair<std::size_t, std::size_t>> disks; // (degree of top, index of top)
    std::vector<std::pair<std::size_t, std::size_t>> disk_bottoms;
    while (total < target)
    {
        std::size_t const k = uniform(rng, 0, degrees - 1);
        bool const disk = k > 0 && total + 2 <= target && uniform(rng, 0, 2) > 0;
        if (disk)
        {
            double const fb = static_cast<double>(uniform(rng, 0, 4));
            double const fa = fb + static_cast<double>(uniform(rng, 1, 3));
            std::size_t const bottom = b.add(k - 1, fb);
            std::size_t const top = b.add(k, fa);
            disks.emplace_back(k, top);
            disk_bottoms.emplace_back(k - 1, bottom);
            total += 2;
        }
        else
        {
            b.add(k, static_cast<double>(uniform(rng, 0, 6)));
            total += 1;
        }
    }
    b.reshape();
    for (std::size_t d = 0; d < disks.size(); ++d)
        b.bnd[disks[d].first - 1].set(disk_bottoms[d].second, disks[d].second);

    for (std::size_t m = 0; m < mixes; ++m)
    {
        std::size_t const k = uniform(rng, 0, degrees - 1);
        if (b.bases[k].size() < 2)
            continue;
        std::size_t const i = uniform(rng, 0, b.bases[k].size() - 1);
        std::size_t const j = uniform(rng, 0, b.bases[k].size() - 1);
        if (i == j)
            continue;
        if (filtered && b.filter[k][i] > b.filter[k][j])
            continue;
        b.change_basis(k, i, j);
    }
    return b;
}

inline BasedChainComplex random_complex(Rng& rng, std::size_t degrees = 4, std::size_t max_generators = 10)
{
    return random_builder(rng, degrees, max_generators, false).complex();
}

inline tagbar::FilteredComplex random_filtered(Rng& rng, std::size_t degrees = 3, std::size_t max_generators = 12)
{
    auto b = random_builder(rng, degrees, max_generators, true);
    return {b.complex(), b.filter};
}

/// Pairwise distinct positive integer weights.
inline tagbar::WeightedComplex random_generic(Rng& rng, BasedChainComplex c)
{
    std::size_t pairs = 0;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        pairs += c.dim(k) * c.dim(k - 1);
    std::vector<double> values(pairs);
    std::iota(values.begin(), values.end(), 1.0);
    std::shuffle(values.begin(), values.end(), rng);
    std::size_t next = 0;
    return tagbar::WeightedComplex::from_function(std::move(c), [&](std::size_t, std::size_t, std::size_t) {
        return values[next++];
    });
}

/// Random tagged interval on a small dyadic grid.
inline TaggedInterval random_tagged(Rng& rng, std::size_t degree)
{
    static double const grid[] = {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.5};
    for (;;)
    {
        std::size_t const kind = uniform(rng, 0, 9);
        ExtReal s = grid[uniform(rng, 0, 6)];
        ExtReal t = grid[uniform(rng, 0, 6)];
        if (kind == 0)
            s = t = ExtReal::infinity();
        else if (kind <= 2)
            t = ExtReal::infinity();
        else if (kind <= 4)
            t = s;
        if (degree == 0)
            s = ExtReal(0.0);
        TaggedInterval const iv{s, t};
        if (tagbar::tagged_interval_problem(degree, iv).empty())
            return iv;
    }
}

inline tagbar::TaggedBarcode random_barcode(Rng& rng, std::size_t max_intervals, std::size_t max_degree)
{
    tagbar::TaggedBarcode b;
    std::size_t const n = uniform(rng, 0, max_intervals);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t const d = uniform(rng, 0, max_degree);
        b.add(d, random_tagged(rng, d));
    }
    return b;
}

/// Minimum over all partial injective matchings, by enumeration.
inline ExtReal brute_force_bottleneck(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b)
{
    ExtReal best = ExtReal::infinity();
    bool found = false;
    std::vector<bool> used(b.size(), false);
    std::function<void(std::size_t, ExtReal)> go = [&](std::size_t i, ExtReal cur) {
        if (found && !(cur < best))
            return;
        if (i == a.size())
        {
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j])
                    cur = tagbar::max(cur, tagbar::weight(b[j]));
            if (!found || cur < best)
            {
                best = cur;
                found = true;
            }
            return;
        }
        go(i + 1, tagbar::max(cur, tagbar::weight(a[i])));
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j])
            {
                used[j] = true;
                go(i + 1, tagbar::max(cur, tagbar::cost(a[i], b[j])));
                used[j] = false;
            }
    };
    go(0, ExtReal(0.0));
    return best;
}

/// Random simplicial complex with at most `max_simplices` simplices.
inline tagbar::SimplicialComplex random_simplicial(Rng& rng, std::size_t max_simplices = 30, std::size_t max_dim = 3)
{
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (;;)
    {
        std::size_t const nv = uniform(rng, 1, 7);
        std::vector<std::string> ids;
        std::vector<std::vector<double>> coords;
        for (std::size_t v = 0; v < nv; ++v)
        {
            ids.push_back("v" + std::to_string(v));
            coords.push_back({coord(rng), coord(rng), coord(rng)});
        }
        std::vector<tagbar::Simplex> chosen;
        tagbar::SimplicialComplex k(ids, coords, chosen);
        std::size_t const attempts = uniform(rng, 0, 8);
        for (std::size_t a = 0; a < attempts; ++a)
        {
            std::size_t const size = uniform(rng, 2, std::min(nv, max_dim + 1));
            if (size > nv || size < 2)
                continue;
            std::vector<std::size_t> verts(nv);
            std::iota(verts.begin(), verts.end(), std::size_t{0});
            std::shuffle(verts.begin(), verts.end(), rng);
            tagbar::Simplex s(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(size));
            chosen.push_back(s);
            tagbar::SimplicialComplex trial(ids, coords, chosen);
            if (trial.total_count() > max_simplices)
            {
                chosen.pop_back();
                continue;
            }
            k = std::move(trial);
        }
        if (k.total_count() <= max_simplices)
            return k;
    }
}

} // namespace testgen

#endif // TAGBAR_TESTS_GENERATORS_HPP
