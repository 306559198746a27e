#include "tagbar/approximation.hpp"

#include "tagbar/constructions.hpp"
#include "tagbar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tagbar
{

namespace
{

double euclid(std::vector<double> const& x, std::vector<double> const& y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

double wrap(double angle)
{
    double const two_pi = 2.0 * std::numbers::pi;
    angle = std::fmod(angle, two_pi);
    return angle < 0.0 ? angle + two_pi : angle;
}

} // namespace

ApproximationLevel compare_to_reference(ReferenceMorse const& ref, SimplicialComplex const& k,
                                        CombinatorialVectorField const& v)
{
    ApproximationLevel out;
    out.simplices = k.total_count();
    WeightedComplex const w = morse_weights(k, v, barycenter_metric(k));
    BasedChainComplex const& mc = w.complex();
    BasedChainComplex const& rc = ref.weighted.complex();
    std::size_t const degrees = std::max(mc.num_degrees(), rc.num_degrees());
    out.critical_cells = mc.total_dim();

    // perm[d][i]: reference index matched to critical cell i of degree d.
    std::vector<std::vector<std::size_t>> perm(degrees);
    for (std::size_t d = 0; d < degrees; ++d)
    {
        if (mc.dim(d) != rc.dim(d))
        {
            out.note = "degree " + std::to_string(d) + " has " + std::to_string(mc.dim(d)) +
                       " critical cells, reference has " + std::to_string(rc.dim(d));
            return out;
        }
        auto const crit = critical_cells(k, v, d);
        std::vector<bool> taken(rc.dim(d), false);
        for (auto const& cell : crit)
        {
            auto const c = k.barycenter(cell);
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rc.dim(d); ++r)
                if (double const dist = euclid(c, ref.points[d][r]); dist < best_d)
                {
                    best = r;
                    best_d = dist;
                }
            if (taken[best])
            {
                out.note = "two critical cells of degree " + std::to_string(d) + " are nearest to " +
                           rc.basis(d)[best];
                return out;
            }
            taken[best] = true;
            perm[d].push_back(best);
            out.delta = std::max(out.delta, best_d);
        }
    }
    out.matched = true;

    out.chain_isomorphic = true;
    for (std::size_t d = 1; d < degrees && out.chain_isomorphic; ++d)
    {
        Gf2Matrix const m = mc.boundary(d);
        Gf2Matrix const r = rc.boundary(d);
        for (std::size_t j = 0; j < mc.dim(d); ++j)
            for (std::size_t i = 0; i < mc.dim(d - 1); ++i)
                if (m.get(i, j) != r.get(perm[d - 1][i], perm[d][j]))
                    out.chain_isomorphic = false;
    }
    if (!out.chain_isomorphic)
    {
        out.note = "Morse complex is not isomorphic to the reference";
        return out;
    }

    struct Entry
    {
        double observed;
        double reference;
    };
    std::vector<Entry> entries;
    for (std::size_t d = 1; d < degrees; ++d)
        for (std::size_t a = 0; a < mc.dim(d); ++a)
            for (std::size_t b = 0; b < mc.dim(d - 1); ++b)
                entries.push_back({w.weight(d, a, b), ref.weighted.weight(d, perm[d][a], perm[d - 1][b])});
    out.order_preserved = true;
    for (auto const& e : entries)
    {
        out.d_phi = std::max(out.d_phi, std::fabs(e.observed - e.reference));
        for (auto const& f : entries)
            if ((e.reference < f.reference) != (e.observed < f.observed))
                out.order_preserved = false;
    }

    TaggedBarcode const y = construction_Y(w);
    TaggedBarcode const y_ref = construction_Y(ref.weighted);
    out.bound_holds = true;
    for (std::size_t d = 0; d < degrees; ++d)
    {
        ExtReal const db = bottleneck(y.degree(d), y_ref.degree(d));
        out.bottleneck_y.push_back(db);
        // relative slack for rounding in collinear configurations
        if (ExtReal(out.delta * (1.0 + 1e-9)) < db)
            out.bound_holds = false;
    }
    return out;
}

double CircleScalar::operator()(double angle) const
{
    struct Knot
    {
        double angle;
        double value;
    };
    std::vector<Knot> knots;
    for (std::size_t i = 0; i < min_angles.size(); ++i)
        knots.push_back({min_angles[i], min_values[i]});
    for (std::size_t i = 0; i < max_angles.size(); ++i)
        knots.push_back({max_angles[i], max_values[i]});
    std::sort(knots.begin(), knots.end(), [](Knot const& x, Knot const& y) { return x.angle < y.angle; });
    if (knots.empty())
        throw Error("CircleScalar: no extrema");
    double const two_pi = 2.0 * std::numbers::pi;
    double const a = wrap(angle);
    // Knot before a, wrapping around.
    std::size_t j = knots.size() - 1;
    for (std::size_t i = 0; i < knots.size(); ++i)
        if (knots[i].angle <= a)
            j = i;
    Knot const lo = knots[j];
    Knot const hi = knots[(j + 1) % knots.size()];
    double const span = wrap(hi.angle - lo.angle) == 0.0 ? two_pi : wrap(hi.angle - lo.angle);
    double const u = wrap(a - lo.angle) / span;
    return lo.value + (hi.value - lo.value) * (1.0 - std::cos(std::numbers::pi * u)) / 2.0;
}

SimplicialComplex CircleScalar::polygon() const
{
    std::vector<std::string> ids;
    std::vector<std::vector<double>> coords;
    std::vector<Simplex> edges;
    std::size_t const n = min_angles.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        ids.push_back("m" + std::to_string(i));
        coords.push_back({std::cos(min_angles[i]), std::sin(min_angles[i])});
        edges.push_back({i, (i + 1) % n});
    }
    return SimplicialComplex(std::move(ids), std::move(coords), edges);
}

ReferenceMorse CircleScalar::reference() const
{
    std::size_t const n = min_angles.size();
    if (max_angles.size() != n || min_values.size() != n || max_values.size() != n || n < 3)
        throw Error("CircleScalar: need at least three minima and as many maxima");
    ReferenceMorse ref;
    ref.points.resize(2);
    std::vector<std::vector<Label>> bases(2);
    for (std::size_t i = 0; i < n; ++i)
    {
        bases[0].push_back("m" + std::to_string(i));
        ref.points[0].push_back({std::cos(min_angles[i]), std::sin(min_angles[i])});
    }
    Gf2Matrix bnd(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
        bases[1].push_back("M" + std::to_string(i));
        auto const& p = ref.points[0][i];
        auto const& q = ref.points[0][(i + 1) % n];
        double const c = std::cos(max_angles[i]);
        double const s = std::sin(max_angles[i]);
        // p + t (q - p) = r (c, s); eliminate r with the cross product.
        double const dx = q[0] - p[0];
        double const dy = q[1] - p[1];
        double const t = (p[1] * c - p[0] * s) / (dx * s - dy * c);
        ref.points[1].push_back({p[0] + t * dx, p[1] + t * dy});
        bnd.set(i, i);
        bnd.set((i + 1) % n, i);
    }
    BasedChainComplex complex(std::move(bases), {std::move(bnd)});
    ref.weighted = WeightedComplex::from_function(std::move(complex), [&](std::size_t d, std::size_t a, std::size_t b) {
        return euclid(ref.points[d][a], ref.points[d - 1][b]);
    });
    return ref;
}

std::vector<double> CircleScalar::sample(SimplicialComplex const& k) const
{
    std::vector<double> out;
    for (std::size_t i = 0; i < k.num_vertices(); ++i)
    {
        auto const& c = k.coords(i);
        out.push_back((*this)(std::atan2(c[1], c[0])));
    }
    return out;
}

std::vector<ApproximationLevel> run_circle_experiment(CircleScalar const& g, std::size_t max_iterations)
{
    ReferenceMorse const ref = g.reference();
    SimplicialComplex k = g.polygon();
    std::vector<ApproximationLevel> out;
    for (std::size_t it = 0; it <= max_iterations; ++it)
    {
        if (it > 0)
            k = barycentric_subdivide(k);
        auto const v = greedy_acyclic_matching(k, g.sample(k));
        out.push_back(compare_to_reference(ref, k, v));
        out.back().iterations = it;
    }
    return out;
}

CircleScalar default_circle_scalar()
{
    return {{1.1, 2.2, 4.6}, {0.0, 0.25, 0.1}, {1.4, 4.3, 5.6}, {1.0, 0.7, 0.85}};
}

} // namespace tagbar
