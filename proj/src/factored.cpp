#include "tagbar/factored.hpp"

#include <cmath>
#include <functional>

namespace tagbar
{

std::string tagged_interval_problem(std::size_t degree, TaggedInterval const& iv)
{
    if (iv.s.is_finite() && iv.s.value() < 0.0)
        return "negative collapse time";
    if (iv.t < iv.s)
        return "collapse time after the end";
    if (!(ExtReal(0.0) < iv.t))
        return "empty underlying interval";
    if (degree == 0 && iv.s != ExtReal(0.0))
        return "degree 0 interval must have s = 0";
    return {};
}

std::string interval_problem(Interval const& iv)
{
    if (iv.s.is_finite() && iv.s.value() < 0.0)
        return "negative start";
    if (!(iv.s < iv.t))
        return "empty interval";
    return {};
}

std::string to_string(TaggedInterval const& iv)
{
    return "[0," + format_real(iv.s) + "," + format_real(iv.t) + ")";
}

std::string to_string(Interval const& iv)
{
    return "[" + format_real(iv.s) + "," + format_real(iv.t) + ")";
}

FactoredPresentation FactoredPresentation::zero()
{
    return {{0.0}, {BasedChainComplex()}, {}};
}

std::size_t FactoredPresentation::num_degrees() const
{
    std::size_t n = 0;
    for (auto const& c : stages)
        n = std::max(n, c.num_degrees());
    return n;
}

std::size_t FactoredPresentation::stage_at(double t) const
{
    auto it = std::upper_bound(critical_times.begin(), critical_times.end(), t);
    if (it == critical_times.begin())
        throw Error("stage_at: time before the first critical time");
    return static_cast<std::size_t>(it - critical_times.begin()) - 1;
}

Gf2Matrix FactoredPresentation::transition(std::size_t i, std::size_t k) const
{
    if (i == 0 || i >= stages.size())
        throw Error("transition: stage index out of range");
    auto const& q = transitions.at(i - 1);
    if (k < q.size())
        return q[k];
    return Gf2Matrix(stages[i].dim(k), stages[i - 1].dim(k));
}

ValidationReport validate_presentation(FactoredPresentation const& p)
{
    ValidationReport r;
    auto const fail = [&](std::size_t k, std::string msg) { r.issues.push_back({k, std::move(msg)}); };
    if (p.critical_times.empty() || p.critical_times.front() != 0.0)
        fail(0, "critical times must start at 0");
    for (std::size_t i = 0; i < p.critical_times.size(); ++i)
    {
        if (!std::isfinite(p.critical_times[i]))
            fail(0, "critical time " + std::to_string(i) + " is not finite");
        if (i > 0 && !(p.critical_times[i - 1] < p.critical_times[i]))
            fail(0, "critical times not strictly increasing at " + std::to_string(i));
    }
    if (p.stages.size() != p.critical_times.size())
        fail(0, "one stage per critical time required");
    if (p.transitions.size() + 1 != p.stages.size())
        fail(0, "one transition between consecutive stages required");
    if (!r.ok())
        return r;

    for (std::size_t i = 0; i < p.stages.size(); ++i)
        for (auto const& issue : validate_complex(p.stages[i]).issues)
            fail(issue.degree, "stage " + std::to_string(i) + ": " + issue.message);

    std::size_t const degrees = p.num_degrees();
    for (std::size_t i = 1; i < p.stages.size(); ++i)
    {
        auto const& from = p.stages[i - 1];
        auto const& to = p.stages[i];
        std::string const tag = "transition " + std::to_string(i) + ": ";
        bool shapes_ok = true;
        for (std::size_t k = 0; k < p.transitions[i - 1].size(); ++k)
        {
            auto const& q = p.transitions[i - 1][k];
            if (q.rows() != to.dim(k) || q.cols() != from.dim(k))
            {
                fail(k, tag + "wrong shape in degree " + std::to_string(k));
                shapes_ok = false;
            }
        }
        if (!shapes_ok)
            continue;
        for (std::size_t k = 0; k < degrees; ++k)
        {
            Gf2Matrix const q = p.transition(i, k);
            if (gf2_rank(q) != to.dim(k))
                fail(k, tag + "not surjective in degree " + std::to_string(k));
            if (k == 0)
                continue;
            Gf2Matrix const lhs = gf2_product(p.transition(i, k - 1), from.boundary(k));
            Gf2Matrix const rhs = gf2_product(to.boundary(k), q);
            if (!(lhs == rhs))
                fail(k, tag + "does not commute with the boundary in degree " + std::to_string(k));
        }
    }
    return r;
}

namespace
{

BasedChainComplex disk(std::size_t n)
{
    std::vector<std::vector<Label>> bases(n + 1);
    bases[n] = {"a"};
    if (n == 0)
        return BasedChainComplex(std::move(bases), {});
    bases[n - 1] = {"b"};
    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 1; k <= n; ++k)
        bnd.emplace_back(bases[k - 1].size(), bases[k].size());
    bnd[n - 1] = Gf2Matrix::identity(1);
    return BasedChainComplex(std::move(bases), std::move(bnd));
}

BasedChainComplex sphere(std::size_t n)
{
    std::vector<std::vector<Label>> bases(n + 1);
    bases[n] = {"a"};
    return BasedChainComplex::zero_differential(std::move(bases));
}

BasedChainComplex nothing(std::size_t n)
{
    return BasedChainComplex::zero_differential(std::vector<std::vector<Label>>(n + 1));
}

// Map between stages whose degree-n generator survives exactly when both
// stages have one; everything else goes to zero.
std::vector<Gf2Matrix> collapse_map(BasedChainComplex const& from, BasedChainComplex const& to)
{
    std::vector<Gf2Matrix> q;
    for (std::size_t k = 0; k < std::max(from.num_degrees(), to.num_degrees()); ++k)
    {
        Gf2Matrix m(to.dim(k), from.dim(k));
        if (to.dim(k) == 1 && from.dim(k) == 1)
            m.set(0, 0);
        q.push_back(std::move(m));
    }
    return q;
}

Gf2Matrix block_diag(std::vector<Gf2Matrix> const& blocks)
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (auto const& b : blocks)
    {
        rows += b.rows();
        cols += b.cols();
    }
    Gf2Matrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (auto const& b : blocks)
    {
        for (auto const& [r, c] : b.entries())
            out.set(r0 + r, c0 + c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

ExtReal end_time(FactoredPresentation const& p, std::size_t j)
{
    return j + 1 < p.critical_times.size() ? ExtReal(p.critical_times[j + 1]) : ExtReal::infinity();
}

// Barcode of a sequence of vector spaces from the ranks of the composite
// maps rk(i, j), i <= j, by inclusion-exclusion.
std::vector<Interval> barcode_from_ranks(FactoredPresentation const& p,
                                         std::function<std::size_t(std::size_t, std::size_t)> const& rk)
{
    std::size_t const r = p.num_stages();
    std::vector<std::vector<long>> table(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            table[i][j] = static_cast<long>(rk(i, j));
    auto const at = [&](long i, long j) -> long {
        if (i < 0 || j >= static_cast<long>(r))
            return 0;
        return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    std::vector<Interval> out;
    for (long i = 0; i < static_cast<long>(r); ++i)
        for (long j = i; j < static_cast<long>(r); ++j)
        {
            long const m = at(i, j) - at(i - 1, j) - at(i, j + 1) + at(i - 1, j + 1);
            if (m < 0)
                throw Error("barcode: negative interval multiplicity");
            Interval const iv{ExtReal(p.critical_times[static_cast<std::size_t>(i)]),
                              end_time(p, static_cast<std::size_t>(j))};
            out.insert(out.end(), static_cast<std::size_t>(m), iv);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// composites[i][j] = map in degree k from stage i to stage j (i <= j).
std::vector<std::vector<Gf2Matrix>> composites(FactoredPresentation const& p, std::size_t k)
{
    std::size_t const r = p.num_stages();
    std::vector<std::vector<Gf2Matrix>> out(r, std::vector<Gf2Matrix>(r));
    for (std::size_t i = 0; i < r; ++i)
    {
        out[i][i] = Gf2Matrix::identity(p.stages[i].dim(k));
        for (std::size_t j = i + 1; j < r; ++j)
            out[i][j] = gf2_product(p.transition(j, k), out[i][j - 1]);
    }
    return out;
}

void require_valid(FactoredPresentation const& p)
{
    auto const report = validate_presentation(p);
    if (!report.ok())
        throw Error("invalid presentation: " + report.issues.front().message);
}

} // namespace

FactoredPresentation interval_functor_presentation(std::size_t n, TaggedInterval const& iv)
{
    if (auto problem = tagged_interval_problem(n, iv); !problem.empty())
        throw Error("interval functor " + to_string(iv) + " in degree " + std::to_string(n) + ": " +
                    problem);
    FactoredPresentation p;
    if (ExtReal(0.0) < iv.s)
    {
        p.critical_times.push_back(0.0);
        p.stages.push_back(disk(n));
    }
    if (iv.s < iv.t)
    {
        p.critical_times.push_back(iv.s.value());
        p.stages.push_back(sphere(n));
    }
    if (iv.t.is_finite())
    {
        p.critical_times.push_back(iv.t.value());
        p.stages.push_back(nothing(n));
    }
    for (std::size_t i = 1; i < p.stages.size(); ++i)
        p.transitions.push_back(collapse_map(p.stages[i - 1], p.stages[i]));
    return p;
}

FactoredPresentation direct_sum(std::vector<FactoredPresentation> const& ps)
{
    if (ps.empty())
        return FactoredPresentation::zero();
    std::vector<double> times;
    std::size_t degrees = 0;
    for (auto const& p : ps)
    {
        times.insert(times.end(), p.critical_times.begin(), p.critical_times.end());
        degrees = std::max(degrees, p.num_degrees());
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    FactoredPresentation out;
    out.critical_times = times;
    std::vector<std::size_t> prev(ps.size(), 0);
    for (std::size_t m = 0; m < times.size(); ++m)
    {
        std::vector<std::size_t> idx(ps.size());
        for (std::size_t j = 0; j < ps.size(); ++j)
            idx[j] = ps[j].stage_at(times[m]);

        std::vector<std::vector<Label>> bases(degrees);
        std::vector<Gf2Matrix> bnd;
        for (std::size_t k = 0; k < degrees; ++k)
        {
            std::vector<Gf2Matrix> blocks;
            for (std::size_t j = 0; j < ps.size(); ++j)
            {
                auto const& c = ps[j].stages[idx[j]];
                for (auto const& l : c.basis(k))
                    bases[k].push_back(std::to_string(j) + ":" + l);
                if (k > 0)
                    blocks.push_back(c.boundary(k));
            }
            if (k > 0)
                bnd.push_back(block_diag(blocks));
        }
        out.stages.emplace_back(std::move(bases), std::move(bnd));

        if (m > 0)
        {
            std::vector<Gf2Matrix> q;
            for (std::size_t k = 0; k < degrees; ++k)
            {
                std::vector<Gf2Matrix> blocks;
                for (std::size_t j = 0; j < ps.size(); ++j)
                    blocks.push_back(idx[j] != prev[j]
                                         ? ps[j].transition(idx[j], k)
                                         : Gf2Matrix::identity(ps[j].stages[idx[j]].dim(k)));
                q.push_back(block_diag(blocks));
            }
            out.transitions.push_back(std::move(q));
        }
        prev = idx;
    }
    return out;
}

std::vector<Interval> parametrized_homology(FactoredPresentation const& p, std::size_t n)
{
    require_valid(p);
    std::size_t const r = p.num_stages();
    auto const maps = composites(p, n);
    std::vector<Gf2Matrix> cycles(r);
    std::vector<Gf2Matrix> bounds(r);
    std::vector<std::size_t> bound_rank(r);
    for (std::size_t i = 0; i < r; ++i)
    {
        cycles[i] = gf2_kernel_basis(p.stages[i].boundary(n));
        bounds[i] = p.stages[i].boundary(n + 1);
        bound_rank[i] = gf2_rank(bounds[i]);
    }
    // Rank of H_n(C^i) -> H_n(C^j): dimension of (f(Z_i) + B_j) / B_j.
    return barcode_from_ranks(p, [&](std::size_t i, std::size_t j) {
        Gf2Matrix const image = gf2_product(maps[i][j], cycles[i]);
        return gf2_rank(image.hconcat(bounds[j])) - bound_rank[j];
    });
}

std::vector<Interval> parametrized_boundary(FactoredPresentation const& p, std::size_t n)
{
    require_valid(p);
    if (n == 0)
        return {};
    auto const maps = composites(p, n - 1);
    return barcode_from_ranks(p, [&](std::size_t i, std::size_t j) {
        return gf2_rank(gf2_product(maps[i][j], p.stages[i].boundary(n)));
    });
}

TaggedBarcode decompose(FactoredPresentation const& p)
{
    require_valid(p);
    TaggedBarcode out;
    for (std::size_t n = 0; n < p.num_degrees(); ++n)
    {
        auto const homology = parametrized_homology(p, n);
        auto const boundary = parametrized_boundary(p, n);
        std::map<ExtReal, long> collapses; // [0,s) bars of the boundary functor
        for (auto const& iv : boundary)
        {
            if (iv.s != ExtReal(0.0))
                throw Error("decompose: boundary bar " + to_string(iv) +
                            " does not start at 0; presentation is not epimorphic");
            if (iv.t.is_infinite())
                out.add(n, {ExtReal::infinity(), ExtReal::infinity()});
            else
                ++collapses[iv.t];
        }
        for (auto const& iv : homology)
        {
            out.add(n, {iv.s, iv.t});
            if (iv.s != ExtReal(0.0))
                --collapses[iv.s];
        }
        for (auto const& [s, count] : collapses)
        {
            if (count < 0)
                throw Error("decompose: negative multiplicity for [0," + format_real(s) + "," +
                            format_real(s) + ") in degree " + std::to_string(n));
            out.add(n, {s, s}, static_cast<std::size_t>(count));
        }
    }
    return out;
}

FactoredPresentation presentation_of(TaggedBarcode const& b)
{
    std::vector<FactoredPresentation> parts;
    for (auto const& [n, slice] : b.slices())
        for (auto const& iv : slice)
            parts.push_back(interval_functor_presentation(n, iv));
    return direct_sum(parts);
}

} // namespace tagbar
