#include "tagbar/metrics.hpp"

#include <algorithm>
#include <optional>

namespace tagbar
{

ExtReal cost(TaggedInterval const& a, TaggedInterval const& b)
{
    return max(abs_diff(a.s, b.s), abs_diff(a.t, b.t));
}

ExtReal weight(TaggedInterval const& a)
{
    return a.t.half();
}

namespace
{

enum class Kind
{
    finite,
    open_end,  // [0, s, inf) with s finite
    disk,      // [0, inf, inf)
};

Kind kind_of(TaggedInterval const& iv)
{
    if (iv.t.is_finite())
        return Kind::finite;
    return iv.s.is_finite() ? Kind::open_end : Kind::disk;
}

// Bipartite graph: left = a (0..p) then diagonal copies of b (p..p+q);
// right = b (0..q) then diagonal copies of a (q..q+p).
class Feasibility
{
public:
    Feasibility(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b)
        : a_(a), b_(b)
    {
    }

    // Perfect matching at threshold eps, as match_left (left -> right), or nullopt.
    std::optional<std::vector<std::size_t>> solve(ExtReal eps) const
    {
        std::size_t const p = a_.size();
        std::size_t const q = b_.size();
        std::size_t const n = p + q;
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < p; ++i)
        {
            for (std::size_t j = 0; j < q; ++j)
                if (cost(a_[i], b_[j]) <= eps)
                    adj[i].push_back(j);
            if (weight(a_[i]) <= eps)
                adj[i].push_back(q + i);
        }
        for (std::size_t j = 0; j < q; ++j)
        {
            if (weight(b_[j]) <= eps)
                adj[p + j].push_back(j);
            for (std::size_t i = 0; i < p; ++i)
                adj[p + j].push_back(q + i);
        }
        std::vector<std::size_t> match_right(n, n);
        std::vector<std::size_t> match_left(n, n);
        for (std::size_t u = 0; u < n; ++u)
        {
            std::vector<char> seen(n, 0);
            if (!augment(u, adj, seen, match_left, match_right))
                return std::nullopt;
        }
        return match_left;
    }

private:
    static bool augment(std::size_t u, std::vector<std::vector<std::size_t>> const& adj,
                        std::vector<char>& seen, std::vector<std::size_t>& match_left,
                        std::vector<std::size_t>& match_right)
    {
        std::size_t const n = adj.size();
        for (std::size_t v : adj[u])
        {
            if (seen[v])
                continue;
            seen[v] = 1;
            if (match_right[v] == n || augment(match_right[v], adj, seen, match_left, match_right))
            {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        return false;
    }

    std::vector<TaggedInterval> const& a_;
    std::vector<TaggedInterval> const& b_;
};

} // namespace

MatchingResult bottleneck_matching(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b)
{
    MatchingResult result;
    std::size_t counts[2][3] = {};
    for (auto const& iv : a)
        ++counts[0][static_cast<int>(kind_of(iv))];
    for (auto const& iv : b)
        ++counts[1][static_cast<int>(kind_of(iv))];
    if (counts[0][1] != counts[1][1] || counts[0][2] != counts[1][2])
    {
        result.epsilon = ExtReal::infinity();
        result.unmatched_a = a;
        result.unmatched_b = b;
        return result;
    }

    std::vector<double> candidates{0.0};
    auto const keep = [&](ExtReal x) {
        if (x.is_finite())
            candidates.push_back(x.value());
    };
    for (auto const& x : a)
    {
        keep(weight(x));
        for (auto const& y : b)
            keep(cost(x, y));
    }
    for (auto const& y : b)
        keep(weight(y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Feasibility const graph(a, b);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    std::optional<std::vector<std::size_t>> best = graph.solve(candidates[hi]);
    if (!best)
        throw Error("bottleneck: no finite matching despite equal infinite counts");
    while (lo < hi)
    {
        std::size_t const mid = lo + (hi - lo) / 2;
        if (auto m = graph.solve(candidates[mid]))
        {
            hi = mid;
            best = std::move(m);
        }
        else
            lo = mid + 1;
    }

    result.epsilon = ExtReal(candidates[hi]);
    std::size_t const p = a.size();
    std::size_t const q = b.size();
    std::vector<char> b_used(q, 0);
    for (std::size_t i = 0; i < p; ++i)
    {
        std::size_t const v = (*best)[i];
        if (v < q)
        {
            result.matched.emplace_back(a[i], b[v]);
            b_used[v] = 1;
        }
        else
            result.unmatched_a.push_back(a[i]);
    }
    for (std::size_t j = 0; j < q; ++j)
        if (!b_used[j])
            result.unmatched_b.push_back(b[j]);
    return result;
}

ExtReal bottleneck(std::vector<TaggedInterval> const& a, std::vector<TaggedInterval> const& b)
{
    return bottleneck_matching(a, b).epsilon;
}

ExtReal interleaving_distance(TaggedBarcode const& x, TaggedBarcode const& y)
{
    ExtReal d(0.0);
    auto degrees = x.degrees();
    for (auto k : y.degrees())
        degrees.push_back(k);
    for (auto k : degrees)
        d = max(d, bottleneck(x.degree(k), y.degree(k)));
    return d;
}

ExtReal interval_pair_interleaving(std::size_t n, TaggedInterval const& a, TaggedInterval const& b)
{
    for (auto const* iv : {&a, &b})
        if (auto problem = tagged_interval_problem(n, *iv); !problem.empty())
            throw Error("interval_pair_interleaving: " + to_string(*iv) + ": " + problem);
    return min(cost(a, b), max(weight(a), weight(b)));
}

} // namespace tagbar
