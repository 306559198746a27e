#include "tagbar/discrete_morse.hpp"

#include "tagbar/ext_real.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tagbar
{

bool CombinatorialVectorField::is_target(Simplex const& s) const
{
    for (auto const& [from, to] : pairs)
        if (to == s)
            return true;
    return false;
}

namespace
{

std::string show(SimplicialComplex const& k, Simplex const& s)
{
    for (std::size_t v : s)
        if (v >= k.num_vertices())
            return "<unknown simplex>";
    return "{" + k.label(s) + "}";
}

bool is_facet(Simplex const& face, Simplex const& cell)
{
    return face.size() + 1 == cell.size() && std::includes(cell.begin(), cell.end(), face.begin(), face.end());
}

// Field with a target set, shared by the path searches below.
class Flow
{
public:
    explicit Flow(CombinatorialVectorField const& v) : pairs_(v.pairs)
    {
        for (auto const& [from, to] : pairs_)
            targets_.insert(to);
    }

    bool source(Simplex const& s) const { return pairs_.count(s) > 0; }
    bool target(Simplex const& s) const { return targets_.count(s) > 0; }
    bool free(Simplex const& s) const { return !source(s) && !target(s); }

    void add(Simplex const& s, Simplex const& t)
    {
        pairs_.emplace(s, t);
        targets_.insert(t);
    }

    /// Successors of s in the V-path digraph.
    std::vector<Simplex> next(Simplex const& s) const
    {
        std::vector<Simplex> out;
        auto it = pairs_.find(s);
        if (it == pairs_.end())
            return out;
        for (auto& f : hyperfaces(it->second))
            if (f != s)
                out.push_back(std::move(f));
        return out;
    }

    /// Whether `to` is reachable from any of `starts`.
    bool reaches(std::vector<Simplex> const& starts, Simplex const& to) const
    {
        std::set<Simplex> seen;
        std::vector<Simplex> stack = starts;
        while (!stack.empty())
        {
            Simplex s = std::move(stack.back());
            stack.pop_back();
            if (s == to)
                return true;
            if (!seen.insert(s).second)
                continue;
            for (auto& n : next(s))
                stack.push_back(std::move(n));
        }
        return false;
    }

    CombinatorialVectorField field() const { return {pairs_}; }

private:
    std::map<Simplex, Simplex> pairs_;
    std::set<Simplex> targets_;
};

void require_gradient(SimplicialComplex const& k, CombinatorialVectorField const& v)
{
    auto const check = is_gradient_like(k, v);
    if (!check.gradient_like)
    {
        std::string path;
        for (auto const& s : check.cycle)
            path += (path.empty() ? "" : " -> ") + show(k, s);
        throw Error("field is not gradient-like; closed V-path " + path);
    }
}

} // namespace

CvfReport validate_cvf(SimplicialComplex const& k, CombinatorialVectorField const& v)
{
    CvfReport r;
    std::map<Simplex, Simplex> image_of;
    for (auto const& [s, t] : v.pairs)
    {
        std::string const pair = show(k, s) + " -> " + show(k, t);
        if (!k.contains(s) || !k.contains(t))
        {
            r.violations.push_back("pair " + pair + " uses a cell outside the complex");
            continue;
        }
        if (!is_facet(s, t))
            r.violations.push_back("pair " + pair + ": target is not a cofacet of the source");
        if (v.pairs.count(t))
            r.violations.push_back("pair " + pair + ": V(V(sigma)) is defined");
        auto [it, fresh] = image_of.emplace(t, s);
        if (!fresh)
            r.violations.push_back("cell " + show(k, t) + " is the image of both " + show(k, it->second) +
                                   " and " + show(k, s));
    }
    return r;
}

GradientCheck is_gradient_like(SimplicialComplex const& k, CombinatorialVectorField const& v)
{
    auto const report = validate_cvf(k, v);
    if (!report.ok())
        throw Error("invalid vector field: " + report.violations.front());
    Flow const flow(v);
    // Iterative DFS with colors; a gray successor closes a cycle.
    std::map<Simplex, int> color;
    for (auto const& [start, unused] : v.pairs)
    {
        if (color[start] != 0)
            continue;
        std::vector<std::pair<Simplex, std::vector<Simplex>>> stack;
        color[start] = 1;
        stack.emplace_back(start, flow.next(start));
        while (!stack.empty())
        {
            auto& [node, succ] = stack.back();
            if (succ.empty())
            {
                color[node] = 2;
                stack.pop_back();
                continue;
            }
            Simplex n = std::move(succ.back());
            succ.pop_back();
            int const c = color[n];
            if (c == 1)
            {
                GradientCheck out{false, {}};
                auto it = std::find_if(stack.begin(), stack.end(), [&](auto const& e) { return e.first == n; });
                for (; it != stack.end(); ++it)
                    out.cycle.push_back(it->first);
                out.cycle.push_back(n);
                return out;
            }
            if (c == 0)
            {
                color[n] = 1;
                auto next = flow.next(n);
                stack.emplace_back(std::move(n), std::move(next));
            }
        }
    }
    return {};
}

std::vector<Simplex> critical_cells(SimplicialComplex const& k, CombinatorialVectorField const& v, std::size_t d)
{
    Flow const flow(v);
    std::vector<Simplex> out;
    for (auto const& s : k.simplices(d))
        if (flow.free(s))
            out.push_back(s);
    return out;
}

BasedChainComplex morse_complex(SimplicialComplex const& k, CombinatorialVectorField const& v)
{
    require_gradient(k, v);
    Flow const flow(v);
    std::size_t const dims = k.num_dimensions();
    std::vector<std::vector<Simplex>> crit(dims);
    std::vector<std::vector<Label>> bases(dims);
    for (std::size_t d = 0; d < dims; ++d)
    {
        crit[d] = critical_cells(k, v, d);
        for (auto const& s : crit[d])
            bases[d].push_back(k.label(s));
    }

    std::vector<Gf2Matrix> bnd;
    for (std::size_t d = 1; d < bases.size(); ++d)
    {
        std::map<Simplex, std::size_t> crit_index;
        for (std::size_t i = 0; i < crit[d - 1].size(); ++i)
            crit_index.emplace(crit[d - 1][i], i);

        // paths[s]: mod-2 count of V-paths from s to each critical cell of dimension d-1.
        using Bits = std::vector<bool>;
        std::map<Simplex, Bits> paths;
        auto const count = [&](Simplex const& root) -> Bits const& {
            std::vector<std::pair<Simplex, bool>> stack{{root, false}};
            while (!stack.empty())
            {
                auto [s, expanded] = stack.back();
                stack.pop_back();
                if (paths.count(s))
                    continue;
                Bits bits(crit[d - 1].size(), false);
                if (auto it = crit_index.find(s); it != crit_index.end())
                {
                    bits[it->second] = true;
                    paths.emplace(s, std::move(bits));
                    continue;
                }
                auto const succ = flow.next(s);
                if (!expanded)
                {
                    stack.emplace_back(s, true);
                    for (auto const& n : succ)
                        if (!paths.count(n))
                            stack.emplace_back(n, false);
                    continue;
                }
                for (auto const& n : succ)
                {
                    Bits const& sub = paths.at(n);
                    for (std::size_t i = 0; i < bits.size(); ++i)
                        bits[i] = bits[i] != sub[i];
                }
                paths.emplace(s, std::move(bits));
            }
            return paths.at(root);
        };

        Gf2Matrix m(crit[d - 1].size(), crit[d].size());
        for (std::size_t j = 0; j < crit[d].size(); ++j)
            for (auto const& f : hyperfaces(crit[d][j]))
            {
                Bits const& bits = count(f);
                for (std::size_t i = 0; i < bits.size(); ++i)
                    if (bits[i])
                        m.flip(i, j);
            }
        bnd.push_back(std::move(m));
    }
    return BasedChainComplex(std::move(bases), std::move(bnd));
}

WeightedComplex morse_weights(SimplicialComplex const& k, CombinatorialVectorField const& v, CellMetric const& m)
{
    BasedChainComplex c = morse_complex(k, v);
    std::vector<std::vector<Simplex>> crit(c.num_degrees());
    for (std::size_t d = 0; d < c.num_degrees(); ++d)
        crit[d] = critical_cells(k, v, d);
    return WeightedComplex::from_function(std::move(c), [&](std::size_t d, std::size_t a, std::size_t b) {
        return m.distance(crit[d][a], crit[d - 1][b]);
    });
}

namespace
{

CombinatorialVectorField greedy(std::vector<std::pair<Simplex, Simplex>> const& candidates)
{
    Flow flow{CombinatorialVectorField{}};
    for (auto const& [s, t] : candidates)
    {
        if (!flow.free(s) || !flow.free(t))
            continue;
        std::vector<Simplex> starts;
        for (auto& f : hyperfaces(t))
            if (f != s)
                starts.push_back(std::move(f));
        if (flow.reaches(starts, s))
            continue;
        flow.add(s, t);
    }
    return flow.field();
}

std::vector<std::pair<Simplex, Simplex>> facet_pairs(SimplicialComplex const& k)
{
    std::vector<std::pair<Simplex, Simplex>> out;
    for (std::size_t d = 1; d < k.num_dimensions(); ++d)
        for (auto const& t : k.simplices(d))
            for (auto& f : hyperfaces(t))
                out.emplace_back(std::move(f), t);
    return out;
}

} // namespace

CombinatorialVectorField greedy_acyclic_matching(SimplicialComplex const& k, std::uint64_t seed)
{
    auto pairs = facet_pairs(k);
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    return greedy(pairs);
}

CombinatorialVectorField greedy_acyclic_matching(SimplicialComplex const& k, std::vector<double> const& scalar)
{
    if (scalar.size() != k.num_vertices())
        throw Error("greedy_acyclic_matching: one scalar per vertex required");
    auto const values = [&](Simplex const& s) {
        std::vector<double> out;
        for (std::size_t v : s)
            out.push_back(scalar[v]);
        std::sort(out.rbegin(), out.rend());
        return out;
    };
    struct Candidate
    {
        std::vector<double> cell_values;
        std::vector<double> face_values;
        Simplex face;
        Simplex cell;
    };
    std::vector<Candidate> cands;
    for (auto& [s, t] : facet_pairs(k))
    {
        auto tv = values(t);
        auto sv = values(s);
        if (sv.front() != tv.front())
            continue;
        cands.push_back({std::move(tv), std::move(sv), s, t});
    }
    std::sort(cands.begin(), cands.end(), [](Candidate const& x, Candidate const& y) {
        if (x.cell_values.front() != y.cell_values.front())
            return x.cell_values.front() < y.cell_values.front();
        if (x.cell.size() != y.cell.size())
            return x.cell.size() < y.cell.size();
        if (x.cell_values != y.cell_values)
            return x.cell_values < y.cell_values;
        if (x.cell != y.cell)
            return x.cell < y.cell;
        if (x.face_values != y.face_values)
            return x.face_values < y.face_values;
        return x.face < y.face;
    });
    std::vector<std::pair<Simplex, Simplex>> ordered;
    for (auto& c : cands)
        ordered.emplace_back(std::move(c.face), std::move(c.cell));
    return greedy(ordered);
}

} // namespace tagbar
