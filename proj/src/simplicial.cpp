#include "tagbar/simplicial.hpp"

#include "tagbar/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace tagbar
{

std::vector<Simplex> hyperfaces(Simplex const& s)
{
    std::vector<Simplex> out;
    if (s.size() < 2)
        return out;
    for (std::size_t i = s.size(); i-- > 0;)
    {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_ids,
                                     std::vector<std::vector<double>> coords,
                                     std::vector<Simplex> const& simplices)
    : ids_(std::move(vertex_ids)), coords_(std::move(coords))
{
    if (coords_.size() != ids_.size())
        throw Error("SimplicialComplex: one coordinate vector per vertex required");
    std::set<std::string> seen;
    for (auto const& id : ids_)
        if (!seen.insert(id).second)
            throw Error("SimplicialComplex: duplicate vertex id '" + id + "'");
    for (auto const& c : coords_)
        if (c.size() != coords_.front().size())
            throw Error("SimplicialComplex: vertex coordinates differ in dimension");

    std::vector<std::set<Simplex>> all;
    auto const insert = [&](Simplex const& s) {
        if (all.size() < s.size())
            all.resize(s.size());
        return all[s.size() - 1].insert(s).second;
    };
    for (std::size_t v = 0; v < ids_.size(); ++v)
        insert({v});
    for (Simplex s : simplices)
    {
        std::sort(s.begin(), s.end());
        if (s.empty())
            throw Error("SimplicialComplex: empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error("SimplicialComplex: repeated vertex in a simplex");
        if (s.back() >= ids_.size())
            throw Error("SimplicialComplex: unknown vertex index");
        // Insert all faces; stop descending where a face is already present.
        std::vector<Simplex> stack{s};
        while (!stack.empty())
        {
            Simplex t = std::move(stack.back());
            stack.pop_back();
            if (!insert(t))
                continue;
            for (auto& f : hyperfaces(t))
                stack.push_back(std::move(f));
        }
    }
    for (auto const& level : all)
    {
        simplices_.emplace_back(level.begin(), level.end());
        auto& idx = index_.emplace_back();
        for (std::size_t i = 0; i < simplices_.back().size(); ++i)
            idx.emplace(simplices_.back()[i], i);
    }
}

std::optional<std::size_t> SimplicialComplex::vertex_index(std::string const& id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t SimplicialComplex::total_count() const
{
    std::size_t n = 0;
    for (auto const& l : simplices_)
        n += l.size();
    return n;
}

std::vector<Simplex> const& SimplicialComplex::simplices(std::size_t k) const
{
    static std::vector<Simplex> const empty;
    return k < simplices_.size() ? simplices_[k] : empty;
}

bool SimplicialComplex::contains(Simplex const& s) const
{
    return index_of(s).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(Simplex const& s) const
{
    if (s.empty() || s.size() > index_.size())
        return std::nullopt;
    auto const& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::set<Simplex> covered;
    for (std::size_t k = 1; k < simplices_.size(); ++k)
        for (auto const& s : simplices_[k])
            for (auto& f : hyperfaces(s))
                covered.insert(std::move(f));
    std::vector<Simplex> out;
    for (auto const& level : simplices_)
        for (auto const& s : level)
            if (!covered.count(s))
                out.push_back(s);
    return out;
}

std::string SimplicialComplex::label(Simplex const& s) const
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out += '-';
        out += ids_.at(s[i]);
    }
    return out;
}

std::vector<double> SimplicialComplex::barycenter(Simplex const& s) const
{
    std::size_t const d = coords_.empty() ? 0 : coords_.front().size();
    std::vector<double> out(d, 0.0);
    for (std::size_t v : s)
        for (std::size_t i = 0; i < d; ++i)
            out[i] += coords_.at(v)[i];
    for (auto& x : out)
        x /= static_cast<double>(s.size());
    return out;
}

BasedChainComplex SimplicialComplex::chain_complex() const
{
    std::vector<std::vector<Label>> bases;
    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 0; k < simplices_.size(); ++k)
    {
        auto& b = bases.emplace_back();
        for (auto const& s : simplices_[k])
            b.push_back(label(s));
        if (k == 0)
            continue;
        Gf2Matrix m(simplices_[k - 1].size(), simplices_[k].size());
        for (std::size_t j = 0; j < simplices_[k].size(); ++j)
            for (auto const& f : hyperfaces(simplices_[k][j]))
                m.set(index_[k - 1].at(f), j);
        bnd.push_back(std::move(m));
    }
    return BasedChainComplex(std::move(bases), std::move(bnd));
}

std::vector<std::size_t> SimplicialComplex::vertex_components() const
{
    std::vector<std::size_t> parent(ids_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto const find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto const& e : simplices(1))
        parent[find(e[0])] = find(e[1]);
    std::map<std::size_t, std::size_t> relabel;
    std::vector<std::size_t> out(ids_.size());
    for (std::size_t v = 0; v < ids_.size(); ++v)
        out[v] = relabel.emplace(find(v), relabel.size()).first->second;
    return out;
}

std::vector<std::size_t> simplicial_betti(SimplicialComplex const& k)
{
    return betti_numbers(k.chain_complex());
}

SimplicialComplex barycentric_subdivide(SimplicialComplex const& k)
{
    std::vector<std::string> ids;
    std::vector<std::vector<double>> coords;
    std::map<Simplex, std::size_t> vertex_of;
    for (std::size_t d = 0; d < k.num_dimensions(); ++d)
        for (auto const& s : k.simplices(d))
        {
            vertex_of.emplace(s, ids.size());
            if (d == 0)
                ids.push_back(k.vertex_id(s[0]));
            else
            {
                std::string id = "(";
                for (std::size_t i = 0; i < s.size(); ++i)
                    id += (i ? "+" : "") + k.vertex_id(s[i]);
                ids.push_back(id + ")");
            }
            coords.push_back(k.barycenter(s));
        }

    // Maximal chains suffice: every chain is a face of one that refines down
    // to a vertex one dimension at a time.
    std::vector<Simplex> chains;
    std::function<void(Simplex const&, Simplex&)> extend = [&](Simplex const& top, Simplex& chain) {
        chain.push_back(vertex_of.at(top));
        if (top.size() == 1)
            chains.push_back(chain);
        else
            for (auto const& f : hyperfaces(top))
                extend(f, chain);
        chain.pop_back();
    };
    for (auto const& s : k.maximal_simplices())
    {
        Simplex chain;
        extend(s, chain);
    }
    return SimplicialComplex(std::move(ids), std::move(coords), chains);
}

double CellMetric::distance(Simplex const& a, Simplex const& b) const
{
    if (!fn_)
        throw Error("CellMetric: no distance function");
    return fn_(a, b);
}

namespace
{

double euclid(std::vector<double> const& x, std::vector<double> const& y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

struct BarycenterState
{
    SimplicialComplex complex;
    std::vector<std::size_t> component;
    double cross = 0.0;
};

double max_intra_component_distance(SimplicialComplex const& k, std::vector<std::size_t> const& component)
{
    std::vector<std::pair<std::size_t, std::vector<double>>> cells;
    for (std::size_t d = 0; d < k.num_dimensions(); ++d)
        for (auto const& s : k.simplices(d))
            cells.emplace_back(component[s[0]], k.barycenter(s));
    double best = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i].first == cells[j].first)
                best = std::max(best, euclid(cells[i].second, cells[j].second));
    return best;
}

} // namespace

CellMetric barycenter_metric(SimplicialComplex const& k)
{
    auto state = std::make_shared<BarycenterState>();
    state->complex = k;
    state->component = k.vertex_components();
    if (std::any_of(state->component.begin(), state->component.end(), [](std::size_t c) { return c > 0; }))
        state->cross = max_intra_component_distance(k, state->component);
    return CellMetric([state](Simplex const& a, Simplex const& b) {
        if (!state->complex.contains(a) || !state->complex.contains(b))
            throw Error("barycenter_metric: cell not in the complex");
        if (a == b)
            return 0.0;
        if (state->component[a[0]] != state->component[b[0]])
            return state->cross;
        return euclid(state->complex.barycenter(a), state->complex.barycenter(b));
    });
}

} // namespace tagbar
