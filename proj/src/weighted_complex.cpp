#include "tagbar/weighted_complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <tuple>

namespace tagbar
{

std::string to_string(PairRef const& p)
{
    return "(" + p.a + "," + p.b + ")@" + std::to_string(p.degree);
}

namespace
{

template <typename T>
PairTable<T> make_table(BasedChainComplex const& c, T init)
{
    PairTable<T> t;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        t.emplace_back(c.dim(k), std::vector<T>(c.dim(k - 1), init));
    return t;
}

template <typename T>
void erase_row(PairTable<T>& t, std::size_t k, std::size_t a)
{
    if (k >= 1 && k - 1 < t.size())
        t[k - 1].erase(t[k - 1].begin() + static_cast<std::ptrdiff_t>(a));
}

template <typename T>
void erase_col(PairTable<T>& t, std::size_t k, std::size_t b)
{
    if (k >= 1 && k - 1 < t.size())
        for (auto& row : t[k - 1])
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(b));
}

// Removes basis element `idx` of degree `k` from a pair table: it appears as
// a row in block k and as a column in block k+1.
template <typename T>
void erase_basis_element(PairTable<T>& t, std::size_t k, std::size_t idx)
{
    erase_row(t, k, idx);
    erase_col(t, k + 1, idx);
}

} // namespace

PairTable<std::size_t> default_tie_ranks(BasedChainComplex const& c)
{
    auto t = make_table<std::size_t>(c, 0);
    std::size_t r = 0;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        for (std::size_t a = 0; a < c.dim(k); ++a)
            for (std::size_t b = 0; b < c.dim(k - 1); ++b)
                t[k - 1][a][b] = r++;
    return t;
}

WeightedComplex::WeightedComplex(BasedChainComplex complex, PairTable<double> weights)
    : complex_(std::move(complex)), weights_(std::move(weights))
{
    ranks_ = default_tie_ranks(complex_);
    check_shapes();
}

WeightedComplex::WeightedComplex(BasedChainComplex complex, PairTable<double> weights,
                                 PairTable<std::size_t> tie_ranks)
    : complex_(std::move(complex)), weights_(std::move(weights)), ranks_(std::move(tie_ranks))
{
    check_shapes();
}

WeightedComplex WeightedComplex::from_function(
    BasedChainComplex complex,
    std::function<double(std::size_t, std::size_t, std::size_t)> const& weight)
{
    auto t = make_table<double>(complex, 0.0);
    for (std::size_t k = 1; k < complex.num_degrees(); ++k)
        for (std::size_t a = 0; a < complex.dim(k); ++a)
            for (std::size_t b = 0; b < complex.dim(k - 1); ++b)
                t[k - 1][a][b] = weight(k, a, b);
    return WeightedComplex(std::move(complex), std::move(t));
}

void WeightedComplex::check_shapes() const
{
    std::size_t const blocks = complex_.num_degrees() == 0 ? 0 : complex_.num_degrees() - 1;
    if (weights_.size() != blocks || ranks_.size() != blocks)
        throw Error("WeightedComplex: weight table does not match the complex");
    std::map<std::size_t, int> rank_seen;
    for (std::size_t k = 1; k <= blocks; ++k)
    {
        if (weights_[k - 1].size() != complex_.dim(k) || ranks_[k - 1].size() != complex_.dim(k))
            throw Error("WeightedComplex: weight rows mismatch in degree " + std::to_string(k));
        for (std::size_t a = 0; a < complex_.dim(k); ++a)
        {
            if (weights_[k - 1][a].size() != complex_.dim(k - 1) ||
                ranks_[k - 1][a].size() != complex_.dim(k - 1))
                throw Error("WeightedComplex: weight columns mismatch in degree " + std::to_string(k));
            for (std::size_t b = 0; b < complex_.dim(k - 1); ++b)
            {
                double const w = weights_[k - 1][a][b];
                if (!std::isfinite(w) || w < 0.0)
                    throw Error("WeightedComplex: weight of " +
                                to_string(PairRef{k, complex_.basis(k)[a], complex_.basis(k - 1)[b]}) +
                                " is not a non-negative real");
                if (rank_seen[ranks_[k - 1][a][b]]++)
                    throw Error("WeightedComplex: tie order is not strict");
            }
        }
    }
}

double WeightedComplex::weight(std::size_t degree, std::size_t a, std::size_t b) const
{
    return weights_.at(degree - 1).at(a).at(b);
}

double WeightedComplex::weight(PairRef const& p) const
{
    auto const [a, b] = pair_indices(p);
    return weight(p.degree, a, b);
}

std::size_t WeightedComplex::tie_rank(std::size_t degree, std::size_t a, std::size_t b) const
{
    return ranks_.at(degree - 1).at(a).at(b);
}

bool WeightedComplex::precedes(std::size_t k, std::size_t a, std::size_t b, std::size_t k2,
                               std::size_t a2, std::size_t b2) const
{
    double const w1 = weight(k, a, b);
    double const w2 = weight(k2, a2, b2);
    if (w1 != w2)
        return w1 < w2;
    return tie_rank(k, a, b) < tie_rank(k2, a2, b2);
}

std::pair<std::size_t, std::size_t> WeightedComplex::pair_indices(PairRef const& p) const
{
    if (p.degree == 0)
        throw Error("pair " + to_string(p) + ": degree must be at least 1");
    auto const a = complex_.index_of(p.degree, p.a);
    auto const b = complex_.index_of(p.degree - 1, p.b);
    if (!a || !b)
        throw Error("pair " + to_string(p) + ": label not found");
    return {*a, *b};
}

WeightedComplex WeightedComplex::with_precedences(
    std::vector<std::pair<PairRef, PairRef>> const& before) const
{
    // Kahn's algorithm over all pairs, default order as priority.
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    auto const defaults = default_tie_ranks(complex_);
    std::map<Key, std::vector<Key>> succ;
    std::map<Key, std::size_t> indegree;
    for (std::size_t k = 1; k < complex_.num_degrees(); ++k)
        for (std::size_t a = 0; a < complex_.dim(k); ++a)
            for (std::size_t b = 0; b < complex_.dim(k - 1); ++b)
                indegree[{k, a, b}] = 0;
    for (auto const& [first, second] : before)
    {
        auto const [a1, b1] = pair_indices(first);
        auto const [a2, b2] = pair_indices(second);
        Key const u{first.degree, a1, b1};
        Key const v{second.degree, a2, b2};
        succ[u].push_back(v);
        ++indegree[v];
    }
    auto const default_rank = [&](Key const& key) {
        return defaults[std::get<0>(key) - 1][std::get<1>(key)][std::get<2>(key)];
    };
    using Item = std::pair<std::size_t, Key>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (auto const& [key, deg] : indegree)
        if (deg == 0)
            ready.emplace(default_rank(key), key);
    auto ranks = make_table<std::size_t>(complex_, 0);
    std::size_t next = 0;
    while (!ready.empty())
    {
        Key const key = ready.top().second;
        ready.pop();
        ranks[std::get<0>(key) - 1][std::get<1>(key)][std::get<2>(key)] = next++;
        for (Key const& v : succ[key])
            if (--indegree[v] == 0)
                ready.emplace(default_rank(v), v);
    }
    if (next != indegree.size())
        throw Error("tie order precedences are cyclic");
    return WeightedComplex(complex_, weights_, std::move(ranks));
}

WeightedComplex WeightedComplex::with_random_tie_order(std::uint64_t seed) const
{
    auto ranks = make_table<std::size_t>(complex_, 0);
    std::size_t total = 0;
    for (auto const& block : ranks)
        for (auto const& row : block)
            total += row.size();
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t i = 0;
    for (auto& block : ranks)
        for (auto& row : block)
            for (auto& r : row)
                r = perm[i++];
    return WeightedComplex(complex_, weights_, std::move(ranks));
}

WeightedComplex WeightedComplex::with_weights(PairTable<double> weights) const
{
    return WeightedComplex(complex_, std::move(weights), ranks_);
}

bool WeightedComplex::uses_default_tie_order() const
{
    return ranks_ == default_tie_ranks(complex_);
}

GenericityReport is_generic(WeightedComplex const& w)
{
    BasedChainComplex const& c = w.complex();
    std::map<double, PairRef> seen;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
        for (std::size_t a = 0; a < c.dim(k); ++a)
            for (std::size_t b = 0; b < c.dim(k - 1); ++b)
            {
                PairRef p{k, c.basis(k)[a], c.basis(k - 1)[b]};
                double const x = w.weight(k, a, b);
                if (x == 0.0)
                    return {false, p, std::nullopt, "zero weight on " + to_string(p)};
                auto const [it, inserted] = seen.emplace(x, p);
                if (!inserted)
                    return {false, it->second, p,
                            "equal weight " + format_real(x) + " on " + to_string(it->second) +
                                " and " + to_string(p)};
            }
    return {};
}

ExtReal xi(std::vector<std::vector<double>> const& d)
{
    std::size_t const n = d.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (d[i].size() != n)
            throw Error("xi: distance table is not square");
        if (d[i][i] != 0.0)
            throw Error("xi: nonzero diagonal entry at " + std::to_string(i));
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            if (d[i][j] != d[j][i])
                throw Error("xi: distance table is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
            values.push_back(d[i][j]);
        }
    if (values.size() < 2)
        return ExtReal::infinity();
    std::sort(values.begin(), values.end());
    double best = values[1] - values[0];
    for (std::size_t i = 2; i < values.size(); ++i)
        best = std::min(best, values[i] - values[i - 1]);
    return ExtReal(best);
}

std::optional<std::string> monotonicity_violation(FilteredComplex const& f)
{
    BasedChainComplex const& c = f.complex;
    if (f.filter.size() != c.num_degrees())
        return "filter has " + std::to_string(f.filter.size()) + " degrees, complex has " +
               std::to_string(c.num_degrees());
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
    {
        if (f.filter[k].size() != c.dim(k))
            return "filter size mismatch in degree " + std::to_string(k);
        for (std::size_t i = 0; i < c.dim(k); ++i)
            if (!std::isfinite(f.filter[k][i]) || f.filter[k][i] < 0.0)
                return "filter value of '" + c.basis(k)[i] + "' is not a non-negative real";
    }
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
    {
        Gf2Matrix const m = c.boundary(k);
        for (std::size_t a = 0; a < c.dim(k); ++a)
            for (std::size_t b : m.column_support(a))
                if (!(f.filter[k - 1][b] < f.filter[k][a]))
                    return "filter not monotone: f(" + c.basis(k - 1)[b] + ") = " +
                           format_real(f.filter[k - 1][b]) + " >= f(" + c.basis(k)[a] +
                           ") = " + format_real(f.filter[k][a]);
    }
    return std::nullopt;
}

WeightedComplex filter_to_weights(FilteredComplex const& f)
{
    if (auto v = monotonicity_violation(f))
        throw Error(*v);
    return WeightedComplex::from_function(f.complex, [&](std::size_t k, std::size_t a, std::size_t b) {
        return std::fabs(f.filter[k][a] - f.filter[k - 1][b]);
    });
}

ComplexSimplification simplify_complex(BasedChainComplex const& c, std::size_t n, std::size_t a,
                                       std::size_t b)
{
    if (n == 0 || n >= c.num_degrees())
        throw Error("simplify: degree " + std::to_string(n) + " has no boundary");
    if (a >= c.dim(n) || b >= c.dim(n - 1))
        throw Error("simplify: basis index out of range");
    Gf2Matrix const mn = c.boundary(n);
    if (!mn.get(b, a))
        throw Error("simplify: <d " + c.basis(n)[a] + ", " + c.basis(n - 1)[b] + "> is zero");

    auto bases = c.bases();
    bases[n].erase(bases[n].begin() + static_cast<std::ptrdiff_t>(a));
    bases[n - 1].erase(bases[n - 1].begin() + static_cast<std::ptrdiff_t>(b));

    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
    {
        Gf2Matrix m = c.boundary(k);
        if (k == n + 1)
            m = m.without_row(a);
        else if (k == n)
        {
            for (std::size_t r : mn.column_support(a))
                if (r != b)
                    m.add_row(b, r);
            m = m.without_column(a).without_row(b);
        }
        else if (k == n - 1)
            m = m.without_column(b);
        bnd.push_back(std::move(m));
    }

    std::vector<Gf2Matrix> map;
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
    {
        std::size_t const old_dim = c.dim(k);
        if (k != n && k != n - 1)
        {
            map.push_back(Gf2Matrix::identity(old_dim));
            continue;
        }
        std::size_t const gone = (k == n) ? a : b;
        Gf2Matrix q(old_dim - 1, old_dim);
        for (std::size_t j = 0; j < old_dim; ++j)
            if (j != gone)
                q.set(j < gone ? j : j - 1, j);
        // [b] = sum of the other elements of the boundary of a.
        if (k == n - 1)
            for (std::size_t r : mn.column_support(a))
                if (r != b)
                    q.set(r < b ? r : r - 1, b);
        map.push_back(std::move(q));
    }
    return {BasedChainComplex(std::move(bases), std::move(bnd)), std::move(map)};
}

WeightedSimplification simplify_pair_with_map(WeightedComplex const& w, std::size_t n, std::size_t a,
                                              std::size_t b)
{
    auto s = simplify_complex(w.complex(), n, a, b);
    auto weights = w.weights();
    auto ranks = w.tie_ranks();
    erase_basis_element(weights, n, a);
    erase_basis_element(ranks, n, a);
    erase_basis_element(weights, n - 1, b);
    erase_basis_element(ranks, n - 1, b);
    return {WeightedComplex(std::move(s.complex), std::move(weights), std::move(ranks)),
            std::move(s.quotient_map)};
}

WeightedComplex simplify_pair(WeightedComplex const& w, PairRef const& pair)
{
    auto const [a, b] = w.pair_indices(pair);
    return simplify_pair_with_map(w, pair.degree, a, b).complex;
}

FilteredComplex simplify_filtered(FilteredComplex const& f, std::size_t n, std::size_t a, std::size_t b)
{
    auto s = simplify_complex(f.complex, n, a, b);
    auto filter = f.filter;
    filter[n].erase(filter[n].begin() + static_cast<std::ptrdiff_t>(a));
    filter[n - 1].erase(filter[n - 1].begin() + static_cast<std::ptrdiff_t>(b));
    return {std::move(s.complex), std::move(filter)};
}

} // namespace tagbar
