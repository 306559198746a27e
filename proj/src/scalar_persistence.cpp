#include "tagbar/scalar_persistence.hpp"

#include "tagbar/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

namespace tagbar
{

IntervalBarcode persistence_barcode(FilteredComplex const& f)
{
    if (auto v = monotonicity_violation(f))
        throw Error(*v);
    BasedChainComplex const& c = f.complex;

    struct Cell
    {
        double value;
        std::size_t degree;
        std::size_t index;
    };
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
        for (std::size_t i = 0; i < c.dim(k); ++i)
            cells.push_back({f.filter[k][i], k, i});
    std::sort(cells.begin(), cells.end(), [](Cell const& x, Cell const& y) {
        return std::tie(x.value, x.degree, x.index) < std::tie(y.value, y.degree, y.index);
    });
    std::vector<std::vector<std::size_t>> position(c.num_degrees());
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
        position[k].resize(c.dim(k));
    for (std::size_t p = 0; p < cells.size(); ++p)
        position[cells[p].degree][cells[p].index] = p;

    std::size_t const n = cells.size();
    Gf2Matrix total(n, n);
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
    {
        Gf2Matrix const m = c.boundary(k);
        for (auto const& [b, a] : m.entries())
            total.set(position[k - 1][b], position[k][a]);
    }

    std::vector<std::size_t> owner(n, n);
    std::vector<bool> killed(n, false);
    IntervalBarcode out;
    for (std::size_t j = 0; j < n; ++j)
    {
        for (auto low = total.column_low(j); low; low = total.column_low(j))
        {
            if (owner[*low] == n)
            {
                owner[*low] = j;
                killed[*low] = true;
                double const birth = cells[*low].value;
                double const death = cells[j].value;
                if (birth < death)
                    out.add(cells[*low].degree, {ExtReal(birth), ExtReal(death)});
                break;
            }
            total.add_column(owner[*low], j);
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (total.column_is_zero(j) && !killed[j])
            out.add(cells[j].degree, {ExtReal(cells[j].value), ExtReal::infinity()});
    return out;
}

bool split_check(FilteredComplex const& f, std::size_t n, std::size_t a, std::size_t b)
{
    BasedChainComplex const& c = f.complex;
    if (n == 0 || n >= c.num_degrees() || a >= c.dim(n) || b >= c.dim(n - 1))
        throw Error("split_check: index out of range");
    Gf2Matrix const m = c.boundary(n);
    if (!m.get(b, a))
        throw Error("split_check: <d " + c.basis(n)[a] + ", " + c.basis(n - 1)[b] + "> is zero");
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t r : m.column_support(a))
        top = std::max(top, f.filter[n - 1][r]);
    double bottom = std::numeric_limits<double>::infinity();
    for (std::size_t col = 0; col < c.dim(n); ++col)
        if (m.get(b, col))
            bottom = std::min(bottom, f.filter[n][col]);
    return f.filter[n - 1][b] == top && f.filter[n][a] == bottom;
}

TaggedBarcode correspondence_map(IntervalBarcode const& pb)
{
    TaggedBarcode out;
    for (auto const& [n, slice] : pb.slices())
        for (auto const& iv : slice)
        {
            if (iv.t.is_infinite())
                out.add(n, {ExtReal(0.0), ExtReal::infinity()});
            else
            {
                double const len = iv.t.value() - iv.s.value();
                out.add(n + 1, {ExtReal(len), ExtReal(len)});
            }
        }
    return out;
}

namespace
{

bool close(ExtReal x, ExtReal y, double rel_tol)
{
    if (x.is_infinite() || y.is_infinite())
        return x == y;
    double const a = x.value();
    double const b = y.value();
    return std::fabs(a - b) <= rel_tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool close(TaggedInterval const& x, TaggedInterval const& y, double rel_tol)
{
    return close(x.s, y.s, rel_tol) && close(x.t, y.t, rel_tol);
}

// Intervals of `from` without a close partner in `other`, per degree.
std::vector<std::pair<std::size_t, TaggedInterval>> unmatched(TaggedBarcode const& from, TaggedBarcode const& other,
                                                              double rel_tol)
{
    std::vector<std::pair<std::size_t, TaggedInterval>> out;
    for (auto const& [n, slice] : from.slices())
    {
        auto pool = other.degree(n);
        std::vector<bool> used(pool.size(), false);
        for (auto const& iv : slice)
        {
            bool found = false;
            for (std::size_t i = 0; i < pool.size() && !found; ++i)
                if (!used[i] && close(iv, pool[i], rel_tol))
                    used[i] = found = true;
            if (!found)
                out.emplace_back(n, iv);
        }
    }
    return out;
}

} // namespace

bool barcodes_match(TaggedBarcode const& x, TaggedBarcode const& y, double rel_tol)
{
    return x.size() == y.size() && unmatched(x, y, rel_tol).empty() && unmatched(y, x, rel_tol).empty();
}

std::string barcode_diff(TaggedBarcode const& expected, TaggedBarcode const& actual, double rel_tol)
{
    std::ostringstream os;
    for (auto const& [n, iv] : unmatched(expected, actual, rel_tol))
        os << "- " << n << " " << to_string(iv) << "\n";
    for (auto const& [n, iv] : unmatched(actual, expected, rel_tol))
        os << "+ " << n << " " << to_string(iv) << "\n";
    return os.str();
}

CorrespondenceReport verify_correspondence(FilteredComplex const& f, std::uint64_t seed)
{
    CorrespondenceReport r;
    r.from_persistence = correspondence_map(persistence_barcode(f));
    WeightedComplex const w = filter_to_weights(f);
    r.default_order = construction_Y(w);
    r.random_order = construction_Y(w.with_random_tie_order(seed));
    if (!barcodes_match(r.from_persistence, r.default_order))
    {
        r.ok = false;
        r.diff += "default tie order (- persistence, + construction):\n" +
                  barcode_diff(r.from_persistence, r.default_order);
    }
    if (!barcodes_match(r.from_persistence, r.random_order))
    {
        r.ok = false;
        r.diff += "random tie order (- persistence, + construction):\n" +
                  barcode_diff(r.from_persistence, r.random_order);
    }
    return r;
}

} // namespace tagbar
