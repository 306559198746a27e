#include "tagbar/chain_complex.hpp"

#include "tagbar/ext_real.hpp"

#include <set>
#include <utility>

namespace tagbar
{

BasedChainComplex::BasedChainComplex(std::vector<std::vector<Label>> bases,
                                     std::vector<Gf2Matrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries))
{
    std::size_t const n = bases_.size();
    if (boundaries_.size() + 1 < n)
        boundaries_.resize(n == 0 ? 0 : n - 1);
    if (n == 0 && !boundaries_.empty())
        throw Error("BasedChainComplex: boundaries given for an empty complex");
    if (n > 0 && boundaries_.size() != n - 1)
        throw Error("BasedChainComplex: expected " + std::to_string(n - 1) +
                    " boundary matrices, got " + std::to_string(boundaries_.size()));
    for (std::size_t k = 1; k < n; ++k)
    {
        Gf2Matrix& m = boundaries_[k - 1];
        if (m.rows() == 0 && m.cols() == 0 && (dim(k) != 0 || dim(k - 1) != 0))
            m = Gf2Matrix(dim(k - 1), dim(k));
        if (m.rows() != dim(k - 1) || m.cols() != dim(k))
            throw Error("BasedChainComplex: boundary of degree " + std::to_string(k) +
                        " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        ", expected " + std::to_string(dim(k - 1)) + "x" + std::to_string(dim(k)));
    }
}

BasedChainComplex BasedChainComplex::zero_differential(std::vector<std::vector<Label>> bases)
{
    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 1; k < bases.size(); ++k)
        bnd.emplace_back(bases[k - 1].size(), bases[k].size());
    return BasedChainComplex(std::move(bases), std::move(bnd));
}

std::size_t BasedChainComplex::total_dim() const
{
    std::size_t n = 0;
    for (auto const& b : bases_)
        n += b.size();
    return n;
}

std::vector<Label> const& BasedChainComplex::basis(std::size_t k) const
{
    static std::vector<Label> const empty;
    return k < bases_.size() ? bases_[k] : empty;
}

Gf2Matrix BasedChainComplex::boundary(std::size_t k) const
{
    if (k >= 1 && k < bases_.size())
        return boundaries_[k - 1];
    return Gf2Matrix(k == 0 ? 0 : dim(k - 1), dim(k));
}

void BasedChainComplex::set_boundary(std::size_t k, Gf2Matrix m)
{
    if (k == 0 || k >= bases_.size())
        throw Error("set_boundary: degree " + std::to_string(k) + " has no boundary slot");
    if (m.rows() != dim(k - 1) || m.cols() != dim(k))
        throw Error("set_boundary: shape mismatch in degree " + std::to_string(k));
    boundaries_[k - 1] = std::move(m);
}

std::optional<std::size_t> BasedChainComplex::index_of(std::size_t k, Label const& label) const
{
    if (k >= bases_.size())
        return std::nullopt;
    auto const& b = bases_[k];
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == label)
            return i;
    return std::nullopt;
}

bool BasedChainComplex::has_zero_differential() const
{
    for (auto const& m : boundaries_)
        if (!m.is_zero())
            return false;
    return true;
}

ValidationReport validate_complex(BasedChainComplex const& c)
{
    ValidationReport report;
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
    {
        std::set<Label> seen;
        for (auto const& l : c.basis(k))
            if (!seen.insert(l).second)
                report.issues.push_back({k, "duplicate basis label '" + l + "'"});
    }
    for (std::size_t k = 2; k < c.num_degrees(); ++k)
    {
        Gf2Matrix const sq = gf2_product(c.boundary(k - 1), c.boundary(k));
        if (sq.is_zero())
            continue;
        auto const e = sq.entries().front();
        report.issues.push_back(
            {k, "boundary(" + std::to_string(k - 1) + ") * boundary(" + std::to_string(k) +
                    ") != 0: column '" + c.basis(k)[e.second] + "' reaches '" +
                    c.basis(k - 2)[e.first] + "'"});
    }
    return report;
}

std::vector<std::size_t> betti_numbers(BasedChainComplex const& c)
{
    auto const report = validate_complex(c);
    if (!report.ok())
        throw Error("betti_numbers: invalid complex: " + report.issues.front().message);
    std::size_t const n = c.num_degrees();
    std::vector<std::size_t> ranks(n + 1, 0);
    for (std::size_t k = 1; k < n; ++k)
        ranks[k] = gf2_rank(c.boundary(k));
    std::vector<std::size_t> betti(n);
    for (std::size_t k = 0; k < n; ++k)
        betti[k] = c.dim(k) - ranks[k] - ranks[k + 1];
    return betti;
}

long euler_characteristic(BasedChainComplex const& c)
{
    long chi = 0;
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(k));
    return chi;
}

} // namespace tagbar
