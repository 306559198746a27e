#ifndef TAGBAR_CHAIN_COMPLEX_HPP
#define TAGBAR_CHAIN_COMPLEX_HPP

#include "tagbar/gf2_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tagbar
{

using Label = std::string;

/// Finite, non-negatively graded chain complex over GF(2) with an ordered
/// basis in every degree.
///
/// boundary(k) for k >= 1 has rows indexed by the degree k-1 basis and
/// columns by the degree k basis. The constructor only checks shapes; the
/// algebraic invariants are checked by validate_complex().
class BasedChainComplex
{
public:
    BasedChainComplex() = default;

    /// bases[k] is the basis of degree k; boundaries[k-1] is boundary(k).
    BasedChainComplex(std::vector<std::vector<Label>> bases, std::vector<Gf2Matrix> boundaries);

    /// Complex with the given bases and all differentials zero.
    static BasedChainComplex zero_differential(std::vector<std::vector<Label>> bases);

    /// Number of stored degrees (top degree + 1); 0 for the empty complex.
    std::size_t num_degrees() const { return bases_.size(); }
    bool empty() const { return bases_.empty(); }

    std::size_t dim(std::size_t k) const { return k < bases_.size() ? bases_[k].size() : 0; }
    std::size_t total_dim() const;

    std::vector<Label> const& basis(std::size_t k) const;
    std::vector<std::vector<Label>> const& bases() const { return bases_; }

    /// Boundary from degree k to k-1. For k == 0 or k beyond the top degree
    /// this is a correctly shaped zero matrix.
    Gf2Matrix boundary(std::size_t k) const;

    void set_boundary(std::size_t k, Gf2Matrix m);

    /// Position of a label in the basis of degree k.
    std::optional<std::size_t> index_of(std::size_t k, Label const& label) const;

    bool has_zero_differential() const;

    bool operator==(BasedChainComplex const& o) const = default;

private:
    std::vector<std::vector<Label>> bases_;
    std::vector<Gf2Matrix> boundaries_; // boundaries_[k-1] = boundary(k)
};

struct ValidationIssue
{
    std::size_t degree;
    std::string message;
};

struct ValidationReport
{
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

/// Checks label uniqueness per degree and that consecutive boundaries
/// compose to zero. Each failure names the degree and a witness.
ValidationReport validate_complex(BasedChainComplex const& c);

/// Mod-2 Betti numbers, one per stored degree. Throws on an invalid complex.
std::vector<std::size_t> betti_numbers(BasedChainComplex const& c);

/// Alternating sum of dimensions.
long euler_characteristic(BasedChainComplex const& c);

} // namespace tagbar

#endif // TAGBAR_CHAIN_COMPLEX_HPP
