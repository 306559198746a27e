#ifndef TAGBAR_SIMPLICIAL_HPP
#define TAGBAR_SIMPLICIAL_HPP

#include "tagbar/chain_complex.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tagbar
{

/// Sorted vertex indices.
using Simplex = std::vector<std::size_t>;

/// Finite simplicial complex with Euclidean vertex coordinates.
///
/// Simplices of each dimension are kept in lexicographic order of their
/// vertex indices, which fixes the basis order of the chain complex.
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Closure of the given simplices. Every vertex is a 0-simplex.
    SimplicialComplex(std::vector<std::string> vertex_ids, std::vector<std::vector<double>> coords,
                      std::vector<Simplex> const& simplices);

    std::size_t num_vertices() const { return ids_.size(); }
    std::string const& vertex_id(std::size_t v) const { return ids_.at(v); }
    std::vector<double> const& coords(std::size_t v) const { return coords_.at(v); }
    std::vector<std::string> const& vertex_ids() const { return ids_; }
    std::vector<std::vector<double>> const& all_coords() const { return coords_; }
    std::optional<std::size_t> vertex_index(std::string const& id) const;

    /// Top dimension + 1; 0 when empty.
    std::size_t num_dimensions() const { return simplices_.size(); }
    std::size_t count(std::size_t k) const { return k < simplices_.size() ? simplices_[k].size() : 0; }
    std::size_t total_count() const;
    std::vector<Simplex> const& simplices(std::size_t k) const;
    Simplex const& simplex(std::size_t k, std::size_t i) const { return simplices_.at(k).at(i); }

    bool contains(Simplex const& s) const;
    /// Position of s within its dimension.
    std::optional<std::size_t> index_of(Simplex const& s) const;

    /// Maximal simplices in dimension order.
    std::vector<Simplex> maximal_simplices() const;

    /// Vertex ids joined by '-'.
    std::string label(Simplex const& s) const;

    std::vector<double> barycenter(Simplex const& s) const;

    /// Mod-2 simplicial chain complex, labels from label().
    BasedChainComplex chain_complex() const;

    /// Connected component of each vertex (component ids 0, 1, ...).
    std::vector<std::size_t> vertex_components() const;

    bool operator==(SimplicialComplex const&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<double>> coords_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Codimension-one faces of s, in lexicographic order.
std::vector<Simplex> hyperfaces(Simplex const& s);

std::vector<std::size_t> simplicial_betti(SimplicialComplex const& k);

/// Barycentric subdivision. Old vertices keep their ids; the vertex of a
/// higher simplex gets the id "(v0+v1+...)".
SimplicialComplex barycentric_subdivide(SimplicialComplex const& k);

/// Symmetric distance on cells.
class CellMetric
{
public:
    using Fn = std::function<double(Simplex const&, Simplex const&)>;

    CellMetric() = default;
    explicit CellMetric(Fn fn) : fn_(std::move(fn)) {}

    double distance(Simplex const& a, Simplex const& b) const;

private:
    Fn fn_;
};

/// Euclidean distance between barycenters within a component. Cells in
/// different components are at the largest intra-component distance.
CellMetric barycenter_metric(SimplicialComplex const& k);

} // namespace tagbar

#endif // TAGBAR_SIMPLICIAL_HPP
