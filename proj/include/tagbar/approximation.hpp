#ifndef TAGBAR_APPROXIMATION_HPP
#define TAGBAR_APPROXIMATION_HPP

#include "tagbar/discrete_morse.hpp"
#include "tagbar/factored.hpp"

#include <string>
#include <vector>

namespace tagbar
{

/// Reference Morse complex whose basis elements sit at known points.
struct ReferenceMorse
{
    WeightedComplex weighted;
    /// points[k][i]: location of basis element i of degree k.
    std::vector<std::vector<std::vector<double>>> points;
};

/// Comparison of a combinatorial Morse complex against a reference.
struct ApproximationLevel
{
    std::size_t iterations = 0;
    std::size_t simplices = 0;
    std::size_t critical_cells = 0;
    bool matched = false;          ///< critical cells correspond bijectively to reference points
    bool chain_isomorphic = false; ///< boundaries agree under that correspondence
    double delta = 0.0;            ///< largest barycenter displacement
    double d_phi = 0.0;            ///< largest weight change
    bool order_preserved = false;
    std::vector<ExtReal> bottleneck_y; ///< per degree, Y barcodes
    bool bound_holds = false;          ///< every bottleneck_y entry <= delta, up to 1e-9 relative
    std::string note;
};

/// Matches critical cells to reference points of the same degree by
/// nearest barycenter and compares the weighted Morse complexes.
ApproximationLevel compare_to_reference(ReferenceMorse const& ref, SimplicialComplex const& k,
                                        CombinatorialVectorField const& v);

/// Scalar on the unit circle interpolating alternating minima and maxima
/// with half-cosine arcs. Angles in radians, strictly increasing in [0, 2pi).
struct CircleScalar
{
    std::vector<double> min_angles;
    std::vector<double> min_values;
    std::vector<double> max_angles; ///< max_angles[i] lies between min_angles[i] and min_angles[i+1]
    std::vector<double> max_values;

    double operator()(double angle) const;

    /// Polygon with one vertex per minimum.
    SimplicialComplex polygon() const;

    /// Minima at the polygon vertices, maxima where their rays meet the
    /// polygon; boundary of maximum i is minimum i + minimum i+1.
    ReferenceMorse reference() const;

    /// Scalar evaluated at the angle of every vertex of k.
    std::vector<double> sample(SimplicialComplex const& k) const;
};

/// Subdivides the polygon 0..max_iterations times and compares the
/// scalar-driven greedy field at each level with the reference.
std::vector<ApproximationLevel> run_circle_experiment(CircleScalar const& g, std::size_t max_iterations);

/// A fixed irregular scalar with three minima and three maxima.
CircleScalar default_circle_scalar();

} // namespace tagbar

#endif // TAGBAR_APPROXIMATION_HPP
