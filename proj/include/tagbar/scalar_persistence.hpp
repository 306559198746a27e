#ifndef TAGBAR_SCALAR_PERSISTENCE_HPP
#define TAGBAR_SCALAR_PERSISTENCE_HPP

#include "tagbar/factored.hpp"
#include "tagbar/weighted_complex.hpp"

#include <cstdint>
#include <string>

namespace tagbar
{

/// Persistence barcode of the sublevel filtration of a filtered complex.
/// Throws if the filter is not monotone.
IntervalBarcode persistence_barcode(FilteredComplex const& f);

/// Whether f(b) is maximal on the boundary of a and f(a) is minimal among
/// the cells whose boundary contains b. Requires <boundary a, b> != 0.
bool split_check(FilteredComplex const& f, std::size_t n, std::size_t a, std::size_t b);

/// Finite [s,t) in degree n goes to [0, t-s, t-s) in degree n+1; [s,inf)
/// in degree n goes to [0, 0, inf) in degree n.
TaggedBarcode correspondence_map(IntervalBarcode const& pb);

/// Multiset equality with a relative tolerance on finite endpoints.
bool barcodes_match(TaggedBarcode const& x, TaggedBarcode const& y, double rel_tol = 1e-9);

/// Human-readable listing of the intervals present in one barcode but not
/// in the other.
std::string barcode_diff(TaggedBarcode const& expected, TaggedBarcode const& actual, double rel_tol = 1e-9);

struct CorrespondenceReport
{
    bool ok = true;
    TaggedBarcode from_persistence;
    TaggedBarcode default_order;
    TaggedBarcode random_order;
    std::string diff;
};

/// Compares the mapped persistence barcode with construction Y under the
/// default tie order and under a random one drawn from `seed`.
CorrespondenceReport verify_correspondence(FilteredComplex const& f, std::uint64_t seed = 1);

} // namespace tagbar

#endif // TAGBAR_SCALAR_PERSISTENCE_HPP
