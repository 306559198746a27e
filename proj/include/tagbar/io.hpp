#ifndef TAGBAR_IO_HPP
#define TAGBAR_IO_HPP

#include "tagbar/discrete_morse.hpp"
#include "tagbar/factored.hpp"
#include "tagbar/weighted_complex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tagbar
{

/// Contents of a complex file: bases, boundaries, and either a full weight
/// table or a filter, plus explicit tie precedences.
struct ComplexFile
{
    BasedChainComplex complex;
    std::optional<PairTable<double>> weights;
    std::optional<std::vector<std::vector<double>>> filter;
    std::vector<std::pair<PairRef, PairRef>> order;

    /// Weights from the table or the filter, tie order from `order`.
    /// Throws if neither is present.
    WeightedComplex weighted() const;

    /// Throws if no filter is present.
    FilteredComplex filtered() const;

    bool operator==(ComplexFile const&) const = default;
};

/// Parses the line format. Syntax and reference problems raise ParseError.
ComplexFile parse_complex_file(std::string const& text);
std::string serialize_complex_file(ComplexFile const& f);

ComplexFile complex_file_of(WeightedComplex const& w);

struct SimplicialFile
{
    SimplicialComplex complex;
    CombinatorialVectorField field;

    bool operator==(SimplicialFile const&) const = default;
};

SimplicialFile parse_simplicial_file(std::string const& text);
std::string serialize_simplicial_file(SimplicialFile const& f);

/// Whether the text looks like a simplicial file rather than a complex file.
bool looks_simplicial(std::string const& text);

struct BarcodeFile
{
    bool tagged = true;
    TaggedBarcode tagged_barcode;
    IntervalBarcode persistence;
};

BarcodeFile parse_barcode_file(std::string const& text);
std::string serialize_barcode(TaggedBarcode const& b);
std::string serialize_barcode(IntervalBarcode const& b);

/// Whole file as a string. Raises ParseError if it cannot be read.
std::string read_file(std::string const& path);

} // namespace tagbar

#endif // TAGBAR_IO_HPP
