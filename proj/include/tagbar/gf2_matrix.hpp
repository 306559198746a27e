#ifndef TAGBAR_GF2_MATRIX_HPP
#define TAGBAR_GF2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tagbar
{

/// Dense matrix over GF(2), stored as bit-packed columns.
class Gf2Matrix
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    /// Builds a matrix from the list of positions holding a 1.
    static Gf2Matrix from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<std::pair<std::size_t, std::size_t>> const& ones);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    bool is_zero() const;
    bool column_is_zero(std::size_t c) const;

    /// Row indices of the nonzero entries of column c, ascending.
    std::vector<std::size_t> column_support(std::size_t c) const;

    /// Lowest (largest index) nonzero row of column c.
    std::optional<std::size_t> column_low(std::size_t c) const;

    /// Column dst += column src.
    void add_column(std::size_t src, std::size_t dst);

    /// Row dst += row src.
    void add_row(std::size_t src, std::size_t dst);

    Gf2Matrix without_row(std::size_t r) const;
    Gf2Matrix without_column(std::size_t c) const;

    Gf2Matrix transpose() const;

    /// Number of ones.
    std::size_t count() const;

    /// Positions of all ones in column-major order.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const;

    /// Horizontal concatenation [this | other]; row counts must agree.
    Gf2Matrix hconcat(Gf2Matrix const& other) const;

    bool operator==(Gf2Matrix const& o) const = default;

private:
    std::size_t words_per_col() const { return (rows_ + word_bits - 1) / word_bits; }
    Word* col_ptr(std::size_t c) { return bits_.data() + c * words_per_col(); }
    Word const* col_ptr(std::size_t c) const { return bits_.data() + c * words_per_col(); }
    void check(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Word> bits_;
};

/// Rank over GF(2). Column elimination with deterministic pivoting.
std::size_t gf2_rank(Gf2Matrix const& m);

/// Matrix product with XOR accumulation. Throws on a dimension mismatch.
Gf2Matrix gf2_product(Gf2Matrix const& a, Gf2Matrix const& b);

/// Columns form a basis of the null space of m.
Gf2Matrix gf2_kernel_basis(Gf2Matrix const& m);

} // namespace tagbar

#endif // TAGBAR_GF2_MATRIX_HPP
