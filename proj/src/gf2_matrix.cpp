#include "tagbar/gf2_matrix.hpp"

#include "tagbar/ext_real.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tagbar
{

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(cols * ((rows + word_bits - 1) / word_bits), 0)
{
}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<std::pair<std::size_t, std::size_t>> const& ones)
{
    Gf2Matrix m(rows, cols);
    for (auto const& [r, c] : ones)
        m.set(r, c);
    return m;
}

void Gf2Matrix::check(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw Error("Gf2Matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                    ") out of range " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const
{
    check(r, c);
    return (col_ptr(c)[r / word_bits] >> (r % word_bits)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    check(r, c);
    Word const mask = Word(1) << (r % word_bits);
    Word& w = col_ptr(c)[r / word_bits];
    w = value ? (w | mask) : (w & ~mask);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c)
{
    check(r, c);
    col_ptr(c)[r / word_bits] ^= Word(1) << (r % word_bits);
}

bool Gf2Matrix::is_zero() const
{
    for (Word w : bits_)
        if (w)
            return false;
    return true;
}

bool Gf2Matrix::column_is_zero(std::size_t c) const
{
    Word const* p = col_ptr(c);
    for (std::size_t i = 0; i < words_per_col(); ++i)
        if (p[i])
            return false;
    return true;
}

std::vector<std::size_t> Gf2Matrix::column_support(std::size_t c) const
{
    std::vector<std::size_t> out;
    Word const* p = col_ptr(c);
    for (std::size_t i = 0; i < words_per_col(); ++i)
    {
        Word w = p[i];
        while (w)
        {
            out.push_back(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::optional<std::size_t> Gf2Matrix::column_low(std::size_t c) const
{
    Word const* p = col_ptr(c);
    for (std::size_t i = words_per_col(); i-- > 0;)
        if (p[i])
            return i * word_bits + (word_bits - 1 - static_cast<std::size_t>(std::countl_zero(p[i])));
    return std::nullopt;
}

void Gf2Matrix::add_column(std::size_t src, std::size_t dst)
{
    if (src >= cols_ || dst >= cols_)
        throw Error("Gf2Matrix::add_column: column out of range");
    Word const* s = col_ptr(src);
    Word* d = col_ptr(dst);
    for (std::size_t i = 0; i < words_per_col(); ++i)
        d[i] ^= s[i];
}

void Gf2Matrix::add_row(std::size_t src, std::size_t dst)
{
    if (src >= rows_ || dst >= rows_)
        throw Error("Gf2Matrix::add_row: row out of range");
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(src, c))
            flip(dst, c);
}

Gf2Matrix Gf2Matrix::without_row(std::size_t r) const
{
    if (r >= rows_)
        throw Error("Gf2Matrix::without_row: row out of range");
    Gf2Matrix out(rows_ - 1, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t i : column_support(c))
            if (i != r)
                out.set(i < r ? i : i - 1, c);
    return out;
}

Gf2Matrix Gf2Matrix::without_column(std::size_t c) const
{
    if (c >= cols_)
        throw Error("Gf2Matrix::without_column: column out of range");
    Gf2Matrix out(rows_, cols_ - 1);
    std::size_t const w = words_per_col();
    for (std::size_t j = 0, k = 0; j < cols_; ++j)
    {
        if (j == c)
            continue;
        for (std::size_t i = 0; i < w; ++i)
            out.bits_[k * w + i] = bits_[j * w + i];
        ++k;
    }
    return out;
}

Gf2Matrix Gf2Matrix::transpose() const
{
    Gf2Matrix out(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r : column_support(c))
            out.set(c, r);
    return out;
}

std::size_t Gf2Matrix::count() const
{
    std::size_t n = 0;
    for (Word w : bits_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Gf2Matrix::entries() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r : column_support(c))
            out.emplace_back(r, c);
    return out;
}

Gf2Matrix Gf2Matrix::hconcat(Gf2Matrix const& other) const
{
    if (other.rows_ != rows_)
        throw Error("Gf2Matrix::hconcat: row counts differ");
    Gf2Matrix out(rows_, cols_ + other.cols_);
    std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
    std::copy(other.bits_.begin(), other.bits_.end(),
              out.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
    return out;
}

namespace
{

// Reduces the columns of m in place (standard persistence-style column
// reduction: lowest nonzero row is the pivot). Returns, for each column,
// whether it survived as a pivot column.
std::vector<bool> reduce_columns(Gf2Matrix& m, Gf2Matrix* track)
{
    std::vector<std::optional<std::size_t>> owner(m.rows());
    std::vector<bool> pivot(m.cols(), false);
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
        for (auto low = m.column_low(j); low; low = m.column_low(j))
        {
            if (!owner[*low])
            {
                owner[*low] = j;
                pivot[j] = true;
                break;
            }
            std::size_t const k = *owner[*low];
            m.add_column(k, j);
            if (track)
                track->add_column(k, j);
        }
    }
    return pivot;
}

} // namespace

std::size_t gf2_rank(Gf2Matrix const& m)
{
    Gf2Matrix work = m;
    std::size_t rank = 0;
    for (bool p : reduce_columns(work, nullptr))
        rank += p ? 1 : 0;
    return rank;
}

Gf2Matrix gf2_product(Gf2Matrix const& a, Gf2Matrix const& b)
{
    if (a.cols() != b.rows())
        throw Error("gf2_product: dimension mismatch " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
    Gf2Matrix out(a.rows(), b.cols());
    // Column j of the product is the XOR of the columns of a selected by column j of b.
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k : b.column_support(j))
            for (std::size_t r : a.column_support(k))
                out.flip(r, j);
    return out;
}

Gf2Matrix gf2_kernel_basis(Gf2Matrix const& m)
{
    Gf2Matrix work = m;
    Gf2Matrix track = Gf2Matrix::identity(m.cols());
    auto const pivot = reduce_columns(work, &track);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!pivot[j])
            zero_cols.push_back(j);
    Gf2Matrix out(m.cols(), zero_cols.size());
    for (std::size_t k = 0; k < zero_cols.size(); ++k)
        for (std::size_t r : track.column_support(zero_cols[k]))
            out.set(r, k);
    return out;
}

} // namespace tagbar
