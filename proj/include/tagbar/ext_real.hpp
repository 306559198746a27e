#ifndef TAGBAR_EXT_REAL_HPP
#define TAGBAR_EXT_REAL_HPP

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tagbar
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// Extended non-negative real number: a finite double or +infinity.
///
/// Infinity is carried as an explicit flag; the finite payload is never
/// an IEEE infinity or NaN.
class ExtReal
{
public:
    constexpr ExtReal() = default;
    constexpr ExtReal(double v) : value_(v) {}

    static constexpr ExtReal infinity()
    {
        ExtReal r;
        r.infinite_ = true;
        return r;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    /// Finite payload. Throws for infinity.
    double value() const
    {
        if (infinite_)
            throw Error("ExtReal::value() called on infinity");
        return value_;
    }

    constexpr bool operator==(ExtReal const& o) const
    {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }

    constexpr std::partial_ordering operator<=>(ExtReal const& o) const
    {
        if (infinite_ || o.infinite_)
            return static_cast<int>(infinite_) <=> static_cast<int>(o.infinite_);
        return value_ <=> o.value_;
    }

    friend constexpr ExtReal operator+(ExtReal a, ExtReal b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return ExtReal(a.value_ + b.value_);
    }

    /// Half of the value; infinity stays infinite.
    constexpr ExtReal half() const
    {
        return infinite_ ? infinity() : ExtReal(value_ / 2.0);
    }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

/// |a - b| with the conventions |inf - inf| = 0 and |finite - inf| = inf.
constexpr ExtReal abs_diff(ExtReal a, ExtReal b)
{
    if (a.is_infinite() && b.is_infinite())
        return ExtReal(0.0);
    if (a.is_infinite() || b.is_infinite())
        return ExtReal::infinity();
    double const x = a.value();
    double const y = b.value();
    return ExtReal(x > y ? x - y : y - x);
}

constexpr ExtReal max(ExtReal a, ExtReal b) { return (a < b) ? b : a; }
constexpr ExtReal min(ExtReal a, ExtReal b) { return (b < a) ? b : a; }

/// Shortest decimal that parses back to the same double, or "inf".
std::string format_real(ExtReal x);
std::string format_real(double x);

/// Parses a decimal number or the token "inf". Rejects negatives and NaN.
ExtReal parse_ext_real(std::string const& token);

std::ostream& operator<<(std::ostream& os, ExtReal const& x);

} // namespace tagbar

#endif // TAGBAR_EXT_REAL_HPP
