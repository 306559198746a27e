#include "tagbar/ext_real.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace tagbar
{

std::string format_real(double x)
{
    if (x == 0.0)
        return "0"; // also folds -0
    char buf[64];
    auto const res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc())
        throw Error("cannot format number");
    return std::string(buf, res.ptr);
}

std::string format_real(ExtReal x)
{
    return x.is_infinite() ? std::string("inf") : format_real(x.value());
}

ExtReal parse_ext_real(std::string const& token)
{
    if (token == "inf" || token == "+inf")
        return ExtReal::infinity();
    double v = 0.0;
    char const* first = token.data();
    char const* last = token.data() + token.size();
    if (first != last && *first == '+')
        ++first;
    auto const res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || token.empty())
        throw ParseError("not a number: '" + token + "'");
    if (!std::isfinite(v))
        throw ParseError("number out of range: '" + token + "'");
    if (v < 0.0)
        throw ParseError("negative value not allowed: '" + token + "'");
    return ExtReal(v == 0.0 ? 0.0 : v);
}

std::ostream& operator<<(std::ostream& os, ExtReal const& x)
{
    return os << format_real(x);
}

} // namespace tagbar
