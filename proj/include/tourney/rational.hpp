#ifndef TOURNEY_RATIONAL_HPP
#define TOURNEY_RATIONAL_HPP

#include "tourney/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace tourney
{

// Arbitrary-precision fraction, always normalized (lowest terms, positive denominator).
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// `p/q`, or `p` when the denominator is one.
inline std::string to_string(const Rational& r)
{
    const Integer den = denominator(r);
    if (den == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + den.str();
}

/// Fixed-point rendering with `places` digits, rounding half to even.
inline std::string to_decimal(const Rational& r, unsigned places = 4)
{
    Integer scale = 1;
    for (unsigned k = 0; k < places; ++k)
        scale *= 10;

    const bool negative = r < 0;
    const Rational scaled = abs(r) * scale;
    const Integer num = numerator(scaled);
    const Integer den = denominator(scaled);
    Integer q = num / den;
    const Integer twice_rem = 2 * (num % den);
    if (twice_rem > den || (twice_rem == den && (q % 2) == 1))
        ++q;

    std::string digits = q.str();
    if (digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (negative && q != 0)
        out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0)
    {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses `p/q`, an integer, or a decimal with at most `max_fraction_digits` fractional
/// digits. Decimals convert exactly. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(std::string_view text, unsigned max_fraction_digits = 6)
{
    auto is_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast< unsigned char >(c)))
                return false;
        return true;
    };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos)
    {
        const auto p = text.substr(0, slash);
        const auto q = text.substr(slash + 1);
        if (!is_digits(p) || !is_digits(q))
            return std::nullopt;
        const Integer den{std::string(q)};
        if (den == 0)
            return std::nullopt;
        value = Rational(Integer(std::string(p)), den);
    }
    else if (const auto dot = text.find('.'); dot != std::string_view::npos)
    {
        auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.size() > max_fraction_digits || (whole.empty() && frac.empty()))
            return std::nullopt;
        if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac)))
            return std::nullopt;
        Integer scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k)
            scale *= 10;
        const Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        const Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
        value = Rational(w * scale + f, scale);
    }
    else
    {
        if (!is_digits(text))
            return std::nullopt;
        value = Rational(Integer(std::string(text)));
    }
    return negative ? Rational(-value) : value;
}

/// Throwing variant of `parse_rational` for literals that are known to be well formed.
inline Rational rational(std::string_view text)
{
    if (auto r = parse_rational(text, 64))
        return *r;
    throw Error(ErrorCode::ParseError, "malformed rational literal '" + std::string(text) + "'");
}

} // namespace tourney

#endif // TOURNEY_RATIONAL_HPP
