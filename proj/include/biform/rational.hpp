#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace biform {

// Exact arithmetic throughout: the identities this library checks are
// equalities, so every scalar is a rational in lowest terms with positive
// denominator (boost::multiprecision maintains both invariants).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Parses "p", "-p" or "p/q" with q > 0 after normalization. Rejects
// anything else (whitespace, floats, empty strings).
inline Rat parse_rational(const std::string& s)
{
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    };
    if (s.empty()) fail();
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (body[0] == '-' || body[0] == '+') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) fail();
    Int d(den);
    if (d == 0) fail();
    Rat r = Rat(Int(num)) / Rat(d);
    return neg ? Rat(-r) : r;
}

// Serializes as "p" or "p/q"; inverse of parse_rational.
inline std::string rational_to_string(const Rat& x)
{
    std::string n = numerator(x).str();
    if (denominator(x) == 1) return n;
    return n + "/" + denominator(x).str();
}

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

} // namespace biform
