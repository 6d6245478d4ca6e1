#pragma once

// Exact arithmetic shared across the library: arbitrary-precision integers and
// rationals, decimal rendering, and rational enclosures for square roots.
// Enclosures let bound checks that mix rational data with quadratic surds
// (the degree-based regularity constant) stay exact instead of falling back
// to floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Renders "p/q" with the denominator always present ("9/1", "-3/5").
std::string rat_str(const BigRational& r);

double rat_double(const BigRational& r);

// 12 significant digits, shortest form ("%.12g").
std::string decimal12(double x);

// Parses "p", "p/q", or a plain decimal like "1.25" into an exact rational.
BigRational parse_rational(const std::string& text);

// Closed interval [lo, hi] with rational endpoints. Degenerate intervals
// (lo == hi) carry exact values; non-degenerate ones carry surd enclosures.
// Comparisons are three-valued: a check against an interval either certainly
// holds, certainly fails, or cannot be resolved at the enclosure's width.
struct RatInterval {
    BigRational lo;
    BigRational hi;

    static RatInterval point(const BigRational& v) { return {v, v}; }
    bool is_point() const { return lo == hi; }
    double mid() const;
};

enum class Verdict { holds, fails, unresolved };

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator+(const BigRational& a, const RatInterval& b);
RatInterval operator-(const BigRational& a, const RatInterval& b);
RatInterval operator*(const BigRational& a, const RatInterval& b);
RatInterval operator+(const RatInterval& a, const BigRational& b);
RatInterval operator-(const RatInterval& a, const BigRational& b);
RatInterval operator*(const RatInterval& a, const BigRational& b);
RatInterval operator/(const RatInterval& a, const BigRational& b);

// x <= [lo, hi]: holds when x <= lo, fails when x > hi.
Verdict le_interval(const BigRational& x, const RatInterval& b);
// x >= [lo, hi]: holds when x >= hi, fails when x < lo.
Verdict ge_interval(const BigRational& x, const RatInterval& b);

// Encloses sqrt(x) within 10^-digits. Requires x >= 0.
RatInterval sqrt_enclosure(const BigRational& x, unsigned digits = 50);

// Floor of sqrt(n). Requires n >= 0.
BigInt isqrt(const BigInt& n);

} // namespace drg
