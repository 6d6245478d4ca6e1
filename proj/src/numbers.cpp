#include "drg/numbers.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace drg {

std::string rat_str(const BigRational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double rat_double(const BigRational& r) {
    return r.convert_to<double>();
}

std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

// Signed base-10 integer. cpp_int's string constructor would read a leading
// zero as an octal prefix, so digits are validated and trimmed here first.
BigInt decimal_int(std::string s) {
    bool neg = !s.empty() && s[0] == '-';
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.erase(0, 1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a base-10 integer");
    s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
    BigInt v(s);
    return neg ? BigInt(-v) : v;
}

} // namespace

BigRational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt p = decimal_int(s.substr(0, slash));
            BigInt q = decimal_int(s.substr(slash + 1));
            if (q == 0) throw ParseError("zero denominator in '" + text + "'");
            return BigRational(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return BigRational(decimal_int(s));
        // decimal: sign + integer part + fractional digits
        bool neg = s[0] == '-';
        if (s[0] == '-' || s[0] == '+') {
            s.erase(0, 1);
            --dot;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) throw ParseError("malformed decimal '" + text + "'");
        BigInt p = decimal_int(digits);
        if (neg) p = -p;
        BigInt q = 1;
        for (size_t i = 0; i < frac_len; ++i) q *= 10;
        return BigRational(p, q);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + text + "'");
    }
}

double RatInterval::mid() const {
    return rat_double((lo + hi) / 2);
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator+(const BigRational& a, const RatInterval& b) {
    return RatInterval::point(a) + b;
}

RatInterval operator-(const BigRational& a, const RatInterval& b) {
    return RatInterval::point(a) - b;
}

RatInterval operator*(const BigRational& a, const RatInterval& b) {
    return RatInterval::point(a) * b;
}

RatInterval operator+(const RatInterval& a, const BigRational& b) {
    return a + RatInterval::point(b);
}

RatInterval operator-(const RatInterval& a, const BigRational& b) {
    return a - RatInterval::point(b);
}

RatInterval operator*(const RatInterval& a, const BigRational& b) {
    return a * RatInterval::point(b);
}

RatInterval operator/(const RatInterval& a, const BigRational& b) {
    if (b == 0) throw NumericalError("interval division by zero");
    RatInterval r{a.lo / b, a.hi / b};
    if (b < 0) std::swap(r.lo, r.hi);
    return r;
}

Verdict le_interval(const BigRational& x, const RatInterval& b) {
    if (x <= b.lo) return Verdict::holds;
    if (x > b.hi) return Verdict::fails;
    return Verdict::unresolved;
}

Verdict ge_interval(const BigRational& x, const RatInterval& b) {
    if (x >= b.hi) return Verdict::holds;
    if (x < b.lo) return Verdict::fails;
    return Verdict::unresolved;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw NumericalError("isqrt of negative value");
    return sqrt(n); // floor square root for cpp_int
}

RatInterval sqrt_enclosure(const BigRational& x, unsigned digits) {
    if (x < 0) throw NumericalError("sqrt_enclosure of negative value");
    BigInt p = numerator(x), q = denominator(x);
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // sqrt(p/q) = sqrt(p*q)/q; bracket the integer sqrt of p*q*scale^2.
    BigInt root = isqrt(p * q * scale * scale);
    BigRational lo(root, q * scale);
    BigRational hi(root + 1, q * scale);
    return {lo, hi};
}

} // namespace drg
