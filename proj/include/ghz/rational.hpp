#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace ghz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

// Accurate double rendering of a big rational.  Converting numerator and
// denominator to double separately overflows for large operands, so take the
// top bits of each and rescale.
inline double to_double(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num == 0) return 0.0;
    bool neg = num < 0;
    if (neg) num = -num;
    auto bits = [](const BigInt& v) { return static_cast<long>(boost::multiprecision::msb(v)) + 1; };
    long shift_n = bits(num) - 62;
    long shift_d = bits(den) - 62;
    BigInt tn = shift_n > 0 ? BigInt(num >> shift_n) : num;
    BigInt td = shift_d > 0 ? BigInt(den >> shift_d) : den;
    double q = static_cast<double>(tn.convert_to<std::int64_t>()) /
               static_cast<double>(td.convert_to<std::int64_t>());
    double v = std::ldexp(q, static_cast<int>((shift_n > 0 ? shift_n : 0) - (shift_d > 0 ? shift_d : 0)));
    return neg ? -v : v;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ghz
