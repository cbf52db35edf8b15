#ifndef BKP_RATIONAL_HPP
#define BKP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bkp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with arbitrary precision.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 raised to negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

}  // namespace bkp

#endif
