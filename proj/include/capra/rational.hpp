#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace capra {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Lossless conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite value");
    return Rat(v);
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q" or a plain integer string.
Rat rat_parse(const std::string& s);

/// Canonical form: "p" when q == 1, else "p/q" with q > 0 and gcd(p, q) == 1.
std::string rat_format(const Rat& r);

inline int rat_sign(const Rat& r) { return r.sign(); }

}  // namespace capra
