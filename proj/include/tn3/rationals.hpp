#ifndef TN3_RATIONALS_HPP
#define TN3_RATIONALS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tn3 {

using Rat = boost::rational<long long>;

/// Reduce r into the half-open interval [0,1).
inline Rat mod1(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    Rat out = r - Rat(q);
    if (out < Rat(0)) out += Rat(1);
    return out;
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

/// Parse "p/q" or "p" into a rational. Throws std::invalid_argument on
/// malformed input (including q = 0).
Rat parse_rat(const std::string& text);

std::string rat_to_string(const Rat& r);

} // namespace tn3

#endif
