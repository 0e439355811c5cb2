#ifndef TN3_CONJUGACY_HPP
#define TN3_CONJUGACY_HPP

#include <string>
#include <vector>

#include "tn3/intmat.hpp"

namespace tn3 {

enum class ConjGroup { SL, GL };

/// Decides whether y = h x^{+-1} h^{-1} for some h in the chosen group
/// (the inverse exponent only when allow_inverse). Exact for all
/// unimodular inputs: elliptic and parabolic classes go through finite
/// invariants, hyperbolic classes through canonical RL words, and
/// orientation-reversing classes through the squares reduction.
bool conj_equivalent(const IntMat2& x, const IntMat2& y, ConjGroup group,
                     bool allow_inverse);

/// Exhaustive search over conjugators h with entries in [-bound, bound]
/// and det restricted per group. Sound, complete only up to the bound;
/// validation oracle, not a production path.
bool brute_conjugacy_oracle(const IntMat2& x, const IntMat2& y, int bound,
                            bool allow_inverse, ConjGroup group);

/// All h with entries in [-bound,bound] and det +1 (and det -1 too when
/// group is GL). Shared by the oracle and the exhaustive test suites.
std::vector<IntMat2> unimodular_range(int bound, ConjGroup group);

/// Class token: equal tokens iff conj_equivalent under (group, inverse).
/// Stable across runs; usable as a canonical invariant in reports.
std::string conjugacy_token(const IntMat2& m, ConjGroup group, bool allow_inverse);

} // namespace tn3

#endif
