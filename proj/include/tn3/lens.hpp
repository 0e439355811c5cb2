#ifndef TN3_LENS_HPP
#define TN3_LENS_HPP

#include <string>

#include "tn3/intmat.hpp"

namespace tn3 {

/// Lens space parameters, canonical form: p >= 0; for p >= 2 the
/// representative q is the smallest element of {+-q^{+-1} mod p}; for
/// p in {0,1} the canonical q is 1 resp. 0.
struct LensParams {
    long long p = 1, q = 0;

    bool operator==(const LensParams&) const = default;
    auto operator<=>(const LensParams&) const = default;
    std::string to_string() const;
};

/// Throws std::domain_error unless gcd(p,q) = 1 (understanding gcd(0,q) = |q|).
LensParams lens_canonical(long long p, long long q);

/// Gluing matrix of two solid tori read as rows (q p; s t):
/// meridian1 |-> q meridian2 + p longitude2. Returns L(|p|, q mod |p|)
/// canonicalized. Throws on non-unimodular input.
LensParams glue_lens(const IntMat2& attach);

/// L(p,q) ~ L(p',q') iff |p| = |p'| and q' = +-q^{+-1} mod p.
bool lens_homeo(const LensParams& x, const LensParams& y);

/// Klein space parameters, canonical form p >= 0, q >= 0, gcd = 1.
struct KleinParams {
    long long p = 0, q = 1;

    bool operator==(const KleinParams&) const = default;
    auto operator<=>(const KleinParams&) const = default;
    std::string to_string() const;
};

KleinParams klein_canonical(long long p, long long q);

/// M(p,q) ~ M(p',q') iff p = +-p' and q = +-q'.
bool klein_homeo(const KleinParams& x, const KleinParams& y);

} // namespace tn3

#endif
