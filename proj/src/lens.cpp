#include "tn3/lens.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tn3 {

namespace {

long long pos_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Modular inverse of q mod p for gcd(q,p) = 1, p >= 2.
long long mod_inverse(long long q, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = pos_mod(q, p);
    while (new_r != 0) {
        long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return pos_mod(t, p);
}

} // namespace

LensParams lens_canonical(long long p, long long q) {
    p = std::llabs(p);
    if (std::gcd(p, std::llabs(q)) != 1)
        throw std::domain_error("invalid lens parameters");
    if (p == 0) return {0, 1};
    if (p == 1) return {1, 0};
    long long qm = pos_mod(q, p);
    long long qi = mod_inverse(qm, p);
    long long best = std::min({qm, pos_mod(-qm, p), qi, pos_mod(-qi, p)});
    return {p, best};
}

std::string LensParams::to_string() const {
    std::ostringstream os;
    os << "L(" << p << "," << q << ")";
    return os.str();
}

LensParams glue_lens(const IntMat2& attach) {
    if (!attach.unimodular())
        throw std::domain_error("attach matrix must be unimodular");
    // rows (q p; s t)
    return lens_canonical(attach.b, attach.a);
}

bool lens_homeo(const LensParams& x, const LensParams& y) {
    long long px = std::llabs(x.p), py = std::llabs(y.p);
    if (std::gcd(px, std::llabs(x.q)) != 1 || std::gcd(py, std::llabs(y.q)) != 1)
        throw std::domain_error("invalid lens parameters");
    if (px != py) return false;
    long long p = px;
    if (p <= 1) return true;  // all q give L(0,1) resp. L(1,0)
    long long qx = pos_mod(x.q, p), qy = pos_mod(y.q, p);
    long long qi = mod_inverse(qx, p);
    return qy == qx || qy == pos_mod(-qx, p) || qy == qi || qy == pos_mod(-qi, p);
}

KleinParams klein_canonical(long long p, long long q) {
    p = std::llabs(p);
    q = std::llabs(q);
    if (std::gcd(p, q) != 1)
        throw std::domain_error("invalid Klein space parameters");
    return {p, q};
}

std::string KleinParams::to_string() const {
    std::ostringstream os;
    os << "M(" << p << "," << q << ")";
    return os.str();
}

bool klein_homeo(const KleinParams& x, const KleinParams& y) {
    return klein_canonical(x.p, x.q) == klein_canonical(y.p, y.q);
}

} // namespace tn3
