#ifndef TN3_INTMAT_HPP
#define TN3_INTMAT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tn3/rationals.hpp"

namespace tn3 {

/// 2x2 integer matrix, row-major (a b; c d). Used for torus mapping
/// classes and solid-torus gluing data, where det must be +-1.
struct IntMat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    constexpr IntMat2() = default;
    constexpr IntMat2(long long a_, long long b_, long long c_, long long d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr IntMat2 identity() { return {1, 0, 0, 1}; }

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    bool unimodular() const { long long D = det(); return D == 1 || D == -1; }

    IntMat2 operator*(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMat2 operator-() const { return {-a, -b, -c, -d}; }

    /// Inverse over the integers; requires det = +-1.
    IntMat2 inverse() const;

    IntMat2 transpose() const { return {a, c, b, d}; }

    bool operator==(const IntMat2&) const = default;
    auto operator<=>(const IntMat2&) const = default;

    long long max_abs() const;
    std::string to_string() const;
};

/// Apply m to a rational column vector.
std::pair<Rat, Rat> apply(const IntMat2& m, const Rat& x, const Rat& y);

/// Smallest k in [1,12] with m^k = I, or nullopt if none (infinite order).
std::optional<int> finite_order(const IntMat2& m);

/// Nielsen-Thurston type of an orientation-preserving torus mapping class.
struct NtType {
    enum class Kind { Periodic, Reducible, Anosov };
    Kind kind;
    int order = 0;        // Periodic: order in SL(2,Z)
    long long twist = 0;  // Reducible: m conjugate to sign*(1 twist; 0 1)
    int sign = +1;        // Reducible: sign of the trace (+-2)
    double lambda = 0.0;  // Anosov: expanding eigenvalue of |trace| rep
    long long trace = 0;

    bool operator==(const NtType&) const = default;
};

/// Requires det(m) = +1; throws std::domain_error otherwise.
NtType nt_type(const IntMat2& m);

/// Orientation-reversing classes (det = -1) are handled separately:
/// finite order iff trace = 0 (an involution), in which case the
/// GL(2,Z)-conjugacy class is pinned by the content of m + I (1 or 2).
struct ReversingClassInfo {
    bool finite_order;       // trace == 0
    long long trace;
    long long content_plus;  // gcd of entries of m + I (trace-0 case)
};
ReversingClassInfo reversing_class_info(const IntMat2& m);

/// Element of Q(sqrt(disc)): value = p + q*sqrt(disc), disc > 0 non-square.
struct QuadExt {
    Rat p, q;
    long long disc = 0;

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    bool operator==(const QuadExt&) const = default;
    double to_double() const;
};

QuadExt quadext(Rat p, Rat q, long long disc);

/// Exact eigendata of an Anosov matrix, living in Q(sqrt(trace^2-4)).
/// lambda * lambda_inv = 1 holds exactly in the field.
struct AnosovEigen {
    QuadExt lambda, lambda_inv;
    std::pair<QuadExt, QuadExt> v1;  // m v1 = lambda v1
    std::pair<QuadExt, QuadExt> v2;  // m v2 = lambda_inv v2
    long long disc;
};

/// Requires nt_type(m) Anosov; throws std::domain_error otherwise.
AnosovEigen anosov_eigen(const IntMat2& m);

/// Cyclic word R^{r1} L^{l1} ... R^{rk} L^{lk} for a hyperbolic class.
/// `negated` records that the word reproduces -m rather than m.
struct RlWord {
    std::vector<std::pair<int, int>> runs;  // (r_i, l_i), all positive
    bool negated = false;

    bool operator==(const RlWord&) const = default;
    std::string to_string() const;
};

/// Canonical RL word of a hyperbolic matrix (det +1, |trace| > 2):
/// lexicographically minimal cyclic rotation of the run sequence of the
/// positive-trace representative. Conjugate inputs yield equal words.
/// Throws std::domain_error for elliptic/parabolic input.
RlWord rl_canonical_form(const IntMat2& m);

/// Word moves realizing GL-conjugation and inversion on RL words.
RlWord rl_swap_letters(const RlWord& w);      // conjugation by (0 1; 1 0)
RlWord rl_reverse_swap(const RlWord& w);      // inversion (transpose class)

struct IntMat2Hash {
    size_t operator()(const IntMat2& m) const {
        size_t h = std::hash<long long>{}(m.a);
        auto mix = [&h](long long v) {
            h ^= std::hash<long long>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(m.b); mix(m.c); mix(m.d);
        return h;
    }
};

} // namespace tn3

#endif
