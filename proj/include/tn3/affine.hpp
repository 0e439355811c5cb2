#ifndef TN3_AFFINE_HPP
#define TN3_AFFINE_HPP

#include <string>
#include <utility>

#include "tn3/intmat.hpp"
#include "tn3/rationals.hpp"

namespace tn3 {

/// Affine self-map of R^2/Z^2: v |-> linear v + translation, with the
/// translation reduced to [0,1)^2. Exact rational arithmetic throughout.
struct AffineTorusMap {
    IntMat2 linear;
    Rat tx{0}, ty{0};

    AffineTorusMap() = default;
    AffineTorusMap(IntMat2 lin, Rat tx_, Rat ty_)
        : linear(lin), tx(mod1(tx_)), ty(mod1(ty_)) {}

    static AffineTorusMap identity() { return {}; }

    /// sigma-: [x,y] |-> [x + 1/2, -y] (orientation-reversing).
    static AffineTorusMap sigma_minus() {
        return {{1, 0, 0, -1}, Rat(1, 2), Rat(0)};
    }
    /// sigma+: [x,y] |-> [x + 1/2, y] (orientation-preserving).
    static AffineTorusMap sigma_plus() {
        return {IntMat2::identity(), Rat(1, 2), Rat(0)};
    }

    std::pair<Rat, Rat> apply_point(const Rat& x, const Rat& y) const;

    AffineTorusMap inverse() const;

    bool operator==(const AffineTorusMap&) const = default;
    std::string to_string() const;
};

/// f o g, translation reduced mod Z^2.
AffineTorusMap affine_compose(const AffineTorusMap& f, const AffineTorusMap& g);

/// Conjugation h f h^{-1}.
AffineTorusMap affine_conjugate(const AffineTorusMap& h, const AffineTorusMap& f);

struct InvolutionCheck {
    bool is_involution;
    bool fixed_point_free;
};

/// is_involution: linear^2 = I and linear*t + t = 0 mod Z^2.
/// fixed_point_free: (linear - I) v = -t mod Z^2 has no solution over the
/// torus, decided exactly by rank analysis of the integer system.
InvolutionCheck involution_check(const AffineTorusMap& f);

/// Does (M) v = rhs (mod Z^2) admit a real solution v on the torus?
/// M integer, rhs rational. Exposed for reuse by the bounded searches.
bool torus_congruence_solvable(const IntMat2& M, const Rat& rhs_x, const Rat& rhs_y);

} // namespace tn3

#endif
