#include <doctest.h>

#include <numeric>
#include <random>

#include "tn3/conjugacy.hpp"
#include "tn3/involutions.hpp"

using namespace tn3;

namespace {

AffineTorusMap aff(IntMat2 lin, Rat tx, Rat ty) { return {lin, tx, ty}; }

// Brute fixed-point search on a rational grid fine enough to contain every
// solution of (A - I) v = -b + k: solution denominators divide
// den(b) * |det(A-I)| in the full-rank case and den(b) * max-entry in the
// rank-one case.
bool grid_has_fixed_point(const AffineTorusMap& f) {
    IntMat2 M{f.linear.a - 1, f.linear.b, f.linear.c, f.linear.d - 1};
    long long det = std::llabs(M.det());
    long long den = std::lcm(f.tx.denominator(), f.ty.denominator());
    long long d1 = 2 * det + 2;
    long long d2 = den * std::max<long long>(1, det);
    long long d3 = den * std::max<long long>(1, M.max_abs());
    long long D = std::lcm(d1, std::lcm(d2, d3));
    for (long long i = 0; i < D; ++i) {
        for (long long j = 0; j < D; ++j) {
            Rat x(i, D), y(j, D);
            auto [fx, fy] = f.apply_point(x, y);
            if (fx == x && fy == y) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("affine composition worked examples") {
    AffineTorusMap sm = AffineTorusMap::sigma_minus();
    CHECK(affine_compose(sm, sm) == AffineTorusMap::identity());

    AffineTorusMap sp = AffineTorusMap::sigma_plus();
    CHECK(affine_compose(sm, sp) == aff({1, 0, 0, -1}, Rat(0), Rat(0)));

    AffineTorusMap quarter = aff(IntMat2::identity(), Rat(1, 4), Rat(0));
    CHECK(affine_compose(quarter, quarter) ==
          aff(IntMat2::identity(), Rat(1, 2), Rat(0)));
}

TEST_CASE("involution check worked examples") {
    auto r1 = involution_check(AffineTorusMap::sigma_minus());
    CHECK(r1.is_involution);
    CHECK(r1.fixed_point_free);

    auto r2 = involution_check(aff(-IntMat2::identity(), Rat(0), Rat(0)));
    CHECK(r2.is_involution);
    CHECK_FALSE(r2.fixed_point_free);

    auto r3 = involution_check(aff(IntMat2::identity(), Rat(1, 2), Rat(1, 2)));
    CHECK(r3.is_involution);
    CHECK(r3.fixed_point_free);

    auto r4 = involution_check(aff(IntMat2::identity(), Rat(1, 3), Rat(0)));
    CHECK_FALSE(r4.is_involution);
}

TEST_CASE("involutions square to the identity over the sampled grid") {
    const Rat quarters[4] = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    int involutions = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    for (const Rat& tx : quarters)
                        for (const Rat& ty : quarters) {
                            AffineTorusMap f = aff({a, b, c, d}, tx, ty);
                            if (!involution_check(f).is_involution) continue;
                            ++involutions;
                            CHECK(affine_compose(f, f) == AffineTorusMap::identity());
                        }
    CHECK(involutions > 0);
}

TEST_CASE("fixed-point-freeness agrees with the brute grid search") {
    const Rat quarters[4] = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    for (const Rat& tx : quarters)
                        for (const Rat& ty : quarters) {
                            AffineTorusMap f = aff({a, b, c, d}, tx, ty);
                            auto chk = involution_check(f);
                            if (!chk.is_involution) continue;
                            CAPTURE(f.to_string());
                            CHECK(chk.fixed_point_free == !grid_has_fixed_point(f));
                        }
}

TEST_CASE("normalize worked examples") {
    auto n1 = normalize_involution(InvolutionRep::antipodal());
    CHECK(n1.cls == InvolutionClass::Antipodal_S2);
    CHECK(n1.conjugator == AffineTorusMap::identity());

    auto n2 = normalize_involution(
        InvolutionRep::torus(AffineTorusMap::sigma_minus()));
    CHECK(n2.cls == InvolutionClass::SigmaMinus_T2);
    CHECK(affine_conjugate(n2.conjugator, AffineTorusMap::sigma_minus()) ==
          AffineTorusMap::sigma_minus());

    // h sigma+ h^{-1} with h = (1,0;1,1)
    AffineTorusMap h{{1, 0, 1, 1}, Rat(0), Rat(0)};
    AffineTorusMap conj = affine_conjugate(h, AffineTorusMap::sigma_plus());
    auto n3 = normalize_involution(InvolutionRep::torus(conj));
    CHECK(n3.cls == InvolutionClass::SigmaPlus_T2);
    CHECK(n3.conjugator.linear == IntMat2{1, 0, 1, 1});

    CHECK_THROWS_AS(
        normalize_involution(InvolutionRep::torus(aff(-IntMat2::identity(), Rat(0), Rat(0)))),
        std::domain_error);
}

TEST_CASE("normalize round-trips every sampled involution") {
    const Rat quarters[4] = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    int checked = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    for (const Rat& tx : quarters)
                        for (const Rat& ty : quarters) {
                            AffineTorusMap f = aff({a, b, c, d}, tx, ty);
                            auto chk = involution_check(f);
                            if (!chk.is_involution || !chk.fixed_point_free) continue;
                            auto norm = normalize_involution(InvolutionRep::torus(f));
                            AffineTorusMap model =
                                norm.cls == InvolutionClass::SigmaPlus_T2
                                    ? AffineTorusMap::sigma_plus()
                                    : AffineTorusMap::sigma_minus();
                            CAPTURE(f.to_string());
                            CHECK(affine_conjugate(norm.conjugator, model) == f);
                            CHECK((f.linear.det() == 1) ==
                                  (norm.cls == InvolutionClass::SigmaPlus_T2));
                            ++checked;
                        }
    CHECK(checked > 10);
}

TEST_CASE("klein pair matrix worked examples") {
    CHECK(klein_pair_matrix(IntMat2::identity()) == IntMat2::identity());
    CHECK(klein_pair_matrix({1, 0, 1, 1}) == IntMat2{1, 0, -2, 1});
    IntMat2 a = klein_pair_matrix({1, 1, 1, 2});
    CHECK(a == IntMat2{3, -2, -4, 3});
    CHECK(a.det() == 1);
    CHECK_THROWS_AS(klein_pair_matrix({1, 0, 0, -1}), std::domain_error);
}

TEST_CASE("klein pair matrix determinant and trace identities") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-5, 5);
    int found = 0;
    while (found < 200) {
        IntMat2 h{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (h.det() != 1) continue;
        ++found;
        IntMat2 a = klein_pair_matrix(h);
        CHECK(a.det() == 1);
        CHECK(a.trace() == 2 * (h.a * h.d + h.b * h.c));
    }
}

TEST_CASE("klein pair matrix equals the direct affine composition") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> entry(-4, 4);
    AffineTorusMap sm = AffineTorusMap::sigma_minus();
    int found = 0;
    while (found < 100) {
        IntMat2 h{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (h.det() != 1) continue;
        ++found;
        AffineTorusMap hm{h, Rat(0), Rat(0)};
        AffineTorusMap composed = affine_compose(sm, affine_conjugate(hm, sm));
        CHECK(composed.linear == klein_pair_matrix(h));
        // translation part: (1/2 (h11 + 1), -1/2 h21) mod 1
        CHECK(composed.tx == mod1(Rat(h.a + 1, 2)));
        CHECK(composed.ty == mod1(Rat(-h.c, 2)));
    }
}
