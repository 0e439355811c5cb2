#include <doctest.h>

#include <random>

#include "tn3/conjugacy.hpp"
#include "tn3/intmat.hpp"

using namespace tn3;

namespace {
const IntMat2 R{1, 1, 0, 1};
const IntMat2 L{1, 0, 1, 1};
}

TEST_CASE("matrix arithmetic basics") {
    CHECK(R * L == IntMat2{2, 1, 1, 1});
    CHECK(R.inverse() == IntMat2{1, -1, 0, 1});
    CHECK(IntMat2{0, 1, 1, 0}.det() == -1);
    CHECK(IntMat2{2, 1, 1, 1}.trace() == 3);
    CHECK(R * R.inverse() == IntMat2::identity());
    CHECK_THROWS_AS(IntMat2(2, 0, 0, 1).inverse(), std::domain_error);
}

TEST_CASE("determinant is multiplicative on unimodular samples") {
    auto mats = unimodular_range(2, ConjGroup::GL);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, mats.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const IntMat2& x = mats[pick(rng)];
        const IntMat2& y = mats[pick(rng)];
        CHECK((x * y).det() == x.det() * y.det());
    }
}

TEST_CASE("nt_type on the named classes") {
    NtType dehn = nt_type({1, 1, 0, 1});
    CHECK(dehn.kind == NtType::Kind::Reducible);
    CHECK(dehn.twist == 1);
    CHECK(dehn.sign == +1);

    NtType rot = nt_type({0, -1, 1, 0});
    CHECK(rot.kind == NtType::Kind::Periodic);
    CHECK(rot.order == 4);

    NtType anosov = nt_type({2, 1, 1, 1});
    CHECK(anosov.kind == NtType::Kind::Anosov);
    CHECK(anosov.trace == 3);
    CHECK(anosov.lambda == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(nt_type({0, 1, 1, 0}), std::domain_error);
}

TEST_CASE("periodic orders are exact powers") {
    CHECK(nt_type(IntMat2::identity()).order == 1);
    CHECK(nt_type(-IntMat2::identity()).order == 2);
    CHECK(nt_type({0, -1, 1, -1}).order == 3);
    CHECK(nt_type({0, -1, 1, 1}).order == 6);
    for (const IntMat2& m : unimodular_range(3, ConjGroup::SL)) {
        NtType t = nt_type(m);
        if (t.kind != NtType::Kind::Periodic) continue;
        IntMat2 p = m;
        for (int k = 1; k < t.order; ++k) {
            CHECK(p != IntMat2::identity());
            p = p * m;
        }
        CHECK(p == IntMat2::identity());
        CHECK((t.order == 1 || t.order == 2 || t.order == 3 || t.order == 4 ||
               t.order == 6));
    }
}

TEST_CASE("nt_type invariant under conjugation and inversion") {
    auto mats = unimodular_range(3, ConjGroup::SL);
    auto hs = unimodular_range(2, ConjGroup::SL);
    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> pick_m(0, mats.size() - 1);
    std::uniform_int_distribution<size_t> pick_h(0, hs.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        const IntMat2& m = mats[pick_m(rng)];
        const IntMat2& h = hs[pick_h(rng)];
        NtType a = nt_type(m);
        NtType b = nt_type(h * m * h.inverse());
        CHECK(a.kind == b.kind);
        CHECK(std::llabs(a.trace) == std::llabs(b.trace));
        NtType c = nt_type(m.inverse());
        CHECK(a.kind == c.kind);
        CHECK(std::llabs(a.trace) == std::llabs(c.trace));
    }
}

TEST_CASE("anosov eigendata is exact in the quadratic field") {
    AnosovEigen e = anosov_eigen({2, 1, 1, 1});
    CHECK(e.disc == 5);
    // lambda = (3+sqrt 5)/2
    CHECK(e.lambda == quadext(Rat(3, 2), Rat(1, 2), 5));
    // v1 proportional to (1, (sqrt5 - 1)/2)
    CHECK(e.v1.first == quadext(Rat(1), Rat(0), 5));
    CHECK(e.v1.second == quadext(Rat(-1, 2), Rat(1, 2), 5));

    AnosovEigen e4 = anosov_eigen({3, 2, 1, 1});  // trace 4
    CHECK(e4.lambda == quadext(Rat(2), Rat(1, 2), 12));

    CHECK_THROWS_AS(anosov_eigen({1, 1, 0, 1}), std::domain_error);
}

TEST_CASE("eigen relations m v = lambda v hold exactly") {
    for (const IntMat2& m : unimodular_range(3, ConjGroup::SL)) {
        if (m.trace() <= 2) continue;  // positive-trace hyperbolic sample
        AnosovEigen e = anosov_eigen(m);
        auto scale = [&](const QuadExt& s, const std::pair<QuadExt, QuadExt>& v) {
            return std::pair{s * v.first, s * v.second};
        };
        auto apply_m = [&](const std::pair<QuadExt, QuadExt>& v) {
            auto from_int = [&](long long k) { return quadext(Rat(k), Rat(0), e.disc); };
            return std::pair{from_int(m.a) * v.first + from_int(m.b) * v.second,
                             from_int(m.c) * v.first + from_int(m.d) * v.second};
        };
        CHECK(apply_m(e.v1) == scale(e.lambda, e.v1));
        CHECK(apply_m(e.v2) == scale(e.lambda_inv, e.v2));
        // product of the eigenvalues is det = 1 exactly
        CHECK(e.lambda * e.lambda_inv == quadext(Rat(1), Rat(0), e.disc));
    }
}

TEST_CASE("rl canonical forms of the worked examples") {
    RlWord w = rl_canonical_form({2, 1, 1, 1});
    CHECK(w.runs == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK_FALSE(w.negated);

    // LR is a cyclic rotation of RL
    CHECK(rl_canonical_form({1, 1, 1, 2}) == w);

    RlWord w2 = rl_canonical_form({3, 2, 1, 1});
    CHECK(w2.runs == std::vector<std::pair<int, int>>{{2, 1}});

    CHECK_THROWS_AS(rl_canonical_form({1, 1, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(rl_canonical_form({0, -1, 1, 0}), std::domain_error);
}

TEST_CASE("rl word reproduces a conjugate of the source matrix") {
    for (const IntMat2& m : unimodular_range(3, ConjGroup::SL)) {
        if (std::llabs(m.trace()) <= 2) continue;
        RlWord w = rl_canonical_form(m);
        IntMat2 prod = IntMat2::identity();
        for (auto [r, l] : w.runs) {
            for (int i = 0; i < r; ++i) prod = prod * R;
            for (int i = 0; i < l; ++i) prod = prod * L;
        }
        if (w.negated) prod = -prod;
        CHECK(prod.trace() == m.trace());
        CHECK(brute_conjugacy_oracle(m, prod, 8, false, ConjGroup::SL));
    }
}

TEST_CASE("rl canonical form is a conjugacy invariant") {
    auto hs = unimodular_range(3, ConjGroup::SL);
    std::mt19937 rng(13);
    std::uniform_int_distribution<size_t> pick(0, hs.size() - 1);
    for (const IntMat2& m : unimodular_range(3, ConjGroup::SL)) {
        if (std::llabs(m.trace()) <= 2) continue;
        RlWord w = rl_canonical_form(m);
        for (int i = 0; i < 12; ++i) {
            const IntMat2& h = hs[pick(rng)];
            CHECK(rl_canonical_form(h * m * h.inverse()) == w);
        }
    }
}
