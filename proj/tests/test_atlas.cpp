#include <doctest.h>

#include <numeric>

#include "tn3/manifold.hpp"

using namespace tn3;

TEST_CASE("lens gluing worked examples") {
    CHECK(glue_lens({0, 1, -1, 0}) == LensParams{1, 0});  // S^3
    CHECK(glue_lens({1, 0, 5, 1}) == LensParams{0, 1});   // S^2 x S^1, any s
    CHECK(glue_lens({1, 0, -3, 1}) == LensParams{0, 1});
    CHECK(glue_lens({1, 2, 0, 1}) == LensParams{2, 1});   // RP^3
    CHECK_THROWS_AS(glue_lens({2, 0, 0, 1}), std::domain_error);
}

TEST_CASE("lens homeomorphism worked examples") {
    CHECK_FALSE(lens_homeo({7, 1}, {7, 2}));
    CHECK(lens_homeo({7, 2}, {7, 3}));  // 2^{-1} = 4, -4 = 3 mod 7
    CHECK(lens_homeo({5, 1}, {5, 1}));
    CHECK_THROWS_AS(lens_homeo({4, 2}, {5, 1}), std::domain_error);
}

TEST_CASE("lens canonicalization is idempotent up to p = 50") {
    for (long long p = 0; p <= 50; ++p) {
        for (long long q = -p - 3; q <= p + 3; ++q) {
            if (std::gcd(p, std::llabs(q)) != 1) continue;
            LensParams c = lens_canonical(p, q);
            CHECK(lens_canonical(c.p, c.q) == c);
        }
    }
}

TEST_CASE("lens homeomorphism iff equal canonical forms (exhaustive)") {
    for (long long p = 2; p <= 50; ++p) {
        for (long long q1 = 0; q1 < p; ++q1) {
            if (std::gcd(p, q1) != 1) continue;
            for (long long q2 = 0; q2 < p; ++q2) {
                if (std::gcd(p, q2) != 1) continue;
                bool homeo = lens_homeo({p, q1}, {p, q2});
                bool canon = lens_canonical(p, q1) == lens_canonical(p, q2);
                CHECK(homeo == canon);
            }
        }
    }
}

TEST_CASE("lens homeomorphism is an equivalence relation") {
    // canonical equality settles reflexivity/transitivity; verify symmetry
    // and transitivity directly on the p = 25 family
    const long long p = 25;
    std::vector<long long> qs;
    for (long long q = 0; q < p; ++q)
        if (std::gcd(p, q) == 1) qs.push_back(q);
    for (long long a : qs) {
        CHECK(lens_homeo({p, a}, {p, a}));
        for (long long b : qs) {
            CHECK(lens_homeo({p, a}, {p, b}) == lens_homeo({p, b}, {p, a}));
            for (long long c : qs) {
                if (lens_homeo({p, a}, {p, b}) && lens_homeo({p, b}, {p, c}))
                    CHECK(lens_homeo({p, a}, {p, c}));
            }
        }
    }
}

TEST_CASE("klein space homeomorphism") {
    CHECK(klein_homeo({1, 1}, {-1, 1}));
    CHECK_FALSE(klein_homeo({0, 1}, {1, 0}));
    CHECK(klein_homeo({2, 3}, {2, 3}));
    CHECK(klein_homeo({2, -3}, {-2, 3}));
    CHECK_THROWS_AS(klein_homeo({2, 4}, {1, 1}), std::domain_error);
}

TEST_CASE("coincidence resolution") {
    using Tag = ManifoldId::Tag;
    CHECK(resolve_coincidences(ManifoldId::klein_space({1, 0})).tag == Tag::S2xS1);
    CHECK(resolve_coincidences(ManifoldId::klein_space({0, 1})).tag == Tag::RP3connRP3);
    CHECK(resolve_coincidences(ManifoldId::lens_space({1, 0})).tag == Tag::S3);
    CHECK(resolve_coincidences(ManifoldId::lens_space({0, 1})).tag == Tag::S2xS1);
    CHECK(resolve_coincidences(ManifoldId::lens_space({2, 1})).tag == Tag::RP3);
    ManifoldId generic = ManifoldId::lens_space({5, 1});
    CHECK(resolve_coincidences(generic) == generic);

    CHECK(resolve_coincidences(ManifoldId::mapping_torus(
              Surface::sphere(), sphere_class_token(SphereClass::Identity))).tag ==
          Tag::S2xS1);
    CHECK(resolve_coincidences(ManifoldId::mapping_torus(
              Surface::sphere(), sphere_class_token(SphereClass::Antipodal))).tag ==
          Tag::S1xtwS2);
    CHECK(resolve_coincidences(ManifoldId::mapping_torus(Surface::rp2(), "rp2:identity"))
              .tag == Tag::RP2xS1);
    CHECK(resolve_coincidences(
              ManifoldId::klein_glue(Surface::sphere(), "antipodal;antipodal"))
              .tag == Tag::RP3connRP3);
}

TEST_CASE("coincidence resolution is idempotent and injective on specials") {
    std::vector<ManifoldId> inputs;
    for (long long p = 0; p <= 12; ++p)
        for (long long q = 0; q <= p + 1; ++q) {
            if (std::gcd(p, q) != 1) continue;
            inputs.push_back(ManifoldId::lens_space({p, q}));
            inputs.push_back(ManifoldId::klein_space({p, q}));
        }
    for (const auto& id : inputs) {
        ManifoldId once = resolve_coincidences(id);
        CHECK(resolve_coincidences(once) == once);
    }
    // distinct special tags stay distinct: no two non-homeomorphic inputs
    // share a special tag
    for (const auto& a : inputs) {
        for (const auto& b : inputs) {
            ManifoldId ra = resolve_coincidences(a), rb = resolve_coincidences(b);
            if (ra.tag != rb.tag) continue;
            if (ra.tag == ManifoldId::Tag::Lens || ra.tag == ManifoldId::Tag::Klein)
                continue;
            // both landed on the same special tag: verify the sources were
            // homeomorphic whenever they belong to the same family
            if (a.tag == ManifoldId::Tag::Lens && b.tag == ManifoldId::Tag::Lens)
                CHECK(lens_homeo(a.lens, b.lens));
            if (a.tag == ManifoldId::Tag::Klein && b.tag == ManifoldId::Tag::Klein)
                CHECK(klein_homeo(a.klein, b.klein));
        }
    }
}
