#include <doctest.h>

#include <cmath>

#include "tn3/geodesic.hpp"
#include "tn3/shape.hpp"

using namespace tn3;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Counterexample chart: flat metric plus a spatially varying epsilon(x) dx^2
// term, so the foils no longer have constant principal curvatures.
class PerturbedChart final : public MetricChart {
public:
    std::string name() const override { return "perturbed"; }
    Mat2d g_ab(double t, double x, double) const override {
        double eps = 0.1 * std::sin(2 * kPi * x);
        return {1.0 + t * eps, 0, 0, 1.0};
    }
    Mat2d dt_g_ab(double, double x, double) const override {
        return {0.1 * std::sin(2 * kPi * x), 0, 0, 0};
    }
    Mat2d dx_g_ab(double t, double x, double) const override {
        return {t * 0.1 * 2 * kPi * std::cos(2 * kPi * x), 0, 0, 0};
    }
};

WarpedChart sample_warped() {
    auto f = [](double t) { return 1.0 + 0.3 * std::sin(2 * kPi * t); };
    auto fp = [](double t) { return 0.3 * 2 * kPi * std::cos(2 * kPi * t); };
    return WarpedChart(f, fp, hyperbolic_fiber(), "1+0.3 sin(2 pi t)");
}

} // namespace

TEST_CASE("nil foils have constant principal curvatures (1/2, -1/2)") {
    NilChart chart;
    for (double t : {0.0, 0.37, 1.0, -2.5}) {
        CurvatureReport r = shape_operator_foliation(chart, t);
        CHECK(r.kappa1 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.kappa2 == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(r.max_deviation < 1e-9);
    }
    auto v = verify_cpc(chart, {0.0, 0.37, 1.0}, 1e-9);
    CHECK(v.constant);
}

TEST_CASE("nil shape operator has exact trace 0 and determinant -1/4") {
    NilChart chart;
    for (double t : {0.0, 0.25, 0.8}) {
        CurvatureReport r = shape_operator_foliation(chart, t);
        for (auto [k1, k2] : r.samples) {
            CHECK(std::fabs(k1 + k2) < 1e-9);        // trace
            CHECK(std::fabs(k1 * k2 + 0.25) < 1e-9); // determinant
        }
    }
}

TEST_CASE("sol foils have constant principal curvatures (1, -1)") {
    for (double lambda : {1.5, (3.0 + std::sqrt(5.0)) / 2.0, 3.0}) {
        SolChart chart(lambda);
        for (double t : {0.0, 0.33, 0.5, 1.0}) {
            CurvatureReport r = shape_operator_foliation(chart, t);
            CHECK(r.kappa1 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(r.kappa2 == doctest::Approx(-1.0).epsilon(1e-12));
            CHECK(r.max_deviation < 1e-9);
        }
    }
}

TEST_CASE("product slices are totally geodesic") {
    ProductChart chart(round_sphere_fiber());
    CurvatureReport r = shape_operator_foliation(chart, 0.4);
    CHECK(std::fabs(r.kappa1) < 1e-12);
    CHECK(std::fabs(r.kappa2) < 1e-12);
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("warped slices are umbilic with curvature -f'/f") {
    WarpedChart chart = sample_warped();
    auto v = verify_cpc(chart, {0.0, 0.2, 0.45, 0.7}, 1e-9);
    CHECK(v.constant);
    for (double t : {0.2, 0.45}) {
        CurvatureReport r = shape_operator_foliation(chart, t);
        double f = 1.0 + 0.3 * std::sin(2 * kPi * t);
        double fp = 0.3 * 2 * kPi * std::cos(2 * kPi * t);
        CHECK(r.kappa1 == doctest::Approx(-fp / f).epsilon(1e-9));
        CHECK(r.kappa2 == doctest::Approx(-fp / f).epsilon(1e-9));
    }
}

TEST_CASE("perturbed metric is rejected by the cpc check") {
    PerturbedChart chart;
    auto v = verify_cpc(chart, {0.5}, 1e-6);
    CHECK_FALSE(v.constant);
}

TEST_CASE("closed-form dt g matches central finite differences") {
    NilChart nil;
    SolChart sol(2.0);
    FlatLatticeChart flat(0.25);
    ProductChart product(round_sphere_fiber());
    WarpedChart warped = sample_warped();
    const MetricChart* charts[] = {&nil, &sol, &flat, &product, &warped};
    const double h = 1e-5;
    for (const MetricChart* chart : charts) {
        for (double t : {0.1, 0.6}) {
            for (double x : {0.2, 0.7}) {
                for (double y : {0.3, 0.9}) {
                    Mat2d up = chart->g_ab(t + h, x, y);
                    Mat2d dn = chart->g_ab(t - h, x, y);
                    Mat2d fd{(up.xx - dn.xx) / (2 * h), (up.xy - dn.xy) / (2 * h),
                             (up.yx - dn.yx) / (2 * h), (up.yy - dn.yy) / (2 * h)};
                    Mat2d cf = chart->dt_g_ab(t, x, y);
                    double scale = std::max({1.0, std::fabs(cf.xx), std::fabs(cf.yy)});
                    CHECK(std::fabs(fd.xx - cf.xx) / scale < 1e-7);
                    CHECK(std::fabs(fd.xy - cf.xy) / scale < 1e-7);
                    CHECK(std::fabs(fd.yy - cf.yy) / scale < 1e-7);
                }
            }
        }
    }
}

TEST_CASE("nil deck translation is an isometry, the naive shift is not") {
    NilChart chart;
    auto good = verify_isometry(chart, ChartMap::translation(1.0, {1, 0, 1, 1}), 1e-9);
    CHECK(good.isometric);
    CHECK(good.max_error < 1e-12);
    auto bad = verify_isometry(chart, ChartMap::translation(1.0, {1, 0, 0, 1}), 1e-9);
    CHECK_FALSE(bad.isometric);
    CHECK(bad.max_error > 0.5);
}

TEST_CASE("sol deck translation is an isometry in the eigen-frame") {
    IntMat2 A{2, 1, 1, 1};
    SolChart chart = SolChart::from_monodromy(A);
    // spatial action of (x,y) |-> (x,y).A on columns is A^T
    Mat2d axy{static_cast<double>(A.a), static_cast<double>(A.c),
              static_cast<double>(A.b), static_cast<double>(A.d)};
    ChartMap deck = ChartMap::translation(1.0, chart.to_frame(axy));
    auto res = verify_isometry(chart, deck, 1e-9);
    CHECK(res.isometric);
}

TEST_CASE("flat lattice deck translation is an isometry") {
    FlatLatticeChart chart(0.25);
    auto res = verify_isometry(
        chart, ChartMap::translation(1.0, {1, 0, 0, 1}, 0.0, 0.25), 1e-9);
    CHECK(res.isometric);
}

TEST_CASE("composition of verified isometries is an isometry") {
    NilChart chart;
    ChartMap tau = ChartMap::translation(1.0, {1, 0, 1, 1});
    auto res = verify_isometry(chart, compose(tau, tau), 1e-9);
    CHECK(res.isometric);

    SolChart sol(2.0);
    ChartMap deck = ChartMap::translation(1.0, {2.0, 0, 0, 0.5});
    CHECK(verify_isometry(sol, compose(deck, deck), 1e-9).isometric);
}

TEST_CASE("flat lattice first return shifts by c") {
    for (double c : {0.0, 0.25}) {
        FlatLatticeChart chart(c);
        FirstReturn fr = geodesic_first_return(chart, 0.0, 0.0);
        CHECK(std::fabs(fr.x - 0.0) < 1e-6);
        CHECK(std::fabs(fr.y - c) < 1e-6);
        CHECK(fr.return_time == doctest::Approx(1.0).epsilon(1e-9));
    }
    FlatLatticeChart chart(0.0);
    FirstReturn fr = geodesic_first_return(chart, 0.3, 0.8);
    CHECK(std::fabs(fr.x - 0.3) < 1e-6);
    CHECK(std::fabs(fr.y - 0.8) < 1e-6);
}

TEST_CASE("nil vertical lines are geodesics returning to the same point") {
    NilChart chart;
    FirstReturn fr = geodesic_first_return(chart, 0.4, 0.7);
    CHECK(std::fabs(fr.x - 0.4) < 1e-9);
    CHECK(std::fabs(fr.y - 0.7) < 1e-9);
    CHECK(fr.return_time == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sol return time is the metric length of the period") {
    SolChart chart(2.0);
    FirstReturn fr = geodesic_first_return(chart, 0.2, 0.9);
    CHECK(fr.return_time == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(std::fabs(fr.x - 0.2) < 1e-8);
    CHECK(std::fabs(fr.y - 0.9) < 1e-8);
}

TEST_CASE("geodesic integrator conserves speed on all families") {
    NilChart nil;
    SolChart sol(2.0);
    FlatLatticeChart flat(0.5);
    ProductChart product(round_sphere_fiber());
    WarpedChart warped = sample_warped();
    const MetricChart* charts[] = {&nil, &sol, &flat, &product, &warped};
    for (const MetricChart* chart : charts) {
        GeoState s;
        s.p = {0.1, 0.3, 0.4};
        Vec3 dir{0.5, 0.7, -0.4};  // generic direction exercising curvature
        double norm = std::sqrt(metric_dot(*chart, s.p, dir, dir));
        for (int i = 0; i < 3; ++i) s.v[i] = dir[i] / norm;
        GeoState end = geodesic_flow(*chart, s, 1.0, 1e-3);
        double energy = metric_dot(*chart, end.p, end.v, end.v);
        CAPTURE(chart->name());
        CHECK(std::fabs(energy - 1.0) < 1e-8);
    }
}

TEST_CASE("too coarse a step is reported as an energy error") {
    // strongly curved sol chart with a huge step: the drift check trips
    SolChart chart(12.0);
    CHECK_THROWS_AS(geodesic_first_return(chart, 0.0, 0.0, 1e-14, 0.9),
                    std::runtime_error);
}
