#include "tn3/charts.hpp"

#include <cmath>
#include <stdexcept>

namespace tn3 {

Mat3 MetricChart::metric3(const Vec3& p) const {
    Mat2d s = g_ab(p[0], p[1], p[2]);
    return {{{g_tt(), 0, 0}, {0, s.xx, s.xy}, {0, s.yx, s.yy}}};
}

Mat3 MetricChart::dmetric3(const Vec3& p, int i) const {
    Mat2d d{};
    switch (i) {
        case 0: d = dt_g_ab(p[0], p[1], p[2]); break;
        case 1: d = dx_g_ab(p[0], p[1], p[2]); break;
        case 2: d = dy_g_ab(p[0], p[1], p[2]); break;
        default: throw std::out_of_range("coordinate index");
    }
    return {{{0, 0, 0}, {0, d.xx, d.xy}, {0, d.yx, d.yy}}};
}

SolChart::SolChart(double lambda) : lambda_(lambda), log_lambda_(std::log(lambda)) {
    if (!(lambda > 1.0)) throw std::domain_error("sol chart requires lambda > 1");
}

SolChart SolChart::from_monodromy(const IntMat2& A) {
    // Pushforward of v |-> v.A on column vectors is A^T; its expanding and
    // contracting eigenvectors give the frame.
    AnosovEigen e = anosov_eigen(A.transpose());
    SolChart chart(e.lambda.to_double());
    double v1x = e.v1.first.to_double(), v1y = e.v1.second.to_double();
    double v2x = e.v2.first.to_double(), v2y = e.v2.second.to_double();
    chart.frame_ = {v1x, v2x, v1y, v2y};
    double det = chart.frame_.det();
    chart.frame_inv_ = {v2y / det, -v2x / det, -v1y / det, v1x / det};
    return chart;
}

Mat2d SolChart::g_ab(double t, double, double) const {
    return {std::pow(lambda_, -2.0 * t), 0, 0, std::pow(lambda_, 2.0 * t)};
}

Mat2d SolChart::dt_g_ab(double t, double, double) const {
    double l = 2.0 * log_lambda_;
    return {-l * std::pow(lambda_, -2.0 * t), 0, 0, l * std::pow(lambda_, 2.0 * t)};
}

Mat2d SolChart::to_frame(const Mat2d& linear_xy) const {
    auto mul = [](const Mat2d& a, const Mat2d& b) {
        return Mat2d{a.xx * b.xx + a.xy * b.yx, a.xx * b.xy + a.xy * b.yy,
                     a.yx * b.xx + a.yy * b.yx, a.yx * b.xy + a.yy * b.yy};
    };
    return mul(frame_inv_, mul(linear_xy, frame_));
}

FiberMetric flat_fiber() {
    return {"flat torus",
            [](double, double) { return Mat2d{1, 0, 0, 1}; },
            [](double, double) { return Mat2d{}; },
            [](double, double) { return Mat2d{}; }};
}

FiberMetric round_sphere_fiber() {
    // theta = pi (0.1 + 0.8 x), phi = 2 pi y: a band of the round sphere
    // avoiding the poles; g = dtheta^2 + sin^2(theta) dphi^2.
    constexpr double a = 0.1, w = 0.8;
    constexpr double pi = 3.14159265358979323846;
    auto theta = [](double x) { return pi * (a + w * x); };
    return {"round sphere",
            [theta](double x, double) {
                double s = std::sin(theta(x));
                return Mat2d{pi * w * pi * w, 0, 0, 4 * pi * pi * s * s};
            },
            [theta](double x, double) {
                double th = theta(x);
                double d = 8 * pi * pi * std::sin(th) * std::cos(th) * pi * w;
                return Mat2d{0, 0, 0, d};
            },
            [](double, double) { return Mat2d{}; }};
}

FiberMetric hyperbolic_fiber() {
    return {"hyperbolic plane",
            [](double, double y) { return Mat2d{std::exp(2 * y), 0, 0, 1}; },
            [](double, double) { return Mat2d{}; },
            [](double, double y) { return Mat2d{2 * std::exp(2 * y), 0, 0, 0}; }};
}

Mat2d WarpedChart::g_ab(double t, double x, double y) const {
    double f2 = f_(t) * f_(t);
    Mat2d s = fiber_.g(x, y);
    return {f2 * s.xx, f2 * s.xy, f2 * s.yx, f2 * s.yy};
}

Mat2d WarpedChart::dt_g_ab(double t, double x, double y) const {
    double d = 2.0 * f_(t) * fp_(t);
    Mat2d s = fiber_.g(x, y);
    return {d * s.xx, d * s.xy, d * s.yx, d * s.yy};
}

Mat2d WarpedChart::dx_g_ab(double t, double x, double y) const {
    double f2 = f_(t) * f_(t);
    Mat2d s = fiber_.dx(x, y);
    return {f2 * s.xx, f2 * s.xy, f2 * s.yx, f2 * s.yy};
}

Mat2d WarpedChart::dy_g_ab(double t, double x, double y) const {
    double f2 = f_(t) * f_(t);
    Mat2d s = fiber_.dy(x, y);
    return {f2 * s.xx, f2 * s.xy, f2 * s.yx, f2 * s.yy};
}

} // namespace tn3
