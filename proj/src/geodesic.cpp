#include "tn3/geodesic.hpp"

#include <cmath>
#include <stdexcept>

namespace tn3 {

namespace {

Mat3 invert3(const Mat3& m) {
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Mat3 inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}

// Acceleration a^i = -Gamma^i_{jk} v^j v^k with
// Gamma^i_{jk} = 1/2 g^{il} (d_j g_lk + d_k g_lj - d_l g_jk).
Vec3 acceleration(const MetricChart& chart, const Vec3& p, const Vec3& v) {
    Mat3 dg[3] = {chart.dmetric3(p, 0), chart.dmetric3(p, 1), chart.dmetric3(p, 2)};
    Mat3 ginv = invert3(chart.metric3(p));
    Vec3 acc{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        double s = 0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double gamma = 0;
                for (int l = 0; l < 3; ++l)
                    gamma += ginv[i][l] *
                             (dg[j][l][k] + dg[k][l][j] - dg[l][j][k]);
                s += 0.5 * gamma * v[j] * v[k];
            }
        acc[i] = -s;
    }
    return acc;
}

struct Deriv {
    Vec3 dp, dv;
};

Deriv derivative(const MetricChart& chart, const GeoState& s) {
    return {s.v, acceleration(chart, s.p, s.v)};
}

GeoState advance(const GeoState& s, const Deriv& d, double h) {
    GeoState out;
    for (int i = 0; i < 3; ++i) {
        out.p[i] = s.p[i] + h * d.dp[i];
        out.v[i] = s.v[i] + h * d.dv[i];
    }
    return out;
}

GeoState rk4_step(const MetricChart& chart, const GeoState& s, double h) {
    Deriv k1 = derivative(chart, s);
    Deriv k2 = derivative(chart, advance(s, k1, h / 2));
    Deriv k3 = derivative(chart, advance(s, k2, h / 2));
    Deriv k4 = derivative(chart, advance(s, k3, h));
    GeoState out;
    for (int i = 0; i < 3; ++i) {
        out.p[i] = s.p[i] + h / 6.0 * (k1.dp[i] + 2 * k2.dp[i] + 2 * k3.dp[i] + k4.dp[i]);
        out.v[i] = s.v[i] + h / 6.0 * (k1.dv[i] + 2 * k2.dv[i] + 2 * k3.dv[i] + k4.dv[i]);
    }
    return out;
}

double mod1d(double v) {
    double r = std::fmod(v, 1.0);
    return r < 0 ? r + 1.0 : r;
}

} // namespace

double metric_dot(const MetricChart& chart, const Vec3& p, const Vec3& v,
                  const Vec3& w) {
    Mat3 g = chart.metric3(p);
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += g[i][j] * v[i] * w[j];
    return s;
}

GeoState geodesic_flow(const MetricChart& chart, GeoState s, double time,
                       double step) {
    double remaining = time;
    while (remaining > 0) {
        double h = std::min(step, remaining);
        s = rk4_step(chart, s, h);
        remaining -= h;
    }
    return s;
}

FirstReturn geodesic_first_return(const MetricChart& chart, double x0, double y0,
                                  double tolerance, double step) {
    GeoState s;
    s.p = {0.0, x0, y0};
    double n = 1.0 / std::sqrt(chart.g_tt());
    s.v = {n, 0.0, 0.0};

    double time = 0;
    GeoState prev = s;
    const double max_time = 64.0 / n;  // generous cap; crossing happens near sqrt(g_tt)
    while (s.p[0] < 1.0) {
        prev = s;
        s = rk4_step(chart, s, step);
        time += step;
        double drift = std::fabs(metric_dot(chart, s.p, s.v, s.v) - 1.0);
        if (drift > tolerance)
            throw std::runtime_error(
                "geodesic energy drift exceeds tolerance; reduce the step size");
        if (time > max_time)
            throw std::runtime_error("geodesic failed to cross the period");
    }
    // linear interpolation of the crossing t = 1 within the last step
    double f = (1.0 - prev.p[0]) / (s.p[0] - prev.p[0]);
    double xc = prev.p[1] + f * (s.p[1] - prev.p[1]);
    double yc = prev.p[2] + f * (s.p[2] - prev.p[2]);
    FirstReturn out;
    auto [gx, gy] = chart.gluing(xc, yc);
    out.x = mod1d(gx);
    out.y = mod1d(gy);
    out.return_time = time - (1.0 - f) * step;
    return out;
}

} // namespace tn3
