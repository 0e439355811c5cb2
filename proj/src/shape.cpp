#include "tn3/shape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tn3 {

namespace {

// Ordered eigenvalues (k1 >= k2) of the 2x2 shape operator via the
// closed-form quadratic; the operator is g-symmetric so the spectrum is
// real (tiny negative discriminants are rounding).
std::pair<double, double> eigen2(const Mat2d& s) {
    double tr = s.trace(), det = s.det();
    double disc = tr * tr / 4.0 - det;
    double root = std::sqrt(std::max(disc, 0.0));
    return {tr / 2.0 + root, tr / 2.0 - root};
}

} // namespace

CurvatureReport shape_operator_foliation(const MetricChart& chart, double t,
                                         int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::domain_error("grid must be at least 2x2");
    CurvatureReport report;
    report.grid_nx = nx;
    report.grid_ny = ny;
    report.t = t;
    report.samples.reserve(static_cast<size_t>(nx) * ny);

    const double inv_sqrt_gtt = 1.0 / std::sqrt(chart.g_tt());
    bool first = true;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            double x = static_cast<double>(i) / nx;
            double y = static_cast<double>(j) / ny;
            Mat2d g = chart.g_ab(t, x, y);
            double det = g.det();
            if (!(det > 0.0) || !(g.xx > 0.0)) {
                std::ostringstream os;
                os << "induced metric not positive definite at (t,x,y)=(" << t
                   << "," << x << "," << y << ")";
                throw std::domain_error(os.str());
            }
            Mat2d dg = chart.dt_g_ab(t, x, y);
            double c = -0.5 * inv_sqrt_gtt;
            Mat2d h{c * dg.xx, c * dg.xy, c * dg.yx, c * dg.yy};
            Mat2d ginv{g.yy / det, -g.xy / det, -g.yx / det, g.xx / det};
            Mat2d shape{ginv.xx * h.xx + ginv.xy * h.yx,
                        ginv.xx * h.xy + ginv.xy * h.yy,
                        ginv.yx * h.xx + ginv.yy * h.yx,
                        ginv.yx * h.xy + ginv.yy * h.yy};
            auto [k1, k2] = eigen2(shape);
            report.samples.emplace_back(k1, k2);
            if (first) {
                report.kappa1 = k1;
                report.kappa2 = k2;
                first = false;
            }
            report.max_deviation =
                std::max({report.max_deviation, std::fabs(k1 - report.kappa1),
                          std::fabs(k2 - report.kappa2)});
        }
    }
    return report;
}

CpcVerification verify_cpc(const MetricChart& chart, const std::vector<double>& ts,
                           double tolerance, int nx, int ny) {
    if (!(tolerance > 0)) throw std::domain_error("tolerance must be positive");
    CpcVerification out;
    out.constant = true;
    bool first = true;
    for (double t : ts) {
        CurvatureReport r = shape_operator_foliation(chart, t, nx, ny);
        if (first || r.max_deviation > out.worst.max_deviation) out.worst = r;
        first = false;
        if (r.max_deviation > tolerance) out.constant = false;
    }
    return out;
}

ChartMap compose(const ChartMap& f, const ChartMap& g) {
    ChartMap out;
    out.t_sign = f.t_sign * g.t_sign;
    out.t_shift = f.t_sign * g.t_shift + f.t_shift;
    out.linear = {f.linear.xx * g.linear.xx + f.linear.xy * g.linear.yx,
                  f.linear.xx * g.linear.xy + f.linear.xy * g.linear.yy,
                  f.linear.yx * g.linear.xx + f.linear.yy * g.linear.yx,
                  f.linear.yx * g.linear.xy + f.linear.yy * g.linear.yy};
    out.bx = f.linear.xx * g.bx + f.linear.xy * g.by + f.bx;
    out.by = f.linear.yx * g.bx + f.linear.yy * g.by + f.by;
    return out;
}

IsometryCheck verify_isometry(const MetricChart& chart, const ChartMap& map,
                              double tolerance, int grid) {
    IsometryCheck out;
    const double J[3][3] = {{map.t_sign, 0, 0},
                            {0, map.linear.xx, map.linear.xy},
                            {0, map.linear.yx, map.linear.yy}};
    for (int it = 0; it <= grid; ++it) {
        for (int ix = 0; ix < grid; ++ix) {
            for (int iy = 0; iy < grid; ++iy) {
                Vec3 p{static_cast<double>(it) / grid, static_cast<double>(ix) / grid,
                       static_cast<double>(iy) / grid};
                Vec3 q{map.t_sign * p[0] + map.t_shift,
                       map.linear.xx * p[1] + map.linear.xy * p[2] + map.bx,
                       map.linear.yx * p[1] + map.linear.yy * p[2] + map.by};
                Mat3 gp = chart.metric3(p);
                Mat3 gq = chart.metric3(q);
                // J^T gq J - gp
                for (int r = 0; r < 3; ++r) {
                    for (int c = 0; c < 3; ++c) {
                        double v = 0;
                        for (int k = 0; k < 3; ++k)
                            for (int l = 0; l < 3; ++l)
                                v += J[k][r] * gq[k][l] * J[l][c];
                        out.max_error = std::max(out.max_error, std::fabs(v - gp[r][c]));
                    }
                }
            }
        }
    }
    out.isometric = out.max_error <= tolerance;
    return out;
}

} // namespace tn3
