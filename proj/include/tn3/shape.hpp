#ifndef TN3_SHAPE_HPP
#define TN3_SHAPE_HPP

#include <utility>
#include <vector>

#include "tn3/charts.hpp"

namespace tn3 {

/// Principal curvatures of the foils, per sample point and aggregated.
/// Sign convention: h_ab = -(1/(2 sqrt(g_tt))) dt g_ab with unit normal
/// +d/dt / sqrt(g_tt).
struct CurvatureReport {
    double kappa1 = 0, kappa2 = 0;  // ordered pair at the reference point
    double max_deviation = 0;       // from the reference pair over the grid
    int grid_nx = 0, grid_ny = 0;
    double t = 0;
    std::vector<std::pair<double, double>> samples;
};

/// Shape operator eigenvalues of the foil {t} x T^2 over an nx x ny grid.
/// Throws std::domain_error when the induced metric fails to be positive
/// definite at some sample, naming the offending point.
CurvatureReport shape_operator_foliation(const MetricChart& chart, double t,
                                         int nx = 17, int ny = 17);

struct CpcVerification {
    bool constant = false;
    CurvatureReport worst;  // report with the largest in-foil deviation
};

/// True iff each sampled foil has spatially constant principal curvatures
/// within tolerance (the pair may vary with t).
CpcVerification verify_cpc(const MetricChart& chart, const std::vector<double>& ts,
                           double tolerance, int nx = 17, int ny = 17);

/// Affine chart self-map (t,x,y) |-> (t_sign t + t_shift, L (x,y) + b).
struct ChartMap {
    double t_sign = 1.0;
    double t_shift = 0.0;
    Mat2d linear{1, 0, 0, 1};
    double bx = 0, by = 0;

    static ChartMap translation(double t0, const Mat2d& lin, double bx = 0,
                                double by = 0) {
        return {1.0, t0, lin, bx, by};
    }
    static ChartMap reflection(double center, const Mat2d& lin, double bx = 0,
                               double by = 0) {
        return {-1.0, 2.0 * center, lin, bx, by};
    }
};

ChartMap compose(const ChartMap& f, const ChartMap& g);

struct IsometryCheck {
    bool isometric = false;
    double max_error = 0;
};

/// Pullback test: J^T g(map p) J = g(p) within tolerance over the grid
/// ([0,1)^2 spatial, t in [0,1]).
IsometryCheck verify_isometry(const MetricChart& chart, const ChartMap& map,
                              double tolerance, int grid = 9);

} // namespace tn3

#endif
