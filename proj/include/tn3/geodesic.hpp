#ifndef TN3_GEODESIC_HPP
#define TN3_GEODESIC_HPP

#include "tn3/charts.hpp"

namespace tn3 {

struct GeoState {
    Vec3 p{0, 0, 0};
    Vec3 v{0, 0, 0};
};

/// g(v, w) at p.
double metric_dot(const MetricChart& chart, const Vec3& p, const Vec3& v,
                  const Vec3& w);

/// Fixed-step RK4 integration of the geodesic equation for `time` units
/// of the affine parameter.
GeoState geodesic_flow(const MetricChart& chart, GeoState s, double time,
                       double step);

struct FirstReturn {
    double x = 0, y = 0;
    double return_time = 0;
};

/// Follows the unit normal geodesic from (0, x0, y0) until t crosses the
/// unit period, applies the chart gluing, and reports the return point
/// (mod 1) and the arc time. Throws std::runtime_error when the unit-speed
/// drift exceeds the tolerance (step too large).
FirstReturn geodesic_first_return(const MetricChart& chart, double x0, double y0,
                                  double tolerance = 1e-6, double step = 1e-3);

} // namespace tn3

#endif
