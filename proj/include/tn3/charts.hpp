#ifndef TN3_CHARTS_HPP
#define TN3_CHARTS_HPP

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "tn3/intmat.hpp"

namespace tn3 {

struct Mat2d {
    double xx = 0, xy = 0, yx = 0, yy = 0;
    double det() const { return xx * yy - xy * yx; }
    double trace() const { return xx + yy; }
};

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Metric chart on R_t x [0,1)^2 for a codimension-one foliation by the
/// level tori {t} x T^2. All families are block diagonal in t with
/// constant g_tt, and expose closed-form derivatives of the spatial
/// block. Crossing the unit period in t applies `gluing` to the chart
/// point (the deck identification of the quotient).
class MetricChart {
public:
    virtual ~MetricChart() = default;
    virtual std::string name() const = 0;

    virtual double g_tt() const { return 1.0; }
    virtual Mat2d g_ab(double t, double x, double y) const = 0;
    virtual Mat2d dt_g_ab(double t, double x, double y) const = 0;
    virtual Mat2d dx_g_ab(double, double, double) const { return {}; }
    virtual Mat2d dy_g_ab(double, double, double) const { return {}; }

    virtual std::pair<double, double> gluing(double x, double y) const {
        return {x, y};
    }

    Mat3 metric3(const Vec3& p) const;
    /// Partial derivative of the full metric by coordinate i (t,x,y).
    Mat3 dmetric3(const Vec3& p, int i) const;
};

/// dt^2 + dx^2 + (dy - t dx)^2.
class NilChart final : public MetricChart {
public:
    std::string name() const override { return "nil"; }
    Mat2d g_ab(double t, double, double) const override {
        return {1.0 + t * t, -t, -t, 1.0};
    }
    Mat2d dt_g_ab(double t, double, double) const override {
        return {2.0 * t, -1.0, -1.0, 0.0};
    }
};

/// ln^2(lambda) dt^2 + lambda^{-2t} dxi1^2 + lambda^{2t} dxi2^2, expressed
/// in the eigen-frame coordinates (xi1, xi2). When built from a monodromy
/// matrix the frame change from (x, y) chart coordinates is stored for
/// converting deck maps.
class SolChart final : public MetricChart {
public:
    explicit SolChart(double lambda);
    /// Chart for the suspension of v |-> v.A (A hyperbolic, positive
    /// trace); the eigen-frame comes from the exact eigenvectors.
    static SolChart from_monodromy(const IntMat2& A);

    std::string name() const override { return "sol"; }
    double g_tt() const override { return log_lambda_ * log_lambda_; }
    Mat2d g_ab(double t, double, double) const override;
    Mat2d dt_g_ab(double t, double, double) const override;

    double lambda() const { return lambda_; }
    /// Conjugate a spatial linear action given in (x,y) coordinates
    /// (column convention) into the eigen-frame.
    Mat2d to_frame(const Mat2d& linear_xy) const;

private:
    double lambda_, log_lambda_;
    Mat2d frame_{1, 0, 0, 1}, frame_inv_{1, 0, 0, 1};
};

/// Flat metric whose period gluing shifts the second coordinate by c:
/// (t+1, x, y) is identified with (t, x, y + c).
class FlatLatticeChart final : public MetricChart {
public:
    explicit FlatLatticeChart(double c) : c_(c) {}
    std::string name() const override { return "flat"; }
    Mat2d g_ab(double, double, double) const override { return {1, 0, 0, 1}; }
    Mat2d dt_g_ab(double, double, double) const override { return {}; }
    std::pair<double, double> gluing(double x, double y) const override {
        return {x, y + c_};
    }
    double shift() const { return c_; }

private:
    double c_;
};

/// Fiber metric g_S(x,y) with closed-form partials.
struct FiberMetric {
    std::string name;
    std::function<Mat2d(double, double)> g;
    std::function<Mat2d(double, double)> dx;
    std::function<Mat2d(double, double)> dy;
};

FiberMetric flat_fiber();
/// Round 2-sphere; the chart coordinate x is mapped into a polar band
/// away from the poles.
FiberMetric round_sphere_fiber();
/// Hyperbolic plane in horocyclic coordinates: e^{2y} dx^2 + dy^2.
FiberMetric hyperbolic_fiber();

/// dt^2 + g_S(x,y): totally geodesic slices.
class ProductChart final : public MetricChart {
public:
    explicit ProductChart(FiberMetric fiber) : fiber_(std::move(fiber)) {}
    std::string name() const override { return "product(" + fiber_.name + ")"; }
    Mat2d g_ab(double, double x, double y) const override { return fiber_.g(x, y); }
    Mat2d dt_g_ab(double, double, double) const override { return {}; }
    Mat2d dx_g_ab(double, double x, double y) const override { return fiber_.dx(x, y); }
    Mat2d dy_g_ab(double, double x, double y) const override { return fiber_.dy(x, y); }

private:
    FiberMetric fiber_;
};

/// dt^2 + f(t)^2 g_S(x,y): umbilic slices with both curvatures -f'/f.
class WarpedChart final : public MetricChart {
public:
    WarpedChart(std::function<double(double)> f, std::function<double(double)> fprime,
                FiberMetric fiber, std::string label)
        : f_(std::move(f)), fp_(std::move(fprime)), fiber_(std::move(fiber)),
          label_(std::move(label)) {}

    std::string name() const override { return "warped(" + label_ + ")"; }
    Mat2d g_ab(double t, double x, double y) const override;
    Mat2d dt_g_ab(double t, double x, double y) const override;
    Mat2d dx_g_ab(double t, double x, double y) const override;
    Mat2d dy_g_ab(double t, double x, double y) const override;

private:
    std::function<double(double)> f_, fp_;
    FiberMetric fiber_;
    std::string label_;
};

} // namespace tn3

#endif
