#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chua {

/// Continuous piecewise-linear i-v curve. Segment k has conductance
/// slopes[k]; segment 0 lies left of breakpoints[0], the last segment
/// right of the last breakpoint. Offsets are derived by chaining
/// continuity outward from the anchor point, so the curve is continuous
/// by construction and the anchor always lies on it.
class PwlCurve {
public:
    /// breakpoints strictly increasing (V), slopes.size() == breakpoints.size()+1 (S),
    /// anchor an (v, i) point on the curve. Throws config_error otherwise.
    PwlCurve(std::vector<double> breakpoints, std::vector<double> slopes,
             double anchor_v, double anchor_i);

    /// Current at voltage v. Throws std::domain_error for non-finite v.
    double evaluate(double v) const;

    /// Local conductance of the segment containing v. At a breakpoint the
    /// right segment wins (fixed tie-break, shared with the Jacobian).
    double derivative(double v) const;

    /// Index of the segment containing v under the right tie-break.
    std::size_t segment_index(double v) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& slopes() const { return slopes_; }
    double anchor_v() const { return anchor_v_; }
    double anchor_i() const { return anchor_i_; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> slopes_;
    std::vector<double> knot_currents_;  // curve value at each breakpoint
    double anchor_v_;
    double anchor_i_;
};

/// The fitted four-slope nonlinear resistor: breakpoints (-1.27, 0, 1.23) V,
/// slopes (-0.4691, -0.7323, -0.9350, -0.6735) mS, anchored at the origin.
/// Only the negative-slope middle branches are represented; the outer
/// positive branches of the raw diode curve are out of this model.
PwlCurve paper_curve();

/// Two-point slope (i2 - i1)/(v2 - v1). Throws config_error on equal voltages.
double slope_from_points(double v1, double i1, double v2, double i2);

/// Invariant check used by config validation.
bool validate(const PwlCurve& curve, const std::string& prefix,
              std::vector<std::string>& issues);

}  // namespace chua
