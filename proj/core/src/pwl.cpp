#include "chua/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chua/errors.hpp"

namespace chua {

PwlCurve::PwlCurve(std::vector<double> breakpoints, std::vector<double> slopes,
                   double anchor_v, double anchor_i)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      anchor_v_(anchor_v),
      anchor_i_(anchor_i) {
    if (breakpoints_.empty())
        throw config_error("at least one breakpoint required", "pwl.breakpoints");
    if (slopes_.size() != breakpoints_.size() + 1)
        throw config_error("expected breakpoints+1 slopes", "pwl.slopes");
    for (double b : breakpoints_)
        if (!std::isfinite(b))
            throw config_error("breakpoints must be finite", "pwl.breakpoints");
    for (double s : slopes_)
        if (!std::isfinite(s))
            throw config_error("slopes must be finite", "pwl.slopes");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
        std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end())
        throw config_error("breakpoints must be strictly increasing", "pwl.breakpoints");
    if (!std::isfinite(anchor_v_) || !std::isfinite(anchor_i_))
        throw config_error("anchor must be finite", "pwl.anchor");

    // chain the curve value at every breakpoint outward from the anchor
    knot_currents_.assign(breakpoints_.size(), 0.0);
    const std::size_t a = segment_index(anchor_v_);
    if (a > 0)  // knot to the left of the anchor's segment
        knot_currents_[a - 1] = anchor_i_ + slopes_[a] * (breakpoints_[a - 1] - anchor_v_);
    if (a < breakpoints_.size())
        knot_currents_[a] = anchor_i_ + slopes_[a] * (breakpoints_[a] - anchor_v_);
    for (std::size_t k = a; k-- > 1;)
        knot_currents_[k - 1] =
            knot_currents_[k] + slopes_[k] * (breakpoints_[k - 1] - breakpoints_[k]);
    for (std::size_t k = a + 1; k < breakpoints_.size(); ++k)
        knot_currents_[k] =
            knot_currents_[k - 1] + slopes_[k] * (breakpoints_[k] - breakpoints_[k - 1]);
}

std::size_t PwlCurve::segment_index(double v) const {
    // first breakpoint > v; a voltage exactly on a breakpoint lands in
    // the segment to its right
    return static_cast<std::size_t>(
        std::upper_bound(breakpoints_.begin(), breakpoints_.end(), v) -
        breakpoints_.begin());
}

double PwlCurve::evaluate(double v) const {
    if (!std::isfinite(v)) throw std::domain_error("pwl evaluate: non-finite voltage");
    const std::size_t k = segment_index(v);
    if (k == 0) return knot_currents_[0] + slopes_[0] * (v - breakpoints_[0]);
    return knot_currents_[k - 1] + slopes_[k] * (v - breakpoints_[k - 1]);
}

double PwlCurve::derivative(double v) const {
    if (!std::isfinite(v)) throw std::domain_error("pwl derivative: non-finite voltage");
    return slopes_[segment_index(v)];
}

PwlCurve paper_curve() {
    return PwlCurve({-1.27, 0.0, 1.23},
                    {-0.4691e-3, -0.7323e-3, -0.9350e-3, -0.6735e-3},
                    0.0, 0.0);
}

double slope_from_points(double v1, double i1, double v2, double i2) {
    if (v1 == v2)
        throw config_error("degenerate point pair: equal voltages", "pwl.points");
    return (i2 - i1) / (v2 - v1);
}

bool validate(const PwlCurve& curve, const std::string& prefix,
              std::vector<std::string>& issues) {
    // the constructor already rejects malformed curves; re-derive the
    // checks here so config validation can report instead of throw
    const auto before = issues.size();
    if (curve.slopes().size() != curve.breakpoints().size() + 1)
        issues.push_back(prefix + ".slopes: expected breakpoints+1 entries");
    if (!std::is_sorted(curve.breakpoints().begin(), curve.breakpoints().end()))
        issues.push_back(prefix + ".breakpoints: must be strictly increasing");
    return issues.size() == before;
}

}  // namespace chua
