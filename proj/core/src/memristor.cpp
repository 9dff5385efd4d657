#include "chua/memristor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chua/errors.hpp"

namespace chua {

namespace {

// integer power by repeated multiplication; exact for the (+/-1)^(2p)
// boundary cases the window relies on
double ipow(double base, int exp) {
    double out = 1.0;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

}  // namespace

bool validate(const MemristorParams& params, const std::string& prefix,
              std::vector<std::string>& issues) {
    const auto before = issues.size();
    if (!(params.r_on > 0.0) || !(params.r_on < params.r_off))
        issues.push_back(prefix + ".r_on: requires 0 < r_on < r_off");
    if (!std::isfinite(params.r_off) || params.r_off <= 0.0)
        issues.push_back(prefix + ".r_off: must be positive and finite");
    if (!(params.d > 0.0))
        issues.push_back(prefix + ".d: must be > 0");
    if (!(params.mu_v > 0.0))
        issues.push_back(prefix + ".mu_v: must be > 0");
    if (params.eta != 1 && params.eta != -1)
        issues.push_back(prefix + ".eta: must be +1 or -1");
    if (params.p < 1)
        issues.push_back(prefix + ".p: must be >= 1");
    return issues.size() == before;
}

double memristance(const MemristorParams& params, const MemristorState& state) {
    return params.r_on * state.x + params.r_off * (1.0 - state.x);
}

int step_function(double i) {
    return i >= 0.0 ? 1 : 0;
}

double biolek_window(double x, double i, int p) {
    return 1.0 - ipow(x - static_cast<double>(step_function(-i)), 2 * p);
}

double width_derivative(const MemristorParams& params, const MemristorState& state,
                        double i) {
    const double k = params.mu_v * params.r_on / (params.d * params.d);
    return static_cast<double>(params.eta) * k * i *
           biolek_window(state.x, i, params.p);
}

std::vector<DriveSample> drive_sinusoidal(const MemristorParams& params, double x0,
                                          double amplitude, double frequency,
                                          int cycles, double dt) {
    if (!(dt > 0.0)) throw config_error("dt must be > 0", "drive.dt");
    if (!(frequency > 0.0)) throw config_error("frequency must be > 0", "drive.frequency");
    if (x0 < 0.0 || x0 > 1.0) throw config_error("x0 must lie in [0, 1]", "drive.x0");
    if (cycles < 1) throw config_error("cycles must be >= 1", "drive.cycles");
    if (dt * frequency >= 0.01)
        throw config_error("dt*frequency >= 0.01 under-resolves the cycle", "drive.dt");

    const double omega = 2.0 * std::numbers::pi * frequency;
    const auto voltage = [&](double t) { return amplitude * std::sin(omega * t); };
    const auto rate = [&](double t, double x) {
        const double v = voltage(t);
        const double i = v / memristance(params, {x});
        return width_derivative(params, {x}, i);
    };

    const double t_end = static_cast<double>(cycles) / frequency;
    const long n_steps = static_cast<long>(std::ceil(t_end / dt - 1e-12));

    std::vector<DriveSample> out;
    out.reserve(static_cast<std::size_t>(n_steps) + 1);

    double x = x0;
    for (long k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double v = voltage(t);
        out.push_back({t, v, v / memristance(params, {x}), x});
        if (k == n_steps) break;

        const double k1 = rate(t, x);
        const double k2 = rate(t + 0.5 * dt, x + 0.5 * dt * k1);
        const double k3 = rate(t + 0.5 * dt, x + 0.5 * dt * k2);
        const double k4 = rate(t + dt, x + dt * k3);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x = std::clamp(x, 0.0, 1.0);
    }
    return out;
}

}  // namespace chua
