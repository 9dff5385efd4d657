#pragma once

#include <string>
#include <vector>

namespace chua {

/// HP memristor device constants. The defaults are config-overridable
/// placeholders in the usual HP-model ballpark; they are not measured
/// values and tests never treat them as ground truth.
struct MemristorParams {
    double r_on = 100.0;    // Ohm, fully doped
    double r_off = 16e3;    // Ohm, fully undoped
    double d = 10e-9;       // m, device length
    double mu_v = 1e-14;    // m^2/(s*V), dopant mobility
    int eta = +1;           // polarity, +1 or -1
    int p = 2;              // Biolek window exponent, >= 1
};

/// Normalized doped width x = w/D, kept in [0, 1].
struct MemristorState {
    double x = 0.0;
};

/// Appends human-readable invariant violations ("r_on", "eta", ...) to
/// `issues`, prefixing each field with `prefix`. Returns true when clean.
bool validate(const MemristorParams& params, const std::string& prefix,
              std::vector<std::string>& issues);

/// State-dependent resistance r_on*x + r_off*(1-x).
double memristance(const MemristorParams& params, const MemristorState& state);

/// stp(i): 1 for i >= 0, 0 for i < 0.
int step_function(double i);

/// Biolek window F_B(x, i, p) = 1 - (x - stp(-i))^(2p).
/// Zero at x=1 for positive current and at x=0 for negative current, so
/// dopant drift stalls at the device boundaries.
double biolek_window(double x, double i, int p);

/// Rate of the normalized width: eta * (mu_v * r_on / d^2) * i * F_B.
/// The extra 1/d relative to the w-rate converts to x = w/d units.
double width_derivative(const MemristorParams& params, const MemristorState& state,
                        double i);

struct DriveSample {
    double t;  // s
    double v;  // V
    double i;  // A
    double x;  // normalized width
};

/// Voltage-driven test harness: v(t) = amplitude * sin(2*pi*f*t),
/// i = v / memristance(x), x integrated with fixed-step RK4 and clamped
/// to [0, 1] after every step. One sample per step, including t=0.
/// Throws config_error when dt*frequency >= 0.01 (under-resolved cycle)
/// or the inputs are out of range.
std::vector<DriveSample> drive_sinusoidal(const MemristorParams& params, double x0,
                                          double amplitude, double frequency,
                                          int cycles, double dt);

}  // namespace chua
