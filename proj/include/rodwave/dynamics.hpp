#ifndef RODWAVE_DYNAMICS_HPP
#define RODWAVE_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rodwave/grid.hpp"
#include "rodwave/model.hpp"

namespace rodwave {

struct State {
    double t = 0.0;
    Field u;
};

struct SolverConfig {
    double cfl = 0.3;
    double dt_min = 1e-9;
    double slope_floor = -1e4;
    double t_end = 0.0;
    double record_every = 0.0;       // <= 0: t_end/100
    double energy_drift_stop = 1e-4; // relative drift that declares breakdown; 0 disables
    bool dealias = false;            // 2/3-rule on the nonlinear terms
    bool trig_char_interp = false;   // trigonometric instead of cubic sampling along characteristics
};

void validate(const SolverConfig& config);  // throws std::invalid_argument

struct Diagnostics {
    double t = 0.0;
    double energy = 0.0;   // discrete integral of u^2 + u_x^2
    double min_ux = 0.0;
    double argmin_x = 0.0;
    double max_abs_u = 0.0;
};

/// One characteristic sample: position q(t) with the slope-criterion quantities
/// a = beta*(u-c) - u_x and b = beta*(u-c) + u_x evaluated at q, h = sqrt(-a*b) if a*b < 0.
struct CharSample {
    double t = 0.0, q = 0.0, a = 0.0, b = 0.0, h = 0.0;
};

struct CharTrace {
    double x0 = 0.0;
    std::vector<CharSample> samples;
};

struct BlowupObservation {
    bool blew_up = false;
    double t_last = 0.0;
    std::optional<double> t_estimate;  // root of the -1/min_ux rate fit; >= t_last
    double fit_quality = 0.0;          // R^2 of the fit
    double rate_slope = 0.0;           // d/dt of -1/min_ux from the fit
    std::string stop_reason;           // "t_end" | "slope_floor" | "dt_min" | "nan" | "energy_drift"
};

struct IntegrationResult {
    std::vector<Diagnostics> trajectory;
    State final_state;
    BlowupObservation observation;
    std::vector<CharTrace> traces;
};

/// Right-hand side of the nonlocal form:
///   u_t = -f'(u) u_x - d/dx p * [ g(u) + f''(u)/2 u_x^2 ].
Field rhs(const Field& u, const ModelSpec& model, bool dealias = false);

/// Discrete energy integral of u^2 + u_x^2 (u_x spectral, rectangle rule).
double energy(const Field& u);

using RecordCallback = std::function<void(const State&)>;

/// Classical RK4 in time with dt = cfl * min(dx/max|f'(u)|, 1/|min u_x|), clipped to the next
/// record time. Stops at t_end, or declares blowup when min u_x <= slope_floor, dt < dt_min,
/// a NaN appears, or the energy integral drifts by more than energy_drift_stop (smooth
/// solutions conserve it, so drift marks classical breakdown at the current resolution);
/// on blowup fits -1/min_ux(t) over the final decade and extrapolates T*.
/// Characteristics dq/dt = f'(u(t,q)) are advanced with the same stages; criterion params
/// supply (beta, c) for the recorded a/b/h quantities (absent: only q is meaningful).
IntegrationResult integrate(const Field& u0, const ModelSpec& model, const SolverConfig& config,
                            const std::vector<double>& char_seeds = {},
                            const std::optional<CriterionParams>& params = std::nullopt,
                            const RecordCallback& on_record = nullptr);

/// Single-seed convenience wrapper around integrate().
CharTrace track_characteristic(double x0, const Field& u0, const ModelSpec& model,
                               const SolverConfig& config, const CriterionParams& params);

/// Verification of the Riccati mechanism along a trace: h(t) >= h(0)/(1 - gamma*h(0)*t/2)
/// within rel_tol, and observed breakdown before the bound 2/(gamma*h(0)).
struct RiccatiReport {
    bool applicable = false;  // a*b < 0 at the seed time
    double h0 = 0.0;
    double t_star_bound = 0.0;
    bool h_bound_ok = false;
    double worst_margin = 0.0;  // min over samples of h / lower_bound
    bool breakdown_before_bound = false;
    std::string detail;
};

RiccatiReport riccati_check(const CharTrace& trace, double gamma, const BlowupObservation& obs,
                            double rel_tol = 1e-2);

}  // namespace rodwave

#endif
