#include "rodwave/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rodwave/kernel.hpp"

namespace rodwave {

void validate(const SolverConfig& config) {
    if (!(config.cfl > 0.0 && config.cfl <= 1.0))
        throw std::invalid_argument("solver cfl must be in (0, 1]");
    if (!(config.dt_min > 0.0)) throw std::invalid_argument("solver dt_min must be positive");
    if (!(config.slope_floor < 0.0)) throw std::invalid_argument("solver slope_floor must be negative");
    if (!(config.t_end > 0.0)) throw std::invalid_argument("solver t_end must be positive");
    if (!(config.dt_min < config.t_end)) throw std::invalid_argument("solver dt_min must be < t_end");
    if (config.record_every < 0.0) throw std::invalid_argument("solver record_every must be positive");
    if (config.energy_drift_stop < 0.0)
        throw std::invalid_argument("solver energy_drift_stop must be nonnegative");
}

namespace {

Field rhs_given_ux(const Field& u, const Field& ux, const ModelSpec& model, bool dealias) {
    const int n = u.grid.n;
    Field w = make_field(u.grid);
    for (int j = 0; j < n; ++j)
        w[j] = model.g(u[j]) + 0.5 * model.f_second(u[j]) * ux[j] * ux[j];
    if (dealias) w = dealias_two_thirds(w);
    Field conv = convolve_dp(w);
    Field out = make_field(u.grid);
    for (int j = 0; j < n; ++j) out[j] = -model.f_prime(u[j]) * ux[j] - conv[j];
    if (dealias) out = dealias_two_thirds(out);
    return out;
}

struct SlopeInfo {
    double min_ux = 0.0;
    double argmin_x = 0.0;
};

SlopeInfo min_slope(const Field& ux) {
    SlopeInfo s;
    s.min_ux = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ux.grid.n; ++j) {
        if (ux[j] < s.min_ux) {
            s.min_ux = ux[j];
            s.argmin_x = ux.grid.x(j);
        }
    }
    return s;
}

double max_abs_f_prime(const Field& u, const ModelSpec& model) {
    double m = 0.0;
    for (int j = 0; j < u.grid.n; ++j) m = std::max(m, std::abs(model.f_prime(u[j])));
    return m;
}

// least squares y = a + b t with R^2
struct LineFit {
    double a = 0.0, b = 0.0, r_squared = 0.0;
    bool ok = false;
};

LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
    LineFit fit;
    const size_t n = t.size();
    if (n < 3) return fit;
    double st = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) { st += t[i]; sy += y[i]; }
    const double mt = st / n, my = sy / n;
    double stt = 0, sty = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (stt <= 0.0 || syy <= 0.0) return fit;
    fit.b = sty / stt;
    fit.a = my - fit.b * mt;
    fit.r_squared = (sty * sty) / (stt * syy);
    fit.ok = true;
    return fit;
}

double sample_at(const Field& v, const Spectrum* spec, double x, bool trig) {
    if (trig && spec) return trig_eval(*spec, x);
    return cubic_interpolate(v, x);
}

}  // namespace

Field rhs(const Field& u, const ModelSpec& model, bool dealias) {
    return rhs_given_ux(u, spectral_derivative(u), model, dealias);
}

double energy(const Field& u) {
    const Field ux = spectral_derivative(u);
    double acc = 0.0;
    for (int j = 0; j < u.grid.n; ++j) acc += u[j] * u[j] + ux[j] * ux[j];
    return acc * u.grid.dx;
}

IntegrationResult integrate(const Field& u0, const ModelSpec& model, const SolverConfig& config_in,
                            const std::vector<double>& char_seeds,
                            const std::optional<CriterionParams>& params,
                            const RecordCallback& on_record) {
    SolverConfig config = config_in;
    if (config.record_every <= 0.0) config.record_every = config.t_end / 100.0;
    validate(config);
    if (!all_finite(u0)) throw std::invalid_argument("integrate: initial datum is not finite");

    const Grid grid = u0.grid;
    const double beta = params ? params->beta : 0.0;
    const double c_ref = params ? params->c : 0.0;

    Field u = u0;
    double t = 0.0;
    std::vector<double> q(char_seeds.begin(), char_seeds.end());
    for (double& x : q) x = wrap_position(x, grid.length);

    IntegrationResult result;
    result.traces.resize(q.size());
    for (size_t s = 0; s < q.size(); ++s) result.traces[s].x0 = q[s];

    std::vector<double> fit_t, fit_s;  // per-step (t, min_ux) history for the rate fit

    auto record = [&](const Field& field, const Field& ux, const SlopeInfo& slope, double e) {
        Diagnostics d;
        d.t = t;
        double ma = 0.0;
        for (int j = 0; j < grid.n; ++j) ma = std::max(ma, std::abs(field[j]));
        d.energy = e;
        d.min_ux = slope.min_ux;
        d.argmin_x = slope.argmin_x;
        d.max_abs_u = ma;
        result.trajectory.push_back(d);

        Spectrum spec_u, spec_ux;
        const bool trig = config.trig_char_interp;
        if (trig && !q.empty()) {
            spec_u = analyze(field);
            spec_ux = analyze(ux);
        }
        for (size_t s = 0; s < q.size(); ++s) {
            CharSample cs;
            cs.t = t;
            cs.q = q[s];
            const double uq = sample_at(field, trig ? &spec_u : nullptr, q[s], trig);
            const double uxq = sample_at(ux, trig ? &spec_ux : nullptr, q[s], trig);
            cs.a = beta * (uq - c_ref) - uxq;
            cs.b = beta * (uq - c_ref) + uxq;
            cs.h = (cs.a * cs.b < 0.0) ? std::sqrt(-cs.a * cs.b) : 0.0;
            result.traces[s].samples.push_back(cs);
        }
        if (on_record) on_record(State{t, field});
    };

    double next_record = 0.0;
    std::string stop_reason;
    bool blew_up = false;
    double energy_ref = -1.0;

    while (true) {
        if (!all_finite(u)) {
            stop_reason = "nan";
            blew_up = true;
            break;
        }
        const Field ux = spectral_derivative(u);
        const SlopeInfo slope = min_slope(ux);
        double e = 0.0;
        for (int j = 0; j < grid.n; ++j) e += u[j] * u[j] + ux[j] * ux[j];
        e *= grid.dx;
        if (energy_ref < 0.0) energy_ref = e;
        fit_t.push_back(t);
        fit_s.push_back(slope.min_ux);

        if (t >= next_record - 1e-12 * config.t_end) {
            record(u, ux, slope, e);
            next_record += config.record_every;
        }

        if (slope.min_ux <= config.slope_floor) {
            stop_reason = "slope_floor";
            blew_up = true;
            break;
        }
        if (config.energy_drift_stop > 0.0 &&
            std::abs(e - energy_ref) > config.energy_drift_stop * std::max(energy_ref, 1e-12)) {
            stop_reason = "energy_drift";
            blew_up = true;
            break;
        }
        // stopping margin of dt_min keeps the final step from shrinking below it
        if (t >= config.t_end - config.dt_min) {
            stop_reason = "t_end";
            break;
        }

        double dt = std::numeric_limits<double>::infinity();
        const double maxfp = max_abs_f_prime(u, model);
        if (maxfp > 0.0) dt = std::min(dt, config.cfl * grid.dx / maxfp);
        if (slope.min_ux < 0.0) dt = std::min(dt, config.cfl / (-slope.min_ux));
        dt = std::min(dt, config.t_end - t);
        dt = std::min(dt, next_record - t);
        if (!(dt >= config.dt_min)) {
            stop_reason = "dt_min";
            blew_up = true;
            break;
        }

        // classical RK4, characteristics advanced with the same stages
        auto stage_q = [&](const Field& uf, const std::vector<double>& qs, std::vector<double>& kq) {
            Spectrum spec;
            const bool trig = config.trig_char_interp;
            if (trig && !qs.empty()) spec = analyze(uf);
            kq.resize(qs.size());
            for (size_t s = 0; s < qs.size(); ++s)
                kq[s] = model.f_prime(sample_at(uf, trig ? &spec : nullptr, qs[s], trig));
        };

        const int n = grid.n;
        Field k1 = rhs_given_ux(u, ux, model, config.dealias);
        std::vector<double> k1q, k2q, k3q, k4q;
        stage_q(u, q, k1q);

        Field u2 = make_field(grid);
        std::vector<double> q2(q.size());
        for (int j = 0; j < n; ++j) u2[j] = u[j] + 0.5 * dt * k1[j];
        for (size_t s = 0; s < q.size(); ++s) q2[s] = q[s] + 0.5 * dt * k1q[s];
        Field k2 = rhs(u2, model, config.dealias);
        stage_q(u2, q2, k2q);

        Field u3 = make_field(grid);
        std::vector<double> q3(q.size());
        for (int j = 0; j < n; ++j) u3[j] = u[j] + 0.5 * dt * k2[j];
        for (size_t s = 0; s < q.size(); ++s) q3[s] = q[s] + 0.5 * dt * k2q[s];
        Field k3 = rhs(u3, model, config.dealias);
        stage_q(u3, q3, k3q);

        Field u4 = make_field(grid);
        std::vector<double> q4(q.size());
        for (int j = 0; j < n; ++j) u4[j] = u[j] + dt * k3[j];
        for (size_t s = 0; s < q.size(); ++s) q4[s] = q[s] + dt * k3q[s];
        Field k4 = rhs(u4, model, config.dealias);
        stage_q(u4, q4, k4q);

        for (int j = 0; j < n; ++j)
            u[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        for (size_t s = 0; s < q.size(); ++s) {
            q[s] += dt / 6.0 * (k1q[s] + 2.0 * k2q[s] + 2.0 * k3q[s] + k4q[s]);
            q[s] = wrap_position(q[s], grid.length);
        }
        t += dt;
    }

    // final record (skip if the state went non-finite or we just recorded)
    if (all_finite(u)) {
        const bool already = !result.trajectory.empty() &&
                             result.trajectory.back().t >= t - 1e-14 * (1.0 + t);
        if (!already) {
            const Field ux = spectral_derivative(u);
            double e = 0.0;
            for (int j = 0; j < grid.n; ++j) e += u[j] * u[j] + ux[j] * ux[j];
            record(u, ux, min_slope(ux), e * grid.dx);
        }
    }

    result.final_state = State{t, u};
    result.observation.blew_up = blew_up;
    result.observation.t_last = t;
    result.observation.stop_reason = stop_reason;

    if (blew_up) {
        // fit -1/min_ux over the final half-decade of min_ux: the subleading Riccati
        // corrections scale as 1/min_ux^2, so the shallow half of the last decade is
        // still visibly curved at reachable resolutions while this window is linear
        double deepest = 0.0;
        for (size_t i = 0; i < fit_s.size(); ++i) deepest = std::min(deepest, fit_s[i]);
        if (deepest < 0.0) {
            const double cutoff = deepest / std::sqrt(10.0);
            std::vector<double> ts, ys;
            for (size_t i = 0; i < fit_s.size(); ++i) {
                if (fit_s[i] < 0.0 && fit_s[i] <= cutoff) {
                    ts.push_back(fit_t[i]);
                    ys.push_back(-1.0 / fit_s[i]);
                }
            }
            const LineFit fit = fit_line(ts, ys);
            if (fit.ok && fit.b < 0.0) {
                result.observation.t_estimate = std::max(-fit.a / fit.b, t);
                result.observation.fit_quality = fit.r_squared;
                result.observation.rate_slope = fit.b;
            }
        }
    }
    return result;
}

CharTrace track_characteristic(double x0, const Field& u0, const ModelSpec& model,
                               const SolverConfig& config, const CriterionParams& params) {
    IntegrationResult r = integrate(u0, model, config, {x0}, params);
    return std::move(r.traces.front());
}

RiccatiReport riccati_check(const CharTrace& trace, double gamma, const BlowupObservation& obs,
                            double rel_tol) {
    RiccatiReport report;
    if (trace.samples.empty()) {
        report.detail = "empty trace";
        return report;
    }
    const CharSample& first = trace.samples.front();
    report.applicable = first.a * first.b < 0.0;
    if (!report.applicable) {
        report.h_bound_ok = true;  // vacuous: no Riccati regime
        report.breakdown_before_bound = true;
        report.detail = "a*b >= 0 at the seed: no Riccati regime";
        return report;
    }
    report.h0 = first.h;
    report.t_star_bound = 2.0 / (gamma * report.h0);
    report.h_bound_ok = true;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (const CharSample& s : trace.samples) {
        const double denom = 1.0 - 0.5 * gamma * report.h0 * s.t;
        if (denom <= 0.0) break;  // past the guaranteed-blowup time
        const double lower = report.h0 / denom;
        const double margin = s.h / lower;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (s.h < lower * (1.0 - rel_tol)) report.h_bound_ok = false;
    }
    const double t_obs = obs.t_estimate.value_or(obs.t_last);
    report.breakdown_before_bound = obs.blew_up && t_obs <= report.t_star_bound;
    return report;
}

}  // namespace rodwave
