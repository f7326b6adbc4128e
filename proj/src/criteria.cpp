#include "rodwave/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rodwave/dynamics.hpp"
#include "rodwave/kernel.hpp"

namespace rodwave {

const char* to_string(CriterionKind k) {
    switch (k) {
        case CriterionKind::local_thm2: return "local_thm2";
        case CriterionKind::tyz: return "tyz";
        case CriterionKind::sign_change: return "sign_change";
        case CriterionKind::decay_monotonicity: return "decay_monotonicity";
    }
    return "?";
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// T* bound at a witness; the literal four-over form 4/(gamma*sqrt(4 s^2 - (2 beta)^2 d^2))
// equals 2/(gamma*sqrt(s^2 - beta^2 d^2)) since (sqrt(1 +- 8K^2) - 1)^2 = 4 beta^2.
double local_bound(double slope, double delta, double beta, double gamma) {
    const double disc = slope * slope - beta * beta * delta * delta;
    return 2.0 / (gamma * std::sqrt(disc));
}

double local_bound_literal(double slope, double delta, double beta, double gamma) {
    const double q = 2.0 * beta;  // sqrt(1 +- 8K^2) - 1, sign by case
    const double disc = 4.0 * slope * slope - q * q * delta * delta;
    return 4.0 / (gamma * std::sqrt(disc));
}

// max of |poly| and max of poly on [-r, r]: endpoints, v = 0, quadratic vertex, critical
// points of monomial-plus-linear shapes are all covered by candidates + dense samples.
double poly_max_on(const Polynomial& p, double r, bool absolute, int samples = 10000) {
    auto value = [&](double v) { return absolute ? std::abs(p(v)) : p(v); };
    double best = value(-r);
    auto consider = [&](double v) {
        if (v >= -r && v <= r) best = std::max(best, value(v));
    };
    consider(r);
    consider(0.0);
    if (p.degree() == 2 && p.coeffs[2] != 0.0) consider(-0.5 * p.coeffs[1] / p.coeffs[2]);
    for (int i = 0; i <= samples; ++i) consider(-r + 2.0 * r * i / samples);
    return best;
}

}  // namespace

bool line_emulating(const Field& u0, double c, double tol) {
    return std::abs(u0[0] - c) <= tol && std::abs(u0[u0.size() - 1] - c) <= tol;
}

CriterionReport check_local(const Field& u0, const CriterionParams& params, double gamma) {
    if (params.kind == CriterionCase::none)
        throw std::invalid_argument("check_local: criterion params are inapplicable (case none)");
    const Field ux = spectral_derivative(u0);
    const double beta = params.beta, c = params.c;

    CriterionReport report;
    report.kind = CriterionKind::local_thm2;

    int best_j = -1;
    double best_disc = 0.0;     // s^2 - beta^2 d^2, maximized
    double best_margin = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < u0.grid.n; ++j) {
        const double s = ux[j];
        const double d = u0[j] - c;
        const double margin = -beta * std::abs(d) - s;  // > 0 iff strict condition holds
        best_margin = std::max(best_margin, margin);
        if (margin > 0.0) {
            const double disc = s * s - beta * beta * d * d;
            if (best_j < 0 || disc > best_disc) {
                best_j = j;
                best_disc = disc;
            }
        }
    }

    if (best_j < 0) {
        report.satisfied = false;
        if (best_margin >= -1e-14) report.detail = "boundary, not certified (equality up to roundoff)";
        else report.detail = "no grid point satisfies u0' < -beta|u0 - c|";
        return report;
    }

    // sharpen the winning point: 10x trigonometric resampling of the surrounding cells
    const Spectrum spec = analyze(u0);
    double best_x = u0.grid.x(best_j);
    double best_u = u0[best_j], best_s = ux[best_j];
    for (int i = -10; i <= 10; ++i) {
        const double x = wrap_position(u0.grid.x(best_j) + i * u0.grid.dx / 10.0, u0.grid.length);
        const double uu = trig_eval(spec, x);
        const double s = trig_eval_derivative(spec, x);
        const double d = uu - c;
        if (s < -beta * std::abs(d)) {
            const double disc = s * s - beta * beta * d * d;
            if (disc > best_disc) {
                best_disc = disc;
                best_x = x;
                best_u = uu;
                best_s = s;
            }
        }
    }

    report.satisfied = true;
    report.witness = Witness{best_x, best_u, best_s};
    const double bound = local_bound(best_s, best_u - c, beta, gamma);
    report.t_star_bound = bound;
    report.detail = "T* <= " + fmt(bound) +
                    " (literal four-over form " + fmt(local_bound_literal(best_s, best_u - c, beta, gamma)) + ")";
    return report;
}

CriterionReport check_tyz(const Field& u0, const ModelSpec& model) {
    CriterionReport report;
    report.kind = CriterionKind::tyz;

    const double r = std::sqrt(energy(u0));
    const double sup_g = poly_max_on(model.g, r, true);
    const double sup_f2 = poly_max_on(model.f_second, r, false);
    const double c0 = 2.0 * sup_g + 0.5 * r * r * sup_f2;
    const double gamma = model.gamma;
    const double threshold = -std::sqrt(2.0 * c0 / gamma);

    const Field ux = spectral_derivative(u0);
    int best_j = 0;
    for (int j = 1; j < u0.grid.n; ++j)
        if (ux[j] < ux[best_j]) best_j = j;

    // sharpen the steepest point by 10x trigonometric resampling
    const Spectrum spec = analyze(u0);
    double best_x = u0.grid.x(best_j), best_s = ux[best_j];
    for (int i = -10; i <= 10; ++i) {
        const double x = wrap_position(u0.grid.x(best_j) + i * u0.grid.dx / 10.0, u0.grid.length);
        const double s = trig_eval_derivative(spec, x);
        if (s < best_s) {
            best_s = s;
            best_x = x;
        }
    }

    std::ostringstream detail;
    detail.precision(12);
    detail << "r = " << r << ", C0 = " << c0 << ", threshold = " << threshold;
    report.detail = detail.str();

    if (!(best_s < threshold)) {
        report.satisfied = false;
        return report;
    }
    report.satisfied = true;
    report.witness = Witness{best_x, trig_eval(spec, best_x), best_s};
    const double root_c0 = std::sqrt(c0);
    const double z = std::sqrt(0.5 * gamma) * best_s;
    report.t_star_bound = std::log((z - root_c0) / (z + root_c0)) / std::sqrt(2.0 * c0 * gamma);
    return report;
}

CriterionReport check_sign_change(const Field& u0, const CriterionParams& params) {
    if (params.kind == CriterionCase::none)
        throw std::invalid_argument("check_sign_change: criterion params are inapplicable (case none)");
    const double c = params.c;
    constexpr double tol = 1e-12;

    CriterionReport report;
    report.kind = CriterionKind::sign_change;
    if (!line_emulating(u0, c)) {
        report.detail = "warning: domain does not emulate the line (boundary values differ from c by > 1e-6); ";
    }

    int first_above = -1, last_below = -1;
    for (int j = 1; j + 1 < u0.grid.n; ++j) {
        if (first_above < 0 && u0[j] > c + tol) first_above = j;
        if (u0[j] < c - tol) last_below = j;
    }
    if (first_above >= 0 && last_below > first_above) {
        report.satisfied = true;
        const Field ux = spectral_derivative(u0);
        report.witness = Witness{u0.grid.x(last_below), u0[last_below], ux[last_below]};
        report.detail += "u0(x1) > c > u0(x2) with x1 = " + fmt(u0.grid.x(first_above)) +
                         ", x2 = " + fmt(u0.grid.x(last_below));
    } else {
        report.satisfied = false;
        report.detail += "no interior pair x1 < x2 with u0(x1) > c > u0(x2)";
    }
    return report;
}

CriterionReport check_decay_monotonicity(const Field& u, const CriterionParams& params) {
    if (params.kind == CriterionCase::none)
        throw std::invalid_argument("check_decay_monotonicity: criterion params are inapplicable (case none)");
    const double beta = params.beta, c = params.c;
    const int n = u.grid.n;

    CriterionReport report;
    report.kind = CriterionKind::decay_monotonicity;

    bool marginal = false;
    int viol_begin = -1, viol_end = -1;

    // scan [0, L) as a line; maximal runs where u >= c (sign +1) and u <= c (sign -1)
    auto scan_runs = [&](int sign) {
        int start = 0;
        while (start < n) {
            while (start < n && !(sign > 0 ? u[start] >= c : u[start] <= c)) ++start;
            if (start >= n) break;
            int end = start;
            while (end + 1 < n && (sign > 0 ? u[end + 1] >= c : u[end + 1] <= c)) ++end;
            // w_i = e^{+-beta (x_i - x_start)} (u_i - c) must be nondecreasing on the run
            const double x_ref = u.grid.x(start);
            double w_prev = u[start] - c;
            for (int i = start + 1; i <= end; ++i) {
                const double w = std::exp(sign * beta * (u.grid.x(i) - x_ref)) * (u[i] - c);
                const double scale = 1.0 + std::max(std::abs(w), std::abs(w_prev));
                if (w < w_prev - 1e-12 * scale) {
                    if (viol_begin < 0) viol_begin = i - 1;
                    viol_end = i;
                } else if (std::abs(w - w_prev) <= 1e-9 * scale) {
                    marginal = true;
                }
                w_prev = w;
            }
            start = end + 1;
        }
    };
    scan_runs(+1);
    scan_runs(-1);

    if (viol_begin >= 0) {
        report.satisfied = true;
        const Field ux = spectral_derivative(u);
        report.witness = Witness{u.grid.x(viol_begin), u[viol_begin], ux[viol_begin]};
        report.detail = "monotonicity of e^{+-beta x}(u - c) violated on [" + fmt(u.grid.x(viol_begin)) +
                        ", " + fmt(u.grid.x(viol_end)) + "]";
    } else {
        report.satisfied = false;
        report.detail = marginal ? "boundary case: e^{+-beta x}(u - c) locally constant, not certified"
                                 : "no monotonicity violation";
    }
    return report;
}

Certificates certify(const Field& u0, const ModelSpec& model) {
    Certificates out;
    out.params = derive_criterion_params(model);

    if (out.params.kind != CriterionCase::none)
        out.reports.push_back(check_local(u0, out.params, model.gamma));
    out.reports.push_back(check_tyz(u0, model));
    if (out.params.kind != CriterionCase::none) {
        if (line_emulating(u0, out.params.c))
            out.reports.push_back(check_sign_change(u0, out.params));
        out.reports.push_back(check_decay_monotonicity(u0, out.params));
    }

    // both theorem bounds present: they bound the same T*; record the stronger one
    const CriterionReport* local = nullptr;
    const CriterionReport* global = nullptr;
    for (const CriterionReport& r : out.reports) {
        if (r.kind == CriterionKind::local_thm2 && r.satisfied) local = &r;
        if (r.kind == CriterionKind::tyz && r.satisfied) global = &r;
    }
    if (local && global) {
        if (!(*local->t_star_bound > 0.0) || !(*global->t_star_bound > 0.0))
            throw std::logic_error("certify: inconsistent T* bounds");
    }

    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](const CriterionReport& a, const CriterionReport& b) {
                         auto rank = [](const CriterionReport& r) {
                             if (r.satisfied && r.t_star_bound) return 0;
                             if (r.satisfied) return 1;
                             return 2;
                         };
                         const int ra = rank(a), rb = rank(b);
                         if (ra != rb) return ra < rb;
                         if (ra == 0) return *a.t_star_bound < *b.t_star_bound;
                         return false;
                     });
    return out;
}

}  // namespace rodwave
