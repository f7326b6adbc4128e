#include "rodwave/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rodwave {

double Polynomial::operator()(double v) const {
    double acc = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * v + coeffs[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs[i - 1] = coeffs[i] * static_cast<double>(i);
    return d;
}

const char* to_string(Preset p) {
    switch (p) {
        case Preset::camassa_holm: return "camassa_holm";
        case Preset::rod: return "rod";
        case Preset::power: return "power";
        case Preset::custom: return "custom";
    }
    return "?";
}

const char* to_string(CriterionCase c) {
    switch (c) {
        case CriterionCase::c1: return "C1";
        case CriterionCase::c2: return "C2";
        case CriterionCase::none: return "none";
    }
    return "?";
}

namespace {

double sampled_min_f_second(const Polynomial& f_second, double lo, double hi, int samples) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double v = lo + (hi - lo) * i / samples;
        m = std::min(m, f_second(v));
    }
    return m;
}

ModelSpec finalize(ModelSpec m) {
    m.f_prime = m.f.derivative();
    m.f_second = m.f_prime.derivative();
    m.g_prime = m.g.derivative();
    return m;
}

double alpha_from_k(CriterionCase kind, double k) {
    if (k == 0.0) return 1.0;
    const double k2 = k * k;
    if (kind == CriterionCase::c1) return (std::sqrt(1.0 + 8.0 * k2) - 1.0) / (4.0 * k2);
    return (1.0 - std::sqrt(std::max(0.0, 1.0 - 8.0 * k2))) / (4.0 * k2);
}

double beta_from_k(CriterionCase kind, double k) {
    const double k2 = k * k;
    if (kind == CriterionCase::c1) return 0.5 * (std::sqrt(1.0 + 8.0 * k2) - 1.0);
    return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 8.0 * k2)));
}

CriterionParams make_params(CriterionCase kind, double c, double extremum, double k) {
    CriterionParams p;
    p.kind = kind;
    p.c = c + 0.0;  // flush -0.0
    p.extremum = extremum + 0.0;
    p.lipschitz_k = k;
    p.alpha = alpha_from_k(kind, k);
    p.beta = beta_from_k(kind, k);
    return p;
}

CriterionParams inapplicable(const std::string& why) {
    CriterionParams p;
    p.kind = CriterionCase::none;
    p.diagnostic = why;
    return p;
}

// closed-interval admissibility with a roundoff margin; the sampled path needs more
// slack since centered differences of |.|-type maps carry ~1e-11 of fp noise
bool k_admissible(CriterionCase kind, double k, double slack) {
    if (kind == CriterionCase::c1) return k <= 1.0 + slack;
    return k * k <= 0.125 * (1.0 + slack);
}

double clamp_admissible(CriterionCase kind, double k) {
    const double bound = kind == CriterionCase::c1 ? 1.0 : std::sqrt(0.125);
    return std::min(k, bound);
}

}  // namespace

ModelSpec preset_camassa_holm(double kappa) {
    ModelSpec m;
    m.preset = Preset::camassa_holm;
    m.kappa = kappa;
    m.f.coeffs = {0.0, 0.0, 0.5};
    m.g.coeffs = {0.0, kappa, 1.0};
    m.gamma = 1.0;
    return finalize(m);
}

ModelSpec preset_rod(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("rod preset requires gamma > 0");
    ModelSpec m;
    m.preset = Preset::rod;
    m.rod_gamma = gamma;
    m.f.coeffs = {0.0, 0.0, 0.5 * gamma};
    m.g.coeffs = {0.0, 0.0, 0.5 * (3.0 - gamma)};
    m.gamma = gamma;
    return finalize(m);
}

ModelSpec preset_power(int q, double kappa, double range_lo, double range_hi) {
    if (q < 1) throw std::invalid_argument("power preset requires Q >= 1");
    if (!(range_lo < range_hi)) throw std::invalid_argument("power preset requires range_lo < range_hi");
    ModelSpec m;
    m.preset = Preset::power;
    m.power_q = q;
    m.kappa = kappa;
    m.range_lo = range_lo;
    m.range_hi = range_hi;
    m.f.coeffs.assign(static_cast<size_t>(q) + 2, 0.0);
    m.f.coeffs.back() = 1.0 / (q + 1);
    m.g.coeffs.assign(static_cast<size_t>(q) + 2, 0.0);
    m.g.coeffs[1] = kappa;
    m.g.coeffs.back() = static_cast<double>(q * q + 3 * q) / (2.0 * (q + 1));
    m = finalize(m);
    m.gamma = sampled_min_f_second(m.f_second, range_lo, range_hi, 100000);
    if (!(m.gamma > 0.0))
        throw std::invalid_argument("power preset: f'' is not positive on the declared range");
    return m;
}

ModelSpec custom_model(Polynomial f, Polynomial g, double range_lo, double range_hi) {
    if (!(range_lo < range_hi)) throw std::invalid_argument("custom model requires range_lo < range_hi");
    ModelSpec m;
    m.preset = Preset::custom;
    m.f = std::move(f);
    m.g = std::move(g);
    m.range_lo = range_lo;
    m.range_hi = range_hi;
    m = finalize(m);
    m.gamma = sampled_min_f_second(m.f_second, range_lo, range_hi, 100000);
    if (!(m.gamma > 0.0))
        throw std::invalid_argument("custom model: f'' is not positive on the declared range");
    return m;
}

void validate_model(const ModelSpec& model, int samples) {
    if (!(model.gamma > 0.0)) throw std::invalid_argument("model gamma must be positive");
    const double lo = model.range_lo, hi = model.range_hi;
    const double h = (hi - lo) / samples * 0.5;
    for (int i = 0; i <= samples; ++i) {
        const double v = lo + (hi - lo) * i / samples;
        if (model.f_second(v) < model.gamma - 1e-9 * (1.0 + std::abs(model.gamma)))
            throw std::invalid_argument("model invariant violated: f'' < gamma on range");
        if (i > 0 && i < samples) {
            const double fd1 = (model.f(v + h) - model.f(v - h)) / (2.0 * h);
            const double fd2 = (model.f_prime(v + h) - model.f_prime(v - h)) / (2.0 * h);
            const double gd = (model.g(v + h) - model.g(v - h)) / (2.0 * h);
            const double s1 = 1.0 + std::abs(fd1), s2 = 1.0 + std::abs(fd2), s3 = 1.0 + std::abs(gd);
            if (std::abs(model.f_prime(v) - fd1) > 1e-6 * s1 ||
                std::abs(model.f_second(v) - fd2) > 1e-6 * s2 ||
                std::abs(model.g_prime(v) - gd) > 1e-6 * s3)
                throw std::invalid_argument("model invariant violated: stored derivatives inconsistent");
        }
    }
}

CriterionParams derive_criterion_params(const ModelSpec& model) {
    if (model.preset == Preset::camassa_holm) {
        // g = kappa*u + u^2, min at c = -kappa/2; phi = |u + kappa/2|, K = 1
        return make_params(CriterionCase::c1, -0.5 * model.kappa, -0.25 * model.kappa * model.kappa, 1.0);
    }
    if (model.preset == Preset::rod) {
        const double gamma = model.rod_gamma;
        if (gamma < 3.0) {
            const double k = std::sqrt((3.0 - gamma) / (2.0 * gamma));
            if (!k_admissible(CriterionCase::c1, k, 1e-12))
                return inapplicable("rod: K = sqrt((3-gamma)/(2 gamma)) > 1 (requires gamma >= 1)");
            return make_params(CriterionCase::c1, 0.0, 0.0, clamp_admissible(CriterionCase::c1, k));
        }
        if (gamma == 3.0) return make_params(CriterionCase::c1, 0.0, 0.0, 0.0);
        const double k = std::sqrt((gamma - 3.0) / (2.0 * gamma));
        if (!k_admissible(CriterionCase::c2, k, 1e-12))
            return inapplicable("rod: K = sqrt((gamma-3)/(2 gamma)) > 1/sqrt(8) (requires gamma <= 4)");
        return make_params(CriterionCase::c2, 0.0, 0.0, clamp_admissible(CriterionCase::c2, k));
    }
    return derive_criterion_params_sampled(model);
}

CriterionParams derive_criterion_params_sampled(const ModelSpec& model, int samples) {
    const double lo = model.range_lo, hi = model.range_hi;
    const double h = (hi - lo) / samples;

    std::vector<double> gv(static_cast<size_t>(samples) + 1);
    double gmin = std::numeric_limits<double>::infinity();
    double gmax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        gv[static_cast<size_t>(i)] = model.g(lo + h * i);
        gmin = std::min(gmin, gv[static_cast<size_t>(i)]);
        gmax = std::max(gmax, gv[static_cast<size_t>(i)]);
    }

    // arg-extremizer: among global extremizers pick smallest |v|, ties toward -inf;
    // refine interior hits by the parabola through the three neighbouring samples.
    auto pick_extremizer = [&](bool minimum, double& c_out, double& val_out, bool& interior_out) {
        const double target = minimum ? gmin : gmax;
        const double tol = 1e-12 * (1.0 + std::abs(target));
        int best = -1;
        for (int i = 0; i <= samples; ++i) {
            if (std::abs(gv[static_cast<size_t>(i)] - target) > tol) continue;
            const double v = lo + h * i;
            if (best < 0) { best = i; continue; }
            const double vb = lo + h * best;
            if (std::abs(v) < std::abs(vb) - tol || (std::abs(std::abs(v) - std::abs(vb)) <= tol && v < vb))
                best = i;
        }
        interior_out = best > 0 && best < samples;
        double c = lo + h * best, val = gv[static_cast<size_t>(best)];
        if (interior_out) {
            const double y0 = gv[static_cast<size_t>(best - 1)], y1 = val, y2 = gv[static_cast<size_t>(best + 1)];
            const double denom = y0 - 2.0 * y1 + y2;
            if (std::abs(denom) > 0.0) {
                const double shift = 0.5 * (y0 - y2) / denom;
                if (std::abs(shift) <= 1.0) {
                    c += shift * h;
                    val = model.g(c);
                }
            }
        }
        c_out = c;
        val_out = val;
    };

    auto estimate_k = [&](double extremum, bool below) {
        // phi = sqrt((g - m)/gamma) or psi = sqrt((M - g)/gamma); max centered-difference slope
        std::vector<double> phi(gv.size());
        for (size_t i = 0; i < gv.size(); ++i) {
            const double d = below ? gv[i] - extremum : extremum - gv[i];
            phi[i] = std::sqrt(std::max(0.0, d) / model.gamma);
        }
        double k = 0.0;
        for (size_t i = 1; i + 1 < phi.size(); ++i)
            k = std::max(k, std::abs(phi[i + 1] - phi[i - 1]) / (2.0 * h));
        return k;
    };

    const bool g_constant = gmax - gmin <= 1e-12 * (1.0 + std::abs(gmax));

    double c1_c = 0.0, c1_m = 0.0, c2_c = 0.0, c2_m = 0.0;
    bool c1_interior = false, c2_interior = false;
    pick_extremizer(true, c1_c, c1_m, c1_interior);
    pick_extremizer(false, c2_c, c2_m, c2_interior);

    if (g_constant) return make_params(CriterionCase::c1, c1_c, gmin, 0.0);

    constexpr double kSampledSlack = 1e-9;
    std::string why;
    if (c1_interior) {
        const double k = estimate_k(c1_m, true);
        if (k_admissible(CriterionCase::c1, k, kSampledSlack))
            return make_params(CriterionCase::c1, c1_c, c1_m, clamp_admissible(CriterionCase::c1, k));
        why = "C1: Lipschitz constant of phi exceeds 1";
    } else {
        why = "C1: min of g attained only on the range boundary (g unbounded below?)";
    }
    if (c2_interior) {
        const double k = estimate_k(c2_m, false);
        if (k_admissible(CriterionCase::c2, k, kSampledSlack))
            return make_params(CriterionCase::c2, c2_c, c2_m, clamp_admissible(CriterionCase::c2, k));
        why += "; C2: Lipschitz constant of psi exceeds 1/sqrt(8)";
    } else {
        why += "; C2: max of g attained only on the range boundary (g unbounded above?)";
    }
    return inapplicable(why);
}

}  // namespace rodwave
