#ifndef RODWAVE_MODEL_HPP
#define RODWAVE_MODEL_HPP

#include <string>
#include <vector>

namespace rodwave {

/// Dense polynomial with ascending coefficients; evaluation by Horner's rule.
struct Polynomial {
    std::vector<double> coeffs;

    double operator()(double v) const;
    Polynomial derivative() const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class Preset { camassa_holm, rod, power, custom };

const char* to_string(Preset p);

/// An equation instance: convective flux f, source g, their exact polynomial derivatives,
/// and the certified convexity floor gamma <= min f'' on [range_lo, range_hi].
struct ModelSpec {
    Preset preset = Preset::custom;
    double kappa = 0.0;        // camassa_holm / power dispersion parameter
    double rod_gamma = 0.0;    // rod preset parameter
    int power_q = 0;           // power preset exponent

    Polynomial f, f_prime, f_second;
    Polynomial g, g_prime;
    double gamma = 0.0;
    double range_lo = -8.0;
    double range_hi = 8.0;
};

// Presets. preset_rod rejects gamma <= 0; preset_power and custom_model reject models whose
// f'' is not positive on the declared range (gamma is the sampled minimum of f'' there).
ModelSpec preset_camassa_holm(double kappa);
ModelSpec preset_rod(double gamma);
ModelSpec preset_power(int q, double kappa, double range_lo = -8.0, double range_hi = 8.0);
ModelSpec custom_model(Polynomial f, Polynomial g, double range_lo = -8.0, double range_hi = 8.0);

/// Checks the ModelSpec invariants by dense sampling: f'' >= gamma > 0 on the range and
/// finite-difference consistency of the stored derivatives. Throws on violation.
void validate_model(const ModelSpec& model, int samples = 10000);

enum class CriterionCase { c1, c2, none };

const char* to_string(CriterionCase c);

/// Derived constants of the local blowup criterion u0'(x0) < -beta*|u0(x0) - c|.
/// c1: g bounded below, m = min g, phi = sqrt((g-m)/gamma) K-Lipschitz, K <= 1,
///     alpha largest root of 2K^2 a^2 + a - 1 = 0, beta = (sqrt(1+8K^2)-1)/2.
/// c2: g bounded above, M = max g, psi = sqrt((M-g)/gamma) K-Lipschitz, K <= 1/sqrt(8),
///     alpha smallest root of 2K^2 a^2 - a + 1 = 0, beta = (1-sqrt(1-8K^2))/2.
/// K = 0 (constant g) takes alpha = 1, beta = 0. In both cases beta = 2 K^2 alpha.
struct CriterionParams {
    CriterionCase kind = CriterionCase::none;
    double c = 0.0;            // arg-extremum of g
    double extremum = 0.0;     // m (c1) or M (c2)
    double lipschitz_k = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string diagnostic;    // set when kind == none
};

/// Analytic for camassa_holm and rod presets; dense-sampling path otherwise.
/// Returns kind == none (with diagnostic) when neither case applies.
CriterionParams derive_criterion_params(const ModelSpec& model);

/// Sampling-based derivation: locates the extremum of g on the model range by grid search
/// (parabolic refinement) and estimates K as the maximal centered-difference slope of
/// phi/psi. Used for power/custom models and as a cross-check of the analytic path.
CriterionParams derive_criterion_params_sampled(const ModelSpec& model, int samples = 100000);

}  // namespace rodwave

#endif
