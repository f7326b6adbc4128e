#ifndef RODWAVE_CONFIG_HPP
#define RODWAVE_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rodwave/dynamics.hpp"
#include "rodwave/grid.hpp"
#include "rodwave/model.hpp"

namespace rodwave {

/// Config/CLI error that names the offending field.
struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_, const std::string& message)
        : std::runtime_error("config error: " + field_ + ": " + message), field(std::move(field_)) {}
};

enum class Profile { sine, gaussian_bump, derivative_bump, smoothed_peakon, samples };

struct ExperimentConfig {
    // model block
    std::string model;  // camassa_holm | rod | power | custom
    double kappa = 0.0;
    double gamma = 1.0;
    int q = 1;
    std::vector<double> f_coeffs, g_coeffs;  // custom model polynomials, ascending
    double range_lo = -8.0, range_hi = 8.0;

    // grid block
    double length = 0.0;
    int n = 0;

    // solver block
    SolverConfig solver;

    // initial datum block
    Profile profile = Profile::sine;
    double amplitude = 1.0;
    double phase = 0.0;
    double width = 1.0;
    double center = -1.0;  // < 0: defaults to L/2
    double offset_c = 0.0;
    double mollification = 0.05;
    std::string samples_path;

    std::vector<double> seeds;  // characteristic seed positions
    std::string out;

    // sweep axes: key -> values (keys "sweep_<param>" in the file)
    std::map<std::string, std::vector<double>> sweep;
};

/// Parses the flat `key = value` format ('#' comments, comma-separated lists,
/// optional quotes around strings). Unknown keys are errors.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Structural validation (n power of two, positive t_end, ...). Throws ConfigError
/// naming the field.
void validate(const ExperimentConfig& config);

ModelSpec build_model(const ExperimentConfig& config);
Field build_initial_field(const ExperimentConfig& config);

/// Applies a sweep override (e.g. "gamma" = 2.5) to a copy of the config.
ExperimentConfig with_override(const ExperimentConfig& config, const std::string& key, double value);

}  // namespace rodwave

#endif
