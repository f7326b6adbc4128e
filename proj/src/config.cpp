#include "rodwave/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rodwave/io.hpp"

namespace rodwave {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string unquote(std::string s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (trim(value.substr(pos)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(key, "expected a number, got '" + value + "'");
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        long v = std::stol(value, &pos);
        if (trim(value.substr(pos)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(key, "expected an integer, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key, "expected true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    return out;
}

Profile parse_profile(const std::string& value) {
    if (value == "sine") return Profile::sine;
    if (value == "gaussian_bump") return Profile::gaussian_bump;
    if (value == "derivative_bump") return Profile::derivative_bump;
    if (value == "smoothed_peakon") return Profile::smoothed_peakon;
    if (value == "samples") return Profile::samples;
    throw ConfigError("profile", "unknown profile '" + value + "'");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = unquote(trim(line.substr(eq + 1)));

        if (key == "model") cfg.model = value;
        else if (key == "kappa") cfg.kappa = parse_double(key, value);
        else if (key == "gamma") cfg.gamma = parse_double(key, value);
        else if (key == "Q") cfg.q = static_cast<int>(parse_int(key, value));
        else if (key == "f_coeffs") cfg.f_coeffs = parse_list(key, value);
        else if (key == "g_coeffs") cfg.g_coeffs = parse_list(key, value);
        else if (key == "range_lo") cfg.range_lo = parse_double(key, value);
        else if (key == "range_hi") cfg.range_hi = parse_double(key, value);
        else if (key == "L") cfg.length = parse_double(key, value);
        else if (key == "n") cfg.n = static_cast<int>(parse_int(key, value));
        else if (key == "cfl") cfg.solver.cfl = parse_double(key, value);
        else if (key == "dt_min") cfg.solver.dt_min = parse_double(key, value);
        else if (key == "slope_floor") cfg.solver.slope_floor = parse_double(key, value);
        else if (key == "t_end") cfg.solver.t_end = parse_double(key, value);
        else if (key == "record_every") cfg.solver.record_every = parse_double(key, value);
        else if (key == "energy_drift_stop") cfg.solver.energy_drift_stop = parse_double(key, value);
        else if (key == "dealias") cfg.solver.dealias = parse_bool(key, value);
        else if (key == "trig_char_interp") cfg.solver.trig_char_interp = parse_bool(key, value);
        else if (key == "profile") cfg.profile = parse_profile(value);
        else if (key == "amplitude") cfg.amplitude = parse_double(key, value);
        else if (key == "phase") cfg.phase = parse_double(key, value);
        else if (key == "width") cfg.width = parse_double(key, value);
        else if (key == "center") cfg.center = parse_double(key, value);
        else if (key == "offset_c") cfg.offset_c = parse_double(key, value);
        else if (key == "mollification") cfg.mollification = parse_double(key, value);
        else if (key == "samples_path") cfg.samples_path = value;
        else if (key == "seeds") cfg.seeds = parse_list(key, value);
        else if (key == "out") cfg.out = value;
        else if (key.rfind("sweep_", 0) == 0) cfg.sweep[key.substr(6)] = parse_list(key, value);
        else throw ConfigError(key, "unknown key");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.model != "camassa_holm" && cfg.model != "rod" && cfg.model != "power" && cfg.model != "custom")
        throw ConfigError("model", cfg.model.empty() ? "required (camassa_holm|rod|power|custom)"
                                                     : "unknown model '" + cfg.model + "'");
    if (cfg.model == "custom" && (cfg.f_coeffs.empty() || cfg.g_coeffs.empty()))
        throw ConfigError("f_coeffs", "custom model requires f_coeffs and g_coeffs");
    if (!(cfg.length > 0.0)) throw ConfigError("L", "must be positive");
    if (cfg.n < 16 || (cfg.n & (cfg.n - 1)) != 0)
        throw ConfigError("n", "must be a power of two >= 16, got " + std::to_string(cfg.n));
    if (!(cfg.solver.t_end > 0.0)) throw ConfigError("t_end", "must be positive");
    if (!(cfg.solver.cfl > 0.0 && cfg.solver.cfl <= 1.0)) throw ConfigError("cfl", "must be in (0, 1]");
    if (!(cfg.solver.dt_min > 0.0)) throw ConfigError("dt_min", "must be positive");
    if (!(cfg.solver.dt_min < cfg.solver.t_end)) throw ConfigError("dt_min", "must be < t_end");
    if (!(cfg.solver.slope_floor < 0.0)) throw ConfigError("slope_floor", "must be negative");
    if (cfg.solver.record_every < 0.0) throw ConfigError("record_every", "must be positive");
    if (cfg.solver.energy_drift_stop < 0.0) throw ConfigError("energy_drift_stop", "must be nonnegative");
    if (cfg.profile == Profile::samples && cfg.samples_path.empty())
        throw ConfigError("samples_path", "required for profile = samples");
    if (!(cfg.range_lo < cfg.range_hi)) throw ConfigError("range_lo", "requires range_lo < range_hi");
    for (double s : cfg.seeds)
        if (!std::isfinite(s)) throw ConfigError("seeds", "seed positions must be finite");
    for (double v : {cfg.amplitude, cfg.phase, cfg.width, cfg.offset_c, cfg.mollification})
        if (!std::isfinite(v)) throw ConfigError("profile", "profile parameters must be finite");
}

ModelSpec build_model(const ExperimentConfig& cfg) {
    if (cfg.model == "camassa_holm") return preset_camassa_holm(cfg.kappa);
    if (cfg.model == "rod") {
        try {
            return preset_rod(cfg.gamma);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("gamma", e.what());
        }
    }
    if (cfg.model == "power") {
        try {
            return preset_power(cfg.q, cfg.kappa, cfg.range_lo, cfg.range_hi);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("Q", e.what());
        }
    }
    try {
        return custom_model(Polynomial{cfg.f_coeffs}, Polynomial{cfg.g_coeffs}, cfg.range_lo, cfg.range_hi);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("f_coeffs", e.what());
    }
}

Field build_initial_field(const ExperimentConfig& cfg) {
    const Grid grid = make_grid(cfg.length, cfg.n);
    const double center = cfg.center < 0.0 ? 0.5 * cfg.length : cfg.center;

    switch (cfg.profile) {
        case Profile::sine: {
            const double k = 2.0 * std::numbers::pi / cfg.length;
            return make_field(grid, [&](double x) { return cfg.amplitude * std::sin(k * x + cfg.phase); });
        }
        case Profile::gaussian_bump:
            return make_field(grid, [&](double x) {
                const double s = periodic_delta(x - center, cfg.length);
                return cfg.offset_c + cfg.amplitude * std::exp(-0.5 * s * s / (cfg.width * cfg.width));
            });
        case Profile::derivative_bump:
            // d/dx of a Gaussian bump, normalized so the peak value is `amplitude`
            // (positive lobe left of the center for amplitude > 0)
            return make_field(grid, [&](double x) {
                const double s = periodic_delta(x - center, cfg.length);
                const double w = cfg.width;
                return cfg.offset_c - cfg.amplitude * (s / w) * std::exp(0.5 - 0.5 * s * s / (w * w));
            });
        case Profile::smoothed_peakon:
            return make_field(grid, [&](double x) {
                const double s = periodic_delta(x - center, cfg.length);
                const double eps = cfg.mollification;
                return cfg.amplitude * std::exp(-(std::sqrt(s * s + eps * eps) - eps));
            });
        case Profile::samples: {
            std::vector<double> values;
            try {
                values = read_csv_column(cfg.samples_path, 1);
            } catch (const std::exception& e) {
                throw ConfigError("samples_path", e.what());
            }
            if (static_cast<int>(values.size()) != grid.n)
                throw ConfigError("samples_path", "expected " + std::to_string(grid.n) + " rows, got " +
                                                      std::to_string(values.size()));
            Field f = make_field(grid);
            f.values = std::move(values);
            return f;
        }
    }
    throw ConfigError("profile", "unhandled profile");
}

ExperimentConfig with_override(const ExperimentConfig& cfg, const std::string& key, double value) {
    ExperimentConfig out = cfg;
    if (key == "kappa") out.kappa = value;
    else if (key == "gamma") out.gamma = value;
    else if (key == "amplitude") out.amplitude = value;
    else if (key == "width") out.width = value;
    else if (key == "center") out.center = value;
    else if (key == "offset_c") out.offset_c = value;
    else if (key == "phase") out.phase = value;
    else if (key == "mollification") out.mollification = value;
    else if (key == "cfl") out.solver.cfl = value;
    else if (key == "t_end") out.solver.t_end = value;
    else throw ConfigError("sweep_" + key, "parameter cannot be swept");
    return out;
}

}  // namespace rodwave
