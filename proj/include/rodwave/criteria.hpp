#ifndef RODWAVE_CRITERIA_HPP
#define RODWAVE_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "rodwave/grid.hpp"
#include "rodwave/model.hpp"

namespace rodwave {

enum class CriterionKind { local_thm2, tyz, sign_change, decay_monotonicity };

const char* to_string(CriterionKind k);

struct Witness {
    double x0 = 0.0;
    double u0_at_x0 = 0.0;
    double slope_at_x0 = 0.0;
};

struct CriterionReport {
    CriterionKind kind = CriterionKind::local_thm2;
    bool satisfied = false;
    std::optional<Witness> witness;
    std::optional<double> t_star_bound;
    std::string detail;
};

/// Local slope criterion: satisfied iff some grid point has u0'(x0) < -beta*|u0(x0) - c|
/// (strict, zero tolerance; u0' spectral). The winning point is sharpened by a 10x
/// trigonometric resampling of its cell. The reported bound is
/// 2/(gamma*sqrt(u0'^2 - beta^2 (u0-c)^2)), identical to the four-over form in detail.
/// Throws std::invalid_argument when params.kind == none.
CriterionReport check_local(const Field& u0, const CriterionParams& params, double gamma);

/// Global criterion from the H^1 norm: with r = ||u0||_{H^1}, C0 = 2 sup_{|v|<=r} |g(v)|
/// + r^2/2 sup_{|v|<=r} f''(v), satisfied iff some point has u0'(x0) < -sqrt(2 C0/gamma);
/// bound is the log form at the steepest witness.
CriterionReport check_tyz(const Field& u0, const ModelSpec& model);

/// Sign-change obstruction: satisfied iff some x1 < x2 in the interior has
/// u0(x1) > c > u0(x2) beyond 1e-12. No bound. Warns in detail when the boundary values
/// are not flat at c (domain does not emulate the line).
CriterionReport check_sign_change(const Field& u0, const CriterionParams& params);

/// Decay/monotonicity obstruction: on maximal intervals where u >= c the map
/// e^{beta x}(u - c) must be nondecreasing, and e^{-beta x}(u - c) where u <= c.
/// Any strict violation certifies blowup of the datum; marginal (zero-derivative)
/// profiles are flagged as boundary cases in detail.
CriterionReport check_decay_monotonicity(const Field& u, const CriterionParams& params);

struct Certificates {
    CriterionParams params;
    std::vector<CriterionReport> reports;  // strongest bound first
};

/// Derives criterion params, runs the applicable checks, and orders certificates by
/// strength of bound. Theorem-based checks are skipped when params.kind == none;
/// sign_change is skipped unless the datum is flat at c near both ends.
Certificates certify(const Field& u0, const ModelSpec& model);

bool line_emulating(const Field& u0, double c, double tol = 1e-6);

}  // namespace rodwave

#endif
