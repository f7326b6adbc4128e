#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rodwave/dynamics.hpp"
#include "rodwave/kernel.hpp"

using namespace rodwave;
using oracles::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

Field canonical_datum(int n) {  // u0 = -sin(x) on [0, 2*pi)
    return make_field(make_grid(2.0 * kPi, n), [](double x) { return -std::sin(x); });
}

SolverConfig quick_blowup_config() {
    SolverConfig cfg;
    cfg.t_end = 3.0;
    cfg.record_every = 0.01;
    cfg.slope_floor = -200.0;
    return cfg;
}

}  // namespace

TEST_CASE("rhs vanishes on constant states") {
    const Grid grid = make_grid(2.0 * kPi, 64);
    for (const ModelSpec& m : {preset_camassa_holm(1.0), preset_rod(2.5)}) {
        const Field u = make_field(grid, [](double) { return 0.8; });
        CHECK(max_abs(rhs(u, m)) < 1e-13);
    }
}

TEST_CASE("rhs matches the quadrature-convolution oracle") {
    const Grid grid = make_grid(2.0 * kPi, 256);
    const ModelSpec model = preset_camassa_holm(0.0);
    const Field u = make_field(grid, [](double x) { return 0.1 * std::sin(x); });
    const Field ux = spectral_derivative(u);

    Field w = make_field(grid);
    for (int j = 0; j < grid.n; ++j)
        w[j] = model.g(u[j]) + 0.5 * model.f_second(u[j]) * ux[j] * ux[j];
    const Field conv = oracles::quadrature_convolution(w, oracles::Kernel::dp);
    Field expected = make_field(grid);
    for (int j = 0; j < grid.n; ++j) expected[j] = -model.f_prime(u[j]) * ux[j] - conv[j];

    CHECK(max_abs_diff(rhs(u, model), expected) < 1e-8);
}

TEST_CASE("rod nonlinearity symmetries: even-parity invariance and reflection equivariance") {
    std::mt19937 rng(7);
    const Grid grid = make_grid(2.0 * kPi, 128);
    const ModelSpec model = preset_rod(2.0);
    const Field u = oracles::random_smooth(grid, rng);

    // f and g even: both rhs terms are invariant under u -> -u
    Field neg = u;
    for (int j = 0; j < grid.n; ++j) neg[j] = -u[j];
    CHECK(max_abs_diff(rhs(neg, model), rhs(u, model)) < 1e-11);

    // the sign flip combined with spatial reflection is an odd symmetry
    Field refl = u;
    for (int j = 0; j < grid.n; ++j) refl[j] = -u[(grid.n - j) % grid.n];
    const Field lhs = rhs(refl, model);
    const Field base = rhs(u, model);
    double worst = 0.0;
    for (int j = 0; j < grid.n; ++j)
        worst = std::max(worst, std::abs(lhs[j] + base[(grid.n - j) % grid.n]));
    CHECK(worst < 1e-11);
}

TEST_CASE("energy quadrature: frozen closed-form values") {
    const Grid grid = make_grid(2.0 * kPi, 256);
    CHECK(energy(make_field(grid)) == 0.0);
    CHECK(energy(make_field(grid, [](double x) { return std::sin(x); })) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-12));
    CHECK(energy(make_field(grid, [](double x) { return 1.0 + 0.5 * std::cos(x); })) ==
          doctest::Approx(2.5 * kPi).epsilon(1e-12));
}

TEST_CASE("constant data are equilibria") {
    const Grid grid = make_grid(2.0 * kPi, 64);
    const Field u0 = make_field(grid, [](double) { return 1.0; });
    SolverConfig cfg;
    cfg.t_end = 2.0;
    cfg.record_every = 0.5;
    const IntegrationResult r = integrate(u0, preset_camassa_holm(0.0), cfg);
    CHECK(!r.observation.blew_up);
    CHECK(r.observation.stop_reason == "t_end");
    for (const Diagnostics& d : r.trajectory) {
        CHECK(d.energy == doctest::Approx(r.trajectory.front().energy).epsilon(1e-12));
        CHECK(std::abs(d.min_ux) < 1e-12);
    }
    for (int j = 0; j < grid.n; ++j) CHECK(r.final_state.u[j] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("canonical Camassa-Holm run blows up before the theoretical bound 2") {
    const IntegrationResult r =
        integrate(canonical_datum(512), preset_camassa_holm(0.0), quick_blowup_config());
    CHECK(r.observation.blew_up);
    REQUIRE(r.observation.t_estimate.has_value());
    const double t_est = *r.observation.t_estimate;
    CHECK(t_est <= 2.0);
    CHECK(t_est > 1.0);
    CHECK(t_est >= r.observation.t_last);
    CHECK(r.observation.fit_quality > 0.99);
}

TEST_CASE("energy is conserved to 1e-6 up to 90% of breakdown (moderate resolution)") {
    const IntegrationResult r =
        integrate(canonical_datum(512), preset_camassa_holm(0.0), quick_blowup_config());
    REQUIRE(r.observation.blew_up);
    const double e0 = r.trajectory.front().energy;
    double worst = 0.0;
    for (const Diagnostics& d : r.trajectory)
        if (d.t <= 0.9 * r.observation.t_last) worst = std::max(worst, std::abs(d.energy - e0) / e0);
    CHECK(worst < 1e-6);
}

TEST_CASE("characteristics on a frozen constant field translate at speed f'(c0)") {
    const Grid grid = make_grid(2.0 * kPi, 64);
    const ModelSpec model = preset_rod(2.0);
    const Field u0 = make_field(grid, [](double) { return 0.7; });
    SolverConfig cfg;
    cfg.t_end = 1.0;
    cfg.record_every = 0.25;
    const CriterionParams params = derive_criterion_params(model);
    const CharTrace trace = track_characteristic(1.0, u0, model, cfg, params);
    REQUIRE(trace.samples.size() >= 4);
    const double speed = model.f_prime(0.7);
    for (const CharSample& s : trace.samples) {
        CHECK(s.q == doctest::Approx(wrap_position(1.0 + speed * s.t, grid.length)).epsilon(1e-9));
        CHECK(s.a == doctest::Approx(params.beta * 0.7).epsilon(1e-9));
        CHECK(s.b == doctest::Approx(params.beta * 0.7).epsilon(1e-9));
        CHECK(s.h == 0.0);  // a*b > 0: no Riccati regime
    }
}

TEST_CASE("canonical characteristic: a(0) = 1, b(0) = -1, h(0) = 1 and signs persist") {
    const ModelSpec model = preset_camassa_holm(0.0);
    const CriterionParams params = derive_criterion_params(model);
    const IntegrationResult r =
        integrate(canonical_datum(512), model, quick_blowup_config(), {0.0}, params);
    REQUIRE(!r.traces.empty());
    const CharTrace& trace = r.traces.front();
    REQUIRE(trace.samples.size() > 10);
    CHECK(trace.samples.front().a == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(trace.samples.front().b == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(trace.samples.front().h == doctest::Approx(1.0).epsilon(1e-10));

    for (size_t i = 1; i < trace.samples.size(); ++i) {
        const CharSample& prev = trace.samples[i - 1];
        const CharSample& cur = trace.samples[i];
        CHECK(cur.a >= prev.a - 1e-3 * (1.0 + std::abs(prev.a)));  // nondecreasing
        CHECK(cur.b <= prev.b + 1e-3 * (1.0 + std::abs(prev.b)));  // nonincreasing
        CHECK(cur.a > 0.0);
        CHECK(cur.b < 0.0);
    }

    const RiccatiReport rep = riccati_check(trace, model.gamma, r.observation);
    CHECK(rep.applicable);
    CHECK(rep.t_star_bound == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.h_bound_ok);
    CHECK(rep.breakdown_before_bound);
}

TEST_CASE("rod(3): characteristic bound 2/(gamma h0) = 4/3 dominates the observed breakdown") {
    const ModelSpec model = preset_rod(3.0);
    const CriterionParams params = derive_criterion_params(model);
    const Field u0 = make_field(make_grid(2.0 * kPi, 512), [](double x) { return -0.5 * std::sin(x); });
    SolverConfig cfg;
    cfg.t_end = 2.0;
    cfg.record_every = 0.005;
    const IntegrationResult r = integrate(u0, model, cfg, {0.0}, params);
    REQUIRE(r.observation.blew_up);
    const RiccatiReport rep = riccati_check(r.traces.front(), model.gamma, r.observation);
    CHECK(rep.applicable);
    CHECK(rep.h0 == doctest::Approx(0.5).epsilon(1e-9));  // beta = 0: h0 = |u0'(0)|
    CHECK(rep.t_star_bound == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(rep.breakdown_before_bound);
    CHECK(rep.h_bound_ok);
}

TEST_CASE("T_est changes by less than 2% under grid refinement") {
    const ModelSpec model = preset_camassa_holm(0.0);
    SolverConfig cfg;
    cfg.t_end = 3.0;
    cfg.record_every = 0.05;
    const IntegrationResult coarse = integrate(canonical_datum(512), model, cfg);
    const IntegrationResult fine = integrate(canonical_datum(1024), model, cfg);
    REQUIRE(coarse.observation.t_estimate.has_value());
    REQUIRE(fine.observation.t_estimate.has_value());
    const double a = *coarse.observation.t_estimate, b = *fine.observation.t_estimate;
    CHECK(std::abs(a - b) / b < 0.02);
}

TEST_CASE("extreme advection speeds stop through the dt_min guard") {
    // constant field: no slope, no drift; f'(u) ~ 1e10 forces dt below dt_min
    const Grid grid = make_grid(2.0 * kPi, 64);
    const Field u0 = make_field(grid, [](double) { return 1e10; });
    SolverConfig cfg;
    cfg.t_end = 1.0;
    cfg.record_every = 0.5;
    const IntegrationResult r = integrate(u0, preset_camassa_holm(0.0), cfg);
    CHECK(r.observation.blew_up);
    CHECK(r.observation.stop_reason == "dt_min");
}

TEST_CASE("riccati_check is vacuous on the constant equilibrium") {
    const Grid grid = make_grid(2.0 * kPi, 64);
    const ModelSpec model = preset_camassa_holm(0.0);
    const Field u0 = make_field(grid, [](double) { return 0.5; });
    SolverConfig cfg;
    cfg.t_end = 0.5;
    cfg.record_every = 0.1;
    const CriterionParams params = derive_criterion_params(model);
    const IntegrationResult r = integrate(u0, model, cfg, {0.0}, params);
    const RiccatiReport rep = riccati_check(r.traces.front(), model.gamma, r.observation);
    CHECK(!rep.applicable);
    CHECK(rep.h_bound_ok);
}

TEST_CASE("trigonometric and cubic characteristic sampling agree on smooth runs") {
    const ModelSpec model = preset_camassa_holm(0.0);
    const CriterionParams params = derive_criterion_params(model);
    SolverConfig cubic_cfg;
    cubic_cfg.t_end = 0.5;
    cubic_cfg.record_every = 0.1;
    SolverConfig trig_cfg = cubic_cfg;
    trig_cfg.trig_char_interp = true;

    const Field u0 = canonical_datum(256);
    const CharTrace a = track_characteristic(1.3, u0, model, cubic_cfg, params);
    const CharTrace b = track_characteristic(1.3, u0, model, trig_cfg, params);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].q == doctest::Approx(b.samples[i].q).epsilon(1e-6));
        CHECK(a.samples[i].a == doctest::Approx(b.samples[i].a).epsilon(1e-4));
    }
}

TEST_CASE("solver config validation") {
    SolverConfig cfg;
    cfg.t_end = 1.0;
    CHECK_NOTHROW(validate(cfg));
    SolverConfig bad = cfg;
    bad.cfl = 1.5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.t_end = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.dt_min = 2.0;  // >= t_end
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.slope_floor = 1.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
