#include "skinning/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "skinning/bounds.hpp"
#include "skinning/collar.hpp"
#include "skinning/constants.hpp"
#include "skinning/errors.hpp"

namespace skinning {

namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(long grid) {
    if (grid < 1000) throw DomainError("oracle grids must have at least 10^3 points");
}

// Log-spaced points covering [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, long n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (long i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

double simpson_slice(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_slice(a, fa, m, fm, flm);
    const double right = simpson_slice(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol) {
    if (!(b > a)) throw DomainError("adaptive_simpson requires b > a");
    if (!(abs_tol > 0.0)) throw DomainError("adaptive_simpson requires abs_tol > 0");
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson_slice(a, fa, b, fb, fm);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol, 40);
}

double min_ratio_objective(double t) {
    if (!(t > 0.0)) throw DomainError("min_ratio_objective requires t > 0");
    const double h = 0.5 * t;
    const double ratio = std::tanh(h) / h;
    return ratio * ratio / (4.0 * std::atan(1.0 / std::sinh(h)));
}

OracleResult verify_min_ratio_function(long grid, double floor_tol, double limit_tol) {
    require_grid(grid);
    const double floor = 1.0 / (2.0 * kPi);
    OracleResult res;
    res.claim_id = "min_ratio_floor";
    res.samples = grid;
    double worst_margin = -std::numeric_limits<double>::infinity();
    double worst_point = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    double smallest_point = 0.0;
    for (double t : log_grid(1e-8, 50.0, grid)) {
        const double f = min_ratio_objective(t);
        const double margin = (floor - f) / floor;  // > 0 means below the floor
        if (margin > worst_margin) {
            worst_margin = margin;
            worst_point = t;
        }
        if (f < smallest) {
            smallest = f;
            smallest_point = t;
        }
    }
    const double approach = smallest - floor;  // limit value is the floor itself
    res.passed = worst_margin <= floor_tol && approach <= limit_tol;
    if (worst_margin > floor_tol) {
        res.worst_point = worst_point;
        res.worst_residual = worst_margin;
    } else {
        res.worst_point = smallest_point;
        res.worst_residual = approach;
    }
    return res;
}

OracleResult verify_sinh_linear_bound(long grid, double tol) {
    require_grid(grid);
    const UniversalConstants& k = universal_constants();
    OracleResult res;
    res.claim_id = "sinh_linear_bound_corrected";
    res.samples = grid;
    double worst = -std::numeric_limits<double>::infinity();
    double worst_point = 0.0;
    for (double r : log_grid(k.c2 * 1e-8, k.c2, grid)) {
        const double viol = kPi * std::sinh(r / 2.0) - k.c3 * r;
        if (viol > worst) {
            worst = viol;
            worst_point = r;
        }
    }
    const double eq_residual = std::fabs(kPi * std::sinh(k.c2 / 2.0) - k.c3 * k.c2);
    res.worst_residual = std::max(worst, eq_residual);
    res.worst_point = worst >= eq_residual ? worst_point : k.c2;
    res.passed = worst <= tol && eq_residual <= tol;
    return res;
}

OracleResult verify_sinh_linear_bound_literal(long grid) {
    require_grid(grid);
    const UniversalConstants& k = universal_constants();
    OracleResult res;
    res.claim_id = "sinh_linear_bound_literal";
    res.documented_failure = true;
    res.samples = grid;
    double worst = -std::numeric_limits<double>::infinity();
    for (double r : log_grid(k.c2 * 1e-8, k.c2, grid)) {
        const double viol = kPi * std::sinh(r) - k.c3 * r;
        if (viol > worst) {
            worst = viol;
            res.worst_point = r;
        }
    }
    res.worst_residual = worst;
    res.passed = worst <= 0.0;  // fails throughout: pi > c3 near zero
    return res;
}

OracleResult verify_collar_monotonicity(long grid, double tol) {
    require_grid(grid);
    const auto profile = [](double len) { return len / std::tanh(len / 4.0); };
    OracleResult res;
    res.claim_id = "collar_area_length_monotone";
    res.samples = grid;
    const std::vector<double> lens = log_grid(1e-4, short_geodesic_threshold(), grid);
    double worst_step = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < lens.size(); ++i) {
        const double step = profile(lens[i]) - profile(lens[i + 1]);  // < 0 when increasing
        if (step > worst_step) {
            worst_step = step;
            res.worst_point = lens[i];
        }
    }
    const double limit_residual = std::fabs(profile(1e-7) - 4.0);
    res.worst_residual = std::max(worst_step, limit_residual);
    res.passed = worst_step < 0.0 && limit_residual <= tol;
    return res;
}

OracleResult verify_collar_identity(long grid_per_axis, double tol) {
    if (grid_per_axis < 10) throw DomainError("collar identity grid must have >= 10 points per axis");
    OracleResult res;
    res.claim_id = "collar_profile_identity";
    double worst = 0.0;
    long samples = 0;
    const std::vector<double> lens = log_grid(1e-6, short_geodesic_threshold(), grid_per_axis);
    for (double len : lens) {
        const double w = collar_half_width(len);
        for (long j = 0; j < grid_per_axis; ++j) {
            const double s = w * j / (grid_per_axis - 1);
            const double lhs = std::sinh(w - s) + std::cosh(w - s);
            const double rhs = std::exp(-s) / std::tanh(len / 4.0);
            const double rel = std::fabs(lhs - rhs) / rhs;
            ++samples;
            if (rel > worst) {
                worst = rel;
                res.worst_point = len;
            }
        }
    }
    res.samples = samples;
    res.worst_residual = worst;
    res.passed = worst <= tol;
    return res;
}

OracleResult verify_gap_integral(int kappa, double t, double tol) {
    if (kappa < 1) throw DomainError("verify_gap_integral requires kappa >= 1");
    if (!(t >= 1.0)) throw DomainError("verify_gap_integral requires t >= 1");
    const UniversalConstants& k = universal_constants();
    const double slope = kappa * t * (k.c5 + k.c7);
    const double r_pi = kPi / (3.0 * slope);
    const double r_cap = 1.0 / (4.0 * t);
    const double upper = std::min(r_pi, r_cap);
    const double closed = r_pi <= r_cap
                              ? kPi * kPi / (18.0 * slope)
                              : kPi / 3.0 * r_cap - slope * r_cap * r_cap / 2.0;
    long evals = 0;
    const auto integrand = [&](double r) {
        ++evals;
        return std::max(0.0, kPi / 3.0 - slope * r);
    };
    const double quad = adaptive_simpson(integrand, 0.0, upper, 1e-13);
    OracleResult res;
    char id[64];
    std::snprintf(id, sizeof(id), "gap_integral(kappa=%d,t=%g)", kappa, t);
    res.claim_id = id;
    res.samples = evals;
    res.worst_point = upper;
    res.worst_residual = std::fabs(quad - closed) / closed;
    res.passed = res.worst_residual <= tol;
    return res;
}

OracleResult verify_inj_floor(long grid, double tol) {
    require_grid(grid);
    const UniversalConstants& k = universal_constants();
    OracleResult res;
    res.claim_id = "injectivity_floor";
    res.samples = grid;
    double worst = -std::numeric_limits<double>::infinity();
    for (double t : log_grid(1.0, 1e3, grid)) {
        const double viol = k.c2 / t - std::asinh(1.0 / (k.c1 * t));
        if (viol > worst) {
            worst = viol;
            res.worst_point = t;
        }
    }
    const double eq_residual = std::fabs(std::asinh(1.0 / k.c1) - k.c2);
    res.worst_residual = std::max(worst, eq_residual);
    res.passed = worst <= tol && eq_residual < tol;
    return res;
}

std::vector<OracleResult> run_all_oracles(long grid, std::optional<double> tol_override) {
    const auto tol = [&](double def) { return tol_override.value_or(def); };
    std::vector<OracleResult> out;
    out.push_back(verify_min_ratio_function(grid, tol(1e-9), tol(1e-6)));
    out.push_back(verify_sinh_linear_bound(grid, tol(1e-9)));
    out.push_back(verify_sinh_linear_bound_literal(grid));
    out.push_back(verify_collar_monotonicity(grid, tol(1e-9)));
    out.push_back(verify_collar_identity(100, tol(1e-10)));
    out.push_back(verify_gap_integral(1, 1.0, tol(1e-10)));
    out.push_back(verify_gap_integral(2, 1.0, tol(1e-10)));
    out.push_back(verify_gap_integral(1, 10.0, tol(1e-10)));
    out.push_back(verify_gap_integral(3, 2.0, tol(1e-10)));
    out.push_back(verify_inj_floor(grid, tol(1e-12)));
    return out;
}

}  // namespace skinning
