#pragma once

#include <string>
#include <vector>

#include "skinning/tower.hpp"

namespace skinning {

// Universal constants of the contraction bound. All are closed forms except
// c7, which is the global maximum of x * arcsinh(csch(x/2)) over x > 0 and is
// found numerically. c6 is carried in two versions: the source's printed
// decimal and the value of its defining formula (e*c4)^(e^(2*c3+2)); the two
// disagree wildly and c6 is never used downstream (see check_constant_identities).
struct UniversalConstants {
    double eps0;  // arcsinh(1), the two-dimensional Margulis constant
    double c1;    // coth(pi/12)
    double c2;    // arcsinh(tanh(pi/12))
    double c3;    // pi*sinh(c2/2)/c2
    double c4;    // (1 - tanh^2(1/2))^2
    double c5;    // 4*pi*(1 + sinh(1))
    double c7;    // max_x x*arcsinh(csch(x/2))
    double c6_printed;
    TowerReal c6_formula;
};

// Closed-form evaluation; c7 populated from compute_c7(1e-9). Deterministic
// across calls and threads.
const UniversalConstants& universal_constants();

// Global maximum of f(x) = x*arcsinh(csch(x/2)) over x > 0, located by a
// geometric bracketing scan on (0, 20] followed by golden-section refinement
// to the given abscissa tolerance. f is evaluated as x*log1p(exp(-x/4)/sinh(x/4)),
// stable down to denormal x. Throws DomainError if tolerance <= 0 and
// InternalError if the scan finds no interior maximum.
double compute_c7(double tolerance);

// The objective of compute_c7, exposed for oracles and tests.
double c7_objective(double x);

// One cross-check on the constants table.
struct IdentityCheck {
    std::string name;
    double residual;
    double tolerance;
    bool pass;        // residual <= tolerance
    bool documented;  // known finding; excluded from suite failure
    std::string note;
};

// Evaluates every closed-form identity the constants satisfy, the printed
// 4-decimal values, the c7 tolerance-stability check, and the c6 formula vs
// printed-value comparison (report-only: flagged documented, never a failure).
std::vector<IdentityCheck> check_constant_identities();

}  // namespace skinning
