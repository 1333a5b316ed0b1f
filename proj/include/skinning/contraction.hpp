#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skinning/errors.hpp"
#include "skinning/surface.hpp"
#include "skinning/tower.hpp"

namespace skinning {

// a1 = 4*|chi|^2/eps + 2*kappa*log(c1) + 2*c2*c3. Requires eps in (0, arcsinh(1)].
double a1(const SurfaceTopology& topology, double eps);

// log(a2) where a2 = log(e*c4) * exp(a1 + 2*(1+c3)); a2 itself overflows a
// double for |chi| >= 13 or so, its log never does for machine-sized g, n.
double ln_a2(const SurfaceTopology& topology, double eps);

// K = e*pi^2*c4/(288*(c5+c7)), the surface-independent prefactor of the
// contraction constant C = K * systole * exp(-a2*t^(2*kappa)) / (kappa*|chi|*t^2).
double contraction_prefactor();

// Value 1 - deficit with 0 < deficit < 1 held as a tower. A plain TowerReal
// cannot keep 1 - exp(-a2) apart from 1, so quantities of the form 1/(1+C)
// are stored through their distance from one.
struct UnitComplement {
    TowerReal deficit;
};

std::string render(const UnitComplement& x);
Ordering cmp(const UnitComplement& x, const UnitComplement& y);

// Splits 1 + C into gap = C/(1+C) and norm_bound = 1/(1+C) = 1 - gap.
// For C < 1e-8 the dominated form gap = C is exact to relative error C
// (far below 1e-12 for every admitted surface); otherwise plain double
// arithmetic is used. Requires C > 0.
struct OnePlusSplit {
    TowerReal gap;
    UnitComplement norm_bound;
};
OnePlusSplit split_one_plus(const TowerReal& c);

// Everything the bound evaluation produces for one surface.
struct BoundReport {
    int genus = 0;
    int punctures = 0;
    int abs_chi = 0;
    int kappa = 0;
    double systole = 0.0;
    double epsilon = 0.0;
    double t = 1.0;

    double a1 = 0.0;
    double ln_a2 = 0.0;
    // ln C = ln_c_finite - exp(suppression_exponent); the two parts are kept
    // so that downstream consumers can work at full double precision even
    // when ln C itself only lives at tower scale.
    double ln_c_finite = 0.0;          // log(K*systole/(kappa*|chi|*t^2))
    double suppression_exponent = 0.0; // ln_a2 + 2*kappa*log(t)
    TowerReal ln_c;
    TowerReal c;
    TowerReal gap;              // C/(1+C)
    UnitComplement norm_bound;  // 1/(1+C) = 1 - gap
    double loglog_ell_over_c = 0.0;
    double asymptotic_rhs = 0.0;
    double asymptotic_ratio = 0.0;
};

// The contraction constant and operator-norm bound for one surface at depth t.
// Throws KappaZeroError for (0,3) and DomainError for t < 1; the admissibility
// r_star(kappa,t) < c2/(|chi|*t) is asserted at runtime (InternalError on
// failure -- it holds for every finite-type surface).
BoundReport contraction_constant(const SurfaceGeometry& geometry, double t = 1.0);

// Evaluates gap(t) over the grid and returns the maximizer (by tower
// comparison) with its report. The grid must lie in [1, inf) and contain 1.
std::pair<double, BoundReport> optimize_t(const SurfaceGeometry& geometry,
                                          const std::vector<double>& t_grid);

// Right-hand side of the asymptotic expansion of log log(systole/C):
// (4/eps0)*|chi|^2 + c1*|chi| + pi*sinh(c2/2)*kappa.
double asymptotic_rhs(const SurfaceTopology& topology);

// log log(systole/C) evaluated stably; independent of the systole, which
// cancels in systole/C. Same preconditions as contraction_constant.
double loglog_ell_over_c(const SurfaceGeometry& geometry, double t = 1.0);

// One boundary surface of the gluing locus.
struct BoundaryComponent {
    int genus = 0;
    int punctures = 0;
    double systole = 0.0;
};

// Raised when one component of a skinning evaluation fails; carries which one.
class ComponentError : public Error {
public:
    ComponentError(std::size_t index, const std::string& what)
        : Error("component " + std::to_string(index + 1) + ": " + what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

struct SkinningResult {
    UnitComplement max_norm_bound;
    std::size_t dominating_index = 0;
    std::vector<BoundReport> components;
};

// Per-component bounds and the maximum norm bound over the boundary (the
// component with the smallest contraction constant dominates). Epsilon
// defaults per make_geometry; evaluation is at t = 1.
SkinningResult skinning_factor(const std::vector<BoundaryComponent>& boundary);

}  // namespace skinning
