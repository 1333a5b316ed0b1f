#pragma once

#include "skinning/surface.hpp"
#include "skinning/tower.hpp"

namespace skinning {

// Geometry plus the depth parameter t of the mass/area estimates, with the
// derived collar offset s = log_+(c1*t).
struct BoundContext {
    SurfaceGeometry geometry;
    double t = 1.0;
    double offset_s = 0.0;
};

// Requires t >= 1.
BoundContext make_bound_context(const SurfaceGeometry& geometry, double t);

// Neighborhood radii must satisfy 0 < r < c2/(|chi|*t).
bool r_admissible(const BoundContext& ctx, double r);

// Diameter bound for a component of the thickened thick part: 4*|chi|/eps.
double thick_diameter_bound(int abs_chi, double eps);

// Path-length bound across the thickened core:
// 4*|chi|^2/eps + 2*kappa*arcsinh(csch(systole/2)).
double core_path_bound(const SurfaceTopology& topology, double systole, double eps);

// Mass floor at offset zero, per unit norm: min(systole, 1)/(16*|chi|).
double mass_floor_m0(int abs_chi, double systole);

// Mass decay between offsets 0 <= s <= t: exp(s - t).
double mass_decay_factor(double s, double t);

// Lower bound on area minus t times boundary length of the r-shrunken region:
// pi/3 - kappa*r*t*(c5+c7). May be negative; integration clips elsewhere.
double area_defect_lower(int kappa, double r, double t);

// Upper integration limit of the defect integral:
// min(1/(4t), pi/(3*kappa*t*(c5+c7))).
double r_star(int kappa, double t);

// Length bound for the connecting curve: a1(topology, eps) + 2*kappa*log(t).
double curve_length_bound(const SurfaceTopology& topology, double eps, double t);

// Length of the curve inside an embedded ball of radius w: 2*(1+c3)*w.
double ball_intersection_bound(double w);

// Logarithm of the pointwise mass floor per unit norm at radius r:
//   log(e*c4*systole/(16*|chi|)) - exp(ln_a2 + 2*kappa*log(t) - (1+c3)*r).
// The double overload requires the suppression exponent to stay below
// TowerReal::kThreshold (throws DomainError otherwise); the tower overload
// handles every magnitude.
double ln_mass_floor(const BoundContext& ctx, double r);
TowerReal ln_mass_floor_tower(const BoundContext& ctx, double r);

}  // namespace skinning
