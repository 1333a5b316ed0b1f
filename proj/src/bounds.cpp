#include "skinning/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skinning/collar.hpp"
#include "skinning/constants.hpp"
#include "skinning/contraction.hpp"
#include "skinning/errors.hpp"

namespace skinning {

namespace {
constexpr double kPi = std::numbers::pi;
}

BoundContext make_bound_context(const SurfaceGeometry& geometry, double t) {
    if (!(t >= 1.0)) throw DomainError("bound context requires t >= 1");
    BoundContext ctx;
    ctx.geometry = geometry;
    ctx.t = t;
    ctx.offset_s = std::max(0.0, std::log(universal_constants().c1 * t));
    return ctx;
}

bool r_admissible(const BoundContext& ctx, double r) {
    const double cap = universal_constants().c2 / (ctx.geometry.topology.abs_chi * ctx.t);
    return r > 0.0 && r < cap;
}

double thick_diameter_bound(int abs_chi, double eps) {
    if (abs_chi < 1) throw DomainError("thick_diameter_bound requires |chi| >= 1");
    if (!(eps > 0.0)) throw DomainError("thick_diameter_bound requires eps > 0");
    return 4.0 * abs_chi / eps;
}

double core_path_bound(const SurfaceTopology& topology, double systole, double eps) {
    if (!(systole > 0.0)) throw DomainError("core_path_bound requires systole > 0");
    if (!(eps > 0.0)) throw DomainError("core_path_bound requires eps > 0");
    return 4.0 * topology.abs_chi * topology.abs_chi / eps +
           2.0 * topology.kappa * collar_half_width(systole);
}

double mass_floor_m0(int abs_chi, double systole) {
    if (abs_chi < 1) throw DomainError("mass_floor_m0 requires |chi| >= 1");
    if (!(systole > 0.0)) throw DomainError("mass_floor_m0 requires systole > 0");
    return std::min(systole, 1.0) / (16.0 * abs_chi);
}

double mass_decay_factor(double s, double t) {
    if (!(s >= 0.0) || !(s <= t)) throw DomainError("mass_decay_factor requires 0 <= s <= t");
    return std::exp(s - t);
}

double area_defect_lower(int kappa, double r, double t) {
    if (kappa < 1) throw DomainError("area_defect_lower requires kappa >= 1");
    if (!(r > 0.0) || !(r < 1.0)) throw DomainError("area_defect_lower requires r in (0,1)");
    if (!(t >= 1.0)) throw DomainError("area_defect_lower requires t >= 1");
    const UniversalConstants& k = universal_constants();
    return kPi / 3.0 - kappa * r * t * (k.c5 + k.c7);
}

double r_star(int kappa, double t) {
    if (kappa < 1) throw DomainError("r_star requires kappa >= 1");
    if (!(t >= 1.0)) throw DomainError("r_star requires t >= 1");
    const UniversalConstants& k = universal_constants();
    return std::min(1.0 / (4.0 * t), kPi / (3.0 * kappa * t * (k.c5 + k.c7)));
}

double curve_length_bound(const SurfaceTopology& topology, double eps, double t) {
    if (!(t >= 1.0)) throw DomainError("curve_length_bound requires t >= 1");
    return a1(topology, eps) + 2.0 * topology.kappa * std::log(t);
}

double ball_intersection_bound(double w) {
    if (!(w > 0.0)) throw DomainError("ball_intersection_bound requires w > 0");
    return 2.0 * (1.0 + universal_constants().c3) * w;
}

namespace {

// Returns the two pieces of the floor: log of the prefactor and the exponent
// of the suppression term exp(ln_a2 + 2*kappa*log(t) - (1+c3)*r).
struct FloorParts {
    double base;
    double suppression;
};

FloorParts mass_floor_parts(const BoundContext& ctx, double r) {
    if (!(r >= 0.0)) throw DomainError("ln_mass_floor requires r >= 0");
    const UniversalConstants& k = universal_constants();
    const SurfaceGeometry& g = ctx.geometry;
    FloorParts parts;
    parts.base = std::log(std::exp(1.0) * k.c4 * g.systole / (16.0 * g.topology.abs_chi));
    parts.suppression = ln_a2(g.topology, g.epsilon) +
                        2.0 * g.topology.kappa * std::log(ctx.t) - (1.0 + k.c3) * r;
    return parts;
}

}  // namespace

double ln_mass_floor(const BoundContext& ctx, double r) {
    const FloorParts p = mass_floor_parts(ctx, r);
    if (p.suppression >= TowerReal::kThreshold) {
        throw DomainError("ln_mass_floor exceeds the double range; use ln_mass_floor_tower");
    }
    return p.base - std::exp(p.suppression);
}

TowerReal ln_mass_floor_tower(const BoundContext& ctx, double r) {
    const FloorParts p = mass_floor_parts(ctx, r);
    if (p.suppression < TowerReal::kThreshold) {
        return TowerReal::from_real(p.base - std::exp(p.suppression));
    }
    // The suppression term dwarfs the base beyond double resolution.
    return TowerReal::from_parts(-1, false, 1, p.suppression);
}

}  // namespace skinning
