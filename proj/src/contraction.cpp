#include "skinning/contraction.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "skinning/bounds.hpp"
#include "skinning/constants.hpp"

namespace skinning {

namespace {
constexpr double kPi = std::numbers::pi;

void require_eps(double eps) {
    if (!(eps > 0.0) || eps > universal_constants().eps0) {
        throw EpsilonOutOfRangeError("eps " + std::to_string(eps) + " outside (0, arcsinh(1)]");
    }
}
}  // namespace

double a1(const SurfaceTopology& topology, double eps) {
    require_eps(eps);
    const UniversalConstants& k = universal_constants();
    return 4.0 * topology.abs_chi * topology.abs_chi / eps +
           2.0 * topology.kappa * std::log(k.c1) + 2.0 * k.c2 * k.c3;
}

double ln_a2(const SurfaceTopology& topology, double eps) {
    const UniversalConstants& k = universal_constants();
    // log(log(e*c4)) + a1 + 2*(1+c3); a1 is never exponentiated here.
    return std::log(1.0 + std::log(k.c4)) + a1(topology, eps) + 2.0 * (1.0 + k.c3);
}

double contraction_prefactor() {
    static const double kPrefactor = [] {
        const UniversalConstants& k = universal_constants();
        return std::exp(1.0) * kPi * kPi * k.c4 / (288.0 * (k.c5 + k.c7));
    }();
    return kPrefactor;
}

std::string render(const UnitComplement& x) {
    std::string s = "1 - " + render_machine(x.deficit);
    if (x.deficit.level() == 1) {
        const double p = x.deficit.mag() / std::numbers::ln10;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1f", x.deficit.recip() ? -p : p);
        s += std::string(" ≈ 1 - 10^(") + buf + ")";
    }
    return s;
}

Ordering cmp(const UnitComplement& x, const UnitComplement& y) {
    // 1 - dx vs 1 - dy: order reverses on the deficits.
    const Ordering d = cmp(x.deficit, y.deficit);
    if (d == Ordering::Less) return Ordering::Greater;
    if (d == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

OnePlusSplit split_one_plus(const TowerReal& c) {
    if (c.sign() <= 0) throw DomainError("split_one_plus requires C > 0");
    static const TowerReal kDominated = TowerReal::from_real(1e-8);
    if (cmp(c, kDominated) == Ordering::Less) {
        // gap = C*(1 - C + O(C^2)): taking gap = C is exact to relative error C.
        return OnePlusSplit{c, UnitComplement{c}};
    }
    const double x = c.to_double();
    const TowerReal gap = TowerReal::from_real(x / (1.0 + x));
    return OnePlusSplit{gap, UnitComplement{gap}};
}

BoundReport contraction_constant(const SurfaceGeometry& geometry, double t) {
    const SurfaceTopology& topo = geometry.topology;
    const UniversalConstants& k = universal_constants();
    if (topo.kappa == 0) {
        throw KappaZeroError("kappa=0: contraction constant undefined for (" +
                             std::to_string(topo.genus) + "," + std::to_string(topo.punctures) +
                             ")");
    }
    if (!(t >= 1.0)) throw DomainError("contraction_constant requires t >= 1");
    if (!(r_star(topo.kappa, t) < k.c2 / (topo.abs_chi * t))) {
        throw InternalError("radius regime violated: r_star(kappa,t) >= c2/(|chi|*t)");
    }

    BoundReport r;
    r.genus = topo.genus;
    r.punctures = topo.punctures;
    r.abs_chi = topo.abs_chi;
    r.kappa = topo.kappa;
    r.systole = geometry.systole;
    r.epsilon = geometry.epsilon;
    r.t = t;
    r.a1 = a1(topo, geometry.epsilon);
    r.ln_a2 = ln_a2(topo, geometry.epsilon);
    r.ln_c_finite = std::log(contraction_prefactor() * geometry.systole /
                             (topo.kappa * topo.abs_chi * t * t));
    r.suppression_exponent = r.ln_a2 + 2.0 * topo.kappa * std::log(t);

    if (r.suppression_exponent < TowerReal::kThreshold) {
        r.ln_c = TowerReal::from_real(r.ln_c_finite - std::exp(r.suppression_exponent));
    } else {
        // The finite part sits below the resolution of the suppression term.
        r.ln_c = TowerReal::from_parts(-1, false, 1, r.suppression_exponent);
    }
    r.c = exp_of(r.ln_c);
    const OnePlusSplit split = split_one_plus(r.c);
    r.gap = split.gap;
    r.norm_bound = split.norm_bound;
    r.loglog_ell_over_c = loglog_ell_over_c(geometry, t);
    r.asymptotic_rhs = asymptotic_rhs(topo);
    r.asymptotic_ratio = r.loglog_ell_over_c / r.asymptotic_rhs;
    return r;
}

std::pair<double, BoundReport> optimize_t(const SurfaceGeometry& geometry,
                                          const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw DomainError("optimize_t requires a non-empty grid");
    bool has_one = false;
    for (double t : t_grid) {
        if (!(t >= 1.0)) throw DomainError("optimize_t grid must lie in [1, inf)");
        if (t == 1.0) has_one = true;
    }
    if (!has_one) throw DomainError("optimize_t grid must contain t = 1");

    BoundReport best = contraction_constant(geometry, t_grid.front());
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        BoundReport cur = contraction_constant(geometry, t_grid[i]);
        if (cmp(cur.gap, best.gap) == Ordering::Greater) best = cur;
    }
    return {best.t, best};
}

double asymptotic_rhs(const SurfaceTopology& topology) {
    const UniversalConstants& k = universal_constants();
    return 4.0 / k.eps0 * topology.abs_chi * topology.abs_chi + k.c1 * topology.abs_chi +
           kPi * std::sinh(k.c2 / 2.0) * topology.kappa;
}

double loglog_ell_over_c(const SurfaceGeometry& geometry, double t) {
    const SurfaceTopology& topo = geometry.topology;
    if (topo.kappa == 0) throw KappaZeroError("kappa=0: log log(systole/C) undefined");
    if (!(t >= 1.0)) throw DomainError("loglog_ell_over_c requires t >= 1");
    // systole/C = kappa*|chi|*t^2 * exp(a2*t^(2*kappa)) / K: the systole cancels.
    const double big = ln_a2(topo, geometry.epsilon) + 2.0 * topo.kappa * std::log(t);
    const double small =
        std::log(topo.kappa * topo.abs_chi * t * t / contraction_prefactor());
    if (big <= std::log(1e15)) return std::log(std::exp(big) + small);
    return big + std::log1p(small * std::exp(-big));
}

SkinningResult skinning_factor(const std::vector<BoundaryComponent>& boundary) {
    if (boundary.empty()) throw DomainError("skinning_factor requires a non-empty boundary");
    SkinningResult result;
    result.components.reserve(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        const BoundaryComponent& b = boundary[i];
        try {
            const SurfaceGeometry geom = make_geometry(make_topology(b.genus, b.punctures),
                                                       b.systole);
            result.components.push_back(contraction_constant(geom));
        } catch (const Error& e) {
            throw ComponentError(i, e.what());
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < result.components.size(); ++i) {
        // Smallest gap <=> smallest C <=> largest norm bound.
        if (cmp(result.components[i].gap, result.components[best].gap) == Ordering::Less) {
            best = i;
        }
    }
    result.dominating_index = best;
    result.max_norm_bound = result.components[best].norm_bound;
    return result;
}

}  // namespace skinning
