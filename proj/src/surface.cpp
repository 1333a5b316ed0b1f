#include "skinning/surface.hpp"

#include <cmath>
#include <string>

#include "skinning/constants.hpp"
#include "skinning/errors.hpp"

namespace skinning {

SurfaceTopology make_topology(int genus, int punctures) {
    if (genus < 0 || punctures < 0) {
        throw DomainError("make_topology: genus and punctures must be non-negative");
    }
    const int chi = 2 * genus - 2 + punctures;
    if (chi <= 0) {
        throw NonHyperbolicError("surface (" + std::to_string(genus) + "," +
                                 std::to_string(punctures) +
                                 ") is not hyperbolic: 2g-2+n = " + std::to_string(chi));
    }
    SurfaceTopology t;
    t.genus = genus;
    t.punctures = punctures;
    t.abs_chi = chi;
    t.kappa = 3 * genus - 3 + punctures;
    return t;
}

double short_geodesic_threshold() { return 2.0 * universal_constants().eps0; }

SurfaceGeometry make_geometry(const SurfaceTopology& topology, double systole,
                              std::optional<double> epsilon) {
    const double eps0 = universal_constants().eps0;
    if (!(systole > 0.0) || systole > short_geodesic_threshold()) {
        throw SystoleOutOfRangeError("systole " + std::to_string(systole) +
                                     " outside (0, 2*arcsinh(1)]");
    }
    const double eps = epsilon.value_or(eps0);
    if (!(eps > 0.0) || eps > eps0) {
        throw EpsilonOutOfRangeError("epsilon " + std::to_string(eps) +
                                     " outside (0, arcsinh(1)]");
    }
    return SurfaceGeometry{topology, systole, eps};
}

}  // namespace skinning
