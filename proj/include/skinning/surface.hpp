#pragma once

#include <optional>

namespace skinning {

// Finite-type topology (genus g, punctures n) with the derived invariants
// every bound consumes: |chi| = 2g-2+n and the complexity kappa = 3g-3+n.
// Only hyperbolic types (2g-2+n > 0) are constructible; note that (0,3) has
// kappa = 0 and is rejected later by the contraction-constant operations.
struct SurfaceTopology {
    int genus = 0;
    int punctures = 0;
    int abs_chi = 0;
    int kappa = 0;
};

// Throws NonHyperbolicError when 2g-2+n <= 0 (this includes the (0,2) type,
// which is sometimes assigned complexity 0 by convention but carries no
// finite-area hyperbolic metric).
SurfaceTopology make_topology(int genus, int punctures);

// Length threshold below which a closed geodesic counts as short: 2*arcsinh(1).
double short_geodesic_threshold();

// Topology plus the metric inputs: the systole (shortest closed geodesic
// length) and the free thickening parameter epsilon of the diameter bounds.
struct SurfaceGeometry {
    SurfaceTopology topology;
    double systole = 0.0;
    double epsilon = 0.0;
};

// systole must lie in (0, 2*arcsinh(1)]; a surface with no short geodesic is
// encoded by the saturation value systole = 2*arcsinh(1) (every bound is
// monotone non-decreasing in the systole, so the threshold is the right cap).
// epsilon defaults to arcsinh(1) and must lie in (0, arcsinh(1)].
// Throws SystoleOutOfRangeError / EpsilonOutOfRangeError.
SurfaceGeometry make_geometry(const SurfaceTopology& topology, double systole,
                              std::optional<double> epsilon = std::nullopt);

}  // namespace skinning
