#include <doctest.h>

#include "skinning/constants.hpp"
#include "skinning/errors.hpp"
#include "skinning/surface.hpp"

using namespace skinning;

TEST_CASE("make_topology derives the invariants") {
    const SurfaceTopology t11 = make_topology(1, 1);
    CHECK(t11.abs_chi == 1);
    CHECK(t11.kappa == 1);

    const SurfaceTopology t04 = make_topology(0, 4);
    CHECK(t04.abs_chi == 2);
    CHECK(t04.kappa == 1);

    const SurfaceTopology t20 = make_topology(2, 0);
    CHECK(t20.abs_chi == 2);
    CHECK(t20.kappa == 3);

    // (0,3) is admitted as a topology; kappa = 0 is rejected later.
    const SurfaceTopology t03 = make_topology(0, 3);
    CHECK(t03.abs_chi == 1);
    CHECK(t03.kappa == 0);
}

TEST_CASE("non-hyperbolic types are rejected") {
    CHECK_THROWS_AS(make_topology(0, 0), NonHyperbolicError);
    CHECK_THROWS_AS(make_topology(0, 1), NonHyperbolicError);
    CHECK_THROWS_AS(make_topology(0, 2), NonHyperbolicError);
    CHECK_THROWS_AS(make_topology(1, 0), NonHyperbolicError);
    CHECK_THROWS_AS(make_topology(-1, 5), DomainError);
    CHECK_THROWS_AS(make_topology(1, -1), DomainError);
}

TEST_CASE("make_geometry validates systole and epsilon") {
    const SurfaceTopology topo = make_topology(1, 1);
    const double eps0 = universal_constants().eps0;

    const SurfaceGeometry g = make_geometry(topo, 0.5);
    CHECK(g.epsilon == eps0);  // default
    CHECK(g.systole == 0.5);

    // threshold boundary accepted
    const SurfaceGeometry gb = make_geometry(topo, short_geodesic_threshold());
    CHECK(gb.systole == 2.0 * eps0);

    CHECK_THROWS_AS(make_geometry(topo, 3.0), SystoleOutOfRangeError);
    CHECK_THROWS_AS(make_geometry(topo, 0.0), SystoleOutOfRangeError);
    CHECK_THROWS_AS(make_geometry(topo, -0.5), SystoleOutOfRangeError);
    CHECK_THROWS_AS(make_geometry(topo, 0.5, 0.0), EpsilonOutOfRangeError);
    CHECK_THROWS_AS(make_geometry(topo, 0.5, 1.0), EpsilonOutOfRangeError);
    CHECK(make_geometry(topo, 0.5, eps0).epsilon == eps0);
    CHECK(make_geometry(topo, 0.5, 0.25).epsilon == 0.25);
}

TEST_CASE("invariant growth in genus") {
    for (int n = 0; n <= 6; ++n) {
        int prev_chi = -1, prev_kappa = -1;
        for (int g = 0; g <= 20; ++g) {
            if (2 * g - 2 + n <= 0) continue;
            const SurfaceTopology t = make_topology(g, n);
            CHECK(t.kappa - t.abs_chi == g - 1);
            if (prev_chi >= 0) {
                CHECK(t.abs_chi > prev_chi);
                CHECK(t.kappa > prev_kappa);
            }
            prev_chi = t.abs_chi;
            prev_kappa = t.kappa;
        }
    }
}
