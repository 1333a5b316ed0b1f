#include "skinning/collar.hpp"

#include <cmath>
#include <string>

#include "skinning/constants.hpp"
#include "skinning/errors.hpp"

namespace skinning {

double collar_half_width(double geodesic_length) {
    if (!(geodesic_length > 0.0)) {
        throw DomainError("collar_half_width requires a positive geodesic length");
    }
    if (geodesic_length < 1e-8) {
        return std::log(4.0) - std::log(geodesic_length);
    }
    return std::asinh(1.0 / std::sinh(geodesic_length / 2.0));
}

CollarProfile collar_profile(double geodesic_length, double offset) {
    const double w = collar_half_width(geodesic_length);
    if (!(offset >= 0.0)) throw DomainError("collar_profile requires offset >= 0");
    if (offset > w) {
        throw OffsetExceedsWidthError("offset " + std::to_string(offset) +
                                      " exceeds collar half-width " + std::to_string(w));
    }
    CollarProfile p;
    p.geodesic_length = geodesic_length;
    p.offset = offset;
    p.half_width = w;
    p.band_area = geodesic_length * std::sinh(w - offset);
    p.boundary_length = geodesic_length * std::cosh(w - offset);
    p.area_plus_length =
        std::exp(-offset) * geodesic_length / std::tanh(geodesic_length / 4.0);
    return p;
}

double injectivity_floor(double t) {
    if (!(t >= 1.0)) throw DomainError("injectivity_floor requires t >= 1");
    const UniversalConstants& k = universal_constants();
    const double v = std::asinh(1.0 / (k.c1 * t));
    if (v < k.c2 / t - 1e-12) {
        throw InternalError("injectivity_floor: arcsinh(1/(c1*t)) fell below c2/t");
    }
    return v;
}

}  // namespace skinning
