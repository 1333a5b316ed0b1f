#pragma once

namespace skinning {

// Half-width of the embedded collar around a closed geodesic of the given
// length: arcsinh(csch(len/2)). Evaluated via the logarithmic asymptotic
// log(4/len) below len = 1e-8, where csch overflows while the width stays
// moderate. Throws DomainError for len <= 0.
double collar_half_width(double geodesic_length);

// Geometry of the collar band at distance `offset` from its outer boundary.
// Satisfies band_area + boundary_length = area_plus_length (two independent
// closed forms, since exp(half_width) = coth(len/4)).
struct CollarProfile {
    double geodesic_length;
    double offset;
    double half_width;       // arcsinh(csch(len/2))
    double band_area;        // len * sinh(half_width - offset)
    double boundary_length;  // len * cosh(half_width - offset)
    double area_plus_length; // exp(-offset) * len / tanh(len/4)
};

// Requires 0 <= offset <= collar_half_width(len); throws OffsetExceedsWidthError.
CollarProfile collar_profile(double geodesic_length, double offset);

// Pointwise injectivity-radius floor at depth parameter t >= 1:
// arcsinh(1/(c1*t)), which dominates c2/t (checked at runtime; equality at t=1).
double injectivity_floor(double t);

}  // namespace skinning
