#pragma once

#include <span>
#include <vector>

#include "cohpol/density.hpp"

namespace cohpol {

/// Double-slit layout. Q0 sits at y = +d/2 and Q1 at y = -d/2 on the mask;
/// the screen is a distance L downstream. SI units throughout.
struct SlitGeometry {
    double slit_separation;  // d [m]
    double screen_distance;  // L [m]
    double wavenumber;       // k [rad/m]

    /// Throws InputError unless d, L and k are finite and positive.
    void check() const;
};

struct ScreenPoint {
    double y;
    double r0;
    double r1;

    static ScreenPoint at(const SlitGeometry& geom, double y);
};

struct PatternSample {
    double y = 0.0;
    double rho_total = 0.0;  // relative density, arbitrary units of 1/m^2
    double rho_q0 = 0.0;     // single-slit term from Q0
    double rho_q1 = 0.0;     // single-slit term from Q1
};

/// Detection density at transverse position y, split as
/// rho_q0 + rho_q1 + 2 sqrt(rho_q0 rho_q1) Re[mu exp(ik(r0 - r1))].
PatternSample point_density(const DensityMatrix& rho, const SlitGeometry& geom, double y);

/// n_points uniformly spaced samples on [y_min, y_max], endpoints included.
std::vector<PatternSample> pattern(const DensityMatrix& rho, const SlitGeometry& geom, double y_min, double y_max,
                                   int n_points);

/// Fringe visibility (max - min) / (max + min) of rho_total / (rho_q0 + rho_q1)
/// over the supplied samples. For balanced slits this equals |mu|.
///
/// Throws InputError when the samples do not resolve at least two fringe
/// periods, unless the normalized pattern is flat (visibility 0).
double extract_visibility(std::span<const PatternSample> samples);

/// |mu| estimated from a pattern: the visibility divided by the slit-balance
/// factor 2 sqrt(rho_q0 rho_q1) / (rho_q0 + rho_q1) taken at the central sample.
double coherence_from_pattern(std::span<const PatternSample> samples);

}  // namespace cohpol
