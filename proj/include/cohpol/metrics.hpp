#pragma once

#include <optional>

#include "cohpol/density.hpp"

namespace cohpol {

// Below this, a slit counts as unpopulated and the normalized metrics are 0/0.
inline constexpr double kMinSlitPopulation = 1e-12;

/// Complex degree of coherence between the two slits. Its modulus sets the
/// fringe contrast and its phase shifts the fringes.
struct CoherenceDegree {
    Complex mu;

    double modulus() const { return std::abs(mu); }
};

/// Slit-conditioned Stokes parameters.
struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    Slit slit = Slit::Q0;
};

struct PolarizationDegree {
    double p = 0.0;
    Slit slit = Slit::Q0;
};

/// rho_{H,s;H,s} + rho_{V,s;V,s}.
double slit_population(const DensityMatrix& rho, Slit slit);

/// (rho_12 + rho_34) / (sqrt(rho_11 + rho_33) sqrt(rho_22 + rho_44)).
/// std::nullopt when either slit is unpopulated: the ratio is undefined there.
std::optional<CoherenceDegree> degree_of_coherence(const DensityMatrix& rho);

StokesVector stokes(const DensityMatrix& rho, Slit slit);

/// Closed form sqrt(1 - 4 det(B) / tr(B)^2) of the 2x2 polarization block B at
/// `slit`. std::nullopt when the slit is unpopulated.
std::optional<PolarizationDegree> degree_of_polarization(const DensityMatrix& rho, Slit slit);

/// sqrt(s1^2 + s2^2 + s3^2) / s0. std::nullopt when s0 is at or below
/// kMinSlitPopulation.
std::optional<double> polarization_from_stokes(const StokesVector& s);

/// [[rho_{H,s;H,s}, rho_{H,s;V,s}], [rho_{V,s;H,s}, rho_{V,s;V,s}]].
Matrix2 polarization_block(const DensityMatrix& rho, Slit slit);

}  // namespace cohpol
