#pragma once

#include <utility>
#include <vector>

#include "cohpol/density.hpp"

namespace cohpol {

/// Two orthogonally polarized Gaussian subensembles, each spread evenly over
/// both slits, diffracting independently along z.
///
/// Subensemble 1 is (|H,0> + |H,1>)/sqrt(2), subensemble 2 is
/// (|V,0> + |V,1>)/sqrt(2).
struct GaussianBeamPair {
    double sigma1_0 = 1.0;  // waist width [m]
    double sigma2_0 = 1.0;
    double z1 = 1.0;  // Rayleigh length [m]
    double z2 = 2.0;
    double w1_0 = 0.5;  // population at z = 0
    double w2_0 = 0.5;

    void check() const;
};

struct PropagationSample {
    double z = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    double p = 0.0;   // degree of polarization, identical at both slits
    Complex mu{};     // degree of coherence
};

/// sigma0 * sqrt(1 + (z / z_rayleigh)^2).
double width(double sigma0, double z, double z_rayleigh);

/// On-axis populations at z: w_j0 / (1 + (z/z_j)^2), renormalized to sum to one.
std::pair<double, double> weights(const GaussianBeamPair& pair, double z);

DensityMatrix density_matrix_at(const GaussianBeamPair& pair, double z);

/// n_steps samples with z uniform on [0, z_max].
std::vector<PropagationSample> polarization_curve(const GaussianBeamPair& pair, double z_max, int n_steps);

}  // namespace cohpol
