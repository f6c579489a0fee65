#include "cohpol/propagation.hpp"

#include <cmath>

#include "cohpol/metrics.hpp"

namespace cohpol {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_z(double z) {
    if (!std::isfinite(z) || z < 0.0) throw InputError("propagation distance must be finite and non-negative");
}

// On-axis intensity relative to the waist, (sigma(0) / sigma(z))^2.
double on_axis_intensity(double z, double z_rayleigh) {
    const double ratio = z / z_rayleigh;
    return 1.0 / (1.0 + ratio * ratio);
}

const PureState& horizontal_subensemble() {
    static const PureState state(M_SQRT1_2, M_SQRT1_2, 0.0, 0.0);
    return state;
}

const PureState& vertical_subensemble() {
    static const PureState state(0.0, 0.0, M_SQRT1_2, M_SQRT1_2);
    return state;
}

}  // namespace

void GaussianBeamPair::check() const {
    if (!positive(sigma1_0) || !positive(sigma2_0)) throw InputError("beam waists must be positive");
    if (!positive(z1) || !positive(z2)) throw InputError("Rayleigh lengths must be positive");
    if (!std::isfinite(w1_0) || !std::isfinite(w2_0) || w1_0 < 0.0 || w2_0 < 0.0) {
        throw InputError("initial populations must be non-negative");
    }
    if (std::abs(w1_0 + w2_0 - 1.0) > tolerance::kWeightSum) throw InputError("initial populations must sum to 1");
}

double width(double sigma0, double z, double z_rayleigh) {
    if (!positive(sigma0)) throw InputError("waist width must be positive");
    if (!positive(z_rayleigh)) throw InputError("Rayleigh length must be positive");
    check_z(z);
    const double ratio = z / z_rayleigh;
    return sigma0 * std::sqrt(1.0 + ratio * ratio);
}

std::pair<double, double> weights(const GaussianBeamPair& pair, double z) {
    pair.check();
    check_z(z);
    const double a = pair.w1_0 * on_axis_intensity(z, pair.z1);
    const double b = pair.w2_0 * on_axis_intensity(z, pair.z2);
    const double total = a + b;
    return {a / total, b / total};
}

DensityMatrix density_matrix_at(const GaussianBeamPair& pair, double z) {
    const auto [w1, w2] = weights(pair, z);
    return DensityMatrix::from_mixture(MixtureSpec({{w1, horizontal_subensemble()}, {w2, vertical_subensemble()}}));
}

std::vector<PropagationSample> polarization_curve(const GaussianBeamPair& pair, double z_max, int n_steps) {
    pair.check();
    if (n_steps < 2) throw InputError("polarization curve needs at least 2 steps");
    if (!std::isfinite(z_max) || !(z_max > 0.0)) throw InputError("z_max must be positive");

    std::vector<PropagationSample> curve;
    curve.reserve(static_cast<std::size_t>(n_steps));
    const double step = z_max / (n_steps - 1);
    for (int i = 0; i < n_steps; ++i) {
        PropagationSample s;
        s.z = i == n_steps - 1 ? z_max : i * step;
        std::tie(s.w1, s.w2) = weights(pair, s.z);
        const DensityMatrix rho = density_matrix_at(pair, s.z);
        // Both subensembles populate both slits, so neither metric is undefined.
        s.p = degree_of_polarization(rho, Slit::Q0)->p;
        s.mu = degree_of_coherence(rho)->mu;
        curve.push_back(s);
    }
    return curve;
}

}  // namespace cohpol
