#include "cohpol/metrics.hpp"

#include <cmath>
#include <sstream>

namespace cohpol {
namespace {

// Radicands this close below zero are rounding noise.
constexpr double kRadicandClamp = 1e-12;

int h_index(Slit s) { return basis_index(Polarization::H, s); }
int v_index(Slit s) { return basis_index(Polarization::V, s); }

}  // namespace

double slit_population(const DensityMatrix& rho, Slit slit) {
    return rho(h_index(slit), h_index(slit)).real() + rho(v_index(slit), v_index(slit)).real();
}

std::optional<CoherenceDegree> degree_of_coherence(const DensityMatrix& rho) {
    const double n0 = slit_population(rho, Slit::Q0);
    const double n1 = slit_population(rho, Slit::Q1);
    if (n0 <= kMinSlitPopulation || n1 <= kMinSlitPopulation) {
        return std::nullopt;
    }
    const Complex cross = rho(h_index(Slit::Q0), h_index(Slit::Q1)) + rho(v_index(Slit::Q0), v_index(Slit::Q1));
    return CoherenceDegree{cross / (std::sqrt(n0) * std::sqrt(n1))};
}

StokesVector stokes(const DensityMatrix& rho, Slit slit) {
    const int h = h_index(slit);
    const int v = v_index(slit);
    const Complex hh = rho(h, h);
    const Complex vv = rho(v, v);
    const Complex hv = rho(h, v);
    const Complex vh = rho(v, h);
    const Complex i(0.0, 1.0);

    StokesVector s;
    s.slit = slit;
    s.s0 = (hh + vv).real();
    s.s1 = (hh - vv).real();
    s.s2 = (vh + hv).real();
    s.s3 = (i * (hv - vh)).real();
    return s;
}

std::optional<double> polarization_from_stokes(const StokesVector& s) {
    if (s.s0 <= kMinSlitPopulation) {
        return std::nullopt;
    }
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) / s.s0;
}

std::optional<PolarizationDegree> degree_of_polarization(const DensityMatrix& rho, Slit slit) {
    const int h = h_index(slit);
    const int v = v_index(slit);
    const double hh = rho(h, h).real();
    const double vv = rho(v, v).real();
    const double total = hh + vv;
    if (total <= kMinSlitPopulation) {
        return std::nullopt;
    }
    const double coherence = (rho(h, v) * rho(v, h)).real();
    double radicand = 1.0 - 4.0 * (hh * vv - coherence) / (total * total);
    if (radicand < 0.0) {
        if (radicand < -kRadicandClamp) {
            std::ostringstream os;
            os << "degree of polarization radicand " << radicand << " is negative at " << to_string(slit);
            throw DomainError(os.str());
        }
        radicand = 0.0;
    }
    return PolarizationDegree{std::sqrt(radicand), slit};
}

Matrix2 polarization_block(const DensityMatrix& rho, Slit slit) {
    const int h = h_index(slit);
    const int v = v_index(slit);
    Matrix2 b;
    b << rho(h, h), rho(h, v), rho(v, h), rho(v, v);
    return b;
}

}  // namespace cohpol
