#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace cohpol {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;

enum class Polarization { H = 0, V = 1 };

// Which opening of the mask a photon went through.
enum class Slit { Q0 = 0, Q1 = 1 };

// Joint polarization/path basis. Every index in the library derives from this
// ordering: {|H,0>, |H,1>, |V,0>, |V,1>}.
enum class BasisState { H0 = 0, H1 = 1, V0 = 2, V1 = 3 };

inline constexpr int kDim = 4;

constexpr int basis_index(Polarization pol, Slit slit) {
    return 2 * static_cast<int>(pol) + static_cast<int>(slit);
}

constexpr int basis_index(BasisState s) { return static_cast<int>(s); }

constexpr Slit slit_of(int index) { return static_cast<Slit>(index % 2); }

constexpr Polarization polarization_of(int index) { return static_cast<Polarization>(index / 2); }

constexpr Slit other(Slit s) { return s == Slit::Q0 ? Slit::Q1 : Slit::Q0; }

constexpr std::string_view to_string(Slit s) { return s == Slit::Q0 ? "Q0" : "Q1"; }

inline constexpr std::array<std::string_view, kDim> kBasisLabels = {"|H,0>", "|H,1>", "|V,0>", "|V,1>"};

}  // namespace cohpol
