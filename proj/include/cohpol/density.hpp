#pragma once

#include <string>
#include <vector>

#include "cohpol/basis.hpp"
#include "cohpol/errors.hpp"

namespace cohpol {

namespace tolerance {
inline constexpr double kNormalization = 1e-9;
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-9;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kWeightSum = 1e-9;
}  // namespace tolerance

/// Normalized pure state a|H,0> + b|H,1> + c|V,0> + d|V,1>.
///
/// The global phase is kept as given; every derived quantity is invariant
/// under it.
class PureState {
  public:
    /// Throws InputError on non-finite amplitudes or when the squared norm
    /// differs from one by more than tolerance::kNormalization.
    PureState(Complex a, Complex b, Complex c, Complex d);
    explicit PureState(const Vector4& amplitudes);

    static PureState basis(BasisState s);

    const Vector4& amplitudes() const { return amplitudes_; }
    Complex amplitude(BasisState s) const { return amplitudes_(basis_index(s)); }
    double norm_squared() const { return amplitudes_.squaredNorm(); }

  private:
    Vector4 amplitudes_;
};

struct MixtureComponent {
    double weight;
    PureState state;
};

/// Convex ensemble of pure states. Weights must be non-negative and sum to one.
class MixtureSpec {
  public:
    explicit MixtureSpec(std::vector<MixtureComponent> components);

    const std::vector<MixtureComponent>& components() const { return components_; }

  private:
    std::vector<MixtureComponent> components_;
};

/// Per-invariant diagnostics for a candidate 4x4 matrix.
struct ValidationReport {
    bool finite = true;
    double hermiticity_residual = 0.0;  // max |m_ij - conj(m_ji)|
    double trace_deviation = 0.0;       // |tr m - 1|
    double min_eigenvalue = 0.0;        // of the Hermitian part
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

class ValidationError : public InputError {
  public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

ValidationReport inspect(const Matrix4& m);

/// Hermitian, unit-trace, positive-semidefinite 4x4 matrix in the
/// {|H,0>, |H,1>, |V,0>, |V,1>} basis. Immutable once built.
class DensityMatrix {
  public:
    static DensityMatrix from_pure(const PureState& state);
    static DensityMatrix from_mixture(const MixtureSpec& spec);

    /// Accepts `m` unchanged if it satisfies every invariant; otherwise throws
    /// ValidationError listing all violations. Never repairs its input.
    static DensityMatrix validate(const Matrix4& m);

    /// 0-based element access in basis order.
    Complex operator()(int row, int col) const { return m_(row, col); }
    Complex at(BasisState row, BasisState col) const { return m_(basis_index(row), basis_index(col)); }

    const Matrix4& matrix() const { return m_; }

    /// Ascending eigenvalues.
    Eigen::Vector4d eigenvalues() const;
    double purity() const;
    double trace() const { return m_.trace().real(); }

  private:
    explicit DensityMatrix(const Matrix4& m) : m_(m) {}

    Matrix4 m_;
};

/// Ascending eigenvalues of the Hermitian part (m + m^dagger)/2.
Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m);

}  // namespace cohpol
