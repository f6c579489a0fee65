#include "cohpol/density.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

namespace cohpol {
namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Vector4 checked_amplitudes(const Vector4& v) {
    for (int i = 0; i < kDim; ++i) {
        if (!is_finite(v(i))) {
            throw InputError("pure state amplitude " + std::string(kBasisLabels[i]) + " is not finite");
        }
    }
    const double norm2 = v.squaredNorm();
    if (std::abs(norm2 - 1.0) > tolerance::kNormalization) {
        std::ostringstream os;
        os.precision(17);
        os << "pure state is not normalized: |a|^2+|b|^2+|c|^2+|d|^2 = " << norm2;
        throw InputError(os.str());
    }
    return v;
}

}  // namespace

PureState::PureState(Complex a, Complex b, Complex c, Complex d)
    : amplitudes_(checked_amplitudes(Vector4(a, b, c, d))) {}

PureState::PureState(const Vector4& amplitudes) : amplitudes_(checked_amplitudes(amplitudes)) {}

PureState PureState::basis(BasisState s) {
    Vector4 v = Vector4::Zero();
    v(basis_index(s)) = 1.0;
    return PureState(v);
}

MixtureSpec::MixtureSpec(std::vector<MixtureComponent> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw InputError("mixture has no components");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const double w = components_[i].weight;
        if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
            std::ostringstream os;
            os << "mixture weight " << i << " = " << w << " is outside [0, 1]";
            throw InputError(os.str());
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tolerance::kWeightSum) {
        std::ostringstream os;
        os.precision(17);
        os << "mixture weights sum to " << total << ", expected 1";
        throw InputError(os.str());
    }
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : InputError("invalid density matrix: " + report.summary()), report_(std::move(report)) {}

Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m) {
    const Matrix4 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

ValidationReport inspect(const Matrix4& m) {
    ValidationReport report;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            if (!is_finite(m(i, j))) report.finite = false;
        }
    }
    if (!report.finite) {
        report.violations.emplace_back("non-finite element");
        return report;
    }

    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            report.hermiticity_residual = std::max(report.hermiticity_residual, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
    report.min_eigenvalue = hermitian_eigenvalues(m)(0);

    std::ostringstream os;
    os.precision(6);
    if (report.hermiticity_residual > tolerance::kHermiticity) {
        os << "not Hermitian (max |rho_mn - conj(rho_nm)| = " << report.hermiticity_residual << ")";
        report.violations.push_back(os.str());
        os.str("");
    }
    if (report.trace_deviation > tolerance::kTrace) {
        os << "trace deviates from 1 by " << report.trace_deviation;
        report.violations.push_back(os.str());
        os.str("");
    }
    if (report.min_eigenvalue < tolerance::kEigenvalueFloor) {
        os << "not positive semidefinite (smallest eigenvalue " << report.min_eigenvalue << ")";
        report.violations.push_back(os.str());
    }
    return report;
}

DensityMatrix DensityMatrix::validate(const Matrix4& m) {
    ValidationReport report = inspect(m);
    if (!report.ok()) {
        throw ValidationError(std::move(report));
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
    const Vector4& v = state.amplitudes();
    return validate(v * v.adjoint());
}

DensityMatrix DensityMatrix::from_mixture(const MixtureSpec& spec) {
    Matrix4 m = Matrix4::Zero();
    for (const auto& component : spec.components()) {
        const Vector4& v = component.state.amplitudes();
        m += component.weight * (v * v.adjoint());
    }
    return validate(m);
}

Eigen::Vector4d DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(m_); }

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

}  // namespace cohpol
