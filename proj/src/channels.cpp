#include "cohpol/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "cohpol/metrics.hpp"

namespace cohpol {
namespace {

void check_probability(double p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::ostringstream os;
        os << "interaction probability " << p << " is outside [0, 1]";
        throw InputError(os.str());
    }
}

Matrix4 projector(int index) {
    Matrix4 m = Matrix4::Zero();
    m(index, index) = 1.0;
    return m;
}

Matrix4 slit_projector(Slit slit) {
    return projector(basis_index(Polarization::H, slit)) + projector(basis_index(Polarization::V, slit));
}

// K0 = sqrt(1-P) I followed by sqrt(P) * each projector; zero-weight terms dropped.
std::vector<Matrix4> dephasing_set(double p, const std::vector<Matrix4>& projectors) {
    std::vector<Matrix4> ops;
    if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * Matrix4::Identity());
    if (p > 0.0) {
        for (const auto& proj : projectors) ops.push_back(std::sqrt(p) * proj);
    }
    return ops;
}

void check_time(double gamma, double t) {
    if (!std::isfinite(gamma) || gamma < 0.0) throw InputError("decay rate gamma must be non-negative");
    if (!std::isfinite(t) || t < 0.0) throw InputError("time must be non-negative");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix4> operators, std::string label)
    : operators_(std::move(operators)), label_(std::move(label)) {
    if (operators_.empty()) throw InputError("Kraus channel '" + label_ + "' has no operators");
    const double residual = completeness_residual(operators_);
    if (!(residual <= kCompletenessTolerance)) {
        std::ostringstream os;
        os << "Kraus channel '" << label_ << "' violates completeness: max |sum K^dagger K - I| = " << residual;
        throw InputError(os.str());
    }
}

double KrausChannel::completeness_residual(const std::vector<Matrix4>& operators) {
    Matrix4 sum = Matrix4::Zero();
    for (const auto& k : operators) sum += k.adjoint() * k;
    return (sum - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
    Matrix4 out = Matrix4::Zero();
    for (const auto& k : operators_) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix::validate(out);
}

ChannelKind parse_channel_kind(const std::string& name) {
    if (name == "path-dephasing") return ChannelKind::PathDephasing;
    if (name == "birefringent-dephasing") return ChannelKind::BirefringentDephasing;
    throw InputError("unknown channel kind '" + name + "'");
}

std::string to_string(ChannelKind kind) {
    return kind == ChannelKind::PathDephasing ? "path-dephasing" : "birefringent-dephasing";
}

KrausChannel path_dephasing(double p_interact) {
    check_probability(p_interact);
    return KrausChannel(dephasing_set(p_interact, {slit_projector(Slit::Q0), slit_projector(Slit::Q1)}),
                        "path-dephasing");
}

KrausChannel birefringent_dephasing(double p_interact) {
    check_probability(p_interact);
    std::vector<Matrix4> projectors;
    for (int i = 0; i < kDim; ++i) projectors.push_back(projector(i));
    return KrausChannel(dephasing_set(p_interact, projectors), "birefringent-dephasing");
}

KrausChannel make_channel(ChannelKind kind, double p_interact) {
    return kind == ChannelKind::PathDephasing ? path_dephasing(p_interact) : birefringent_dephasing(p_interact);
}

DensityMatrix evolve_discrete(const ChannelFamily& family, const DensityMatrix& rho0, double p_interact, long n) {
    if (n < 0) throw InputError("number of channel applications must be non-negative");
    if (n == 0) return rho0;
    const KrausChannel channel = family(p_interact);
    DensityMatrix rho = rho0;
    for (long i = 0; i < n; ++i) rho = channel.apply(rho);
    return rho;
}

bool is_dephased(ChannelKind kind, int row, int col) {
    if (row == col) return false;
    if (kind == ChannelKind::BirefringentDephasing) return true;
    return slit_of(row) != slit_of(col);
}

DensityMatrix evolve_continuous(ChannelKind kind, const DensityMatrix& rho0, double gamma, double t) {
    check_time(gamma, t);
    const double factor = std::exp(-gamma * t);
    Matrix4 m = rho0.matrix();
    for (int r = 0; r < kDim; ++r) {
        for (int c = 0; c < kDim; ++c) {
            if (is_dephased(kind, r, c)) m(r, c) *= factor;
        }
    }
    return DensityMatrix::validate(m);
}

std::vector<DecaySample> decay_report(const DensityMatrix& rho0, ChannelKind kind, double gamma, double t_max,
                                      int n_samples) {
    check_time(gamma, t_max);
    if (n_samples < 2) throw InputError("decay report needs at least 2 samples");
    if (!degree_of_coherence(rho0)) throw DomainError("initial state leaves a slit unpopulated; coherence is undefined");

    std::vector<DecaySample> series;
    series.reserve(static_cast<std::size_t>(n_samples));
    const double step = t_max / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) {
        DecaySample s;
        s.t = i == n_samples - 1 ? t_max : i * step;
        const DensityMatrix rho = evolve_continuous(kind, rho0, gamma, s.t);
        // Populations are untouched by either channel, so every metric stays defined.
        s.abs_mu = degree_of_coherence(rho)->modulus();
        s.p0 = degree_of_polarization(rho, Slit::Q0)->p;
        s.p1 = degree_of_polarization(rho, Slit::Q1)->p;
        series.push_back(s);
    }
    return series;
}

}  // namespace cohpol
