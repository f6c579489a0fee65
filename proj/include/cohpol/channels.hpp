#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cohpol/density.hpp"

namespace cohpol {

inline constexpr double kCompletenessTolerance = 1e-10;

/// Completely positive trace-preserving map rho -> sum_j K_j rho K_j^dagger.
/// Construction rejects operator sets with sum_j K_j^dagger K_j != I.
class KrausChannel {
  public:
    KrausChannel(std::vector<Matrix4> operators, std::string label);

    DensityMatrix apply(const DensityMatrix& rho) const;

    const std::vector<Matrix4>& operators() const { return operators_; }
    const std::string& label() const { return label_; }

    /// max_ij |(sum_j K_j^dagger K_j - I)_ij|
    static double completeness_residual(const std::vector<Matrix4>& operators);

  private:
    std::vector<Matrix4> operators_;
    std::string label_;
};

enum class ChannelKind { PathDephasing, BirefringentDephasing };

ChannelKind parse_channel_kind(const std::string& name);
std::string to_string(ChannelKind kind);

/// Random phase kicks that depend only on the slit. Kraus set
/// sqrt(1-P) I, sqrt(P) (|H,0><H,0| + |V,0><V,0|), sqrt(P) (|H,1><H,1| + |V,1><V,1|).
/// Zero-weight operators are omitted, so P = 0 yields the single operator I.
KrausChannel path_dephasing(double p_interact);

/// Phase kicks that depend on slit and polarization. Kraus set
/// sqrt(1-P) I and sqrt(P) times each of the four basis projectors.
KrausChannel birefringent_dephasing(double p_interact);

KrausChannel make_channel(ChannelKind kind, double p_interact);

using ChannelFamily = std::function<KrausChannel(double)>;

/// n successive applications of family(p_interact).
DensityMatrix evolve_discrete(const ChannelFamily& family, const DensityMatrix& rho0, double p_interact, long n);

/// Continuous-time limit of the discrete map with P = gamma dt: every element
/// the channel dephases is multiplied by exp(-gamma t).
DensityMatrix evolve_continuous(ChannelKind kind, const DensityMatrix& rho0, double gamma, double t);

/// True where `kind` dephases element (row, col).
bool is_dephased(ChannelKind kind, int row, int col);

struct DecaySample {
    double t = 0.0;
    double abs_mu = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Metrics of evolve_continuous(kind, rho0, gamma, t) on n_samples uniform
/// times in [0, t_max]. Throws DomainError when rho0 leaves a slit unpopulated.
std::vector<DecaySample> decay_report(const DensityMatrix& rho0, ChannelKind kind, double gamma, double t_max,
                                      int n_samples);

}  // namespace cohpol
