#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cohpol/propagation.hpp"
#include "cohpol/screen.hpp"

namespace cohpol::cli {

enum class OutputFormat { Csv, Json };

enum ExitCode : int { kSuccess = 0, kInputError = 2, kDomainError = 3 };

inline constexpr int kDefaultDigits = 12;

/// Locale-independent %.Ng formatting. The digit count comes from
/// COHPOL_FLOAT_DIGITS when set (1..17), otherwise kDefaultDigits.
class NumberFormatter {
  public:
    explicit NumberFormatter(int significant_digits = kDefaultDigits);
    static NumberFormatter from_environment();

    std::string operator()(double value) const;
    int digits() const { return digits_; }

  private:
    int digits_;
};

/// Column-oriented result. Empty cells mean "undefined".
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

void write_table(std::ostream& out, const Table& table, OutputFormat format, const NumberFormatter& fmt);

struct MetricsConfig {
    std::filesystem::path state;
};

struct ScreenConfig {
    std::filesystem::path state;
    SlitGeometry geometry{};
    double y_min = 0.0;
    double y_max = 0.0;
    int points = 1001;
};

struct PropagateConfig {
    GaussianBeamPair pair{};
    double z_max = 10.0;
    int steps = 101;
};

struct EvolveConfig {
    std::filesystem::path state;
    std::filesystem::path channel;
    double gamma = 1.0;
    double t_max = 5.0;
    int steps = 101;
};

/// One row: mu (re, im, modulus), Stokes vectors at Q0 and Q1, p0, p1.
Table run_metrics(const MetricsConfig& config);

/// Columns y, rho_total, rho_q0, rho_q1, rho_normalized.
Table run_screen(const ScreenConfig& config);

/// Columns z_over_z1, w1, w2, p, abs_mu.
Table run_propagate(const PropagateConfig& config);

/// Columns t, abs_mu, p0, p1. Named channel kinds use the continuous-time
/// decay at rate gamma; custom Kraus sets are applied repeatedly and row k
/// reports the state after k applications (t = k).
Table run_evolve(const EvolveConfig& config);

/// Full command-line entry point; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cohpol::cli
