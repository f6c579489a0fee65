#include "cohpol/screen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohpol/metrics.hpp"

namespace cohpol {
namespace {

// Relative spread below which the normalized pattern is considered flat.
constexpr double kFlatTolerance = 1e-12;

// Two fringe periods contain at least two maxima and two minima.
constexpr int kMinExtrema = 4;

}  // namespace

void SlitGeometry::check() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(slit_separation)) throw InputError("slit separation must be positive");
    if (!positive(screen_distance)) throw InputError("screen distance must be positive");
    if (!positive(wavenumber)) throw InputError("wavenumber must be positive");
}

ScreenPoint ScreenPoint::at(const SlitGeometry& geom, double y) {
    const double half = 0.5 * geom.slit_separation;
    const double l = geom.screen_distance;
    return ScreenPoint{y, std::hypot(l, y - half), std::hypot(l, y + half)};
}

PatternSample point_density(const DensityMatrix& rho, const SlitGeometry& geom, double y) {
    geom.check();
    if (!std::isfinite(y)) throw InputError("screen coordinate must be finite");

    const ScreenPoint p = ScreenPoint::at(geom, y);
    PatternSample s;
    s.y = y;
    s.rho_q0 = slit_population(rho, Slit::Q0) / (p.r0 * p.r0);
    s.rho_q1 = slit_population(rho, Slit::Q1) / (p.r1 * p.r1);

    double interference = 0.0;
    if (auto mu = degree_of_coherence(rho)) {
        const Complex phase = std::polar(1.0, geom.wavenumber * (p.r0 - p.r1));
        interference = 2.0 * std::sqrt(s.rho_q0) * std::sqrt(s.rho_q1) * (mu->mu * phase).real();
    }
    // |mu| <= 1 bounds the total below by (sqrt(rho_q0) - sqrt(rho_q1))^2; only
    // rounding can push it under zero.
    s.rho_total = std::max(0.0, s.rho_q0 + s.rho_q1 + interference);
    return s;
}

std::vector<PatternSample> pattern(const DensityMatrix& rho, const SlitGeometry& geom, double y_min, double y_max,
                                   int n_points) {
    geom.check();
    if (n_points < 2) throw InputError("pattern needs at least 2 points");
    if (!std::isfinite(y_min) || !std::isfinite(y_max) || !(y_min < y_max)) {
        throw InputError("pattern range requires finite y_min < y_max");
    }
    std::vector<PatternSample> out;
    out.reserve(static_cast<std::size_t>(n_points));
    const double step = (y_max - y_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double y = i == n_points - 1 ? y_max : y_min + i * step;
        out.push_back(point_density(rho, geom, y));
    }
    return out;
}

double extract_visibility(std::span<const PatternSample> samples) {
    if (samples.size() < 3) throw InputError("visibility needs at least 3 samples");

    std::vector<double> normalized;
    normalized.reserve(samples.size());
    for (const auto& s : samples) {
        const double envelope = s.rho_q0 + s.rho_q1;
        if (!(envelope > 0.0)) throw InputError("visibility undefined where both single-slit terms vanish");
        normalized.push_back(s.rho_total / envelope);
    }

    const auto [lo, hi] = std::minmax_element(normalized.begin(), normalized.end());
    const double max = *hi;
    const double min = *lo;
    if (max - min <= kFlatTolerance * (max + min)) {
        return 0.0;
    }

    int extrema = 0;
    for (std::size_t i = 1; i + 1 < normalized.size(); ++i) {
        const double left = normalized[i] - normalized[i - 1];
        const double right = normalized[i + 1] - normalized[i];
        if ((left > 0.0 && right <= 0.0) || (left < 0.0 && right >= 0.0)) ++extrema;
    }
    if (extrema < kMinExtrema) {
        std::ostringstream os;
        os << "insufficient fringe coverage: found " << extrema << " extrema, need " << kMinExtrema;
        throw InputError(os.str());
    }
    return (max - min) / (max + min);
}

double coherence_from_pattern(std::span<const PatternSample> samples) {
    const double visibility = extract_visibility(samples);
    const PatternSample& centre = samples[samples.size() / 2];
    const double balance = 2.0 * std::sqrt(centre.rho_q0 * centre.rho_q1) / (centre.rho_q0 + centre.rho_q1);
    if (!(balance > 0.0)) throw DomainError("coherence undefined: a slit is unpopulated");
    return visibility / balance;
}

}  // namespace cohpol
