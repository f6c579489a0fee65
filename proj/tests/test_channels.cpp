#include "cohpol/channels.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "cohpol/metrics.hpp"
#include "support/random_states.hpp"

using namespace cohpol;

namespace {

double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).cwiseAbs().maxCoeff(); }

bool same_slit(int r, int c) { return r % 2 == c % 2; }

// Closed form for p at `slit` after dephasing the H/V coherence by exp(-gamma t).
double polarization_decay(const DensityMatrix& rho0, Slit slit, double gamma, double t) {
    const int h = basis_index(Polarization::H, slit);
    const int v = basis_index(Polarization::V, slit);
    const double hh = rho0(h, h).real();
    const double vv = rho0(v, v).real();
    const double coherence = (rho0(h, v) * rho0(v, h)).real() * std::exp(-2.0 * gamma * t);
    return std::sqrt(1.0 - 4.0 * (hh * vv - coherence) / ((hh + vv) * (hh + vv)));
}

}  // namespace

TEST(KrausChannel, IdentityChannelLeavesStateUnchanged) {
    const KrausChannel identity({Matrix4::Identity()}, "identity");
    std::mt19937_64 rng(1);
    const auto rho = cohpol::testing::random_density(rng);
    EXPECT_EQ(identity.apply(rho).matrix(), rho.matrix());
}

TEST(KrausChannel, RejectsIncompleteSets) {
    EXPECT_THROW(KrausChannel({0.5 * Matrix4::Identity()}, "half"), InputError);
    EXPECT_THROW(KrausChannel({}, "empty"), InputError);
    Matrix4 leak = Matrix4::Identity();
    leak(0, 0) = std::sqrt(1.0 - 1e-9);
    EXPECT_THROW(KrausChannel({leak}, "leak"), InputError);
}

TEST(KrausChannel, AcceptsNonHermitianOperators) {
    // Amplitude damping |H,1> -> |H,0> with probability q.
    const double q = 0.3;
    Matrix4 k0 = Matrix4::Identity();
    k0(1, 1) = std::sqrt(1.0 - q);
    Matrix4 k1 = Matrix4::Zero();
    k1(0, 1) = std::sqrt(q);
    const KrausChannel damping({k0, k1}, "damping");
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto out = damping.apply(cohpol::testing::random_density(rng));
        EXPECT_TRUE(inspect(out.matrix()).ok());
    }
}

TEST(PathDephasing, ZeroProbabilityIsIdentity) {
    const auto channel = path_dephasing(0.0);
    ASSERT_EQ(channel.operators().size(), 1u);
    EXPECT_EQ(channel.operators()[0], Matrix4::Identity());
}

TEST(PathDephasing, OperatorsAndCompleteness) {
    const auto channel = path_dephasing(0.3);
    ASSERT_EQ(channel.operators().size(), 3u);
    Matrix4 k1 = Matrix4::Zero();
    k1(0, 0) = k1(2, 2) = std::sqrt(0.3);
    Matrix4 k2 = Matrix4::Zero();
    k2(1, 1) = k2(3, 3) = std::sqrt(0.3);
    EXPECT_LT(max_abs_diff(channel.operators()[0], std::sqrt(0.7) * Matrix4::Identity()), 1e-16);
    EXPECT_EQ(channel.operators()[1], k1);
    EXPECT_EQ(channel.operators()[2], k2);
    EXPECT_LT(KrausChannel::completeness_residual(channel.operators()), 1e-15);
}

TEST(PathDephasing, ElementPattern) {
    std::mt19937_64 rng(3);
    for (double p : {0.0, 0.25, 1.0}) {
        const auto rho = cohpol::testing::random_density(rng);
        const auto out = path_dephasing(p).apply(rho);
        for (int r = 0; r < kDim; ++r) {
            for (int c = 0; c < kDim; ++c) {
                const Complex expected = same_slit(r, c) ? rho(r, c) : (1.0 - p) * rho(r, c);
                EXPECT_NEAR(std::abs(out(r, c) - expected), 0.0, 1e-15) << r << "," << c;
            }
        }
    }
}

TEST(PathDephasing, FullInteractionZeroesPathCoherences) {
    std::mt19937_64 rng(4);
    const auto rho = cohpol::testing::random_density(rng);
    const auto out = path_dephasing(1.0).apply(rho);
    for (auto [r, c] : {std::pair{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}}) {
        EXPECT_EQ(out(r, c), Complex(0.0, 0.0));
    }
    for (auto [r, c] : {std::pair{0, 2}, {1, 3}, {2, 0}, {3, 1}, {0, 0}, {3, 3}}) {
        EXPECT_NEAR(std::abs(out(r, c) - rho(r, c)), 0.0, 1e-16);
    }
}

TEST(PathDephasing, PolarizationDegreesInvariant) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto rho = cohpol::testing::random_two_slit_density(rng, 1e-2);
        const auto out = evolve_discrete(path_dephasing, rho, 0.37, 25);
        for (Slit s : {Slit::Q0, Slit::Q1}) {
            EXPECT_NEAR(degree_of_polarization(out, s)->p, degree_of_polarization(rho, s)->p, 1e-12);
        }
    }
}

TEST(PathDephasing, RejectsOutOfRangeProbability) {
    EXPECT_THROW(path_dephasing(-0.1), InputError);
    EXPECT_THROW(path_dephasing(1.1), InputError);
    EXPECT_THROW(birefringent_dephasing(NAN), InputError);
}

TEST(BirefringentDephasing, ZeroProbabilityIsIdentity) {
    const auto channel = birefringent_dephasing(0.0);
    ASSERT_EQ(channel.operators().size(), 1u);
    EXPECT_EQ(channel.operators()[0], Matrix4::Identity());
}

TEST(BirefringentDephasing, FiveOperators) {
    const auto channel = birefringent_dephasing(0.6);
    ASSERT_EQ(channel.operators().size(), 5u);
    for (int j = 0; j < kDim; ++j) {
        Matrix4 expected = Matrix4::Zero();
        expected(j, j) = std::sqrt(0.6);
        EXPECT_EQ(channel.operators()[j + 1], expected);
    }
    EXPECT_LT(KrausChannel::completeness_residual(channel.operators()), 1e-15);
}

TEST(BirefringentDephasing, ScalesEveryOffDiagonal) {
    std::mt19937_64 rng(6);
    for (double p : {0.1, 0.5, 1.0}) {
        const auto rho = cohpol::testing::random_density(rng);
        const auto out = birefringent_dephasing(p).apply(rho);
        for (int r = 0; r < kDim; ++r) {
            for (int c = 0; c < kDim; ++c) {
                const Complex expected = r == c ? rho(r, c) : (1.0 - p) * rho(r, c);
                EXPECT_NEAR(std::abs(out(r, c) - expected), 0.0, 1e-15);
            }
        }
    }
}

TEST(BirefringentDephasing, DiagonalStatesAreFixed) {
    Matrix4 m = Matrix4::Zero();
    m.diagonal() << 0.1, 0.2, 0.3, 0.4;
    const auto rho = DensityMatrix::validate(m);
    for (double p : {0.0, 0.4, 1.0}) {
        EXPECT_LT(max_abs_diff(birefringent_dephasing(p).apply(rho).matrix(), m), 1e-16);
        EXPECT_LT(max_abs_diff(path_dephasing(p).apply(rho).matrix(), m), 1e-16);
    }
}

TEST(EvolveDiscrete, ZeroStepsIsIdentity) {
    std::mt19937_64 rng(7);
    const auto rho = cohpol::testing::random_density(rng);
    EXPECT_EQ(evolve_discrete(path_dephasing, rho, 0.5, 0).matrix(), rho.matrix());
    EXPECT_THROW(evolve_discrete(path_dephasing, rho, 0.5, -1), InputError);
}

TEST(EvolveDiscrete, PathCoherencePicksUpPower) {
    std::mt19937_64 rng(8);
    const auto rho = cohpol::testing::random_density(rng);
    const double p = 0.05;
    for (long n : {1L, 7L, 40L}) {
        const auto out = evolve_discrete(path_dephasing, rho, p, n);
        const Complex expected = rho(0, 1) * std::pow(1.0 - p, static_cast<double>(n));
        EXPECT_NEAR(std::abs(out(0, 1) - expected), 0.0, 1e-14 * std::abs(rho(0, 1)) + 1e-17);
        EXPECT_NEAR(std::abs(out(0, 2) - rho(0, 2)), 0.0, 1e-14);
    }
}

TEST(EvolveDiscrete, BirefringentPolarizationCoherencePicksUpPower) {
    std::mt19937_64 rng(9);
    const auto rho = cohpol::testing::random_density(rng);
    const double p = 0.2;
    const auto out = evolve_discrete(birefringent_dephasing, rho, p, 12);
    EXPECT_NEAR(std::abs(out(0, 2) - rho(0, 2) * std::pow(0.8, 12)), 0.0, 1e-14);
}

TEST(EvolveContinuous, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(10);
    const auto rho = cohpol::testing::random_density(rng);
    for (auto kind : {ChannelKind::PathDephasing, ChannelKind::BirefringentDephasing}) {
        EXPECT_EQ(evolve_continuous(kind, rho, 3.0, 0.0).matrix(), rho.matrix());
        EXPECT_EQ(evolve_continuous(kind, rho, 0.0, 10.0).matrix(), rho.matrix());
    }
    EXPECT_THROW(evolve_continuous(ChannelKind::PathDephasing, rho, -1.0, 1.0), InputError);
    EXPECT_THROW(evolve_continuous(ChannelKind::PathDephasing, rho, 1.0, -1.0), InputError);
}

TEST(EvolveContinuous, CoherenceDecaysExponentially) {
    std::mt19937_64 rng(11);
    const double gamma = 2.5;
    for (int i = 0; i < 50; ++i) {
        const auto rho = cohpol::testing::random_two_slit_density(rng, 1e-2);
        const Complex mu0 = degree_of_coherence(rho)->mu;
        for (auto kind : {ChannelKind::PathDephasing, ChannelKind::BirefringentDephasing}) {
            for (double t : {0.1, 0.7, 2.0}) {
                const auto mu = degree_of_coherence(evolve_continuous(kind, rho, gamma, t))->mu;
                EXPECT_NEAR(std::abs(mu - mu0 * std::exp(-gamma * t)), 0.0, 1e-12);
            }
        }
    }
}

TEST(EvolveContinuous, BirefringentPolarizationDecay) {
    std::mt19937_64 rng(12);
    const double gamma = 0.8;
    for (int i = 0; i < 50; ++i) {
        const auto rho = cohpol::testing::random_two_slit_density(rng, 1e-2);
        for (double t : {0.0, 0.5, 1.5, 4.0}) {
            const auto out = evolve_continuous(ChannelKind::BirefringentDephasing, rho, gamma, t);
            for (Slit s : {Slit::Q0, Slit::Q1}) {
                EXPECT_NEAR(degree_of_polarization(out, s)->p, polarization_decay(rho, s, gamma, t), 1e-10);
            }
        }
    }
}

TEST(ChannelProperties, OutputsStayValid) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = cohpol::testing::random_density(rng);
        const auto kind = i % 2 ? ChannelKind::PathDephasing : ChannelKind::BirefringentDephasing;
        const auto out = make_channel(kind, prob(rng)).apply(rho);
        const auto report = inspect(out.matrix());
        ASSERT_TRUE(report.ok()) << report.summary();
        EXPECT_NEAR(out.trace(), rho.trace(), 1e-10);
    }
}

TEST(ChannelProperties, ConcreteChannelsCommute) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto rho = cohpol::testing::random_density(rng);
        const auto a = path_dephasing(prob(rng));
        const auto b = birefringent_dephasing(prob(rng));
        EXPECT_LT(max_abs_diff(b.apply(a.apply(rho)).matrix(), a.apply(b.apply(rho)).matrix()), 1e-12);
    }
}

TEST(ChannelProperties, ContinuousEvolutionIsASemigroup) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const auto rho = cohpol::testing::random_density(rng);
        for (auto kind : {ChannelKind::PathDephasing, ChannelKind::BirefringentDephasing}) {
            const auto split = evolve_continuous(kind, evolve_continuous(kind, rho, 1.3, 0.4), 1.3, 0.9);
            const auto joint = evolve_continuous(kind, rho, 1.3, 1.3);
            EXPECT_LT(max_abs_diff(split.matrix(), joint.matrix()), 1e-12);
        }
    }
}

TEST(ChannelProperties, PathChannelFixesPolarizationCoherences) {
    std::mt19937_64 rng(16);
    const auto rho = cohpol::testing::random_density(rng);
    const auto out = evolve_continuous(ChannelKind::PathDephasing, rho, 4.0, 10.0);
    for (auto [r, c] : {std::pair{0, 2}, {2, 0}, {1, 3}, {3, 1}}) EXPECT_EQ(out(r, c), rho(r, c));
    for (int d = 0; d < kDim; ++d) EXPECT_EQ(out(d, d), rho(d, d));
}

TEST(ChannelProperties, DiscreteConvergesToContinuous) {
    std::mt19937_64 rng(17);
    const double gamma = 1.0, t = 1.0;
    const auto rho = cohpol::testing::random_density(rng);
    for (auto kind : {ChannelKind::PathDephasing, ChannelKind::BirefringentDephasing}) {
        const auto family = [kind](double p) { return make_channel(kind, p); };
        const auto continuous = evolve_continuous(kind, rho, gamma, t);
        double previous = INFINITY;
        for (long n : {100L, 1000L}) {
            const double err = max_abs_diff(evolve_discrete(family, rho, gamma * t / n, n).matrix(), continuous.matrix());
            // e^{-x} - (1 - x/n)^n ~ e^{-x} x^2 / (2n) per unit element.
            EXPECT_LE(err, std::exp(-1.0) / (2.0 * n) * 1.05);
            EXPECT_LT(err, previous);
            previous = err;
        }
    }
}

TEST(DecayReport, PathChannelKeepsPolarization) {
    std::mt19937_64 rng(18);
    const auto rho = cohpol::testing::random_two_slit_density(rng, 1e-2);
    const auto series = decay_report(rho, ChannelKind::PathDephasing, 2.0, 3.0, 31);
    ASSERT_EQ(series.size(), 31u);
    EXPECT_EQ(series.back().t, 3.0);
    for (const auto& s : series) {
        EXPECT_NEAR(s.p0, series.front().p0, 1e-12);
        EXPECT_NEAR(s.p1, series.front().p1, 1e-12);
        EXPECT_NEAR(s.abs_mu, series.front().abs_mu * std::exp(-2.0 * s.t), 1e-10);
    }
}

TEST(DecayReport, BirefringentDephasingOfBalancedState) {
    const auto rho = DensityMatrix::from_pure(PureState(0.5, 0.5, 0.5, 0.5));
    const auto series = decay_report(rho, ChannelKind::BirefringentDephasing, 1.0, 20.0, 201);
    for (std::size_t i = 1; i < series.size(); ++i) {
        EXPECT_LT(series[i].p0, series[i - 1].p0 + 1e-15);
        EXPECT_LE(series[i].abs_mu, series[i - 1].abs_mu);
    }
    // Equal H and V populations: fully depolarized in the limit.
    EXPECT_NEAR(series.back().p0, 0.0, 1e-8);
}

TEST(DecayReport, StrictlyDecreasingTowardImbalanceLimit) {
    const double a = 0.8 * M_SQRT1_2, c = 0.6 * M_SQRT1_2;
    const auto rho = DensityMatrix::from_mixture(
        MixtureSpec({{0.7, PureState(a, a, c, c)}, {0.3, PureState::basis(BasisState::H1)}}));
    const double hh = rho(0, 0).real(), vv = rho(2, 2).real();
    const double limit = std::sqrt(1.0 - 4.0 * hh * vv / ((hh + vv) * (hh + vv)));
    const auto series = decay_report(rho, ChannelKind::BirefringentDephasing, 1.0, 5.0, 51);
    for (std::size_t i = 1; i < series.size(); ++i) EXPECT_LT(series[i].p0, series[i - 1].p0);
    EXPECT_GT(series.back().p0, limit);
    const auto late = decay_report(rho, ChannelKind::BirefringentDephasing, 1.0, 30.0, 2);
    EXPECT_NEAR(late.back().p0, limit, 1e-12);
}

TEST(DecayReport, InputErrors) {
    const auto rho = DensityMatrix::from_pure(PureState(0.5, 0.5, 0.5, 0.5));
    EXPECT_THROW(decay_report(DensityMatrix::from_pure(PureState::basis(BasisState::V0)), ChannelKind::PathDephasing,
                              1.0, 1.0, 5),
                 DomainError);
    EXPECT_THROW(decay_report(rho, ChannelKind::PathDephasing, 1.0, 1.0, 1), InputError);
    EXPECT_THROW(decay_report(rho, ChannelKind::PathDephasing, -1.0, 1.0, 5), InputError);
}
