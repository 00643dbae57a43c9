// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "psfid/analysis.hpp"
#include "psfid/errors.hpp"
#include "psfid/lmg.hpp"

using namespace psfid;

namespace {

// Exhaustive minimization of the sector energy; independent of the rounding rule.
int brute_force_ground(int n, double h) {
    int best = 0;
    double best_e = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= n / 2; ++m) {
        const double e = lmg_energy(n, m, h);
        if (e < best_e) {
            best_e = e;
            best = m;
        }
    }
    return best;
}

}  // namespace

TEST(LmgEnergy, Examples) {
    EXPECT_DOUBLE_EQ(lmg_energy(4, 2, 1.0), -4.0);
    EXPECT_DOUBLE_EQ(lmg_energy(4, 0, 0.0), -2.0);
    EXPECT_DOUBLE_EQ(lmg_energy(4, 2, 0.0), 0.0);
    EXPECT_THROW(lmg_energy(4, 3, 0.0), DomainError);
    EXPECT_THROW(lmg_energy(4, -1, 0.0), DomainError);
    EXPECT_THROW(lmg_energy(5, 0, 0.0), DomainError);
    EXPECT_THROW(lmg_energy(4, 0, -0.1), DomainError);
}

TEST(LmgGroundMagnetization, Examples) {
    EXPECT_EQ(lmg_ground_magnetization(100, 1.2), 50);
    EXPECT_EQ(lmg_ground_magnetization(10, 0.95), 5);
    EXPECT_EQ(lmg_ground_magnetization(100, 0.513), 26);
    EXPECT_EQ(lmg_ground_magnetization(10, 0.0), 0);
    EXPECT_THROW(lmg_ground_magnetization(10, -0.1), DomainError);
    EXPECT_THROW(lmg_ground_magnetization(9, 0.5), DomainError);
}

TEST(LmgGroundMagnetization, TiesAtCrossingsTakeLargerSector) {
    for (int n : {2, 4, 10, 30, 100, 202}) {
        for (const auto& c : lmg_crossings(n)) {
            EXPECT_EQ(lmg_ground_magnetization(n, c.field), c.sector_above) << "N=" << n;
            const double below = std::nextafter(c.field - 1e-9, 0.0);
            EXPECT_EQ(lmg_ground_magnetization(n, below), c.sector_below) << "N=" << n;
        }
    }
}

TEST(LmgGroundMagnetization, AgreesWithExhaustiveArgminOffCrossings) {
    for (int n = 2; n <= 200; n += 2) {
        const auto crossings = lmg_crossings(n);
        for (int step = 0; step <= 1300; ++step) {
            const double h = step * 0.001;
            bool near_crossing = false;
            for (const auto& c : crossings) near_crossing |= std::abs(h - c.field) < 1e-9;
            if (near_crossing) continue;
            ASSERT_EQ(lmg_ground_magnetization(n, h), brute_force_ground(n, h))
                << "N=" << n << " h=" << h;
        }
    }
}

TEST(LmgCrossings, Examples) {
    const auto c10 = lmg_crossings(10);
    const double expect10[] = {0.9, 0.7, 0.5, 0.3, 0.1};
    ASSERT_EQ(c10.size(), 5u);
    for (int j = 0; j < 5; ++j) {
        EXPECT_NEAR(c10[j].field, expect10[j], 1e-15);
        EXPECT_EQ(c10[j].index, j);
        EXPECT_EQ(c10[j].sector_above, 5 - j);
        EXPECT_EQ(c10[j].sector_below, 4 - j);
    }
    const auto c4 = lmg_crossings(4);
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_EQ(c4[0].field, 0.75);
    EXPECT_EQ(c4[1].field, 0.25);

    const auto c2 = lmg_crossings(2);
    ASSERT_EQ(c2.size(), 1u);
    EXPECT_EQ(c2[0].field, 0.5);
    EXPECT_EQ(c2[0].sector_above, 1);
    EXPECT_EQ(c2[0].sector_below, 0);
}

TEST(LmgCrossings, DegenerateAndOrdered) {
    for (int n = 2; n <= 400; n += 2) {
        const auto cs = lmg_crossings(n);
        EXPECT_DOUBLE_EQ(cs.back().field, 1.0 / n);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            EXPECT_GT(cs[j].field, 0.0);
            if (j > 0) EXPECT_LT(cs[j].field, cs[j - 1].field);
            EXPECT_EQ(cs[j].sector_above, cs[j].sector_below + 1);
            const double ea = lmg_energy(n, cs[j].sector_above, cs[j].field);
            const double eb = lmg_energy(n, cs[j].sector_below, cs[j].field);
            EXPECT_LE(std::abs(ea - eb), 1e-12 * std::max(1.0, std::abs(ea)));
        }
    }
}

TEST(LmgCurve, Examples) {
    // Expected values from 30-digit evaluation of the closed forms.
    const auto c4 = lmg_curve(4);
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_NEAR(c4[0].fidelity, std::sqrt(12.0) / 4.0, 1e-15);
    EXPECT_NEAR(*c4[0].chi, 1.1507282898071237, 1e-12);
    EXPECT_NEAR(c4[1].fidelity, (std::sqrt(6.0) + std::sqrt(2.0)) / 4.0, 1e-15);
    EXPECT_NEAR(*c4[1].chi, 0.27734585678029564, 1e-12);
    EXPECT_EQ(*c4[0].delta_h, 0.5);

    const auto c100 = lmg_curve(100);
    EXPECT_NEAR(*c100[0].chi, 25.125839633753603, 2e-11);

    const double chi16[] = {4.130465352804555,  0.7575146334710429, 0.47907697639108103,
                            0.3677468714796313, 0.3102857947936470, 0.2777887600469793,
                            0.2596737909696998, 0.2514776912772739};
    const auto c16 = lmg_curve(16);
    for (int j = 0; j < 8; ++j) EXPECT_NEAR(*c16[j].chi, chi16[j], 1e-11) << "j=" << j;
}

TEST(LmgCurve, ShapeProperties) {
    double previous_min = 0.0;
    for (int n = 4; n <= 1024; n *= 2) {
        const auto curve = lmg_curve(n);
        for (const auto& p : curve) {
            EXPECT_LT(p.fidelity, 1.0);
            EXPECT_GE(p.fidelity, curve.front().fidelity);
            EXPECT_LE(*p.chi, *curve.front().chi);
            EXPECT_LE(p.crossing.field, 1.0 - 1.0 / n + 1e-15);  // nothing emitted above h_0
            EXPECT_NEAR(*p.chi / crossing_susceptibility(p.fidelity, *p.delta_h), 1.0, 1e-12);
        }
        const auto lowest = min_fidelity(curve);
        EXPECT_EQ(lowest.field, curve.front().crossing.field);
        EXPECT_GT(lowest.fidelity, previous_min);
        previous_min = lowest.fidelity;
    }
}

TEST(LmgChiMax, Examples) {
    EXPECT_NEAR(lmg_chi_max(100), 25.125839633753603, 1e-12);
    EXPECT_NEAR(4.0 * lmg_chi_max(100) / 100.0, 1.00503358535, 1e-10);
    const double ratio = 4.0 * lmg_chi_max(4096) / 4096.0 - 1.0;
    EXPECT_NEAR(ratio, 1.2209018435361461e-4, 1e-14);
    EXPECT_NEAR(4.0 * lmg_chi_max(1 << 26) / (1 << 26), 1.0, 1e-7);
}

TEST(LmgChiMax, MatchesCurveMaximumAndDecreasesTowardQuarterN) {
    double previous = std::numeric_limits<double>::infinity();
    for (int n = 4; n <= 8192; n *= 2) {
        const auto curve = lmg_curve(n);
        double best = 0.0;
        for (const auto& p : curve) best = std::max(best, *p.chi);
        EXPECT_NEAR(lmg_chi_max(n) / best, 1.0, 1e-11 * n) << "N=" << n;
        const double excess = 4.0 * lmg_chi_max(n) / n - 1.0;
        EXPECT_GT(excess, 0.0);
        EXPECT_LT(excess, previous);
        previous = excess;
        if (n >= 2048) EXPECT_LT(excess, 1e-3);
    }
}

TEST(LmgGlobalOverlap, CollapsesAcrossCrossing) {
    const int below = lmg_ground_magnetization(10, 0.85);
    const int above = lmg_ground_magnetization(10, 0.95);
    EXPECT_EQ(below, 4);
    EXPECT_EQ(above, 5);
    EXPECT_EQ(global_sector_overlap(below, above), 0.0);
    EXPECT_EQ(global_sector_overlap(lmg_ground_magnetization(10, 0.81),
                                    lmg_ground_magnetization(10, 0.89)),
              1.0);
}
