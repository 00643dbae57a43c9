// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

// Exact diagonalization of the Heisenberg ring H = sum_i S_i . S_{i+1}
// (periodic, i = 1..N) in fixed-N_down sectors. Used only to check the Bethe
// solver; dense eigensolves, so sizes stay small.
//
// The sum is taken literally, so on N = 2 the single bond is counted twice.
// Validation therefore starts at N = 4.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "psfid/bethe.hpp"

namespace psfid {

inline constexpr std::size_t kDefaultDimensionCap = 4000;
inline constexpr double kOracleTolerance = 1e-8;

/// Configurations with exactly N_down set bits (set bit = down spin), ascending.
struct SectorBasis {
    int n = 0;
    int n_down = 0;
    std::vector<std::uint32_t> states;

    [[nodiscard]] std::size_t dimension() const noexcept { return states.size(); }
    /// Position of a configuration in `states`; the configuration must belong to the sector.
    [[nodiscard]] std::size_t index_of(std::uint32_t state) const;
};

std::uint64_t binomial(int n, int k) noexcept;

SectorBasis make_sector_basis(int n, int n_down, std::size_t cap = kDefaultDimensionCap);

/// h = 0 Hamiltonian restricted to the sector, in the basis order of make_sector_basis.
Eigen::MatrixXd sector_hamiltonian(int n, int n_down, std::size_t cap = kDefaultDimensionCap);

/// Lowest sector eigenvalue plus the analytic Zeeman shift -h (N - 2 N_down).
double ed_sector_ground_energy(int n, int n_down, double h,
                               std::size_t cap = kDefaultDimensionCap);

/// eps(k) = N/4 - E_ed(k, h = 0) for k = 0 .. N/2, in the Bethe energy convention.
std::vector<double> ed_sector_epsilons(int n, std::size_t cap = kDefaultDimensionCap);

struct SectorCheck {
    int n = 0;
    int n_down = 0;
    double bethe_energy = 0.0;
    double ed_energy = 0.0;
    double difference = 0.0;
    bool passed = false;
    std::string error;  ///< non-empty when either route threw
};

struct CrossingCheck {
    int n = 0;
    int index = 0;
    double bethe_field = 0.0;
    double ed_field = 0.0;
    double difference = 0.0;
    bool passed = false;
};

struct ValidationReport {
    int n = 0;
    std::vector<SectorCheck> sectors;      ///< ascending N_down
    std::vector<CrossingCheck> crossings;  ///< ascending j; empty if any sector failed to evaluate

    [[nodiscard]] bool passed() const noexcept;
};

/// Compares Bethe and ED sector energies at h = 0 for every N_down in [0, N/2]
/// and the crossing fields derived from each. Failures are recorded, never thrown.
ValidationReport validate_bethe(int n, const BetheOptions& options = {},
                                std::size_t cap = kDefaultDimensionCap);

}  // namespace psfid
