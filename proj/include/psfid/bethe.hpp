// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe.hpp
 * @brief Bethe-Ansatz ground states of the spin-1/2 Heisenberg ring in a field,
 *        one magnetization sector at a time.
 *
 * With N_down down spins the sector ground state has real rapidities x_j solving
 *
 *   2N atan(x_j) = 2 pi I_j + 2 sum_l atan((x_j - x_l)/2),
 *   I_j = -(N_down-1)/2, ..., (N_down-1)/2,
 *
 * and energy E = N/4 - (N - 2 N_down) h - eps, eps = sum_j 2/(x_j^2 + 1).
 * The rapidities do not depend on h, so every sector energy is affine in h and
 * adjacent sectors cross at h_j = (eps(j+1) - eps(j)) / 2.
 */

#pragma once

#include <span>
#include <vector>

#include "psfid/fidelity.hpp"

namespace psfid {

/// Largest ring for which full curves (all N/2 + 1 sectors) are solved.
inline constexpr int kMaxHeisenbergCurveSize = 512;

struct BetheOptions {
    double tol = 1e-12;       ///< bound on the max absolute equation residual
    long max_iter = 100000;
    double damping = 0.5;     ///< alpha in x <- (1 - alpha) x + alpha T(x), in (0, 1]
};

struct BetheRoots {
    int n = 0;
    int n_down = 0;
    std::vector<double> quantum_numbers;
    std::vector<double> rapidities;  ///< ascending
    double residual = 0.0;
    long iterations = 0;
};

/// Ground-state quantum numbers -(k-1)/2 .. (k-1)/2 in unit steps; empty for k = 0.
std::vector<double> bethe_quantum_numbers(int n_down);

/// max_j |2N atan(x_j) - 2 pi I_j - 2 sum_l atan((x_j - x_l)/2)|, accumulated in long double.
double bethe_residual(int n, std::span<const double> quantum_numbers,
                      std::span<const double> rapidities);

/// Damped fixed-point solve of the sector's Bethe equations, starting from
/// x_j = tan(pi I_j / N). Throws NonConvergenceError after max_iter sweeps.
BetheRoots solve_bethe(int n, int n_down, const BetheOptions& options = {});

/// eps = sum_j 2/(x_j^2 + 1).
double sector_epsilon(const BetheRoots& roots) noexcept;

/// N/4 - (N - 2 N_down) h - eps.
double sector_energy(int n, int n_down, double h, const BetheOptions& options = {});

/// eps(0), ..., eps(max_n_down) from independent sector solves.
std::vector<double> sector_epsilons(int n, int max_n_down, const BetheOptions& options = {});

/// Crossings from sector epsilons eps(0..N/2): h_j = (eps(j+1) - eps(j))/2,
/// above = N/2 - j, below = N/2 - j - 1. Any energy source can be used.
std::vector<CrossingPoint> crossings_from_sector_epsilons(int n, std::span<const double> epsilons);

/// Fidelity curve from sector epsilons; delta_h = h_j - h_{j+1}, absent at the
/// last crossing.
std::vector<CurvePoint> curve_from_sector_epsilons(int n, std::span<const double> epsilons);

std::vector<CrossingPoint> heisenberg_crossings(int n, const BetheOptions& options = {});

/// h_1 = -1 + 2 / (tan^2(pi / (2(N-1))) + 1).
double h1_closed_form(int n);

std::vector<CurvePoint> heisenberg_curve(int n, const BetheOptions& options = {});

}  // namespace psfid
