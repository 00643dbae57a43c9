// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/bethe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "psfid/errors.hpp"

namespace psfid {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

void check_ring(int n, int n_down) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("ring length must be even and >= 2, got " + std::to_string(n));
    }
    if (n_down < 0 || 2 * n_down > n) {
        throw DomainError("N_down must lie in [0, N/2], got " + std::to_string(n_down) +
                          " for N=" + std::to_string(n));
    }
}

void check_options(const BetheOptions& options) {
    if (!(options.tol > 0.0)) throw DomainError("solver tolerance must be positive");
    if (options.max_iter < 0) throw DomainError("max_iter must be nonnegative");
    if (!(options.damping > 0.0) || options.damping > 1.0) {
        throw DomainError("damping must lie in (0, 1]");
    }
}

void check_curve_size(int n) {
    if (n < 4 || n % 2 != 0) {
        throw DomainError("Heisenberg ring must be even and >= 4, got " + std::to_string(n));
    }
    if (n > kMaxHeisenbergCurveSize) {
        throw DomainError("full Heisenberg curves are limited to N <= " +
                          std::to_string(kMaxHeisenbergCurveSize));
    }
}

// Phase sums s_j = sum_l atan((x_j - x_l)/2). Terms in double, sums in long double.
void phase_sums(std::span<const double> x, std::vector<long double>& out) {
    const std::size_t k = x.size();
    out.assign(k, 0.0L);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = j + 1; l < k; ++l) {
            const long double t = std::atan((x[j] - x[l]) / 2.0);
            out[j] += t;
            out[l] -= t;
        }
    }
}

long double max_residual(int n, std::span<const double> quantum_numbers, std::span<const double> x,
                         const std::vector<long double>& sums) {
    long double worst = 0.0L;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const long double r = 2.0L * n * std::atan(static_cast<long double>(x[j])) -
                              2.0L * kPiL * quantum_numbers[j] - 2.0L * sums[j];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace

std::vector<double> bethe_quantum_numbers(int n_down) {
    if (n_down < 0) throw DomainError("N_down must be nonnegative");
    std::vector<double> out(n_down);
    for (int j = 0; j < n_down; ++j) out[j] = j - (n_down - 1) / 2.0;
    return out;
}

double bethe_residual(int n, std::span<const double> quantum_numbers,
                      std::span<const double> rapidities) {
    if (quantum_numbers.size() != rapidities.size()) {
        throw DomainError("quantum numbers and rapidities differ in length");
    }
    std::vector<long double> sums;
    phase_sums(rapidities, sums);
    return static_cast<double>(max_residual(n, quantum_numbers, rapidities, sums));
}

BetheRoots solve_bethe(int n, int n_down, const BetheOptions& options) {
    check_ring(n, n_down);
    check_options(options);

    BetheRoots roots;
    roots.n = n;
    roots.n_down = n_down;
    roots.quantum_numbers = bethe_quantum_numbers(n_down);
    if (n_down == 0) return roots;

    auto& x = roots.rapidities;
    x.resize(n_down);
    for (int j = 0; j < n_down; ++j) {
        x[j] = std::tan(std::numbers::pi * roots.quantum_numbers[j] / n);
    }

    const double alpha = options.damping;
    std::vector<long double> sums;
    std::vector<double> next(n_down);
    long iteration = 0;
    for (;; ++iteration) {
        phase_sums(x, sums);
        const double residual = static_cast<double>(max_residual(n, roots.quantum_numbers, x, sums));
        roots.residual = residual;
        if (residual <= options.tol) break;
        if (iteration >= options.max_iter) {
            throw NonConvergenceError(n, n_down, residual, iteration);
        }
        for (int j = 0; j < n_down; ++j) {
            const long double arg = (kPiL * roots.quantum_numbers[j] + sums[j]) / n;
            // |pi I_j| + |s_j| < pi (N_down - 1) <= pi N / 2, so the argument
            // never leaves the principal branch of tan.
            if (!(std::abs(arg) < kPiL / 2.0L)) {
                throw std::logic_error("Bethe map left the principal branch of tan");
            }
            next[j] = (1.0 - alpha) * x[j] + alpha * static_cast<double>(std::tan(arg));
        }
        x.swap(next);
    }
    roots.iterations = iteration;

    for (int j = 1; j < n_down; ++j) {
        if (!(x[j] - x[j - 1] > options.tol)) {
            throw std::logic_error("Bethe roots collided for N=" + std::to_string(n) +
                                   ", N_down=" + std::to_string(n_down));
        }
    }
    return roots;
}

double sector_epsilon(const BetheRoots& roots) noexcept {
    double eps = 0.0;
    for (double x : roots.rapidities) eps += 2.0 / (x * x + 1.0);
    return eps;
}

double sector_energy(int n, int n_down, double h, const BetheOptions& options) {
    const double eps = sector_epsilon(solve_bethe(n, n_down, options));
    return n / 4.0 - (n - 2 * n_down) * h - eps;
}

std::vector<double> sector_epsilons(int n, int max_n_down, const BetheOptions& options) {
    check_ring(n, max_n_down);
    std::vector<double> eps(max_n_down + 1);
    for (int k = 0; k <= max_n_down; ++k) eps[k] = sector_epsilon(solve_bethe(n, k, options));
    return eps;
}

std::vector<CrossingPoint> crossings_from_sector_epsilons(int n, std::span<const double> epsilons) {
    if (n < 2 || n % 2 != 0) throw DomainError("ring length must be even and >= 2");
    if (epsilons.size() != static_cast<std::size_t>(n / 2 + 1)) {
        throw DomainError("need one epsilon per sector N_down = 0 .. N/2");
    }
    std::vector<CrossingPoint> out;
    out.reserve(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        out.push_back({j, (epsilons[j + 1] - epsilons[j]) / 2.0, n / 2 - j, n / 2 - j - 1});
    }
    return out;
}

std::vector<CurvePoint> curve_from_sector_epsilons(int n, std::span<const double> epsilons) {
    const auto crossings = crossings_from_sector_epsilons(n, epsilons);
    std::vector<CurvePoint> curve;
    curve.reserve(crossings.size());
    for (std::size_t j = 0; j < crossings.size(); ++j) {
        const auto& c = crossings[j];
        const double fidelity = crossing_fidelity(n, c.sector_above, c.sector_below);
        std::optional<double> spacing;
        if (j + 1 < crossings.size()) spacing = c.field - crossings[j + 1].field;
        curve.push_back(make_curve_point(c, fidelity, spacing));
    }
    return curve;
}

std::vector<CrossingPoint> heisenberg_crossings(int n, const BetheOptions& options) {
    check_curve_size(n);
    return crossings_from_sector_epsilons(n, sector_epsilons(n, n / 2, options));
}

double h1_closed_form(int n) {
    if (n < 4 || n % 2 != 0) {
        throw DomainError("h1 closed form needs even N >= 4, got " + std::to_string(n));
    }
    const double t = std::tan(std::numbers::pi / (2.0 * (n - 1)));
    return -1.0 + 2.0 / (t * t + 1.0);
}

std::vector<CurvePoint> heisenberg_curve(int n, const BetheOptions& options) {
    check_curve_size(n);
    return curve_from_sector_epsilons(n, sector_epsilons(n, n / 2, options));
}

}  // namespace psfid
