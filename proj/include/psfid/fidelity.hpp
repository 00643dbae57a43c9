// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fidelity.hpp
 * @brief Single-site reduced states and the partial-state fidelity formulas
 *        shared by the LMG and Heisenberg solvers.
 *
 * For a ground state of definite magnetization M on N spins, tracing out all
 * but one site leaves a diagonal 2x2 density matrix with <sigma^z> = 2M/N.
 * Two such states commute, so the Uhlmann fidelity reduces to the
 * Bhattacharyya coefficient of their diagonals.
 */

#pragma once

#include <optional>

namespace psfid {

/// Diagonal of a single-site reduced density matrix in the sigma^z basis.
/// Always normalized; entries nonnegative.
class DiagonalState {
public:
    /// Renormalizes when |p_up + p_down - 1| <= 1e-12, throws DomainError
    /// for larger drift or negative entries.
    static DiagonalState from_probabilities(double p_up, double p_down);

    [[nodiscard]] double p_up() const noexcept { return p_up_; }
    [[nodiscard]] double p_down() const noexcept { return p_down_; }
    /// <sigma^z> = p_up - p_down.
    [[nodiscard]] double magnetization() const noexcept { return p_up_ - p_down_; }

    friend bool operator==(const DiagonalState&, const DiagonalState&) = default;

private:
    DiagonalState(double up, double down) noexcept : p_up_(up), p_down_(down) {}

    double p_up_;
    double p_down_;
};

/// One ground-state level crossing. `sector_above` is the magnetization just
/// above `field`, `sector_below` the one just below; they differ by one.
struct CrossingPoint {
    int index = 0;
    double field = 0.0;
    int sector_above = 0;
    int sector_below = 0;

    friend bool operator==(const CrossingPoint&, const CrossingPoint&) = default;
};

/// A crossing together with its partial-state fidelity and, when the spacing
/// to the next crossing is known, the finite-difference susceptibility.
/// `chi` is present exactly when `delta_h` is.
struct CurvePoint {
    CrossingPoint crossing;
    double fidelity = 1.0;
    std::optional<double> delta_h;
    std::optional<double> chi;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Builds a CurvePoint, filling chi from crossing_susceptibility when delta_h is given.
CurvePoint make_curve_point(const CrossingPoint& crossing, double fidelity,
                            std::optional<double> delta_h);

/// Single-site state of the magnetization-M sector of N spins:
/// ((1 + 2M/N)/2, (1 - 2M/N)/2). N must be even and >= 2, |M| <= N/2.
DiagonalState single_site_state(int n, int m);

/// sqrt(p_up q_up) + sqrt(p_down q_down), clamped to [0, 1]; exactly 1 for equal states.
double bhattacharyya_fidelity(const DiagonalState& p, const DiagonalState& q) noexcept;

/// Partial-state fidelity at a crossing between sectors M_above and M_below of N spins.
double crossing_fidelity(int n, int m_above, int m_below);

/// ln(crossing_fidelity), through the Bloch-angle form F = cos(phi - phi'),
/// cos^2(phi) = p_up. Accurate when F is within rounding of 1.
double crossing_log_fidelity(int n, int m_above, int m_below);

/// -2 ln(F) / delta_h^2. Requires 0 < F <= 1 and delta_h > 0.
double crossing_susceptibility(double fidelity, double delta_h);

/// Overlap magnitude of two sector ground states: sector ground states do not
/// depend on h, so this is a Kronecker delta in M.
double global_sector_overlap(int m, int m_prime) noexcept;

/// ln sqrt(1 - x) for x in [0, 1), accurate when x is tiny.
double log_sqrt_one_minus(double x);

}  // namespace psfid
