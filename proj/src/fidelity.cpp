// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psfid/errors.hpp"

namespace psfid {

namespace {

constexpr double kNormalizationDrift = 1e-12;

void check_sector(int n, int m) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("N must be even and >= 2, got " + std::to_string(n));
    }
    if (2 * std::abs(m) > n) {
        throw DomainError("|M| must be <= N/2, got M=" + std::to_string(m) +
                          " for N=" + std::to_string(n));
    }
}

}  // namespace

DiagonalState DiagonalState::from_probabilities(double p_up, double p_down) {
    if (!(p_up >= 0.0) || !(p_down >= 0.0)) {
        throw DomainError("diagonal state entries must be nonnegative");
    }
    const double total = p_up + p_down;
    if (std::abs(total - 1.0) > kNormalizationDrift) {
        throw DomainError("diagonal state is not normalized (sum " + std::to_string(total) + ")");
    }
    return {p_up / total, p_down / total};
}

CurvePoint make_curve_point(const CrossingPoint& crossing, double fidelity,
                            std::optional<double> delta_h) {
    CurvePoint point{crossing, fidelity, delta_h, std::nullopt};
    if (delta_h) point.chi = crossing_susceptibility(fidelity, *delta_h);
    return point;
}

DiagonalState single_site_state(int n, int m) {
    check_sector(n, m);
    // Integer numerators keep the polarized and zero sectors exact.
    const double up = static_cast<double>(n + 2 * m) / (2.0 * n);
    const double down = static_cast<double>(n - 2 * m) / (2.0 * n);
    return DiagonalState::from_probabilities(up, down);
}

double bhattacharyya_fidelity(const DiagonalState& p, const DiagonalState& q) noexcept {
    if (p == q) return 1.0;
    const double f = std::sqrt(p.p_up() * q.p_up()) + std::sqrt(p.p_down() * q.p_down());
    return std::clamp(f, 0.0, 1.0);
}

double crossing_fidelity(int n, int m_above, int m_below) {
    return bhattacharyya_fidelity(single_site_state(n, m_above), single_site_state(n, m_below));
}

double crossing_log_fidelity(int n, int m_above, int m_below) {
    const auto angle = [](const DiagonalState& s) {
        return std::atan2(std::sqrt(s.p_down()), std::sqrt(s.p_up()));
    };
    const double half = 0.5 * (angle(single_site_state(n, m_above)) -
                               angle(single_site_state(n, m_below)));
    const double sin_half = std::sin(half);
    return std::log1p(-2.0 * sin_half * sin_half);
}

double crossing_susceptibility(double fidelity, double delta_h) {
    if (!(fidelity > 0.0) || fidelity > 1.0) {
        throw DomainError("fidelity must lie in (0, 1], got " + std::to_string(fidelity));
    }
    if (!(delta_h > 0.0)) {
        throw DomainError("delta_h must be positive, got " + std::to_string(delta_h));
    }
    if (fidelity == 1.0) return 0.0;  // avoid -0.0
    return -2.0 * std::log(fidelity) / (delta_h * delta_h);
}

double global_sector_overlap(int m, int m_prime) noexcept { return m == m_prime ? 1.0 : 0.0; }

double log_sqrt_one_minus(double x) {
    if (!(x >= 0.0) || !(x < 1.0)) {
        throw DomainError("log_sqrt_one_minus needs x in [0, 1)");
    }
    return 0.5 * std::log1p(-x);
}

}  // namespace psfid
