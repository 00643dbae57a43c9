// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/lmg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "psfid/errors.hpp"

namespace psfid {

namespace {

void check_size(int n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("LMG size must be even and >= 2, got " + std::to_string(n));
    }
}

constexpr double kClosedFormTolerance = 1e-12;

}  // namespace

void LmgSector::validate() const {
    check_size(n);
    if (m < 0 || 2 * m > n) {
        throw DomainError("LMG sector needs 0 <= M <= N/2, got M=" + std::to_string(m) +
                          " for N=" + std::to_string(n));
    }
}

double lmg_energy(int n, int m, double h) {
    LmgSector{n, m}.validate();
    if (!(h >= 0.0)) throw DomainError("LMG field must be >= 0");
    const double nd = n;
    const double shift = m - h * nd / 2.0;
    return (2.0 / nd) * shift * shift - (nd / 2.0) * (1.0 + h * h);
}

int lmg_ground_magnetization(int n, double h) {
    check_size(n);
    if (!(h >= 0.0)) throw DomainError("LMG field must be >= 0");
    const int top = n / 2;
    if (h >= 1.0) return top;

    // Nearest integer to hN/2. Values within a few ulps of a half-integer are
    // treated as the tie at a crossing field and resolved upward.
    const double target = h * n / 2.0;
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, target);
    const int m = static_cast<int>(std::floor(target + 0.5 + slack));
    return std::min(m, top);
}

std::vector<CrossingPoint> lmg_crossings(int n) {
    check_size(n);
    std::vector<CrossingPoint> out;
    out.reserve(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        out.push_back({j, static_cast<double>(n - 2 * j - 1) / n, n / 2 - j, n / 2 - j - 1});
    }
    return out;
}

double lmg_closed_form_fidelity(int n, int j) {
    check_size(n);
    if (j < 0 || j >= n / 2) {
        throw DomainError("crossing index out of range: j=" + std::to_string(j));
    }
    const double nd = n;
    const double jd = j;
    return (std::sqrt((nd - jd) * (nd - jd - 1.0)) + std::sqrt(jd * (jd + 1.0))) / nd;
}

std::vector<CurvePoint> lmg_curve(int n) {
    const auto crossings = lmg_crossings(n);
    const double spacing = 2.0 / n;
    std::vector<CurvePoint> curve;
    curve.reserve(crossings.size());
    for (const auto& c : crossings) {
        const double closed = lmg_closed_form_fidelity(n, c.index);
        const double composed = crossing_fidelity(n, c.sector_above, c.sector_below);
        if (std::abs(closed - composed) > kClosedFormTolerance * closed) {
            throw std::logic_error("LMG closed-form fidelity disagrees with the single-site "
                                   "composition at N=" + std::to_string(n) +
                                   ", j=" + std::to_string(c.index));
        }
        curve.push_back(make_curve_point(c, closed, spacing));
    }
    return curve;
}

double lmg_chi_max(int n) {
    check_size(n);
    const double nd = n;
    return -(nd * nd / 2.0) * log_sqrt_one_minus(1.0 / nd);
}

}  // namespace psfid
