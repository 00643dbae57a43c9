// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lmg.hpp
 * @brief Isotropic Lipkin-Meshkov-Glick model in the maximal-spin sector S = N/2.
 *
 *   E(M, h) = (2/N)(M - hN/2)^2 - (N/2)(1 + h^2)
 *
 * Ground states have M = N/2 for h >= 1 and the integer nearest to hN/2 below
 * that. The crossings sit at h_j = 1 - (2j+1)/N, between M = N/2 - j (above)
 * and M = N/2 - j - 1 (below).
 *
 * Note: the ground magnetization is often written as the integer part of
 * hN/2. Minimizing E(M, h) gives the *nearest* integer instead, and only the
 * nearest-integer rule reproduces the crossing fields above, so that is what
 * lmg_ground_magnetization implements.
 */

#pragma once

#include <vector>

#include "psfid/fidelity.hpp"

namespace psfid {

/// Sector |N/2, M> of the LMG model; 0 <= M <= N/2, N even and positive.
struct LmgSector {
    int n = 2;
    int m = 0;

    /// Throws DomainError if the sector is invalid.
    void validate() const;
};

double lmg_energy(int n, int m, double h);

/// Ground-state magnetization at field h >= 0. At an exact crossing field the
/// larger M is returned, which makes the result right-continuous in h.
int lmg_ground_magnetization(int n, double h);

/// Crossings j = 0 .. N/2 - 1 in order of decreasing field.
std::vector<CrossingPoint> lmg_crossings(int n);

/// Closed-form fidelity at crossing j: ( sqrt((N-j)(N-j-1)) + sqrt(j(j+1)) ) / N.
double lmg_closed_form_fidelity(int n, int j);

/// One point per crossing; uniform spacing delta_h = 2/N, so chi = -(N^2/2) ln F
/// everywhere. The closed form is cross-checked against the single-site
/// composition and a std::logic_error is thrown if they disagree by > 1e-12.
std::vector<CurvePoint> lmg_curve(int n);

/// Susceptibility at j = 0, -(N^2/4) ln(1 - 1/N), evaluated with log1p.
double lmg_chi_max(int n);

}  // namespace psfid
