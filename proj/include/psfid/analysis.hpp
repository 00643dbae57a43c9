// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "psfid/bethe.hpp"
#include "psfid/fidelity.hpp"

namespace psfid {

enum class Model { lmg, heisenberg };

std::string_view to_string(Model model) noexcept;
/// Accepts "lmg" or "heisenberg"; throws DomainError otherwise.
Model parse_model(std::string_view name);

struct SizeValue {
    double size = 0.0;
    double value = 0.0;
};

/// value ~ exp(log_prefactor) * size^exponent, fitted on natural logs.
struct PowerLawFit {
    double exponent = 0.0;
    double log_prefactor = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
};

/// Unweighted least squares through (ln size, ln value). Needs >= 3 points,
/// strictly positive sizes and values, and distinct sizes.
PowerLawFit fit_power_law(std::span<const SizeValue> points);

struct ScalingPoint {
    int n = 0;
    double h_at_max = 0.0;
    double chi_max = 0.0;
};

/// Susceptibility maximum per size, located at the j = 0 crossing. For the
/// Heisenberg ring only the N_down = 0, 1, 2 sectors are solved, so sizes are
/// not limited by kMaxHeisenbergCurveSize. Output is in the order given.
std::vector<ScalingPoint> chi_max_scan(Model model, std::span<const int> sizes,
                                       const BetheOptions& options = {});

struct FieldFidelity {
    double field = 0.0;
    double fidelity = 1.0;
};

/// Smallest-fidelity point of a curve; ties go to the larger field.
FieldFidelity min_fidelity(std::span<const CurvePoint> curve);

}  // namespace psfid
