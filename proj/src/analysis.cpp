// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psfid/errors.hpp"
#include "psfid/lmg.hpp"

namespace psfid {

std::string_view to_string(Model model) noexcept {
    return model == Model::lmg ? "lmg" : "heisenberg";
}

Model parse_model(std::string_view name) {
    if (name == "lmg") return Model::lmg;
    if (name == "heisenberg") return Model::heisenberg;
    throw DomainError("unknown model '" + std::string(name) + "'");
}

PowerLawFit fit_power_law(std::span<const SizeValue> points) {
    if (points.size() < 3) throw DomainError("power-law fit needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].size > 0.0) || !(points[i].value > 0.0)) {
            throw DomainError("power-law fit needs strictly positive sizes and values");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (points[k].size == points[i].size) {
                throw DomainError("power-law fit needs distinct sizes");
            }
        }
    }

    const double count = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& p : points) {
        mean_x += std::log(p.size);
        mean_y += std::log(p.value);
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& p : points) {
        const double dx = std::log(p.size) - mean_x;
        const double dy = std::log(p.value) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.log_prefactor = mean_y - fit.exponent * mean_x;
    fit.points_used = static_cast<int>(points.size());

    double ss_res = 0.0;
    for (const auto& p : points) {
        const double r = std::log(p.value) - (fit.log_prefactor + fit.exponent * std::log(p.size));
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

std::vector<ScalingPoint> chi_max_scan(Model model, std::span<const int> sizes,
                                       const BetheOptions& options) {
    std::vector<ScalingPoint> out;
    out.reserve(sizes.size());
    for (int n : sizes) {
        if (n < 4 || n % 2 != 0) {
            throw DomainError("scaling sizes must be even and >= 4, got " + std::to_string(n));
        }
        if (model == Model::lmg) {
            out.push_back({n, static_cast<double>(n - 1) / n, lmg_chi_max(n)});
            continue;
        }
        const auto eps = sector_epsilons(n, 2, options);
        const double h0 = (eps[1] - eps[0]) / 2.0;
        const double h1 = (eps[2] - eps[1]) / 2.0;
        const double spacing = h0 - h1;
        if (!(spacing > 0.0)) {
            throw DomainError("non-positive crossing spacing at N=" + std::to_string(n));
        }
        const double log_f = crossing_log_fidelity(n, n / 2, n / 2 - 1);
        out.push_back({n, h0, -2.0 * log_f / (spacing * spacing)});
    }
    return out;
}

FieldFidelity min_fidelity(std::span<const CurvePoint> curve) {
    if (curve.empty()) throw DomainError("min_fidelity of an empty curve");
    FieldFidelity best{curve.front().crossing.field, curve.front().fidelity};
    for (const auto& p : curve.subspan(1)) {
        const bool lower = p.fidelity < best.fidelity;
        const bool tie_higher = p.fidelity == best.fidelity && p.crossing.field > best.field;
        if (lower || tie_higher) best = {p.crossing.field, p.fidelity};
    }
    return best;
}

}  // namespace psfid
