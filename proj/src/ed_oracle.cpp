// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "psfid/errors.hpp"

namespace psfid {

namespace {

void check_sector(int n, int n_down) {
    if (n < 2 || n % 2 != 0 || n > 30) {
        throw DomainError("ED ring length must be even in [2, 30], got " + std::to_string(n));
    }
    if (n_down < 0 || n_down > n) {
        throw DomainError("N_down must lie in [0, N], got " + std::to_string(n_down));
    }
}

double lowest_eigenvalue(const Eigen::MatrixXd& h) {
    if (h.rows() == 1) return h(0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense eigensolve failed");
    }
    return solver.eigenvalues()(0);
}

}  // namespace

std::size_t SectorBasis::index_of(std::uint32_t state) const {
    const auto it = std::lower_bound(states.begin(), states.end(), state);
    if (it == states.end() || *it != state) {
        throw std::out_of_range("configuration not in sector basis");
    }
    return static_cast<std::size_t>(it - states.begin());
}

std::uint64_t binomial(int n, int k) noexcept {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / i;
    return c;
}

SectorBasis make_sector_basis(int n, int n_down, std::size_t cap) {
    check_sector(n, n_down);
    const std::uint64_t dim = binomial(n, n_down);
    if (dim > cap) throw CapExceededError(dim, cap);

    SectorBasis basis{n, n_down, {}};
    basis.states.reserve(dim);
    if (n_down == 0) {
        basis.states.push_back(0);
        return basis;
    }
    // Gosper's hack walks k-subsets in ascending integer order.
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t s = (std::uint64_t{1} << n_down) - 1;
    while (s < limit) {
        basis.states.push_back(static_cast<std::uint32_t>(s));
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return basis;
}

Eigen::MatrixXd sector_hamiltonian(int n, int n_down, std::size_t cap) {
    const SectorBasis basis = make_sector_basis(n, n_down, cap);
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    for (Eigen::Index a = 0; a < dim; ++a) {
        const std::uint32_t state = basis.states[a];
        for (int i = 0; i < n; ++i) {
            const int k = (i + 1) % n;
            const bool si = (state >> i) & 1U;
            const bool sk = (state >> k) & 1U;
            if (si == sk) {
                h(a, a) += 0.25;
            } else {
                h(a, a) -= 0.25;
                const std::uint32_t flipped = state ^ ((1U << i) | (1U << k));
                h(a, static_cast<Eigen::Index>(basis.index_of(flipped))) += 0.5;
            }
        }
    }
    return h;
}

double ed_sector_ground_energy(int n, int n_down, double h, std::size_t cap) {
    return lowest_eigenvalue(sector_hamiltonian(n, n_down, cap)) - h * (n - 2 * n_down);
}

std::vector<double> ed_sector_epsilons(int n, std::size_t cap) {
    std::vector<double> eps(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) eps[k] = n / 4.0 - ed_sector_ground_energy(n, k, 0.0, cap);
    return eps;
}

bool ValidationReport::passed() const noexcept {
    const bool sectors_ok = std::all_of(sectors.begin(), sectors.end(),
                                        [](const SectorCheck& s) { return s.passed; });
    const bool crossings_ok = std::all_of(crossings.begin(), crossings.end(),
                                          [](const CrossingCheck& c) { return c.passed; });
    return sectors_ok && crossings_ok && crossings.size() == static_cast<std::size_t>(n / 2);
}

ValidationReport validate_bethe(int n, const BetheOptions& options, std::size_t cap) {
    if (n < 4 || n % 2 != 0) {
        throw DomainError("validation needs even N >= 4, got " + std::to_string(n));
    }
    ValidationReport report;
    report.n = n;

    std::vector<double> eps_bethe(n / 2 + 1);
    std::vector<double> eps_ed(n / 2 + 1);
    bool all_evaluated = true;
    for (int k = 0; k <= n / 2; ++k) {
        SectorCheck check;
        check.n = n;
        check.n_down = k;
        try {
            eps_bethe[k] = sector_epsilon(solve_bethe(n, k, options));
            check.bethe_energy = n / 4.0 - eps_bethe[k];
            check.ed_energy = ed_sector_ground_energy(n, k, 0.0, cap);
            eps_ed[k] = n / 4.0 - check.ed_energy;
            check.difference = std::abs(check.bethe_energy - check.ed_energy);
            check.passed = check.difference < kOracleTolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
            all_evaluated = false;
        }
        report.sectors.push_back(check);
    }
    if (!all_evaluated) return report;

    const auto from_bethe = crossings_from_sector_epsilons(n, eps_bethe);
    const auto from_ed = crossings_from_sector_epsilons(n, eps_ed);
    for (std::size_t j = 0; j < from_bethe.size(); ++j) {
        CrossingCheck c;
        c.n = n;
        c.index = static_cast<int>(j);
        c.bethe_field = from_bethe[j].field;
        c.ed_field = from_ed[j].field;
        c.difference = std::abs(c.bethe_field - c.ed_field);
        c.passed = c.difference < kOracleTolerance;
        report.crossings.push_back(c);
    }
    return report;
}

}  // namespace psfid
