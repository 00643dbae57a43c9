// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace psfid {

/// Invalid argument outside an operation's mathematical domain
/// (odd ring length, magnetization out of range, nonpositive fidelity, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// The Bethe root iteration hit its iteration budget above tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(int n, int n_down, double residual, long iterations);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int n_down() const noexcept { return n_down_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }
    [[nodiscard]] long iterations() const noexcept { return iterations_; }

private:
    int n_;
    int n_down_;
    double residual_;
    long iterations_;
};

/// A requested exact-diagonalization sector exceeds the dense dimension cap.
class CapExceededError : public std::length_error {
public:
    CapExceededError(std::size_t dimension, std::size_t cap);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }

private:
    std::size_t dimension_;
};

}  // namespace psfid
