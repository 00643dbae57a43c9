// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "psfid/errors.hpp"

#include <cstdio>

namespace psfid {

namespace {

std::string non_convergence_message(int n, int n_down, double residual, long iterations) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Bethe solver did not converge for N=%d, N_down=%d after %ld iterations "
                  "(residual %.3e)",
                  n, n_down, iterations, residual);
    return buf;
}

}  // namespace

NonConvergenceError::NonConvergenceError(int n, int n_down, double residual, long iterations)
    : std::runtime_error(non_convergence_message(n, n_down, residual, iterations)),
      n_(n),
      n_down_(n_down),
      residual_(residual),
      iterations_(iterations) {}

CapExceededError::CapExceededError(std::size_t dimension, std::size_t cap)
    : std::length_error("sector dimension " + std::to_string(dimension) +
                        " exceeds the dense diagonalization cap " + std::to_string(cap)),
      dimension_(dimension) {}

}  // namespace psfid
