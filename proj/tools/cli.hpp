// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psfid/analysis.hpp"
#include "psfid/bethe.hpp"

namespace psfid::cli {

enum class Format { csv, json };

/// Exit codes: success, numerical failure, usage or configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Model model = Model::lmg;
    std::vector<int> sizes;
    BetheOptions solver;
    Format format = Format::csv;
    std::optional<std::string> output;  ///< standard output when empty
};

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scaling(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(int max_size, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"curve", "--model", "lmg", "--sizes", "4"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psfid::cli
