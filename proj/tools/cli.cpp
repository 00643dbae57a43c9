// Copyright 2026 The psfid Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psfid/ed_oracle.hpp"
#include "psfid/errors.hpp"
#include "psfid/lmg.hpp"

namespace psfid::cli {

namespace {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 17 significant digits round-trip every double.
std::string real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string real(const std::optional<double>& v) { return v ? real(*v) : std::string(); }

Json json_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json config_json(const RunConfig& config) {
    return Json{{"model", std::string(to_string(config.model))},
                {"sizes", config.sizes},
                {"tol", config.solver.tol},
                {"max_iter", config.solver.max_iter},
                {"damping", config.solver.damping},
                {"format", config.format == Format::csv ? "csv" : "json"}};
}

std::vector<int> checked_sizes(const RunConfig& config, int minimum) {
    if (config.sizes.empty()) throw ConfigError("sizes must be non-empty");
    for (int n : config.sizes) {
        if (n % 2 != 0) throw ConfigError("sizes must be even (got " + std::to_string(n) + ")");
        if (n < minimum) {
            throw ConfigError("sizes must be >= " + std::to_string(minimum) + " (got " +
                              std::to_string(n) + ")");
        }
    }
    std::vector<int> sorted = config.sizes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

void check_solver(const BetheOptions& solver) {
    if (!(solver.tol > 0.0)) throw ConfigError("--tol must be positive");
    if (solver.max_iter < 0) throw ConfigError("--max-iter must be nonnegative");
    if (!(solver.damping > 0.0) || solver.damping > 1.0) {
        throw ConfigError("--damping must lie in (0, 1]");
    }
}

// Everything is rendered to a buffer first so a failing run leaves no partial file.
int emit(const std::string& text, const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.output) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << *config.output << "'\n";
        return kExitUsage;
    }
    file << text;
    return file ? kExitOk : kExitNumerical;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const int minimum = config.model == Model::lmg ? 2 : 4;
        const auto sizes = checked_sizes(config, minimum);
        check_solver(config.solver);
        if (config.model == Model::heisenberg && sizes.back() > kMaxHeisenbergCurveSize) {
            throw ConfigError("heisenberg curves are limited to N <= " +
                              std::to_string(kMaxHeisenbergCurveSize));
        }

        const std::string model(to_string(config.model));
        std::ostringstream csv;
        Json rows = Json::array();
        csv << "model,N,j,h,fidelity,delta_h,chi\n";
        for (int n : sizes) {
            const auto curve = config.model == Model::lmg ? lmg_curve(n)
                                                          : heisenberg_curve(n, config.solver);
            for (const auto& p : curve) {
                csv << model << ',' << n << ',' << p.crossing.index << ',' << real(p.crossing.field)
                    << ',' << real(p.fidelity) << ',' << real(p.delta_h) << ',' << real(p.chi)
                    << '\n';
                rows.push_back(Json{{"model", model},
                                    {"N", n},
                                    {"j", p.crossing.index},
                                    {"h", p.crossing.field},
                                    {"fidelity", p.fidelity},
                                    {"delta_h", json_real(p.delta_h)},
                                    {"chi", json_real(p.chi)}});
            }
        }
        if (config.format == Format::csv) return emit(csv.str(), config, out, err);
        const Json doc{{"config", config_json(config)}, {"rows", rows}};
        return emit(doc.dump(2) + "\n", config, out, err);
    });
}

int cmd_scaling(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto sizes = checked_sizes(config, 4);
        if (sizes.size() < 3) throw ConfigError("scaling needs at least 3 distinct sizes");
        check_solver(config.solver);

        const auto scan = chi_max_scan(config.model, sizes, config.solver);
        std::vector<SizeValue> points;
        for (const auto& s : scan) points.push_back({static_cast<double>(s.n), s.chi_max});
        const PowerLawFit fit = fit_power_law(points);

        const std::string model(to_string(config.model));
        if (config.format == Format::csv) {
            std::ostringstream csv;
            csv << "record,model,N,h_at_max,chi_max,exponent,log_prefactor,r_squared,points_used\n";
            for (const auto& s : scan) {
                csv << "point," << model << ',' << s.n << ',' << real(s.h_at_max) << ','
                    << real(s.chi_max) << ",,,,\n";
            }
            csv << "fit," << model << ",,,," << real(fit.exponent) << ','
                << real(fit.log_prefactor) << ',' << real(fit.r_squared) << ','
                << fit.points_used << '\n';
            return emit(csv.str(), config, out, err);
        }
        Json rows = Json::array();
        for (const auto& s : scan) {
            rows.push_back(
                Json{{"model", model}, {"N", s.n}, {"h_at_max", s.h_at_max}, {"chi_max", s.chi_max}});
        }
        const Json doc{{"config", config_json(config)},
                       {"rows", rows},
                       {"fit",
                        {{"exponent", fit.exponent},
                         {"log_prefactor", fit.log_prefactor},
                         {"r_squared", fit.r_squared},
                         {"points_used", fit.points_used}}}};
        return emit(doc.dump(2) + "\n", config, out, err);
    });
}

int cmd_validate(int max_size, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (max_size % 2 != 0 || max_size < 4 || max_size > 14) {
            throw ConfigError("--max-size must be even and within [4, 14]");
        }
        check_solver(config.solver);

        std::ostringstream csv;
        csv << "record,N,index,bethe,ed,abs_diff,status,message\n";
        Json sectors = Json::array();
        Json crossings = Json::array();
        bool all_passed = true;
        for (int n = 4; n <= max_size; n += 2) {
            const ValidationReport report = validate_bethe(n, config.solver);
            all_passed = all_passed && report.passed();
            for (const auto& s : report.sectors) {
                const char* status = s.passed ? "pass" : "fail";
                csv << "sector," << n << ',' << s.n_down << ',' << real(s.bethe_energy) << ','
                    << real(s.ed_energy) << ',' << real(s.difference) << ',' << status << ','
                    << s.error << '\n';
                sectors.push_back(Json{{"N", n},
                                       {"N_down", s.n_down},
                                       {"bethe", s.bethe_energy},
                                       {"ed", s.ed_energy},
                                       {"abs_diff", s.difference},
                                       {"status", status},
                                       {"message", s.error}});
                if (!s.passed) {
                    err << "FAIL sector N=" << n << " N_down=" << s.n_down
                        << " abs_diff=" << real(s.difference)
                        << (s.error.empty() ? "" : " (" + s.error + ")") << '\n';
                }
            }
            for (const auto& c : report.crossings) {
                const char* status = c.passed ? "pass" : "fail";
                csv << "crossing," << n << ',' << c.index << ',' << real(c.bethe_field) << ','
                    << real(c.ed_field) << ',' << real(c.difference) << ',' << status << ",\n";
                crossings.push_back(Json{{"N", n},
                                         {"j", c.index},
                                         {"bethe", c.bethe_field},
                                         {"ed", c.ed_field},
                                         {"abs_diff", c.difference},
                                         {"status", status}});
                if (!c.passed) {
                    err << "FAIL crossing N=" << n << " j=" << c.index
                        << " abs_diff=" << real(c.difference) << '\n';
                }
            }
        }

        int code = kExitOk;
        if (config.format == Format::csv) {
            code = emit(csv.str(), config, out, err);
        } else {
            Json cfg{{"max_size", max_size},
                     {"tol", config.solver.tol},
                     {"max_iter", config.solver.max_iter},
                     {"damping", config.solver.damping},
                     {"format", "json"}};
            const Json doc{{"config", cfg},
                           {"sectors", sectors},
                           {"crossings", crossings},
                           {"passed", all_passed}};
            code = emit(doc.dump(2) + "\n", config, out, err);
        }
        if (code != kExitOk) return code;
        return all_passed ? kExitOk : kExitNumerical;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partial-state fidelity and its susceptibility at ground-state level crossings"};
    app.require_subcommand(1);

    RunConfig config;
    std::string model = "lmg";
    std::string format = "csv";
    std::string output;
    int max_size = 12;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", config.solver.tol, "Bethe residual tolerance")
            ->capture_default_str();
        sub->add_option("--max-iter", config.solver.max_iter, "Bethe iteration budget")
            ->capture_default_str();
        sub->add_option("--damping", config.solver.damping, "fixed-point damping in (0, 1]")
            ->capture_default_str();
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", output, "output file (default: standard output)");
    };
    const auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", model, "lmg or heisenberg")
            ->check(CLI::IsMember({"lmg", "heisenberg"}))
            ->capture_default_str();
        sub->add_option("--sizes", config.sizes, "comma-separated even system sizes")
            ->delimiter(',')
            ->required();
    };

    CLI::App* curve = app.add_subcommand("curve", "fidelity and susceptibility at every crossing");
    add_model(curve);
    add_common(curve);
    CLI::App* scaling = app.add_subcommand("scaling", "susceptibility maximum vs size, power-law fit");
    add_model(scaling);
    add_common(scaling);
    CLI::App* validate = app.add_subcommand("validate", "Bethe vs exact diagonalization");
    validate->add_option("--max-size", max_size, "largest ring, even, 4..14")->capture_default_str();
    add_common(validate);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    config.model = parse_model(model);
    config.format = format == "json" ? Format::json : Format::csv;
    if (!output.empty()) config.output = output;

    if (curve->parsed()) return cmd_curve(config, out, err);
    if (scaling->parsed()) return cmd_scaling(config, out, err);
    return cmd_validate(max_size, config, out, err);
}

}  // namespace psfid::cli
