// Copyright 2026 The fockopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fockopt/analysis.h"
#include "fockopt/errors.h"
#include "fockopt/oracle.h"
#include "fockopt/parser.h"
#include "fockopt/report.h"

namespace fockopt::cli {

namespace {

struct Loaded {
    std::string source;
    Circuit circuit;
};

// Raised for problems that belong to the command line itself rather than
// to the circuit (bad flag values, missing target, ...).
class UsageError : public Error {
   public:
    using Error::Error;
};

Loaded load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(ParseError::Kind::Syntax, 0, 0, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string source = buffer.str();
    Circuit circuit = parse_circuit(source);
    return {std::move(source), std::move(circuit)};
}

const PureState &require_target(const Circuit &c) {
    if (!c.target()) {
        throw UsageError("circuit declares no target state");
    }
    return *c.target();
}

void emit(std::ostream &out, bool json, const Report &report) {
    if (json) {
        out << dump_canonical(to_json(report));
    } else {
        out << to_text(report);
    }
}

int cmd_run(const std::string &path, bool json, std::ostream &out) {
    const Loaded l = load(path);
    emit(out, json, make_report(run_circuit(l.circuit), l.source));
    return kOk;
}

int cmd_table(const std::string &path, double eta2, bool json, std::ostream &out) {
    const Loaded l = load(path);
    const LossyReport table = lossy_table(l.circuit, eta2, require_target(l.circuit));
    emit(out, json, make_report(table, l.source));
    return kOk;
}

int cmd_sweep(const std::string &path, const std::string &range, bool json, std::ostream &out) {
    const Loaded l = load(path);
    const std::vector<double> values = parse_range(range);
    const auto points = eta_sweep(l.circuit, values, require_target(l.circuit));
    if (json) {
        nlohmann::json j;
        j["points"] = nlohmann::json::array();
        for (const auto &p : points) {
            j["points"].push_back(
                {{"eta2", p.eta2}, {"fidelity", p.fidelity}, {"click_probability", p.click_probability}});
        }
        j["metadata"] = {{"circuit_hash", circuit_hash(l.source)}, {"version", std::string(kVersion)}};
        out << dump_canonical(j);
    } else {
        out << "eta2 fidelity click_probability\n";
        for (const auto &p : points) {
            out << format_number(p.eta2, kTextDigits) << ' ' << format_number(p.fidelity, kTextDigits) << ' '
                << format_number(p.click_probability, kTextDigits) << '\n';
        }
    }
    return kOk;
}

int cmd_pattern(const std::string &path, int grid, bool json, std::ostream &out) {
    const Loaded l = load(path);
    const RunResult run = run_circuit(l.circuit);
    if (run.output.size() != 1) {
        throw UsageError("pattern needs a pure output state; the circuit produced a mixture");
    }
    const PureState &state = run.output.branches().front().state;
    const auto points = deposition_pattern(state, uniform_phase_grid(grid));
    const int photons = state.amplitudes().begin()->first.total_photons();
    std::optional<CosineFit> fit;
    if (points.size() >= 3) {
        fit = fit_cosine(points, photons);
    }
    if (json) {
        nlohmann::json j;
        j["photons"] = photons;
        j["points"] = nlohmann::json::array();
        for (const auto &p : points) {
            j["points"].push_back({{"phi", p.phi}, {"intensity", p.intensity}});
        }
        if (fit) {
            j["fit"] = {{"offset", fit->offset},
                        {"cos_amplitude", fit->cos_amplitude},
                        {"sin_amplitude", fit->sin_amplitude},
                        {"relative_residual", fit->relative_residual}};
        }
        j["metadata"] = {{"circuit_hash", circuit_hash(l.source)}, {"version", std::string(kVersion)}};
        out << dump_canonical(j);
    } else {
        out << "photons " << photons << '\n';
        if (fit) {
            out << "fit offset " << format_number(fit->offset, kTextDigits) << " cos "
                << format_number(fit->cos_amplitude, kTextDigits) << " sin " << format_number(fit->sin_amplitude, kTextDigits) << " residual "
                << format_number(fit->relative_residual, kTextDigits) << '\n';
        }
        out << "phi intensity\n";
        for (const auto &p : points) {
            out << format_number(p.phi, kTextDigits) << ' ' << format_number(p.intensity, kTextDigits) << '\n';
        }
    }
    return kOk;
}

int cmd_oracle(const std::string &path, bool json, std::ostream &out, std::ostream &err) {
    const Loaded l = load(path);
    const RunResult engine = run_circuit(l.circuit);
    const RunResult reference = oracle::dense_reference_run(l.circuit);
    const oracle::RunComparison cmp = oracle::compare_runs(engine, reference);
    const bool symbolic_ok =
        approx_equal(propagate_linear(l.circuit), oracle::symbolic_linear_state(l.circuit), 1e-10);
    const bool ok = cmp.agrees() && symbolic_ok;
    if (json) {
        nlohmann::json j;
        j["agrees"] = ok;
        j["labels_match"] = cmp.labels_match;
        j["probability_delta"] = cmp.probability_delta;
        j["state_delta"] = cmp.state_delta;
        j["weight_delta"] = cmp.weight_delta;
        j["symbolic_agrees"] = symbolic_ok;
        j["engine"] = to_json(make_report(engine, l.source));
        j["reference"] = to_json(make_report(reference, l.source));
        out << dump_canonical(j);
    } else {
        out << (ok ? "agree" : "MISMATCH") << '\n'
            << "probability_delta " << format_number(cmp.probability_delta, kTextDigits) << '\n'
            << "state_delta " << format_number(cmp.state_delta, kTextDigits) << '\n'
            << "weight_delta " << format_number(cmp.weight_delta, kTextDigits) << '\n'
            << "labels_match " << (cmp.labels_match ? "true" : "false") << '\n'
            << "symbolic_agrees " << (symbolic_ok ? "true" : "false") << '\n';
    }
    if (!ok) {
        err << path << ": error: sparse engine and dense reference disagree\n";
        return kOracleMismatch;
    }
    return kOk;
}

int guarded(const std::string &path, std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << path;
        if (e.line() > 0) {
            err << ':' << e.line() << ':' << e.column();
        }
        err << ": error: " << e.message() << '\n';
        return e.kind() == ParseError::Kind::Syntax ? kParseError : kSemanticError;
    } catch (const ZeroProbabilityError &e) {
        err << path << ": error: zero-probability outcome: " << e.what() << '\n';
        return kZeroProbability;
    } catch (const std::exception &e) {
        err << path << ": error: " << e.what() << '\n';
        return kSemanticError;
    }
}

}  // namespace

std::vector<double> parse_range(const std::string &spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = std::string::npos;
        }
        if (used != item.size() || item.empty()) {
            throw std::invalid_argument("malformed range '" + spec + "', expected a:b:step");
        }
        parts.push_back(v);
    }
    if (parts.size() == 1) {
        return parts;
    }
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
        throw std::invalid_argument("malformed range '" + spec + "', expected a:b:step with a <= b, step > 0");
    }
    const auto count = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
    std::vector<double> out;
    for (long k = 0; k < count; k++) {
        out.push_back(std::min(parts[0] + k * parts[2], parts[1]));
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact few-photon linear-optics simulator", "fockopt"};
    app.require_subcommand(1);

    bool json = false;
    std::string path;
    double eta2 = 1.0;
    std::string eta2_range;
    int grid = 64;
    bool with_oracle = false;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("file", path, "circuit file")->required();
        sub->add_flag("--json", json, "emit the JSON report");
    };
    CLI::App *run_cmd = app.add_subcommand("run", "execute a circuit and print its report");
    add_common(run_cmd);
    run_cmd->add_flag("--oracle", with_oracle, "also diff against the dense reference");
    CLI::App *table_cmd = app.add_subcommand("table", "conditional-state table for lossy detectors");
    add_common(table_cmd);
    table_cmd->add_option("--eta2", eta2, "detector efficiency in (0, 1]")->required();
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "fidelity and click probability over efficiencies");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--eta2", eta2_range, "range a:b:step")->required();
    CLI::App *pattern_cmd = app.add_subcommand("pattern", "N-photon deposition pattern of the output");
    add_common(pattern_cmd);
    pattern_cmd->add_option("--grid", grid, "number of phase samples on [0, 2pi)")
        ->check(CLI::PositiveNumber);
    CLI::App *oracle_cmd = app.add_subcommand("oracle", "diff the engine against the dense reference");
    add_common(oracle_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    if (run_cmd->parsed()) {
        return guarded(path, err, [&] {
            if (with_oracle) {
                return cmd_oracle(path, json, out, err);
            }
            return cmd_run(path, json, out);
        });
    }
    if (table_cmd->parsed()) {
        return guarded(path, err, [&] { return cmd_table(path, eta2, json, out); });
    }
    if (sweep_cmd->parsed()) {
        return guarded(path, err, [&] { return cmd_sweep(path, eta2_range, json, out); });
    }
    if (pattern_cmd->parsed()) {
        return guarded(path, err, [&] { return cmd_pattern(path, grid, json, out); });
    }
    return guarded(path, err, [&] { return cmd_oracle(path, json, out, err); });
}

}  // namespace fockopt::cli
