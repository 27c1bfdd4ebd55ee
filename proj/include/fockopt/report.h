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

#ifndef FOCKOPT_REPORT_H
#define FOCKOPT_REPORT_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockopt/analysis.h"
#include "fockopt/circuit.h"
#include "json.hpp"

namespace fockopt {

inline constexpr std::string_view kVersion = "0.1.0";

struct ReportAmplitude {
    std::vector<int> ket;
    double re = 0.0;
    double im = 0.0;

    bool operator==(const ReportAmplitude &) const = default;
};

struct ReportBranch {
    std::vector<int> label;
    double weight = 0.0;
    std::vector<ReportAmplitude> amplitudes;  // kets ascending

    bool operator==(const ReportBranch &) const = default;
};

/// Serializable summary of one execution. Lossy tables reuse it with one
/// branch per arrival pattern and `eta2` set.
struct Report {
    double probability = 0.0;
    std::optional<double> fidelity;
    std::optional<double> eta2;
    std::vector<ReportBranch> branches;
    std::map<std::string, std::string> metadata;

    bool operator==(const Report &) const = default;
};

/// Stable 64-bit FNV-1a digest of the circuit source, as 16 hex digits.
std::string circuit_hash(std::string_view source);

Report make_report(const RunResult &run, std::string_view source);
Report make_report(const LossyReport &table, std::string_view source);

/// Every real in JSON is printed as %.17g so that output is byte-stable and
/// round-trips exactly. Human-readable output rounds the same values to 12
/// significant digits, hiding the last few ulps of rounding noise; -0 prints
/// as 0.
inline constexpr int kJsonDigits = 17;
inline constexpr int kTextDigits = 12;
std::string format_number(double x, int digits = kJsonDigits);

/// Compact JSON with keys sorted and reals in format_number form, followed
/// by a newline.
std::string dump_canonical(const nlohmann::json &value);

nlohmann::json to_json(const Report &report);
Report report_from_json(const nlohmann::json &value);

std::string to_text(const Report &report);

}  // namespace fockopt

#endif  // FOCKOPT_REPORT_H
