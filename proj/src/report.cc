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

#include "fockopt/report.h"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace fockopt {

namespace {

std::vector<ReportAmplitude> amplitudes_of(const PureState &state) {
    std::vector<ReportAmplitude> out;
    out.reserve(state.size());
    for (const auto &[ket, amp] : state.amplitudes()) {
        auto occ = ket.occupations();
        out.push_back({std::vector<int>(occ.begin(), occ.end()), amp.real(), amp.imag()});
    }
    return out;
}

std::map<std::string, std::string> metadata_for(std::string_view source) {
    return {{"circuit_hash", circuit_hash(source)}, {"version", std::string(kVersion)}};
}

void dump_into(const nlohmann::json &v, std::string &out) {
    using value_t = nlohmann::json::value_t;
    switch (v.type()) {
        case value_t::object: {
            out += '{';
            bool first = true;
            // nlohmann::json objects are std::map-backed, so iteration is
            // already in key order.
            for (const auto &[key, item] : v.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += nlohmann::json(key).dump();
                out += ':';
                dump_into(item, out);
            }
            out += '}';
            break;
        }
        case value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); i++) {
                if (i > 0) {
                    out += ',';
                }
                dump_into(v[i], out);
            }
            out += ']';
            break;
        }
        case value_t::number_float:
            out += format_number(v.get<double>());
            break;
        default:
            out += v.dump();
    }
}

std::string label_text(const std::vector<int> &label) {
    std::string s = "(";
    for (std::size_t i = 0; i < label.size(); i++) {
        s += (i ? "," : "") + std::to_string(label[i]);
    }
    return s + ")";
}

}  // namespace

std::string circuit_hash(std::string_view source) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : source) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

Report make_report(const RunResult &run, std::string_view source) {
    Report r;
    r.probability = run.probability;
    r.fidelity = run.fidelity;
    for (const auto &b : run.output.branches()) {
        r.branches.push_back({b.label, b.weight, amplitudes_of(b.state)});
    }
    r.metadata = metadata_for(source);
    return r;
}

Report make_report(const LossyReport &table, std::string_view source) {
    Report r;
    r.probability = table.click_probability;
    r.fidelity = table.fidelity;
    r.eta2 = table.eta2;
    for (const auto &row : table.rows) {
        r.branches.push_back({row.arrivals, row.weight, amplitudes_of(row.state)});
    }
    r.metadata = metadata_for(source);
    return r;
}

std::string format_number(double x, int digits) {
    if (x == 0.0) {
        return "0";  // folds -0 so that sign noise never reaches golden files
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string dump_canonical(const nlohmann::json &value) {
    std::string out;
    dump_into(value, out);
    out += '\n';
    return out;
}

nlohmann::json to_json(const Report &report) {
    nlohmann::json j = nlohmann::json::object();
    j["probability"] = report.probability;
    if (report.fidelity) {
        j["fidelity"] = *report.fidelity;
    }
    if (report.eta2) {
        j["eta2"] = *report.eta2;
    }
    j["branches"] = nlohmann::json::array();
    for (const auto &b : report.branches) {
        nlohmann::json jb;
        jb["label"] = b.label;
        jb["weight"] = b.weight;
        jb["amplitudes"] = nlohmann::json::array();
        for (const auto &a : b.amplitudes) {
            jb["amplitudes"].push_back({{"ket", a.ket}, {"re", a.re}, {"im", a.im}});
        }
        j["branches"].push_back(std::move(jb));
    }
    j["metadata"] = report.metadata;
    return j;
}

Report report_from_json(const nlohmann::json &j) {
    Report r;
    r.probability = j.at("probability").get<double>();
    if (j.contains("fidelity")) {
        r.fidelity = j.at("fidelity").get<double>();
    }
    if (j.contains("eta2")) {
        r.eta2 = j.at("eta2").get<double>();
    }
    for (const auto &jb : j.at("branches")) {
        ReportBranch b;
        b.label = jb.at("label").get<std::vector<int>>();
        b.weight = jb.at("weight").get<double>();
        for (const auto &ja : jb.at("amplitudes")) {
            b.amplitudes.push_back(
                {ja.at("ket").get<std::vector<int>>(), ja.at("re").get<double>(), ja.at("im").get<double>()});
        }
        r.branches.push_back(std::move(b));
    }
    if (j.contains("metadata")) {
        r.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    }
    return r;
}

std::string to_text(const Report &report) {
    std::ostringstream os;
    if (report.eta2) {
        os << "eta2 " << format_number(*report.eta2, kTextDigits) << '\n';
    }
    os << "probability " << format_number(report.probability, kTextDigits) << '\n';
    if (report.fidelity) {
        os << "fidelity " << format_number(*report.fidelity, kTextDigits) << '\n';
    }
    for (const auto &b : report.branches) {
        os << "branch " << label_text(b.label) << " weight " << format_number(b.weight, kTextDigits) << '\n';
        for (const auto &a : b.amplitudes) {
            os << "  |";
            for (std::size_t i = 0; i < a.ket.size(); i++) {
                os << (i ? "," : "") << a.ket[i];
            }
            os << ">  " << format_number(a.re, kTextDigits) << ' ' << format_number(a.im, kTextDigits) << '\n';
        }
    }
    return os.str();
}

}  // namespace fockopt
