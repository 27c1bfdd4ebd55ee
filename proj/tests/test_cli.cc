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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "cli_app.h"
#include "fockopt/report.h"
#include "test_support.h"

namespace fockopt {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string circuit(const std::string &name) {
    return testing::circuit_path(name).string();
}

std::string scratch_file(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("fockopt_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Every token of the text report that parses as a number.
std::vector<double> numbers_in(const std::string &text) {
    static const std::regex num(R"((^|[\s(,|])(-?[0-9][0-9.e+-]*)(?=$|[\s),>]))");
    std::vector<double> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it) {
        out.push_back(std::stod((*it)[2].str()));
    }
    return out;
}

TEST(Cli, RunFig2PrintsYieldAndState) {
    Outcome o = invoke({"run", circuit("fig2_22.qc")});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("probability 0.0625\n"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("|0,2>  0.707106781187 0"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("|2,0>  0.707106781187 0"), std::string::npos) << o.out;
    EXPECT_TRUE(o.err.empty());
}

TEST(Cli, RunEmptyCircuit) {
    Outcome o = invoke({"run", circuit("empty.qc")});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "probability 1\nbranch () weight 1\n  |0>  1 0\n");
}

TEST(Cli, JsonIsDeterministicAndMatchesGolden) {
    for (const auto &[args, golden] : std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{"run", circuit("fig2_22.qc"), "--json"}, "run_fig2_22.json"},
             {{"table", circuit("fig2_33.qc"), "--eta2", "0.88", "--json"}, "table_fig2_33_088.json"},
         }) {
        Outcome a = invoke(args), b = invoke(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out, read_file(std::filesystem::path(FOCKOPT_GOLDEN_DIR) / golden)) << golden;
    }
}

TEST(Cli, TableFidelityField) {
    Outcome o = invoke({"table", circuit("fig2_33.qc"), "--eta2", "0.88", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j["fidelity"].get<double>(), 0.64, 0.01);
    EXPECT_NEAR(j["fidelity"].get<double>(), 0.6355180784048312, 1e-12);
    EXPECT_NEAR(j["eta2"].get<double>(), 0.88, 0.0);
}

TEST(Cli, TextAndJsonAgreeOnEveryNumber) {
    for (const std::string name : {"fig2_22.qc", "fig2_33_lossy.qc", "ladder_55.qc"}) {
        Outcome text = invoke({"run", circuit(name)});
        Outcome json = invoke({"run", circuit(name), "--json"});
        ASSERT_EQ(text.code, 0);
        Report r = report_from_json(nlohmann::json::parse(json.out));
        std::vector<double> expected;
        expected.push_back(r.probability);
        if (r.fidelity) {
            expected.push_back(*r.fidelity);
        }
        for (const auto &b : r.branches) {
            expected.insert(expected.end(), b.label.begin(), b.label.end());
            expected.push_back(b.weight);
            for (const auto &a : b.amplitudes) {
                expected.insert(expected.end(), a.ket.begin(), a.ket.end());
                expected.push_back(a.re);
                expected.push_back(a.im);
            }
        }
        std::vector<double> printed = numbers_in(text.out);
        ASSERT_EQ(printed.size(), expected.size()) << name;
        for (std::size_t i = 0; i < printed.size(); i++) {
            // The text form is the JSON value rounded to kTextDigits.
            EXPECT_EQ(format_number(printed[i], kTextDigits), format_number(expected[i], kTextDigits))
                << name << " #" << i;
        }
    }
}

TEST(Cli, SweepAndPattern) {
    Outcome s = invoke({"sweep", circuit("fig2_33_plus.qc"), "--eta2", "0.5:1:0.25", "--json"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto j = nlohmann::json::parse(s.out);
    ASSERT_EQ(j["points"].size(), 3u);
    EXPECT_NEAR(j["points"][0]["fidelity"].get<double>(), 16.0 / 81.0, 1e-12);
    EXPECT_NEAR(j["points"][2]["fidelity"].get<double>(), 1.0, 1e-10);

    Outcome p = invoke({"pattern", circuit("noon4_pattern.qc"), "--grid", "32", "--json"});
    ASSERT_EQ(p.code, 0) << p.err;
    auto jp = nlohmann::json::parse(p.out);
    EXPECT_EQ(jp["photons"], 4);
    EXPECT_EQ(jp["points"].size(), 32u);
    EXPECT_NEAR(jp["fit"]["cos_amplitude"].get<double>() / jp["fit"]["offset"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, OracleSubcommand) {
    Outcome o = invoke({"oracle", circuit("fig2_ancilla.qc")});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.substr(0, 6), "agree\n");
    Outcome r = invoke({"run", circuit("fig2_22.qc"), "--oracle", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["agrees"].get<bool>());
}

TEST(Cli, ExitCodes) {
    const std::string syntax = scratch_file("syntax.qc", "modes 2\nin |1,1> +\n");
    Outcome o = invoke({"run", syntax});
    EXPECT_EQ(o.code, cli::kParseError);
    EXPECT_NE(o.err.find(syntax + ":2:"), std::string::npos) << o.err;

    const std::string semantic = scratch_file("semantic.qc", "modes 2\nin |1,1>\nbs 0 5\n");
    o = invoke({"run", semantic});
    EXPECT_EQ(o.code, cli::kSemanticError);
    EXPECT_NE(o.err.find(semantic + ":3:"), std::string::npos) << o.err;

    const std::string zero = scratch_file("zero.qc", "modes 2\nin |1,0>\ndet 0 2\n");
    o = invoke({"run", zero});
    EXPECT_EQ(o.code, cli::kZeroProbability);
    EXPECT_NE(o.err.find(zero), std::string::npos);

    EXPECT_EQ(invoke({"run", "/nonexistent.qc"}).code, cli::kParseError);
    EXPECT_EQ(invoke({}).code, cli::kParseError);
    EXPECT_EQ(invoke({"table", circuit("fig2_33.qc")}).code, cli::kParseError);  // --eta2 missing
    EXPECT_EQ(invoke({"table", circuit("hom.qc"), "--eta2", "0.5"}).code, cli::kSemanticError);
    EXPECT_EQ(invoke({"table", circuit("fig2_33.qc"), "--eta2", "1.5"}).code, cli::kSemanticError);
    EXPECT_EQ(invoke({"table", circuit("empty.qc"), "--eta2", "0.5"}).code, cli::kSemanticError);
    EXPECT_EQ(invoke({"sweep", circuit("fig2_33.qc"), "--eta2", "1:0.5:0.1"}).code, cli::kSemanticError);
    EXPECT_EQ(invoke({"pattern", circuit("fig2_33_lossy.qc")}).code, cli::kSemanticError);
}

TEST(Cli, UsageErrorsAreReportedOnErrorStream) {
    Outcome o = invoke({"table", circuit("hom.qc"), "--eta2", "0.5"});
    EXPECT_TRUE(o.out.empty());
    EXPECT_NE(o.err.find("error:"), std::string::npos);
}

TEST(ParseRange, Grid) {
    auto v = cli::parse_range("0.5:1:0.1");
    ASSERT_EQ(v.size(), 6u);
    EXPECT_DOUBLE_EQ(v.front(), 0.5);
    EXPECT_DOUBLE_EQ(v.back(), 1.0);
    EXPECT_EQ(cli::parse_range("0.7").size(), 1u);
    EXPECT_THROW(cli::parse_range("a:b:c"), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("0.5:1:0"), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("0.5:1"), std::invalid_argument);
}

}  // namespace
}  // namespace fockopt
