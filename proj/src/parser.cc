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

#include "fockopt/parser.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace fockopt {

ParseError::ParseError(Kind kind, int line, int column, const std::string &message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {
}

namespace {

enum class Tok { Word, Number, Symbol, End };

struct Token {
    Tok type;
    std::string text;
    int column;
};

std::vector<Token> lex_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        char c = line[k];
        if (c == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            k++;
            continue;
        }
        const int col = static_cast<int>(k) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = k;
            while (k < line.size() && (std::isalnum(static_cast<unsigned char>(line[k])) || line[k] == '_')) {
                k++;
            }
            out.push_back({Tok::Word, std::string(line.substr(start, k - start)), col});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = k;
            auto digits = [&] {
                while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
                    k++;
                }
            };
            digits();
            if (k < line.size() && line[k] == '.') {
                k++;
                digits();
            }
            // Exponent only when digits follow, so "3pi" and "2e" lex as number + word.
            if (k < line.size() && (line[k] == 'e' || line[k] == 'E')) {
                std::size_t save = k;
                k++;
                if (k < line.size() && (line[k] == '+' || line[k] == '-')) {
                    k++;
                }
                if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
                    digits();
                } else {
                    k = save;
                }
            }
            out.push_back({Tok::Number, std::string(line.substr(start, k - start)), col});
        } else if (std::string_view("|,>+-*()=/").find(c) != std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), col});
            k++;
        } else {
            throw ParseError(ParseError::Kind::Syntax, line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

class LineParser {
   public:
    LineParser(std::vector<Token> tokens, int line_no) : tokens_(std::move(tokens)), line_(line_no) {}

    const Token &peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().type == Tok::End; }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(ParseError::Kind::Syntax, line_, peek().column, msg);
    }
    [[noreturn]] void fail_semantic(int column, const std::string &msg) const {
        throw ParseError(ParseError::Kind::Semantic, line_, column, msg);
    }

    bool accept_symbol(char c) {
        if (peek().type == Tok::Symbol && peek().text[0] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect_symbol(char c) {
        if (!accept_symbol(c)) {
            fail(std::string("expected '") + c + "'" + found());
        }
    }

    bool accept_word(std::string_view w) {
        if (peek().type == Tok::Word && peek().text == w) {
            pos_++;
            return true;
        }
        return false;
    }

    Token next() { return tokens_[pos_++]; }

    int parse_int() {
        const Token &t = peek();
        if (t.type != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a nonnegative integer" + found());
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc()) {
            fail("integer out of range");
        }
        pos_++;
        return value;
    }

    double parse_real() {
        bool negative = accept_symbol('-');
        if (!negative) {
            accept_symbol('+');
        }
        const Token &t = peek();
        if (t.type != Tok::Number) {
            fail("expected a number" + found());
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail("malformed number '" + t.text + "'");
        }
        pos_++;
        return negative ? -value : value;
    }

    // angle := ["-"] [INT] "pi" ["/" INT] | REAL
    double parse_angle() {
        const bool negative = accept_symbol('-');
        double value = 0.0;
        if (peek().type == Tok::Word && peek().text == "pi") {
            pos_++;
            value = std::numbers::pi;
        } else if (peek().type == Tok::Number && tokens_[pos_ + 1].type == Tok::Word &&
                   tokens_[pos_ + 1].text == "pi") {
            value = parse_int() * std::numbers::pi;
            pos_++;
        } else {
            if (peek().type == Tok::Symbol && peek().text == "-") {
                fail("unexpected '-'");
            }
            value = parse_real();
            return negative ? -value : value;
        }
        if (accept_symbol('/')) {
            int col = peek().column;
            int denom = parse_int();
            if (denom == 0) {
                fail_semantic(col, "division by zero in angle");
            }
            value /= denom;
        }
        return negative ? -value : value;
    }

    // coeff := REAL | "(" REAL SIGN REAL "i" ")"
    Amplitude parse_coefficient() {
        if (accept_symbol('(')) {
            double re = parse_real();
            double sign = 1.0;
            if (accept_symbol('-')) {
                sign = -1.0;
            } else {
                expect_symbol('+');
            }
            double im = parse_real();
            if (!accept_word("i")) {
                fail("expected 'i' after imaginary part" + found());
            }
            expect_symbol(')');
            return {re, sign * im};
        }
        return parse_real();
    }

    FockKet parse_ket() {
        expect_symbol('|');
        std::vector<int> occ{parse_int()};
        while (accept_symbol(',')) {
            occ.push_back(parse_int());
        }
        expect_symbol('>');
        return FockKet(std::move(occ));
    }

    // stateexpr := term (("+" | "-") term)*, with an optional leading sign.
    PureState parse_state_expression() {
        const int start_col = peek().column;
        std::vector<std::pair<FockKet, Amplitude>> terms;
        double sign = 1.0;
        if (accept_symbol('-')) {
            sign = -1.0;
        } else {
            accept_symbol('+');
        }
        while (true) {
            Amplitude coeff = 1.0;
            if (!(peek().type == Tok::Symbol && peek().text == "|")) {
                coeff = parse_coefficient();
                expect_symbol('*');
            }
            const int ket_col = peek().column;
            FockKet ket = parse_ket();
            if (!terms.empty() && ket.mode_count() != terms.front().first.mode_count()) {
                fail_semantic(ket_col, "ket " + ket.str() + " has a different mode count from earlier terms");
            }
            terms.emplace_back(std::move(ket), sign * coeff);
            if (accept_symbol('+')) {
                sign = 1.0;
            } else if (accept_symbol('-')) {
                sign = -1.0;
            } else {
                break;
            }
        }
        PureState state(terms.front().first.mode_count());
        for (const auto &[ket, amp] : terms) {
            state.accumulate(ket, amp);
        }
        state.prune(0.0);
        if (state.norm_squared() == 0.0) {
            fail_semantic(start_col, "state expression has zero norm");
        }
        return normalize(state).state;
    }

    void expect_end() {
        if (!at_end()) {
            fail("unexpected trailing input" + found());
        }
    }

   private:
    std::string found() const {
        if (peek().type == Tok::End) {
            return ", found end of line";
        }
        return ", found '" + peek().text + "'";
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

struct Located {
    int line;
    int column;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<std::size_t> modes;
    std::optional<PureState> input;
    Located input_at{1, 1};
    std::optional<PureState> target;
    Located target_at{1, 1};
    std::vector<Element> elements;
    std::vector<bool> consumed;

    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(begin, end - begin);
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        begin = end + 1;
        line_no++;

        LineParser p(lex_line(raw, line_no), line_no);
        if (p.at_end()) {
            continue;
        }
        Token head = p.next();
        if (head.type != Tok::Word) {
            throw ParseError(ParseError::Kind::Syntax, line_no, head.column, "expected a keyword, found '" + head.text + "'");
        }

        auto need_modes = [&] {
            if (!modes) {
                p.fail_semantic(head.column, "'" + head.text + "' before 'modes'");
            }
        };
        auto check_mode = [&](int value, int column, const char *what) -> std::size_t {
            auto m = static_cast<std::size_t>(value);
            if (m >= *modes) {
                p.fail_semantic(column, std::string(what) + " mode " + std::to_string(value) + " out of range (modes " +
                                            std::to_string(*modes) + ")");
            }
            if (consumed[m]) {
                p.fail_semantic(column, std::string(what) + " uses mode " + std::to_string(value) +
                                            ", already consumed by a detector");
            }
            return m;
        };

        if (head.text == "modes") {
            if (modes) {
                p.fail_semantic(head.column, "duplicate 'modes' declaration");
            }
            int col = p.peek().column;
            int m = p.parse_int();
            if (m < 1) {
                p.fail_semantic(col, "mode count must be at least 1");
            }
            p.expect_end();
            modes = static_cast<std::size_t>(m);
            consumed.assign(*modes, false);
        } else if (head.text == "in") {
            need_modes();
            PureState piece = p.parse_state_expression();
            p.expect_end();
            input = input ? tensor_product(*input, piece) : piece;
            input_at = {line_no, head.column};
        } else if (head.text == "target") {
            need_modes();
            if (target) {
                p.fail_semantic(head.column, "duplicate 'target'");
            }
            target = p.parse_state_expression();
            target_at = {line_no, head.column};
            p.expect_end();
        } else if (head.text == "bs") {
            need_modes();
            int c1 = p.peek().column;
            int i = p.parse_int();
            int c2 = p.peek().column;
            int j = p.parse_int();
            p.expect_end();
            auto mi = check_mode(i, c1, "beam splitter");
            auto mj = check_mode(j, c2, "beam splitter");
            if (mi == mj) {
                p.fail_semantic(c2, "beam splitter needs two distinct modes");
            }
            elements.push_back(BeamSplitter{mi, mj});
        } else if (head.text == "ps") {
            need_modes();
            int c1 = p.peek().column;
            int i = p.parse_int();
            double phi = p.parse_angle();
            p.expect_end();
            elements.push_back(PhaseShifter{check_mode(i, c1, "phase shifter"), phi});
        } else if (head.text == "det") {
            need_modes();
            int c1 = p.peek().column;
            int i = p.parse_int();
            int clicks = p.parse_int();
            double eta2 = 1.0;
            if (p.accept_word("eta2")) {
                p.expect_symbol('=');
                int ce = p.peek().column;
                eta2 = p.parse_real();
                if (!(eta2 >= 0.0 && eta2 <= 1.0)) {
                    p.fail_semantic(ce, "eta2 must lie in [0, 1]");
                }
            }
            p.expect_end();
            auto m = check_mode(i, c1, "detector");
            consumed[m] = true;
            elements.push_back(DetectorSpec{m, clicks, eta2});
        } else {
            throw ParseError(ParseError::Kind::Syntax, line_no, head.column, "unknown keyword '" + head.text + "'");
        }
    }

    if (!modes) {
        throw ParseError(ParseError::Kind::Semantic, line_no, 1, "missing 'modes' declaration");
    }
    if (!input) {
        throw ParseError(ParseError::Kind::Semantic, line_no, 1, "missing 'in' state");
    }
    if (input->mode_count() != *modes) {
        throw ParseError(ParseError::Kind::Semantic, input_at.line, input_at.column,
                         "input state has " + std::to_string(input->mode_count()) + " modes, circuit declares " +
                             std::to_string(*modes));
    }
    std::size_t remaining = 0;
    for (bool c : consumed) {
        remaining += c ? 0 : 1;
    }
    if (target && target->mode_count() != remaining) {
        throw ParseError(ParseError::Kind::Semantic, target_at.line, target_at.column,
                         "target has " + std::to_string(target->mode_count()) + " modes, but " +
                             std::to_string(remaining) + " remain after detection");
    }
    return Circuit(*modes, std::move(elements), std::move(*input), std::move(target));
}

Circuit parse_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open circuit file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

PureState parse_state(std::string_view text) {
    LineParser p(lex_line(text, 1), 1);
    PureState s = p.parse_state_expression();
    p.expect_end();
    return s;
}

double parse_angle(std::string_view text) {
    LineParser p(lex_line(text, 1), 1);
    double phi = p.parse_angle();
    p.expect_end();
    return phi;
}

}  // namespace fockopt
