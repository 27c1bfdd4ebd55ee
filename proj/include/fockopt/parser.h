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

#ifndef FOCKOPT_PARSER_H
#define FOCKOPT_PARSER_H

#include <filesystem>
#include <string>
#include <string_view>

#include "fockopt/circuit.h"
#include "fockopt/errors.h"

namespace fockopt {

/// Error in a circuit description, with a 1-based source position.
class ParseError : public Error {
   public:
    enum class Kind { Syntax, Semantic };

    ParseError(Kind kind, int line, int column, const std::string &message);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &message() const { return message_; }

   private:
    Kind kind_;
    int line_;
    int column_;
    std::string message_;
};

/// Parses the line-oriented circuit language:
///
///     modes 4
///     in |3,3,0,0>
///     ps 1 pi/2
///     bs 0 1
///     det 2 1 eta2=0.88
///     target 0.7071*|4,0> - 0.7071*|0,4>
///
/// `#` starts a comment. `in` may repeat; the pieces are tensored in order.
/// State expressions are normalized after parsing. Angles accept `pi`
/// fractions such as `pi/2`, `-3pi/4`, or plain decimals.
Circuit parse_circuit(std::string_view text);

Circuit parse_circuit_file(const std::filesystem::path &path);

/// Parses a bare state expression, e.g. "|2,0> + (0+1i)*|0,2>". The result
/// is normalized.
PureState parse_state(std::string_view text);

/// Parses an angle literal.
double parse_angle(std::string_view text);

}  // namespace fockopt

#endif  // FOCKOPT_PARSER_H
