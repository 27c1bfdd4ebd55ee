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

#ifndef FOCKOPT_SCHEMES_H
#define FOCKOPT_SCHEMES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockopt/circuit.h"

namespace fockopt {

/// (|N,0> + sign |0,N>) / sqrt(2).
PureState noon_state(int n, double sign = 1.0);

/// Knobs shared by the named builders. Unset fields take the scheme's
/// defaults.
struct SchemeParams {
    std::optional<PureState> input;
    std::optional<PureState> target;
    /// Phase of an extra shifter appended on output mode 0 after the final
    /// beam splitter ("at the end of one path").
    std::optional<double> extra_phase;
    int clicks = 1;
    double eta2 = 1.0;
};

/// Builds one of the shipped schemes:
///
///   hom           single beam splitter on |1,1>.
///   fig2          four-port Mach-Zehnder with heralding splitters in both
///                 arms, mode order a, b, c, d; detectors on c' and d'.
///                 Default input |2,2,0,0>.
///   fig2_33       fig2 plus a pi/2 shifter on mode 1 between the first and
///                 the intermediate splitters. Default input |3,3,0,0>.
///   fig2_ancilla  fig2 plus a pi/4 shifter on mode 0 at the same place,
///                 default input |2,2> (x) (|2,0>+|0,2>)/sqrt(2) on c, d.
///
/// The fig2 family absorbs the mirror phases into fixed shifters so that
/// the linear part reproduces the four-port transformation
///     a' = b/sqrt2 + (c - i d)/2,      b' = a/sqrt2 + (d - i c)/2,
///     c' = (a - i b)/2 + i c/sqrt2,    d' = (b - i a)/2 + i d/sqrt2.
///
/// When neither input nor target is overridden, the default target is the
/// scheme's expected conditional output, pushed through `extra_phase`.
/// Throws std::invalid_argument for an unknown name.
Circuit build_named(std::string_view name, const SchemeParams &params = {});

std::vector<std::string> scheme_names();

}  // namespace fockopt

#endif  // FOCKOPT_SCHEMES_H
