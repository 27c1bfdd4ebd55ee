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

#ifndef FOCKOPT_ERRORS_H
#define FOCKOPT_ERRORS_H

#include <stdexcept>
#include <string>

namespace fockopt {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two states or a state and a circuit disagree on the number of modes.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// An optical element was given invalid mode indices.
class ElementError : public Error {
   public:
    using Error::Error;
};

/// A post-selection or normalization hit a branch of exactly zero weight.
///
/// This is a physics outcome (the heralding pattern cannot occur), not a
/// numerical failure, and callers usually want to report it separately.
class ZeroProbabilityError : public Error {
   public:
    using Error::Error;
};

/// A circuit description is structurally valid but semantically wrong
/// (mode out of range, detector on a consumed mode, target size mismatch).
class SemanticError : public Error {
   public:
    using Error::Error;
};

/// The dense reference simulator refuses inputs above its size guard.
class OracleSizeError : public Error {
   public:
    using Error::Error;
};

}  // namespace fockopt

#endif  // FOCKOPT_ERRORS_H
