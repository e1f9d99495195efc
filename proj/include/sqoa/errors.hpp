// Copyright 2026 The SQOA Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sqoa {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad sizes, improper coloring, ...).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Problem too large for the requested exact method.
class SizeError : public Error {
   public:
    using Error::Error;
};

/// Encoding would change the problem structure (two adjacent variables on one qubit).
class EncodingError : public Error {
   public:
    using Error::Error;
};

/// Iterative method failed to reach its tolerance.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Ratio with a zero or meaningless denominator.
class DomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace sqoa
