// Copyright 2026 The dicolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICOLOR_ERROR_HPP_
#define DICOLOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dicolor {

// Base of every error thrown by the library. Callers that only need a
// one-line diagnostic can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge list, ordering string or coloring document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument failed (vertex out of range, k = 0,
// ordering that is not a bijection, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A supplied potential does not satisfy its arc inequalities.
class CertificateError : public Error {
 public:
  using Error::Error;
};

// Brute-force routines refuse inputs above their size guard.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

// Circuit enumeration produced more circuits than allowed.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dicolor

#endif  // DICOLOR_ERROR_HPP_
