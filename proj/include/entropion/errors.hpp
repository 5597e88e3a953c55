// Copyright 2026 The Entropion Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace entropion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or tensor-factor dimensions do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (non-Hermitian, not PSD, bad trace, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A function was evaluated outside its domain (e.g. log of a negative eigenvalue).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure hit its iteration cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The right-hand side has weight on the joint kernel of a superoperator, so
/// the pseudo-inverse would silently drop a significant component.
class KernelObstruction : public Error {
 public:
  using Error::Error;
};

/// Input text or a file does not match the documented format.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace entropion
