// Copyright 2026 The cohlib Authors
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

namespace coh {

/// Base class for all validation and domain errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Density-matrix validation failures.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};
class NotPositiveError : public Error {
 public:
  using Error::Error;
};
class TraceNotOneError : public Error {
 public:
  using Error::Error;
};

// Eigensolver failed to reach its off-diagonal threshold within the sweep
// budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};
class DimensionTooSmallError : public Error {
 public:
  using Error::Error;
};

// Rejected Renyi/Tsallis order (alpha <= 0, alpha == 1, or alpha > 2).
class AlphaOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// All diagonal moments vanished; only possible on corrupted input.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// No brute-force restart reached the gradient tolerance within budget.
class BudgetExhaustedError : public Error {
 public:
  using Error::Error;
};

// Kraus-channel validation failures.
class IncompleteChannelError : public Error {
 public:
  using Error::Error;
};
class NotIncoherentError : public Error {
 public:
  using Error::Error;
};

// Qubit parameters outside the physical region |b|^2 <= a(1-a).
class PositivityViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace coh
