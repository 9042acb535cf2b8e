// Copyright 2026 The qtraj developers
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

namespace qtraj {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands have incompatible or invalid dimensions.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A state, channel or operator failed a structural validity check
/// (hermiticity, trace, positivity, unitarity, stochasticity).
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// An instrument set does not span operator space well enough to invert.
class NotInformationallyComplete : public Error {
  public:
    explicit NotInformationallyComplete(const std::string& msg) : Error(msg) {}
};

/// Linear expansion of an operation over a frame failed (residual too big).
class ExpansionError : public Error {
  public:
    explicit ExpansionError(const std::string& msg) : Error(msg) {}
};

/// An enumeration would exceed the configured trajectory budget.
class BudgetExceeded : public Error {
  public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// Conditioning on an event of (numerically) zero probability.
class UndefinedConditional : public Error {
  public:
    explicit UndefinedConditional(const std::string& msg) : Error(msg) {}
};

/// A decomposition that requires a unital map was given a non-unital one.
class NonUnitalError : public Error {
  public:
    explicit NonUnitalError(const std::string& msg) : Error(msg) {}
};

/// Malformed experiment configuration; message carries a JSON-pointer-like
/// path to the offending field.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Lookup into an incomplete process table.
class IncompleteTable : public Error {
  public:
    explicit IncompleteTable(const std::string& msg) : Error(msg) {}
};

}  // namespace qtraj
