// Copyright 2026 The Revolve Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace revolve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable error kind, used in reports ("SyntaxError", "DomainError", ...).
  virtual const char* kind() const noexcept = 0;
};

/// Malformed expression text. `position()` is the byte offset of the fault.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const char* kind() const noexcept override { return "SyntaxError"; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t position, const std::string& name)
      : Error("unknown identifier '" + name + "' at position " +
              std::to_string(position)),
        position_(position),
        name_(name) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& name() const noexcept { return name_; }
  const char* kind() const noexcept override { return "UnknownIdentifier"; }

 private:
  std::size_t position_;
  std::string name_;
};

/// Evaluation left the real domain (sqrt of negative, log of non-positive,
/// division by zero) or produced a non-finite value.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

class InvalidRegion : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidRegion"; }
};

class InvalidAxis : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidAxis"; }
};

/// The axis of revolution passes through the interior of the region.
class AxisIntersectsRegion : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "AxisIntersectsRegion"; }
};

class QuadratureNoConvergence : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override {
    return "QuadratureNoConvergence";
  }
};

/// The integrand raised a DomainError strictly inside the interval.
class IntegrandError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IntegrandError"; }
};

/// A volume method does not apply to the given region/axis shape.
class UnsupportedMethod : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UnsupportedMethod"; }
};

/// Aggregated job-configuration problems, one entry per offending field path.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const noexcept {
    return problems_;
  }
  const char* kind() const noexcept override { return "ConfigError"; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "\n";
      out += item;
    }
    return out;
  }
  std::vector<std::string> problems_;
};

}  // namespace revolve
