// Copyright 2026 The cosp Authors.
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

namespace cosp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation precondition (kind mismatch, dimension
/// mismatch, mixed question ids, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A run or operation configuration is contradictory or out of range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An answer was required but every path failed extraction.
class NoAnswerError : public Error {
 public:
  using Error::Error;
};

/// Demo selection was asked to run with no candidates and no seeds.
class EmptyPoolError : public Error {
 public:
  using Error::Error;
};

/// A file (dataset, cache, config) failed to parse. `line` is 1-based and 0
/// when the failure is not tied to a specific line.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, int line = 0) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A model backend failed. Retryable errors are transient (timeouts, 429,
/// 5xx); the gateway aborts after bounded retries and the sample cache keeps
/// whatever completed, so an aborted run can resume.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, bool retryable = false)
      : Error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

/// A remote peer answered with bytes that do not match the wire contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The scripted backend received a prompt no rule matches.
class ScriptedMissError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosp
