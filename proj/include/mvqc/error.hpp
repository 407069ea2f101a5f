// Copyright 2026 The mvqc Authors
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

namespace mvqc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing configuration (qubit counts, hyperparameters, paths).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Qubit or feature index outside the valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A circuit or model that cannot be evaluated as defined.
class ModelDefinitionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values during evaluation or training.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unusable input data.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvqc
