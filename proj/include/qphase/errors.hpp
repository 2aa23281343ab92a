// Copyright 2026 The qphase Authors
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

namespace qphase {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements, points or lines from different fields were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (e.g. inverse of 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A field, phase space, basis set or net could not be constructed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The stabilizers of a striation do not commute under a qubit labeling.
class LabelingError : public ConstructionError {
 public:
  LabelingError(int striation, const std::string& what)
      : ConstructionError(what), striation_(striation) {}
  int striation() const { return striation_; }

 private:
  int striation_;
};

/// Covariance closure of a quantum net produced conflicting projectors.
class NetError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// A matrix that should be a density matrix (or a state vector) is not one.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qphase
