// Copyright 2026 The hqo Authors
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

namespace hqo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A size limit was exceeded (qubit count, variable count, sweep rows).
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// A gate or operator does not fit the state it is applied to.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// A post-selection removed (numerically) all of the probability mass.
class EmptySubspaceError : public Error {
   public:
    using Error::Error;
};

/// An arithmetic register cannot hold the values it must represent.
class LayoutError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition of an operation was violated.
class ContractError : public Error {
   public:
    using Error::Error;
};

/// Malformed user input (files, CLI arguments, parameter lists).
class InputError : public Error {
   public:
    using Error::Error;
};

/// Complexity statistics were requested for a circuit built from oracles.
class StatsUnavailableError : public Error {
   public:
    using Error::Error;
};

}  // namespace hqo
