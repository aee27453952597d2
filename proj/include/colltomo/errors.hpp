// Copyright 2026 The colltomo authors
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

namespace colltomo {

/** Base class for all errors thrown by the library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Operands have mismatched qubit counts or matrix dimensions. */
struct DimensionError : Error {
  using Error::Error;
};

/** Requested dense object exceeds the configured qubit cap. */
struct CapacityError : Error {
  using Error::Error;
};

/** Argument outside the admissible domain (e.g. unrealizable weight triple). */
struct DomainError : Error {
  using Error::Error;
};

/** A table passed to a reconstruction routine is missing entries. */
struct IncompleteDataError : Error {
  using Error::Error;
};

/** A fiducial overlap vanishes, so the dual kernel is undefined. */
struct SingularFiducialError : Error {
  using Error::Error;
};

/** Operation is only defined for the default fiducial parameter. */
struct UnsupportedFiducialError : Error {
  using Error::Error;
};

/** Input fails a physicality check (hermiticity, trace, positivity). */
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace colltomo
