// Copyright 2026 hweyl developers
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

namespace hweyl {

/// Base class of all hweyl exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation
/// (non-positive resolution, S-family with M <= 3, invalid physical
/// parameters, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Two containers that must share resolution, domain or length do not.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A weight label does not belong to the family it was used with.
struct UnknownWeightError : Error {
  using Error::Error;
};

/// Malformed CSV/JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hweyl
