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

/// Umbrella header: discrete Fourier and Hartley transforms on a
/// triangular fragment of the honeycomb lattice.

#include "hweyl/errors.hpp"
#include "hweyl/family.hpp"
#include "hweyl/interpolation.hpp"
#include "hweyl/io.hpp"
#include "hweyl/lattice.hpp"
#include "hweyl/orbit.hpp"
#include "hweyl/transform.hpp"
