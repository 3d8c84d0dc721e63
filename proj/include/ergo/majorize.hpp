// Copyright 2026 The Ergo Authors
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

#include <span>
#include <string_view>
#include <vector>

#include "ergo/qcore.hpp"

namespace ergo {

enum class Comparability { Equal, FirstMajorizes, SecondMajorizes, Incomparable };

std::string_view to_string(Comparability c);

inline constexpr double kMajorizationTol = 1e-12;

/// True when `p` majorizes `q`: after sorting both non-increasing and
/// zero-padding to a common length, every partial sum of `p` is at least the
/// matching partial sum of `q` (ties allowed within `tol`) and the totals agree.
bool majorizes(std::span<const double> p, std::span<const double> q, double tol = kMajorizationTol);
bool majorizes(const Spectrum& p, const Spectrum& q, double tol = kMajorizationTol);

/// Smallest partial-sum difference sum_{i<=k} (p_i - q_i) over k, after
/// sorting and padding. Non-negative (up to rounding) exactly when p majorizes q
/// with equal totals.
double majorization_slack(std::span<const double> p, std::span<const double> q);

Comparability compare(std::span<const double> p, std::span<const double> q, double tol = kMajorizationTol);
Comparability compare(const Spectrum& p, const Spectrum& q, double tol = kMajorizationTol);

}  // namespace ergo
