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

#include "ergo/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ergo {

namespace {

std::pair<std::vector<double>, std::vector<double>> sorted_padded(std::span<const double> p,
                                                                  std::span<const double> q) {
  std::vector<double> a(p.begin(), p.end()), b(q.begin(), q.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::string_view to_string(Comparability c) {
  switch (c) {
    case Comparability::Equal: return "Equal";
    case Comparability::FirstMajorizes: return "FirstMajorizes";
    case Comparability::SecondMajorizes: return "SecondMajorizes";
    case Comparability::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

bool majorizes(std::span<const double> p, std::span<const double> q, double tol) {
  const auto [a, b] = sorted_padded(p, q);
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb - tol) return false;
  }
  return std::abs(sa - sb) <= tol;
}

bool majorizes(const Spectrum& p, const Spectrum& q, double tol) {
  return majorizes(p.probs(), q.probs(), tol);
}

double majorization_slack(std::span<const double> p, std::span<const double> q) {
  const auto [a, b] = sorted_padded(p, q);
  double sa = 0.0, sb = 0.0, slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    slack = std::min(slack, sa - sb);
  }
  // The total must match too; a surplus there is not slack.
  return std::min(slack, -std::abs(sa - sb));
}

Comparability compare(std::span<const double> p, std::span<const double> q, double tol) {
  const auto [a, b] = sorted_padded(p, q);
  bool equal = true;
  for (std::size_t k = 0; k < a.size() && equal; ++k) equal = std::abs(a[k] - b[k]) <= tol;
  if (equal) return Comparability::Equal;
  const bool pq = majorizes(p, q, tol);
  const bool qp = majorizes(q, p, tol);
  if (pq && qp) return Comparability::Equal;
  if (pq) return Comparability::FirstMajorizes;
  if (qp) return Comparability::SecondMajorizes;
  return Comparability::Incomparable;
}

Comparability compare(const Spectrum& p, const Spectrum& q, double tol) {
  return compare(p.probs(), q.probs(), tol);
}

}  // namespace ergo
