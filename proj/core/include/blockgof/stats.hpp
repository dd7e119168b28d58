// Copyright 2026 The blockgof Authors
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

#ifndef BLOCKGOF_STATS_HPP_
#define BLOCKGOF_STATS_HPP_

#include <span>

namespace blockgof {

// Standard normal CDF.
double normal_cdf(double x);

// Inverse standard normal CDF for p in (0, 1): rational initial guess plus
// one Halley step, absolute error below 1e-12 in the central range.
// Throws ValidationError outside (0, 1).
double normal_quantile(double p);

// z_{alpha/2}, the two-sided critical value at level alpha.
double two_sided_critical(double alpha);

double mean(std::span<const double> xs);
// Unbiased sample variance; 0 for fewer than two values.
double variance(std::span<const double> xs);

}  // namespace blockgof

#endif  // BLOCKGOF_STATS_HPP_
