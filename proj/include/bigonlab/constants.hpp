// Copyright 2026 The bigonlab Authors
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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bigonlab/rational.hpp"

namespace bigonlab {

/// n_0 = 6, n_{i+1} = 1 + floor((2 n_i + 1) / (1 - theta)).
BigInt NSequence(const Rational& theta, std::size_t i);
/// n_0 .. n_count-1.
std::vector<BigInt> NSequencePrefix(const Rational& theta, std::size_t count);

/// Smallest R with epsilon*a*l + a < nu*l for all l >= R.
BigInt DeriveR(const Rational& epsilon, const Rational& a, const Rational& nu);

struct FloorLogResult {
  BigInt value;
  long precision_bits = 0;  // working precision that certified the floor
};

/// floor(log_base(x)) for x > 0 and base > 1, certified with outward-rounded
/// interval arithmetic; precision doubles until the floor is determined.
FloorLogResult CertifiedFloorLog(const Rational& x, const Rational& base);

/// Decimal rendering of log10 of a positive rational with `digits`
/// significant digits.
std::string Log10String(const Rational& q, int digits = 12);

struct ConstantBundle {
  long y = 0;
  Rational theta;
  long z = 0;
  Rational lambda;
  Rational nu;
  Rational epsilon;
  long a_minus = 0;
  long a_plus = 0;
  long a = 0;
  long d = 0;
  Rational rho;
  BigInt r;
  std::vector<BigInt> n_sequence;  // n_0 .. n_{D+1}
  BigInt n;
  Rational mu;
  BigInt k;
  long k_precision_bits = 0;
  /// Exact C when its size stays within the digit limit.
  std::optional<Rational> c;
  std::string c_log10;
  bool c_from_r = false;  // which branch of the max attains C
};

struct PipelineOptions {
  std::optional<Rational> nu;  // default (1 + lambda) / 2
  /// Largest decimal size of C that is materialized exactly.
  long exact_digit_limit = 100'000;
};

ConstantBundle Pipeline(long y, const Rational& theta, long z, const Rational& lambda,
                        const PipelineOptions& options = {});

}  // namespace bigonlab
