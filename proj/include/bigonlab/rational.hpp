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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bigonlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Renders "num/den", or just "num" when the denominator is 1.
std::string ToString(const Rational& q);
std::string ToString(const BigInt& z);

/// Parses "p", "p/q" or "-p/q" into a canonicalized rational.
Rational ParseRational(std::string_view text);

/// Exact floor of a rational.
BigInt Floor(const Rational& q);

/// log10 of a positive rational with ~15 significant digits; used for
/// magnitudes far beyond double range.
double Log10(const Rational& q);
double Log10(const BigInt& z);

}  // namespace bigonlab
