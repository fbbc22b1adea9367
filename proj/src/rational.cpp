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

#include "bigonlab/rational.hpp"

#include <cmath>
#include <string>

#include "bigonlab/error.hpp"

namespace bigonlab {

std::string ToString(const BigInt& z) { return z.get_str(); }

std::string ToString(const Rational& q) { return q.get_str(); }

Rational ParseRational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { Fail(ErrorKind::kInvalidArgument, "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  Rational q{BigInt(num), BigInt(den)};
  if (q.get_den() == 0) bad();
  q.canonicalize();
  return q;
}

BigInt Floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

double Log10(const BigInt& z) {
  if (z <= 0) Fail(ErrorKind::kInvalidArgument, "log10 of a non-positive number");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
}

double Log10(const Rational& q) {
  if (q <= 0) Fail(ErrorKind::kInvalidArgument, "log10 of a non-positive number");
  return Log10(BigInt(q.get_num())) - Log10(BigInt(q.get_den()));
}

}  // namespace bigonlab
