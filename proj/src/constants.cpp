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

#include "bigonlab/constants.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>

#include "bigonlab/error.hpp"

namespace bigonlab {

namespace {

// RAII wrapper over an mpfr_t.
class Real {
 public:
  explicit Real(long precision) { mpfr_init2(value_, precision); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

void RequireOpenUnit(const Rational& q, const char* name) {
  if (!(q > 0 && q < 1)) {
    Fail(ErrorKind::kInvalidArgument,
         std::string(name) + " must lie in (0,1), got " + ToString(q));
  }
}

// Bounds [lo, hi] on ln(q) for q > 0, via log1p(q - 1) for accuracy near 1.
void LogBounds(const Rational& q, mpfr_ptr lo, mpfr_ptr hi) {
  Rational shifted = q - 1;
  mpfr_set_q(lo, shifted.get_mpq_t(), MPFR_RNDD);
  mpfr_log1p(lo, lo, MPFR_RNDD);
  mpfr_set_q(hi, shifted.get_mpq_t(), MPFR_RNDU);
  mpfr_log1p(hi, hi, MPFR_RNDU);
}

BigInt FloorOf(mpfr_ptr value) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), value, MPFR_RNDD);
  return out;
}

// base^k == x exactly, for base and x in lowest terms.
bool IsExactPower(const Rational& base, const BigInt& k, const Rational& x) {
  if (k == 0) return x == 1;
  Rational b = k > 0 ? base : Rational(1) / base;
  BigInt e = abs(k);
  if (!e.fits_ulong_p()) return false;
  unsigned long exp = e.get_ui();
  std::size_t num_bits = mpz_sizeinbase(b.get_num_mpz_t(), 2);
  std::size_t den_bits = mpz_sizeinbase(b.get_den_mpz_t(), 2);
  std::size_t x_num_bits = mpz_sizeinbase(x.get_num_mpz_t(), 2);
  std::size_t x_den_bits = mpz_sizeinbase(x.get_den_mpz_t(), 2);
  // A power of a k-bit number has at least exp*(k-1)+1 bits.
  if ((num_bits - 1) * exp + 1 > x_num_bits + 1 || (den_bits - 1) * exp + 1 > x_den_bits + 1)
    return false;
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), exp);
  return num == x.get_num() && den == x.get_den();
}

}  // namespace

BigInt NSequence(const Rational& theta, std::size_t i) {
  return NSequencePrefix(theta, i + 1).back();
}

std::vector<BigInt> NSequencePrefix(const Rational& theta, std::size_t count) {
  RequireOpenUnit(theta, "theta");
  std::vector<BigInt> out;
  BigInt current = 6;
  Rational scale = 1 / (1 - theta);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(current);
    current = 1 + Floor(Rational(2 * current + 1) * scale);
  }
  return out;
}

BigInt DeriveR(const Rational& epsilon, const Rational& a, const Rational& nu) {
  Rational margin = nu - epsilon * a;
  if (margin <= 0) {
    Fail(ErrorKind::kInvalidArgument, "need epsilon*a < nu, got epsilon*a = " +
                                          ToString(Rational(epsilon * a)) + ", nu = " + ToString(nu));
  }
  return Floor(a / margin) + 1;
}

FloorLogResult CertifiedFloorLog(const Rational& x, const Rational& base) {
  if (x <= 0) Fail(ErrorKind::kInvalidArgument, "logarithm of a non-positive number");
  if (base <= 1) Fail(ErrorKind::kInvalidArgument, "logarithm base must exceed 1");
  for (long precision = 64; precision <= (1L << 24); precision *= 2) {
    Real x_lo(precision), x_hi(precision), b_lo(precision), b_hi(precision);
    Real q_lo(precision), q_hi(precision);
    LogBounds(x, x_lo.get(), x_hi.get());
    LogBounds(base, b_lo.get(), b_hi.get());
    if (mpfr_sgn(b_lo.get()) <= 0) continue;  // base too close to 1 for this precision
    // ln(base) > 0: divide by the bound that pushes each quotient outward.
    mpfr_div(q_lo.get(), x_lo.get(), mpfr_sgn(x_lo.get()) >= 0 ? b_hi.get() : b_lo.get(), MPFR_RNDD);
    mpfr_div(q_hi.get(), x_hi.get(), mpfr_sgn(x_hi.get()) >= 0 ? b_lo.get() : b_hi.get(), MPFR_RNDU);
    BigInt lo = FloorOf(q_lo.get());
    BigInt hi = FloorOf(q_hi.get());
    if (lo == hi) return {lo, precision};
    // The interval straddles an integer; it is the answer only on an exact hit.
    if (hi == lo + 1 && IsExactPower(base, hi, x)) return {hi, precision};
  }
  Fail(ErrorKind::kRefused, "could not certify floor of logarithm");
}

std::string Log10String(const Rational& q, int digits) {
  if (q <= 0) Fail(ErrorKind::kInvalidArgument, "log10 of a non-positive number");
  long precision = 64 + static_cast<long>(std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2),
                                                   mpz_sizeinbase(q.get_den_mpz_t(), 2)) / 64);
  Real value(std::max(precision, 128L));
  mpfr_set_q(value.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_log10(value.get(), value.get(), MPFR_RNDN);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Re", digits - 1, value.get());
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

ConstantBundle Pipeline(long y, const Rational& theta, long z, const Rational& lambda,
                        const PipelineOptions& options) {
  if (y < 0) Fail(ErrorKind::kInvalidArgument, "Y must be a natural number");
  if (z < 0) Fail(ErrorKind::kInvalidArgument, "Z must be a natural number");
  RequireOpenUnit(theta, "theta");
  RequireOpenUnit(lambda, "lambda");
  ConstantBundle b;
  b.y = y;
  b.theta = theta;
  b.z = z;
  b.lambda = lambda;
  b.nu = options.nu.value_or(Rational((1 + lambda) / 2));
  if (!(b.nu > lambda && b.nu < 1)) {
    Fail(ErrorKind::kInvalidArgument, "nu must lie in (lambda, 1), got " + ToString(b.nu));
  }
  b.a_minus = b.a_plus = 2 * y + 1;
  b.a = b.a_minus + b.a_plus;
  b.epsilon = lambda / Rational(b.a);
  b.d = (2 * y + 1) * (2 * z + 1);
  b.rho = (1 - b.nu) / Rational(b.d + 1);
  b.r = DeriveR(b.epsilon, Rational(b.a), b.nu);
  b.n_sequence = NSequencePrefix(theta, static_cast<std::size_t>(b.d) + 2);
  b.n = b.n_sequence.back();
  b.mu = Rational(b.n, b.n - 1);
  b.mu.canonicalize();
  auto k = CertifiedFloorLog(Rational(2) / b.rho, b.mu);
  b.k = 1 + k.value;
  b.k_precision_bits = k.precision_bits;

  // log10 of the product branch D * N^(K+1) * (1+theta)/(1-theta).
  Rational factor = Rational(b.d) * (1 + theta) / (1 - theta);
  long precision = 128 + static_cast<long>(mpz_sizeinbase(b.k.get_mpz_t(), 2));
  Real log_product(precision), term(precision), count(precision);
  mpfr_set_z(term.get(), b.n.get_mpz_t(), MPFR_RNDN);
  mpfr_log10(term.get(), term.get(), MPFR_RNDN);
  BigInt exponent = b.k + 1;
  mpfr_set_z(count.get(), exponent.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(log_product.get(), term.get(), count.get(), MPFR_RNDN);
  mpfr_set_q(term.get(), factor.get_mpq_t(), MPFR_RNDN);
  mpfr_log10(term.get(), term.get(), MPFR_RNDN);
  mpfr_add(log_product.get(), log_product.get(), term.get(), MPFR_RNDN);

  const bool exact = mpfr_cmp_si(log_product.get(), options.exact_digit_limit) <= 0;
  if (exact) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), b.n.get_mpz_t(), exponent.get_ui());
    Rational product = Rational(power) * factor;
    b.c_from_r = Rational(b.r) > product;
    b.c = b.c_from_r ? Rational(b.r) : product;
    b.c_log10 = Log10String(*b.c);
  } else {
    // The product has more than exact_digit_limit digits, far beyond R.
    if (static_cast<long>(mpz_sizeinbase(b.r.get_mpz_t(), 10)) > options.exact_digit_limit)
      Fail(ErrorKind::kRefused, "R and C both exceed the exact digit limit");
    b.c_from_r = false;
    char* text = nullptr;
    mpfr_asprintf(&text, "%.11Re", log_product.get());
    b.c_log10 = text;
    mpfr_free_str(text);
  }
  return b;
}

}  // namespace bigonlab
