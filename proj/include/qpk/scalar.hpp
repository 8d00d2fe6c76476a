// Copyright 2026 The qpk Authors
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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace qpk {

/// Exact rational number backed by GMP. Always kept in canonical form: the denominator is
/// positive and coprime to the numerator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  /// Throws DomainError when `denominator` is zero.
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" or "n/d".
  std::string to_string() const;

 private:
  mpq_class value_;
};

/// Gaussian rational re + im*i. Every amplitude and inner product in the library is one of these.
class ComplexRational {
 public:
  ComplexRational() = default;
  template <std::integral T>
  ComplexRational(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexRational operator-() const { return {-re_, -im_}; }
  ComplexRational& operator+=(const ComplexRational& other);
  ComplexRational& operator-=(const ComplexRational& other);
  ComplexRational& operator*=(const ComplexRational& other);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

ComplexRational add(const ComplexRational& a, const ComplexRational& b);
ComplexRational mul(const ComplexRational& a, const ComplexRational& b);
ComplexRational conjugate(const ComplexRational& a);

/// Parses the scalar grammar
///   scalar := real | imag | real imag
///   real   := [sign] rat
///   imag   := sign? rat? 'i'        (sign mandatory after a real part)
///   rat    := int ('/' posint)?
/// Throws ParseError naming the offending position.
ComplexRational parse_scalar(std::string_view text);

/// Canonical text accepted by parse_scalar: "0", "-1", "3/4+1/2i", "-i", "2-2i".
std::string format_scalar(const ComplexRational& z);

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace qpk
