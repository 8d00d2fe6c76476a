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

#include "qpk/scalar.hpp"

#include <optional>
#include <sstream>

#include "qpk/errors.hpp"

namespace qpk {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw DomainError("rational division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

ComplexRational& ComplexRational::operator+=(const ComplexRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& other) {
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexRational add(const ComplexRational& a, const ComplexRational& b) { return a + b; }
ComplexRational mul(const ComplexRational& a, const ComplexRational& b) { return a * b; }
ComplexRational conjugate(const ComplexRational& a) { return {a.re(), -a.im()}; }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  ComplexRational parse() {
    if (text_.empty()) {
      fail("empty scalar");
    }
    Term first = term(/*sign_required=*/false);
    if (first.imaginary) {
      expect_end();
      return {Rational(0), first.value};
    }
    if (!first.has_digits) {
      fail("expected digit");
    }
    if (at_end()) {
      return {first.value, Rational(0)};
    }
    Term second = term(/*sign_required=*/true);
    if (!second.imaginary) {
      fail("expected 'i'");
    }
    expect_end();
    return {first.value, second.value};
  }

 private:
  struct Term {
    Rational value;
    bool has_digits = false;
    bool imaginary = false;
  };

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << what << " at position " << pos_ << " in scalar \"" << text_ << "\"";
    throw ParseError(os.str(), pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void expect_end() const {
    if (!at_end()) {
      fail("unexpected character");
    }
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected digit");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Term term(bool sign_required) {
    Term t;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    } else if (sign_required) {
      fail("expected '+' or '-'");
    }
    mpz_class numerator = 1;
    mpz_class denominator = 1;
    if (is_digit(peek())) {
      t.has_digits = true;
      numerator = digits();
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        denominator = digits();
        if (denominator == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
    }
    if (peek() == 'i') {
      t.imaginary = true;
      ++pos_;
    } else if (!t.has_digits) {
      fail("expected digit or 'i'");
    }
    t.value = Rational(sign * numerator, denominator);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_imag_magnitude(const Rational& magnitude) {
  if (magnitude == Rational(1)) {
    return "i";
  }
  return magnitude.to_string() + "i";
}

}  // namespace

ComplexRational parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const ComplexRational& z) {
  const Rational& re = z.re();
  const Rational& im = z.im();
  if (im.is_zero()) {
    return re.to_string();
  }
  std::string out;
  if (!re.is_zero()) {
    out = re.to_string();
    out += im.sign() < 0 ? '-' : '+';
  } else if (im.sign() < 0) {
    out = "-";
  }
  out += format_imag_magnitude(im.sign() < 0 ? -im : im);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
  return os << format_scalar(z);
}

}  // namespace qpk
