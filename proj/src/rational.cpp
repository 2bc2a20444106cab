// Copyright 2026 The Periodica Authors
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

#include "periodica/rational.hpp"

#include <cctype>

#include "periodica/errors.hpp"

namespace periodica {
namespace {

[[noreturn]] void BadLiteral(std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument, "core",
              "not a rational literal: '" + std::string(text) + "'");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class PowerOfTen(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "core", "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorCode::kDivisionByZero, "core", "zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) BadLiteral(text);

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadLiteral(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::kDivisionByZero, "core", "zero denominator in '" + std::string(text) + "'");
    out = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!AllDigits(exp) || exp.size() > 6) BadLiteral(text);
      exponent = std::stol(std::string(exp));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
      if (!frac_part.empty() && !AllDigits(frac_part)) BadLiteral(text);
    }
    if (int_part.empty() && frac_part.empty()) BadLiteral(text);
    if (!int_part.empty() && !AllDigits(int_part)) BadLiteral(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      out = mpq_class(num * PowerOfTen(static_cast<unsigned long>(exponent)));
    } else {
      out = mpq_class(num, PowerOfTen(static_cast<unsigned long>(-exponent)));
    }
  }
  out.canonicalize();
  if (negative) out = -out;
  return Rational(out);
}

std::string Rational::ToString() const {
  return NumeratorString() + "/" + DenominatorString();
}

std::string Rational::ToDisplay() const {
  return is_integer() ? NumeratorString() : ToString();
}

std::string Rational::NumeratorString() const { return value_.get_num().get_str(); }
std::string Rational::DenominatorString() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (other.is_zero()) throw Error(ErrorCode::kDivisionByZero, "core", "division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.ToDisplay(); }

}  // namespace periodica
