/*
   Copyright 2026 The fpclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fpclass/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fpclass/error.hpp"

namespace fpc {

Polynomial::Polynomial(const FieldSpec& field) : field_(field) {}

Polynomial::Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) {
    if (!(c.field() == field_)) throw UsageError("polynomial coefficient from a different field");
  }
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const FieldSpec& field) {
  return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
  coeffs[degree] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::from_ints(const FieldSpec& field, const std::vector<long long>& coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (long long c : coeffs) out.push_back(Scalar::from_int(field, c));
  return Polynomial(field, std::move(out));
}

Polynomial Polynomial::parse(const FieldSpec& field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  const auto fail = [&](std::size_t pos, const std::string& what) -> ParseError {
    return ParseError("polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) +
                      ": " + what);
  };
  const auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

  std::map<std::size_t, Scalar> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw fail(i, "expected '+' or '-'");
    }
    first = false;
    Scalar coeff = Scalar::one(field);
    bool have_coeff = false;
    if (i < s.size() && is_digit(s[i])) {
      const std::size_t start = i;
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !is_digit(s[i])) throw fail(i, "expected denominator digits");
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      try {
        coeff = Scalar::parse(field, std::string_view(s).substr(start, i - start));
      } catch (const ParseError& e) {
        throw fail(start, e.what());
      }
      have_coeff = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'x') throw fail(i, "expected 'x' after '*'");
      }
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::size_t start = i;
        while (i < s.size() && is_digit(s[i])) ++i;
        if (start == i) throw fail(i, "expected exponent digits");
        if (i - start > 6) throw fail(start, "exponent too large");
        degree = std::stoul(s.substr(start, i - start));
      }
    } else if (!have_coeff) {
      throw fail(i, "expected a coefficient or 'x'");
    }
    if (negative) coeff = -coeff;
    auto it = terms.find(degree);
    if (it == terms.end()) {
      terms.emplace(degree, coeff);
    } else {
      it->second += coeff;
    }
  }
  std::vector<Scalar> coeffs;
  if (!terms.empty()) coeffs.assign(terms.rbegin()->first + 1, Scalar::zero(field));
  for (const auto& [deg, c] : terms) coeffs[deg] = c;
  return Polynomial(field, std::move(coeffs));
}

Scalar Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw UsageError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inv() * *this;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(Scalar::from_int(field_, static_cast<long long>(i)) * coeffs_[i]);
  }
  return Polynomial(field_, std::move(out));
}

Scalar Polynomial::operator()(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Scalar& c : p.coeffs_) c = -c;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw UsageError("field mismatch in polynomial addition");
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw UsageError("field mismatch in polynomial product");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Scalar& s, const Polynomial& a) {
  std::vector<Scalar> out = a.coeffs_;
  for (Scalar& c : out) c *= s;
  return Polynomial(a.field_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string magnitude;
    if (field_.is_rationals()) {
      negative = sgn(c.rational()) < 0;
      magnitude = mpq_class(abs(c.rational())).get_str();
    } else {
      magnitude = c.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += magnitude;
      continue;
    }
    if (magnitude != "1") out += magnitude + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw UsageError("field mismatch in polynomial division");
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const FieldSpec& field = a.field();
  if (a.degree() < b.degree()) return {Polynomial(field), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar::zero(field));
  const Scalar lead_inv = b.leading().inv();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar c = rem[k + db] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return poly_exact_div(a * b, poly_gcd(a, b)).monic();
}

Polynomial poly_pow(const Polynomial& a, std::size_t e) {
  Polynomial result = Polynomial::constant(Scalar::one(a.field()));
  Polynomial base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) {
    throw InvariantViolation("expected " + b.to_string() + " to divide " + a.to_string());
  }
  return q;
}

Matrix evaluate_at_matrix(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) throw UsageError("evaluate_at_matrix: matrix is not square");
  if (!(p.field() == a.field())) throw UsageError("evaluate_at_matrix: field mismatch");
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  const Matrix id = Matrix::identity(a.field(), n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * a + (*it) * id;
  }
  return acc;
}

std::pair<std::size_t, Polynomial> coprime_split_at_zero(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("coprime_split_at_zero of the zero polynomial");
  std::size_t m = 0;
  while (p.coeffs()[m].is_zero()) ++m;
  std::vector<Scalar> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end());
  return {m, Polynomial(p.field(), std::move(rest))};
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto c = canonical_compare(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace fpc
