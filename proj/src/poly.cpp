// SPDX-License-Identifier: Apache-2.0

#include "biortho/poly.hpp"

#include <algorithm>
#include <sstream>

namespace biortho {

Rat rat_parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' '; }), s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + text);
    q.canonicalize();
    return q;
  }
  // decimal form: sign, integer part, fractional part
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    pos = 1;
  }
  std::string ip = s.substr(pos, dot - pos);
  std::string fp = s.substr(dot + 1);
  if (ip.empty()) ip = "0";
  for (char ch : ip + fp)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw DomainError("bad rational literal: " + text);
  mpz_class num(ip + fp, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  Rat q(num, den);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

Poly Poly::monomial(int degree, const Rat& v) {
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = v;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(long k) const {
  static const Rat zero(0);
  if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
  return c_[k];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v = -v;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::shifted_up(int m) const {
  if (c_.empty()) return Poly();
  std::vector<Rat> r(c_.size() + m, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + m] = c_[i];
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::string Poly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str() << " ";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace biortho
