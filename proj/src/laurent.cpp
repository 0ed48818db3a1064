#include "braidsong/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace braidsong {

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c) {
  return monomial(c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff,
                                              int half_exponent) {
  LaurentPolynomial p;
  p.add_term(half_exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(
    std::map<int, std::int64_t> terms) {
  LaurentPolynomial p;
  for (const auto& [exp, coeff] : terms) p.add_term(exp, coeff);
  return p;
}

void LaurentPolynomial::add_term(int half_exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(half_exponent);
  if (it == terms_.end()) {
    terms_.emplace(half_exponent, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(
    const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [exp, coeff] : o.terms_) out.add_term(exp, coeff);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(
    const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [exp, coeff] : o.terms_) out.add_term(exp, -coeff);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(
    const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [exp, coeff] : terms_) out.add_term(exp, -coeff);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial out = constant(1);
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial out;
  for (const auto& [exp, coeff] : terms_) out.add_term(-exp, coeff);
  return out;
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.count(0) == 1 && terms_.at(0) == 1;
}

namespace {

std::string exponent_str(const std::string& var, int half_exponent) {
  if (half_exponent == 0) return "";
  if (half_exponent == 2) return var;
  std::ostringstream out;
  if (half_exponent % 2 == 0) {
    out << var << "^" << half_exponent / 2;
  } else {
    out << var << "^(" << half_exponent << "/2)";
  }
  return out.str();
}

}  // namespace

std::string LaurentPolynomial::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coeff] : terms_) {
    const bool negative = coeff < 0;
    const std::int64_t mag = std::abs(coeff);
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string var_part = exponent_str(var, exp);
    if (var_part.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << var_part;
    }
  }
  return out.str();
}

}  // namespace braidsong
