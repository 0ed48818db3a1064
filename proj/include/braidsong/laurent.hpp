#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace braidsong {

// Laurent polynomial with integer coefficients over half-integer exponents.
// Exponents are stored doubled (term key k means x^(k/2)), so all arithmetic
// stays in exact integers. Zero coefficients are never stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;  // zero

  static LaurentPolynomial constant(std::int64_t c);
  // coeff * x^(half_exponent/2)
  static LaurentPolynomial monomial(std::int64_t coeff, int half_exponent);
  static LaurentPolynomial from_terms(std::map<int, std::int64_t> terms);

  void add_term(int half_exponent, std::int64_t coeff);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial pow(unsigned n) const;

  // x -> 1/x (negates every exponent).
  LaurentPolynomial invert_variable() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  // Ascending exponent order with explicit signs, e.g.
  // "t^-2 - t^-1 + 1 - t + t^2"; half-integer exponents render as t^(1/2).
  std::string str(const std::string& var = "t") const;

  bool operator==(const LaurentPolynomial&) const = default;

private:
  std::map<int, std::int64_t> terms_;  // half-exponent -> nonzero coefficient
};

}  // namespace braidsong
