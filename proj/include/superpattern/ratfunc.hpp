#pragma once

// Exact arithmetic in Q(q): integer-coefficient polynomials in the formal
// field size q, and reduced fractions of them.  Everything is canonical, so
// structural equality is value equality.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superpattern/errors.hpp"

namespace superpattern {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);                       // NOLINT: implicit by design
  explicit Polynomial(BigInt c);
  static Polynomial q();
  static Polynomial q_power(int k);
  static Polynomial from_coeffs(std::vector<BigInt> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int i) const;
  const BigInt& leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned k) const;
  BigRat eval(const BigRat& q0) const;

  BigInt content() const;          // gcd of coefficients, positive; 0 for zero
  Polynomial primitive_part() const;
  // Exact division; the caller guarantees divisibility.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
  // Primitive gcd with positive leading coefficient (contents discarded).
  static Polynomial gcd_primitive(Polynomial a, Polynomial b);

  std::string str() const;           // expanded, e.g. "q^3 - 2*q + 1"
  std::string str_factored() const;  // e.g. "q^2*(q-1)*(q-2)"

 private:
  void normalize();
  std::vector<BigInt> c_;  // c_[i] is the coefficient of q^i; no trailing zeros
};

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT: implicit by design
  RationalFunction(Polynomial num);               // NOLINT: implicit by design
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction q() { return RationalFunction(Polynomial::q()); }
  static RationalFunction q_power(int k);  // k may be negative
  // (1 - 1/q) and 1/(1-q), the two factors of the character formula.
  static RationalFunction one_minus_inv_q();
  static RationalFunction inv_one_minus_q();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction pow(int k) const;
  BigRat eval(const BigRat& q0) const;  // PoleError when den(q0) = 0

  std::string str() const;  // factored canonical form, e.g. "q^2*(q-1)/(q+1)"
  std::string str_expanded() const;

 private:
  void canonicalize();
  Polynomial num_, den_;
};

}  // namespace superpattern
