#include "superpattern/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace superpattern {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

Polynomial::Polynomial(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

Polynomial Polynomial::q() { return q_power(1); }

Polynomial Polynomial::q_power(int k) {
  if (k < 0) throw InputError("q_power: negative exponent on a polynomial");
  Polynomial p;
  p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
  p.c_.back() = 1;
  return p;
}

Polynomial Polynomial::from_coeffs(std::vector<BigInt> coeffs) {
  Polynomial p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0] == 1; }

BigInt Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[static_cast<size_t>(i)];
}

const BigInt& Polynomial::leading() const {
  static const BigInt zero(0);
  return c_.empty() ? zero : c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  Polynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1);
  Polynomial b = *this;
  while (k > 0) {
    if (k & 1u) r = r * b;
    b = b * b;
    k >>= 1u;
  }
  return r;
}

BigRat Polynomial::eval(const BigRat& q0) const {
  BigRat v(0);
  for (size_t i = c_.size(); i-- > 0;) v = v * q0 + BigRat(c_[i]);
  return v;
}

BigInt Polynomial::content() const {
  BigInt g(0);
  for (const auto& c : c_) g = int_gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return Polynomial();
  BigInt g = content();
  Polynomial r = *this;
  for (auto& c : r.c_) c /= g;
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivideByZeroError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (a.degree() < b.degree())
    throw Error("divide_exact: degree of dividend below divisor");
  Polynomial rem = a;
  std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1,
                           BigInt(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    BigInt lead = rem.leading();
    if (lead % b.leading() != 0) throw Error("divide_exact: inexact division");
    BigInt c = lead / b.leading();
    quot[static_cast<size_t>(shift)] = c;
    // rem -= c * q^shift * b
    for (int i = 0; i <= b.degree(); ++i) {
      size_t k = static_cast<size_t>(i + shift);
      if (k >= rem.c_.size()) rem.c_.resize(k + 1, BigInt(0));
      rem.c_[k] -= c * b.c_[static_cast<size_t>(i)];
    }
    rem.normalize();
  }
  if (!rem.is_zero()) throw Error("divide_exact: nonzero remainder");
  return from_coeffs(std::move(quot));
}

namespace {

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  int d = a.degree() - b.degree();
  // Scaled so that every division step below is exact over Z.
  Polynomial rem = a * Polynomial(b.leading()).pow(static_cast<unsigned>(d + 1));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    BigInt c = rem.leading() / b.leading();
    std::vector<BigInt> sub(static_cast<size_t>(shift) + 1, BigInt(0));
    sub.back() = c;
    rem = rem - Polynomial::from_coeffs(std::move(sub)) * b;
  }
  return rem;
}

}  // namespace

Polynomial Polynomial::gcd_primitive(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    Polynomial r = a.primitive_part();
    if (r.leading() < 0) r = -r;
    return r;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_rem(a, b);
    a = b;
    b = r.is_zero() ? Polynomial() : r.primitive_part();
  }
  if (a.leading() < 0) a = -a;
  return a;
}

namespace {

std::string monomial_str(const BigInt& c, int deg, bool first) {
  std::ostringstream out;
  BigInt a = c;
  if (first) {
    if (a < 0) {
      out << "-";
      a = -a;
    }
  } else {
    out << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (deg == 0) {
    out << a.str();
  } else {
    if (a != 1) out << a.str() << "*";
    out << "q";
    if (deg > 1) out << "^" << deg;
  }
  return out.str();
}

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) == 0) continue;
    out << monomial_str(coeff(i), i, first);
    first = false;
  }
  return out.str();
}

std::string Polynomial::str_factored() const {
  if (is_zero()) return "0";
  Polynomial w = *this;
  // q^k factor.
  int qpow = 0;
  while (w.coeff(0) == 0) {
    w = divide_exact(w, Polynomial::q());
    ++qpow;
  }
  // Integer linear factors (q - r); the scalars of this theory only ever
  // produce small integer roots.
  std::vector<std::pair<long, int>> roots;  // (root, multiplicity)
  for (long r = -16; r <= 16; ++r) {
    if (r == 0) continue;
    int mult = 0;
    while (w.degree() >= 1 && w.eval(BigRat(r)) == 0) {
      Polynomial lin = from_coeffs({BigInt(-r), BigInt(1)});
      w = divide_exact(w, lin);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end());
  BigInt cont = w.content();
  if (w.leading() < 0) cont = -cont;
  Polynomial rest = from_coeffs([&] {
    std::vector<BigInt> cs;
    for (int i = 0; i <= w.degree(); ++i) cs.push_back(w.coeff(i) / cont);
    return cs;
  }());

  std::vector<std::string> parts;
  if (qpow > 0)
    parts.push_back(qpow == 1 ? "q" : "q^" + std::to_string(qpow));
  for (auto [r, mult] : roots) {
    std::string f = r > 0 ? "(q-" + std::to_string(r) + ")"
                          : "(q+" + std::to_string(-r) + ")";
    if (mult > 1) f += "^" + std::to_string(mult);
    parts.push_back(f);
  }
  if (rest.degree() >= 1) parts.push_back("(" + rest.str() + ")");

  std::string sign = cont < 0 ? "-" : "";
  BigInt mag = cont < 0 ? BigInt(-cont) : cont;
  std::string out = sign;
  bool need_star = false;
  if (mag != 1 || parts.empty()) {
    out += mag.str();
    need_star = true;
  }
  for (const auto& p : parts) {
    if (need_star) out += "*";
    out += p;
    need_star = true;
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw DivideByZeroError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd_primitive(num_, den_);
  if (g.degree() >= 1 || !g.is_one()) {
    num_ = Polynomial::divide_exact(num_, g);
    den_ = Polynomial::divide_exact(den_, g);
  }
  BigInt c = int_gcd(num_.content(), den_.content());
  if (c != 1) {
    std::vector<BigInt> nc, dc;
    for (int i = 0; i <= num_.degree(); ++i) nc.push_back(num_.coeff(i) / c);
    for (int i = 0; i <= den_.degree(); ++i) dc.push_back(den_.coeff(i) / c);
    num_ = Polynomial::from_coeffs(std::move(nc));
    den_ = Polynomial::from_coeffs(std::move(dc));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::q_power(int k) {
  if (k >= 0) return RationalFunction(Polynomial::q_power(k));
  return RationalFunction(Polynomial(1), Polynomial::q_power(-k));
}

RationalFunction RationalFunction::one_minus_inv_q() {
  return RationalFunction(Polynomial::from_coeffs({BigInt(-1), BigInt(1)}),
                          Polynomial::q());
}

RationalFunction RationalFunction::inv_one_minus_q() {
  return RationalFunction(Polynomial(1),
                          Polynomial::from_coeffs({BigInt(1), BigInt(-1)}));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivideByZeroError("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = *this + o;
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}

RationalFunction RationalFunction::pow(int k) const {
  if (k == 0) return RationalFunction(1);
  if (k < 0) return (RationalFunction(1) / *this).pow(-k);
  RationalFunction r(1);
  RationalFunction b = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

BigRat RationalFunction::eval(const BigRat& q0) const {
  BigRat d = den_.eval(q0);
  if (d == 0) throw PoleError("pole of rational function at q = " + q0.str());
  return num_.eval(q0) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str_factored();
  std::string d = den_.str_factored();
  if (d.find('*') != std::string::npos) d = "(" + d + ")";
  return num_.str_factored() + "/" + d;
}

std::string RationalFunction::str_expanded() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace superpattern
