#include "qgauss/scalar.hpp"

#include <sstream>

namespace qg {

IntPoly IntPoly::constant(BigInt v) {
  std::vector<BigInt> c;
  if (v != 0) c.push_back(std::move(v));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int k, BigInt coeff) {
  if (coeff == 0) return zero();
  std::vector<BigInt> c(static_cast<size_t>(k) + 1, BigInt(0));
  c.back() = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c(c_);
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::mul_scalar(const BigInt& k) const {
  if (k == 0) return zero();
  std::vector<BigInt> c(c_);
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return zero();
  BigInt g = content();
  if (lead() < 0) g = -g;
  std::vector<BigInt> c(c_);
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

namespace {
// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int k = a.degree() - db;
    IntPoly shift = IntPoly::monomial(k, a.lead());
    a = a.mul_scalar(b.lead()) - b * shift;
  }
  return a;
}
}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive().mul_scalar(b.content());
  if (b.is_zero()) return a.primitive().mul_scalar(a.content());
  BigInt c = boost::multiprecision::gcd(a.content(), b.content());
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = prem(x, y).primitive();
    x = y;
    y = r;
  }
  return x.mul_scalar(c);
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw ScalarError("division by zero polynomial");
  if (is_zero()) return zero();
  std::vector<BigInt> rem(c_);
  const int dd = d.degree();
  const int dq = degree() - dd;
  if (dq < 0) throw ScalarError("inexact polynomial division");
  std::vector<BigInt> q(static_cast<size_t>(dq) + 1, BigInt(0));
  for (int k = dq; k >= 0; --k) {
    BigInt top = rem[static_cast<size_t>(k + dd)];
    if (top == 0) continue;
    if (top % d.lead() != 0) throw ScalarError("inexact polynomial division");
    BigInt f = top / d.lead();
    q[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= f * d.coeff(i);
  }
  for (const auto& v : rem)
    if (v != 0) throw ScalarError("inexact polynomial division");
  return IntPoly(std::move(q));
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt v = coeff(k);
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? "-" : "+");
    }
    BigInt a = boost::multiprecision::abs(v);
    if (a != 1 || k == 0) os << a.str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ScalarError("zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly::one();
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!(g == IntPoly::one())) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFun RatFun::from_rational(const BigRat& v) {
  return RatFun(IntPoly::constant(boost::multiprecision::numerator(v)),
                IntPoly::constant(boost::multiprecision::denominator(v)));
}

RatFun RatFun::q_power(long k) {
  if (k >= 0) return RatFun(IntPoly::monomial(static_cast<int>(k)), IntPoly::one());
  return RatFun(IntPoly::one(), IntPoly::monomial(static_cast<int>(-k)));
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  // Cross-cancel before multiplying to keep intermediates small.
  IntPoly g1 = IntPoly::gcd(num_, o.den_);
  IntPoly g2 = IntPoly::gcd(o.num_, den_);
  IntPoly n1 = g1 == IntPoly::one() ? num_ : num_.divexact(g1);
  IntPoly d2 = g1 == IntPoly::one() ? o.den_ : o.den_.divexact(g1);
  IntPoly n2 = g2 == IntPoly::one() ? o.num_ : o.num_.divexact(g2);
  IntPoly d1 = g2 == IntPoly::one() ? den_ : den_.divexact(g2);
  return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw ScalarError("division by zero");
  return *this * RatFun(o.den_, o.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

BigRat RatFun::specialize(const BigRat& q0) const {
  BigRat d = den_.eval(q0);
  if (d == 0) throw ScalarError("pole at q0 = " + q0.str());
  return num_.eval(q0) / d;
}

std::string RatFun::to_string() const {
  if (den_ == IntPoly::one()) return num_.to_string();
  auto wrap = [](const std::string& s) {
    bool simple = true;
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] == '+' || s[i] == '-' || (i > 0 && s[i] == '*')) simple = false;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

const RatFun& Scalar::ratfun() const {
  if (!sym_) throw ScalarError("not a symbolic scalar");
  return f_;
}

const BigRat& Scalar::rational() const {
  if (sym_) throw ScalarError("not a numeric scalar");
  return r_;
}

namespace {
void check_same_kind(const Scalar& a, const Scalar& b) {
  if (a.is_symbolic() != b.is_symbolic()) throw ScalarError("mixed scalar kinds");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_kind(*this, o);
  return sym_ ? symbolic(f_ + o.f_) : numeric(r_ + o.r_);
}
Scalar Scalar::operator-(const Scalar& o) const {
  check_same_kind(*this, o);
  return sym_ ? symbolic(f_ - o.f_) : numeric(r_ - o.r_);
}
Scalar Scalar::operator*(const Scalar& o) const {
  check_same_kind(*this, o);
  return sym_ ? symbolic(f_ * o.f_) : numeric(r_ * o.r_);
}
Scalar Scalar::operator/(const Scalar& o) const {
  check_same_kind(*this, o);
  if (o.is_zero()) throw ScalarError("division by zero");
  return sym_ ? symbolic(f_ / o.f_) : numeric(r_ / o.r_);
}
Scalar Scalar::operator-() const { return sym_ ? symbolic(-f_) : numeric(-r_); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_kind(*this, o);
  return sym_ ? f_ == o.f_ : r_ == o.r_;
}

BigRat Scalar::specialize(const BigRat& q0) const {
  return sym_ ? f_.specialize(q0) : r_;
}

std::string Scalar::to_string() const { return sym_ ? f_.to_string() : r_.str(); }

Scalar ScalarField::integer(long v) const {
  return symbolic ? Scalar::symbolic(RatFun::integer(v)) : Scalar::numeric(BigRat(v));
}

Scalar ScalarField::rational(const BigRat& v) const {
  return symbolic ? Scalar::symbolic(RatFun::from_rational(v)) : Scalar::numeric(v);
}

Scalar ScalarField::q_power(long k) const {
  if (symbolic) return Scalar::symbolic(RatFun::q_power(k));
  BigRat acc = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) acc *= q0;
  return Scalar::numeric(k >= 0 ? acc : BigRat(1) / acc);
}

Scalar ScalarField::minus_q_power(long k) const {
  Scalar s = q_power(k);
  return (k % 2 != 0) ? -s : s;
}

Scalar ScalarField::q_minus_qinv() const { return q_power(1) - q_power(-1); }

}  // namespace qg
