#ifndef QGAUSS_SCALAR_HPP
#define QGAUSS_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct ScalarError : std::runtime_error {
  explicit ScalarError(const std::string& m) : std::runtime_error(m) {}
};

/// Dense univariate polynomial over Z in the deformation parameter q.
/// Invariant: no trailing zero coefficients; an empty vector is the zero
/// polynomial.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly one() { return constant(1); }
  static IntPoly constant(BigInt v);
  /// coeff * q^k, k >= 0
  static IntPoly monomial(int k, BigInt coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& lead() const { return c_.back(); }
  BigInt coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : BigInt(0);
  }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly mul_scalar(const BigInt& k) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  /// Integer content (gcd of coefficients), nonnegative.
  BigInt content() const;
  /// Primitive part with positive leading coefficient.
  IntPoly primitive() const;
  /// gcd over Z[q], canonical with positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);
  /// Exact quotient; throws if the division is not exact.
  IntPoly divexact(const IntPoly& d) const;

  BigRat eval(const BigRat& x) const;

  std::string to_string() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// Element of Q(q): reduced fraction of integer polynomials.
/// Canonical form: gcd(num, den) = 1, den has positive leading coefficient,
/// zero is 0/1.
class RatFun {
public:
  RatFun() : num_(IntPoly::zero()), den_(IntPoly::one()) {}
  RatFun(IntPoly num, IntPoly den);

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return integer(1); }
  static RatFun integer(BigInt v) { return RatFun(IntPoly::constant(std::move(v)), IntPoly::one()); }
  static RatFun from_rational(const BigRat& v);
  /// q^k for any integer k; negative powers become denominators.
  static RatFun q_power(long k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == IntPoly::one() && den_ == IntPoly::one(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator-() const;

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// Exact evaluation at q = q0; throws on a pole or at q0 = 0 when a
  /// negative power is present (i.e. when the denominator vanishes).
  BigRat specialize(const BigRat& q0) const;

  std::string to_string() const;

private:
  void normalize();
  IntPoly num_, den_;
};

/// Coefficient scalar: either symbolic in Q(q) or an exact rational obtained
/// by fixing q = q0. The two kinds never mix inside one computation; every
/// scalar is produced through a ScalarField so the kind is consistent by
/// construction.
class Scalar {
public:
  Scalar() : sym_(true), f_(RatFun::zero()) {}
  static Scalar symbolic(RatFun f) {
    Scalar s;
    s.sym_ = true;
    s.f_ = std::move(f);
    return s;
  }
  static Scalar numeric(BigRat v) {
    Scalar s;
    s.sym_ = false;
    s.r_ = std::move(v);
    return s;
  }

  bool is_symbolic() const { return sym_; }
  const RatFun& ratfun() const;
  const BigRat& rational() const;

  bool is_zero() const { return sym_ ? f_.is_zero() : r_ == 0; }
  bool is_one() const { return sym_ ? f_.is_one() : r_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Specialize a symbolic scalar at q = q0 (identity on numeric scalars).
  BigRat specialize(const BigRat& q0) const;

  std::string to_string() const;

private:
  bool sym_;
  RatFun f_;
  BigRat r_;
};

/// Factory for scalars of one consistent kind.
struct ScalarField {
  bool symbolic = true;
  BigRat q0 = 0;  // only meaningful when !symbolic; must be nonzero

  static ScalarField make_symbolic() { return ScalarField{true, 0}; }
  static ScalarField make_numeric(BigRat q) {
    if (q == 0) throw ScalarError("q must be nonzero");
    return ScalarField{false, std::move(q)};
  }

  Scalar zero() const { return symbolic ? Scalar::symbolic(RatFun::zero()) : Scalar::numeric(0); }
  Scalar one() const { return integer(1); }
  Scalar integer(long v) const;
  Scalar rational(const BigRat& v) const;
  Scalar q_power(long k) const;
  /// (-q)^k for any integer k.
  Scalar minus_q_power(long k) const;
  /// q - q^{-1}
  Scalar q_minus_qinv() const;
};

}  // namespace qg

#endif
