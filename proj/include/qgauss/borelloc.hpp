#ifndef QGAUSS_BORELLOC_HPP
#define QGAUSS_BORELLOC_HPP

#include "qgauss/algebra.hpp"

namespace qg {

/// Monomial of the Borel algebra with the diagonal generators inverted:
/// a standard word in the strictly lower generators followed by a diagonal
/// Laurent monomial. Diagonal generators q-commute with every Borel
/// generator, which makes this form canonical.
struct BLocKey {
  Word lower;          // strictly lower generators only, standard order
  std::vector<int> z;  // exponent of b[i,i] at z[i-1], any sign

  bool operator<(const BLocKey& o) const {
    if (lower != o.lower) return lower < o.lower;
    return z < o.z;
  }
  bool operator==(const BLocKey& o) const = default;
};

class BLocElem {
public:
  const std::map<BLocKey, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const BLocKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  BLocElem operator+(const BLocElem& o) const;
  BLocElem operator-(const BLocElem& o) const;
  BLocElem scaled(const Scalar& c) const;
  bool operator==(const BLocElem& o) const { return t_ == o.t_; }
  bool operator!=(const BLocElem& o) const { return !(*this == o); }
  std::string to_string() const;

private:
  std::map<BLocKey, Scalar> t_;
};

/// Arithmetic in the Borel algebra with inverted diagonal, plus the antipode
/// computed by triangular back-substitution from the antipode axiom.
class BorelLoc {
public:
  explicit BorelLoc(AlgebraCtx ctx) : ctx_(std::move(ctx)) {}

  const AlgebraCtx& ctx() const { return ctx_; }

  BLocElem zero() const { return BLocElem{}; }
  BLocElem one() const;
  BLocElem diagonal(std::vector<int> z, const Scalar& c) const;
  /// Image of a Borel polynomial (normal-form, lower-triangular words).
  BLocElem from_borel(const NcPoly& x) const;
  BLocElem gen(int i, int j) const;

  BLocElem mul(const BLocElem& a, const BLocElem& b) const;

  /// S(b[i,j]); diagonal entries invert, lower entries are solved from
  /// sum_k S(b[i,k]) b[k,j] = delta_{ij}.
  const BLocElem& antipode_gen(int i, int j) const;
  /// Anti-multiplicative extension to Borel polynomials.
  BLocElem antipode(const NcPoly& x) const;

  /// Is the element of the plain Borel algebra (no negative exponents)? If
  /// so, return it as an NcPoly.
  std::optional<NcPoly> to_borel_poly(const BLocElem& x) const;

private:
  // Rewrites a standard Borel word as q^e * (strict word) * diagonal.
  void split_word(const Word& w, Word& strict, std::vector<int>& z, long& qexp) const;

  AlgebraCtx ctx_;
  mutable std::map<std::pair<int, int>, BLocElem> antipode_cache_;
};

}  // namespace qg

#endif
