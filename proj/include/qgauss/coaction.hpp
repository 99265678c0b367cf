#ifndef QGAUSS_COACTION_HPP
#define QGAUSS_COACTION_HPP

#include "qgauss/borelloc.hpp"
#include "qgauss/ore.hpp"

namespace qg {

/// rho_B = (id x pi) Delta, collected by the Borel leg.
std::map<Word, NcPoly> rho_b(const AlgebraCtx& ctx, const NcPoly& x);

struct CompatGenInfo {
  bool ok = false;
  Word diag_word;           // pi of the generator's group-like Borel leg
  std::vector<int> diag_z;  // same, as diagonal exponents
  std::string detail;
};

/// Outcome of the practical compatibility criterion: each Ore generator must
/// coact as s (x) (invertible diagonal Borel monomial).
struct CompatResult {
  bool ok = false;
  std::vector<CompatGenInfo> gens;
  std::string detail;
};

CompatResult compat_check(const AlgebraCtx& ctx, const OreSetPtr& set);

/// Value of the localized coaction on a left fraction: left legs share one
/// denominator word, right legs live in the Borel algebra with inverted
/// diagonal.
struct CoactedFraction {
  OreSetPtr set;
  std::vector<int> den;
  std::map<BLocKey, NcPoly> legs;
  std::string to_string() const;
};

/// Localized coaction and coinvariance over one compatible Ore set.
class CoactionEngine {
public:
  CoactionEngine(AlgebraCtx ctx, std::shared_ptr<OreSolver> solver);

  const CompatResult& compat() const { return compat_; }
  const OreSetPtr& set() const { return solver_->set(); }
  OreSolver& solver() const { return *solver_; }
  const AlgebraCtx& ctx() const { return ctx_; }

  /// Diagonal exponents of rho_B(denominator word) = word (x) diag.
  std::vector<int> gs_z(const std::vector<int>& den) const;
  /// Same diagonal monomial as a sorted Borel word.
  Word gs_word(const std::vector<int>& den) const;

  /// rho_T(s^{-1} r) = sum s^{-1} r_(0) (x) g_s^{-1} pi(r_(1)).
  CoactedFraction coact(const OreFraction& x) const;

  /// Decides rho_T(x) = x (x) 1 through the cleared polynomial criterion
  /// sum r_(0) (x) pi(r_(1)) = r (x) g_s.
  bool coinvariant(const OreFraction& x, std::string* witness = nullptr) const;

  bool coacted_equal(const CoactedFraction& a, const CoactedFraction& b) const;

private:
  AlgebraCtx ctx_;
  std::shared_ptr<OreSolver> solver_;
  CompatResult compat_;
};

}  // namespace qg

#endif
