#ifndef QGAUSS_GAUSS_HPP
#define QGAUSS_GAUSS_HPP

#include "qgauss/coaction.hpp"

namespace qg {

/// The Ore set of a cell chart: all principal (lower right corner) quantum
/// minors of the row-permuted matrix, sizes 1..n. Generator m-1 is the
/// size-m minor.
OreSetPtr flag_ore_set(const AlgebraCtx& ctx, const Perm& sigma);

/// One cell of the noncommutative Gauss decomposition T = w_sigma U A over
/// the flag-minor localization. U is upper unitriangular and A lower
/// triangular, blockwise when a partition is given. Entries are left Ore
/// fractions; the defining identity is certified by gauss_verify, not
/// assumed.
class CellChart {
public:
  CellChart(AlgebraCtx ctx, Perm sigma, std::vector<int> blocks, int ore_bound);

  const AlgebraCtx& ctx() const { return ctx_; }
  const Perm& sigma() const { return sigma_; }
  const std::vector<int>& blocks() const { return blocks_; }
  bool is_scalar_chart() const;
  const OreSetPtr& ore_set() const { return solver_->set(); }
  OreSolver& solver() const { return *solver_; }
  CoactionEngine& coaction() const { return *coaction_; }

  const OreFraction& U(int i, int j) const { return u_.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1)); }
  const OreFraction& A(int i, int j) const { return a_.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1)); }
  /// Inverse of the diagonal entry A(i,i) as a left fraction (scalar charts).
  const OreFraction& A_diag_inv(int i) const;

  /// Strictly upper positions of U carrying chart coordinates.
  std::vector<std::pair<int, int>> u_positions() const;

  /// Section gamma_sigma: substitute b[i,j] by A(i,j) (scalar charts only).
  OreFraction gamma(const NcPoly& borel_poly) const;
  /// Extension to the Borel with inverted diagonal (antipode images).
  OreFraction gamma_bloc(const BLocElem& x) const;

  /// b |> x = sum gamma(b_(1)) x gamma(S b_(2)).
  OreFraction triangle_action(const NcPoly& borel_poly, const OreFraction& x) const;

  const BorelLoc& borel_loc() const { return bl_; }

private:
  void build_scalar();
  void build_trivial();
  void build_two_blocks();

  AlgebraCtx ctx_;
  Perm sigma_;
  std::vector<int> blocks_;
  std::shared_ptr<OreSolver> solver_;
  std::shared_ptr<CoactionEngine> coaction_;
  BorelLoc bl_;
  std::vector<std::vector<OreFraction>> u_, a_;
  std::vector<OreFraction> a_diag_inv_;
};

using ChartPtr = std::shared_ptr<const CellChart>;

/// Charts are cached per (n, sigma, blocks, scalar kind); the cache is
/// semantically transparent.
ChartPtr get_chart(const AlgebraCtx& ctx, const Perm& sigma, std::vector<int> blocks = {},
                   int ore_bound = 3);
void clear_chart_cache();

struct EntryCheck {
  int i, j;
  bool ok;
  std::string witness;
};

/// Certify the cleared entry identities of w_sigma^{-1} T = U A.
std::vector<EntryCheck> gauss_verify(const CellChart& chart);

/// Block sizes induced by a parabolic subset I of {1..n-1}.
std::vector<int> blocks_of_subset(int n, const std::set<int>& I);

}  // namespace qg

#endif
