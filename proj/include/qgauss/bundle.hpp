#ifndef QGAUSS_BUNDLE_HPP
#define QGAUSS_BUNDLE_HPP

#include "qgauss/gauss.hpp"

namespace qg {

/// Elements of E_lambda (x) M for the fundamental left comodule: one fraction
/// per basis vector. The coaction is m_beta -> sum_alpha b[beta,alpha] (x)
/// m_alpha; the upper index of a coefficient matrix is its column index, as
/// the cocycle and kappa identities require.
using Section = std::vector<OreFraction>;

Section kappa(const CellChart& chart, const OreFraction& f, int beta);
Section kappa_bar(const CellChart& chart, const Section& g);

/// kappa_bar(kappa(f (x) m_beta)) = f (x) m_beta, checked componentwise.
bool prop1_sample(const CellChart& chart, const OreFraction& f, int beta,
                  std::string* witness = nullptr);

/// Transition matrix between two charts over the union Ore set; entries[c][r]
/// holds the entry with upper (column) index c+1 and lower (row) index r+1.
struct TransitionMatrix {
  std::shared_ptr<OreSolver> usolver;
  std::vector<std::vector<OreFraction>> entries;
};

/// Entries sum_beta gamma_to(m^beta_alpha) gamma_from(S m^gamma_beta) of the
/// chart change from `from` to `to`, over the union localization.
TransitionMatrix transition_matrix(const CellChart& to, const CellChart& from,
                                   const std::shared_ptr<OreSolver>& usolver,
                                   bool trivial_comodule = false);

TransitionMatrix transition_mul(const TransitionMatrix& a, const TransitionMatrix& b);
bool transition_is_identity(const TransitionMatrix& m, std::string* witness = nullptr);

/// Solver over S_a v S_b for cross-chart identities.
std::shared_ptr<OreSolver> union_solver(const CellChart& a, const CellChart& b, int bound = 3);

}  // namespace qg

#endif
