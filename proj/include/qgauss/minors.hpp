#ifndef QGAUSS_MINORS_HPP
#define QGAUSS_MINORS_HPP

#include "qgauss/algebra.hpp"

namespace qg {

/// Quantum minor selector: strictly increasing row and column multilabels of
/// equal length.
struct MinorSpec {
  std::vector<int> rows, cols;
  MinorSpec(std::vector<int> r, std::vector<int> c);
  std::string to_string() const;
};

/// The quantum determinant as the signed permutation sum; tau permutes the
/// fixed index (rows when row_form, columns otherwise) and contributes
/// (-q)^{l(sigma)-l(tau)}.
NcPoly qdet_form(const AlgebraCtx& ctx, const std::vector<int>& rows,
                 const std::vector<int>& cols, const Perm& tau, bool row_form);

NcPoly qdet(const AlgebraCtx& ctx);
NcPoly qminor(const AlgebraCtx& ctx, const MinorSpec& spec);

/// Minor of the row sequence taken in the listed (not necessarily sorted)
/// order; equals the sorted minor via the tau-normalized determinant sum.
NcPoly qminor_rows_listed(const AlgebraCtx& ctx, const std::vector<int>& row_seq,
                          const std::vector<int>& cols_sorted);

std::vector<int> complement_labels(int n, const std::vector<int>& labels);
std::vector<std::vector<int>> subsets_of_size(int n, int m);
int label_sum(const std::vector<int>& labels);

/// One Laplace expansion variant (1..4); returns the expansion side, to be
/// compared against delta_{K,L} * D.
NcPoly laplace_expansion(const AlgebraCtx& ctx, const std::vector<int>& K,
                         const std::vector<int>& L, int variant);

/// Element of the central localization at D: value = num * D^{-dpow}.
struct GlElement {
  NcPoly num;
  int dpow = 0;

  std::string to_string() const;
};

GlElement gl_of(const NcPoly& p);
GlElement gl_mul(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b);
GlElement gl_add(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b);
GlElement gl_scaled(const GlElement& a, const Scalar& c);
/// Equality by cross-multiplication with powers of the central element D.
bool gl_equal(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b);

/// S(t[i,j]) = (-q)^{i-j} D^{hat j}_{hat i} D^{-1}.
GlElement antipode_gen(const AlgebraCtx& ctx, int i, int j);
/// Anti-multiplicative extension of the antipode.
GlElement antipode(const AlgebraCtx& ctx, const NcPoly& x);

}  // namespace qg

#endif
