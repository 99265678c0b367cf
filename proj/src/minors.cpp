#include "qgauss/minors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qg {

MinorSpec::MinorSpec(std::vector<int> r, std::vector<int> c)
    : rows(std::move(r)), cols(std::move(c)) {
  if (rows.size() != cols.size()) throw AlgebraError("minor labels of unequal length");
  auto inc = [](const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] >= v[i]) return false;
    return true;
  };
  if (!inc(rows) || !inc(cols)) throw AlgebraError("minor labels must strictly increase");
}

std::string MinorSpec::to_string() const {
  std::ostringstream os;
  os << "D[";
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << "|";
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "]";
  return os.str();
}

NcPoly qdet_form(const AlgebraCtx& ctx, const std::vector<int>& rows,
                 const std::vector<int>& cols, const Perm& tau, bool row_form) {
  const int m = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != m || tau.n() != m)
    throw AlgebraError("determinant shape mismatch");
  for (int v : rows)
    if (v < 1 || v > ctx.n) throw AlgebraError("row label out of range");
  for (int v : cols)
    if (v < 1 || v > ctx.n) throw AlgebraError("column label out of range");
  std::map<Word, Scalar> raw;
  const int ltau = tau.inversions();
  for (const Perm& sigma : Perm::all(m)) {
    Word w;
    for (int i = 1; i <= m; ++i) {
      int r = row_form ? rows[static_cast<size_t>(tau(i) - 1)] : rows[static_cast<size_t>(sigma(i) - 1)];
      int c = row_form ? cols[static_cast<size_t>(sigma(i) - 1)] : cols[static_cast<size_t>(tau(i) - 1)];
      w.push_back(pack_gen(r, c));
    }
    Scalar sign = ctx.field.minus_q_power(sigma.inversions() - ltau);
    auto it = raw.find(w);
    if (it == raw.end())
      raw.emplace(std::move(w), sign);
    else
      it->second = it->second + sign;
  }
  return normal_form(ctx, raw);
}

NcPoly qdet(const AlgebraCtx& ctx) {
  std::vector<int> all;
  for (int i = 1; i <= ctx.n; ++i) all.push_back(i);
  return qdet_form(ctx, all, all, Perm::identity(ctx.n), true);
}

NcPoly qminor(const AlgebraCtx& ctx, const MinorSpec& spec) {
  return qdet_form(ctx, spec.rows, spec.cols, Perm::identity(static_cast<int>(spec.rows.size())),
                   true);
}

NcPoly qminor_rows_listed(const AlgebraCtx& ctx, const std::vector<int>& row_seq,
                          const std::vector<int>& cols_sorted) {
  std::vector<int> sorted = row_seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> tau_img;
  for (int r : row_seq) {
    auto it = std::find(sorted.begin(), sorted.end(), r);
    tau_img.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return qdet_form(ctx, sorted, cols_sorted, Perm::from_images(tau_img), true);
}

std::vector<int> complement_labels(int n, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(labels.begin(), labels.end(), i) == labels.end()) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int label_sum(const std::vector<int>& labels) {
  int s = 0;
  for (int v : labels) s += v;
  return s;
}

NcPoly laplace_expansion(const AlgebraCtx& ctx, const std::vector<int>& K,
                         const std::vector<int>& L, int variant) {
  if (variant < 1 || variant > 4) throw AlgebraError("laplace variant must be 1..4");
  const int m = static_cast<int>(K.size());
  NcPoly acc;
  for (const auto& J : subsets_of_size(ctx.n, m)) {
    auto Jc = complement_labels(ctx.n, J);
    auto Lc = complement_labels(ctx.n, L);
    int e = label_sum(J) - label_sum(L);
    NcPoly term;
    switch (variant) {
      case 1:
        term = nc_mul(ctx, qminor(ctx, MinorSpec(K, J)), qminor(ctx, MinorSpec(Lc, Jc)));
        break;
      case 2:
        term = nc_mul(ctx, qminor(ctx, MinorSpec(J, K)), qminor(ctx, MinorSpec(Jc, Lc)));
        break;
      case 3:
        e = -e;
        term = nc_mul(ctx, qminor(ctx, MinorSpec(Lc, Jc)), qminor(ctx, MinorSpec(K, J)));
        break;
      case 4:
        e = -e;
        term = nc_mul(ctx, qminor(ctx, MinorSpec(Jc, Lc)), qminor(ctx, MinorSpec(J, K)));
        break;
    }
    acc = acc + term.scaled(ctx.field.minus_q_power(e));
  }
  return acc;
}

std::string GlElement::to_string() const {
  if (dpow == 0) return num.to_string();
  std::ostringstream os;
  os << "(" << num.to_string() << ")*D^-" << dpow;
  return os.str();
}

GlElement gl_of(const NcPoly& p) { return GlElement{p, 0}; }

GlElement gl_mul(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b) {
  return GlElement{nc_mul(ctx, a.num, b.num), a.dpow + b.dpow};
}

GlElement gl_add(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b) {
  int k = std::max(a.dpow, b.dpow);
  NcPoly D = qdet(ctx);
  NcPoly na = nc_mul(ctx, a.num, nc_pow(ctx, D, k - a.dpow));
  NcPoly nb = nc_mul(ctx, b.num, nc_pow(ctx, D, k - b.dpow));
  return GlElement{na + nb, k};
}

GlElement gl_scaled(const GlElement& a, const Scalar& c) { return GlElement{a.num.scaled(c), a.dpow}; }

bool gl_equal(const AlgebraCtx& ctx, const GlElement& a, const GlElement& b) {
  NcPoly D = qdet(ctx);
  NcPoly lhs = nc_mul(ctx, a.num, nc_pow(ctx, D, std::max(0, b.dpow - a.dpow)));
  NcPoly rhs = nc_mul(ctx, b.num, nc_pow(ctx, D, std::max(0, a.dpow - b.dpow)));
  return lhs == rhs;
}

GlElement antipode_gen(const AlgebraCtx& ctx, int i, int j) {
  auto rows = complement_labels(ctx.n, {j});
  auto cols = complement_labels(ctx.n, {i});
  NcPoly minor = rows.empty() ? nc_one(ctx) : qminor(ctx, MinorSpec(rows, cols));
  return GlElement{minor.scaled(ctx.field.minus_q_power(i - j)), 1};
}

GlElement antipode(const AlgebraCtx& ctx, const NcPoly& x) {
  GlElement acc{nc_zero(), 0};
  for (const auto& [w, c] : x.terms()) {
    GlElement prod{nc_scalar(ctx, c), 0};
    for (size_t k = w.size(); k-- > 0;)
      prod = gl_mul(ctx, prod, antipode_gen(ctx, gen_row(w[k]), gen_col(w[k])));
    acc = gl_add(ctx, acc, prod);
  }
  return acc;
}

}  // namespace qg
