#include "qgauss/gauss.hpp"

#include <algorithm>
#include <sstream>

namespace qg {

namespace {

std::vector<int> tail_labels(int n, int m) {
  std::vector<int> v;
  for (int i = n - m + 1; i <= n; ++i) v.push_back(i);
  return v;
}

std::vector<int> sigma_image_sorted(const Perm& sigma, const std::vector<int>& labels) {
  std::vector<int> v;
  for (int i : labels) v.push_back(sigma(i));
  std::sort(v.begin(), v.end());
  return v;
}

int position_in(const std::vector<int>& sorted, int label) {
  auto it = std::find(sorted.begin(), sorted.end(), label);
  if (it == sorted.end()) throw AlgebraError("label not present");
  return static_cast<int>(it - sorted.begin()) + 1;
}

}  // namespace

OreSetPtr flag_ore_set(const AlgebraCtx& ctx, const Perm& sigma) {
  std::vector<NcPoly> gens;
  std::vector<std::string> names;
  for (int m = 1; m <= ctx.n; ++m) {
    auto cols = tail_labels(ctx.n, m);
    auto rows = sigma_image_sorted(sigma, cols);
    gens.push_back(qminor(ctx, MinorSpec(rows, cols)));
    names.push_back(MinorSpec(rows, cols).to_string());
  }
  return make_ore_set(ctx, "flag(" + sigma.to_string() + ")", std::move(gens), std::move(names));
}

CellChart::CellChart(AlgebraCtx ctx, Perm sigma, std::vector<int> blocks, int ore_bound)
    : ctx_(std::move(ctx)), sigma_(std::move(sigma)), blocks_(std::move(blocks)), bl_(ctx_) {
  const int n = ctx_.n;
  if (sigma_.n() != n) throw AlgebraError("permutation size mismatch");
  if (blocks_.empty()) blocks_.assign(static_cast<size_t>(n), 1);
  int total = 0;
  for (int b : blocks_) total += b;
  if (total != n) throw AlgebraError("block sizes must sum to n");
  solver_ = std::make_shared<OreSolver>(ctx_, flag_ore_set(ctx_, sigma_), ore_bound);
  coaction_ = std::make_shared<CoactionEngine>(ctx_, solver_);
  if (!coaction_->compat().ok) throw OreError(coaction_->compat().detail);

  auto zero = frac_poly(ore_set(), nc_zero());
  u_.assign(static_cast<size_t>(n), std::vector<OreFraction>(static_cast<size_t>(n), zero));
  a_.assign(static_cast<size_t>(n), std::vector<OreFraction>(static_cast<size_t>(n), zero));
  for (int i = 1; i <= n; ++i)
    u_[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = frac_poly(ore_set(), nc_one(ctx_));

  if (is_scalar_chart())
    build_scalar();
  else if (blocks_.size() == 1)
    build_trivial();
  else if (blocks_.size() == 2)
    build_two_blocks();
  else
    throw AlgebraError("block partitions with three or more blocks are only supported when all blocks have size 1");
}

bool CellChart::is_scalar_chart() const {
  for (int b : blocks_)
    if (b != 1) return false;
  return true;
}

void CellChart::build_scalar() {
  const int n = ctx_.n;
  // a^i_j = (-q)^{pos_K(sigma(i)) - 1} D^K_{(j, i+1..n)} F_{n-i}^{-1},
  // u^i_j = (-q)^{pos_Ku(sigma(i)) - pos_Kd(sigma(j))} D^{Ku}_{(j..n)} F_{n-j+1}^{-1},
  // with F_m the size-m flag minor; right fractions are converted to left
  // fractions through the Ore solver and certified by gauss_verify.
  for (int i = 1; i <= n; ++i) {
    std::vector<int> rest = tail_labels(n, n - i);  // {i+1..n}
    std::vector<int> base{i};
    base.insert(base.end(), rest.begin(), rest.end());
    auto K = sigma_image_sorted(sigma_, base);
    int pos = position_in(K, sigma_(i));
    for (int j = 1; j <= i; ++j) {
      std::vector<int> cols{j};
      cols.insert(cols.end(), rest.begin(), rest.end());
      NcPoly num = qminor(ctx_, MinorSpec(K, cols)).scaled(ctx_.field.minus_q_power(pos - 1));
      std::vector<int> den;
      if (i < n) den.push_back(n - i - 1);  // F_{n-i}
      a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = solver_->left_of_right(num, den);
    }
    // Inverse diagonal entry: (a^i_i)^{-1} = (-q)^{1 - pos} F_{n-i} F_{n-i+1}^{-1}.
    NcPoly fnum = (i < n) ? ore_set()->gens[static_cast<size_t>(n - i - 1)] : nc_one(ctx_);
    fnum = fnum.scaled(ctx_.field.minus_q_power(1 - pos));
    a_diag_inv_.push_back(solver_->left_of_right(fnum, {n - i}));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> rest = tail_labels(n, n - j);  // {j+1..n}
      std::vector<int> base{i};
      base.insert(base.end(), rest.begin(), rest.end());
      auto Ku = sigma_image_sorted(sigma_, base);
      auto Kd = sigma_image_sorted(sigma_, tail_labels(n, n - j + 1));
      int e = position_in(Ku, sigma_(i)) - position_in(Kd, sigma_(j));
      NcPoly num = qminor(ctx_, MinorSpec(Ku, tail_labels(n, n - j + 1)))
                       .scaled(ctx_.field.minus_q_power(e));
      u_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          solver_->left_of_right(num, {n - j});  // F_{n-j+1}
    }
}

void CellChart::build_trivial() {
  const int n = ctx_.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          frac_poly(ore_set(), nc_gen(ctx_, sigma_(i), j));
}

void CellChart::build_two_blocks() {
  const int n = ctx_.n;
  const int n1 = blocks_[0], n2 = blocks_[1];
  // Invert the trailing principal block of G = w_sigma^{-1} T through the
  // antipode of its row-sorted quantum submatrix.
  std::vector<int> rows_listed;
  for (int i = n1 + 1; i <= n; ++i) rows_listed.push_back(sigma_(i));
  std::vector<int> K = rows_listed;
  std::sort(K.begin(), K.end());
  std::vector<int> C = tail_labels(n, n2);
  // d^{-1}[i][j]: entry at block-local row i, column j (1-based positions).
  std::vector<std::vector<OreFraction>> dinv(
      static_cast<size_t>(n2), std::vector<OreFraction>(static_cast<size_t>(n2), frac_poly(ore_set(), nc_zero())));
  for (int i = 1; i <= n2; ++i)
    for (int j = 1; j <= n2; ++j) {
      int tau_j = position_in(K, rows_listed[static_cast<size_t>(j - 1)]);
      std::vector<int> subrows, subcols;
      for (int p = 1; p <= n2; ++p) {
        if (p != tau_j) subrows.push_back(K[static_cast<size_t>(p - 1)]);
        if (p != i) subcols.push_back(C[static_cast<size_t>(p - 1)]);
      }
      NcPoly minor = subrows.empty() ? nc_one(ctx_) : qminor(ctx_, MinorSpec(subrows, subcols));
      minor = minor.scaled(ctx_.field.minus_q_power(i - tau_j));
      dinv[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          frac_make(ore_set(), {n2 - 1}, minor);  // F_{n2}^{-1} * minor
    }
  auto G = [&](int i, int j) { return nc_gen(ctx_, sigma_(i), j); };
  // Lower block rows of A are the matching rows of G.
  for (int i = n1 + 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = frac_poly(ore_set(), G(i, j));
  // U strip: b d^{-1}.
  for (int i = 1; i <= n1; ++i)
    for (int j = n1 + 1; j <= n; ++j) {
      OreFraction acc = frac_poly(ore_set(), nc_zero());
      for (int k = 1; k <= n2; ++k)
        acc = solver_->add(acc, solver_->mul(frac_poly(ore_set(), G(i, n1 + k)),
                                             dinv[static_cast<size_t>(k - 1)][static_cast<size_t>(j - n1 - 1)]));
      u_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = acc;
    }
  // Leading block of A: the Schur complement a - b d^{-1} c.
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n1; ++j) {
      OreFraction acc = frac_poly(ore_set(), G(i, j));
      for (int k = n1 + 1; k <= n; ++k)
        acc = solver_->add(acc, solver_->scaled(
                                    solver_->mul(u_[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)],
                                                 frac_poly(ore_set(), G(k, j))),
                                    -ctx_.field.one()));
      a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = acc;
    }
}

const OreFraction& CellChart::A_diag_inv(int i) const {
  if (a_diag_inv_.empty()) throw AlgebraError("diagonal inverses exist on scalar charts only");
  return a_diag_inv_.at(static_cast<size_t>(i - 1));
}

std::vector<std::pair<int, int>> CellChart::u_positions() const {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  std::vector<int> block_of(static_cast<size_t>(ctx_.n) + 1, 0);
  for (size_t b = 0; b < blocks_.size(); ++b) {
    for (int k = 0; k < blocks_[b]; ++k) block_of[static_cast<size_t>(start + k)] = static_cast<int>(b);
    start += blocks_[b];
  }
  for (int i = 1; i <= ctx_.n; ++i)
    for (int j = i + 1; j <= ctx_.n; ++j)
      if (block_of[static_cast<size_t>(i)] != block_of[static_cast<size_t>(j)]) out.push_back({i, j});
  return out;
}

OreFraction CellChart::gamma(const NcPoly& borel_poly) const {
  if (!is_scalar_chart()) throw AlgebraError("gamma is defined on scalar charts");
  OreFraction acc = frac_poly(ore_set(), nc_zero());
  for (const auto& [w, c] : borel_poly.terms()) {
    OreFraction prod = frac_poly(ore_set(), nc_scalar(ctx_, c));
    for (char g : w) {
      if (gen_upper(g)) throw AlgebraError("gamma applies to Borel elements");
      prod = solver_->mul(prod, A(gen_row(g), gen_col(g)));
    }
    acc = solver_->add(acc, prod);
  }
  return acc;
}

OreFraction CellChart::gamma_bloc(const BLocElem& x) const {
  if (!is_scalar_chart()) throw AlgebraError("gamma is defined on scalar charts");
  OreFraction acc = frac_poly(ore_set(), nc_zero());
  for (const auto& [k, c] : x.terms()) {
    OreFraction prod = frac_poly(ore_set(), nc_scalar(ctx_, c));
    for (char g : k.lower) prod = solver_->mul(prod, A(gen_row(g), gen_col(g)));
    for (size_t i = 0; i < k.z.size(); ++i) {
      int e = k.z[i];
      const OreFraction& f = e >= 0 ? A(static_cast<int>(i) + 1, static_cast<int>(i) + 1)
                                    : A_diag_inv(static_cast<int>(i) + 1);
      for (int r = 0; r < std::abs(e); ++r) prod = solver_->mul(prod, f);
    }
    acc = solver_->add(acc, prod);
  }
  return acc;
}

OreFraction CellChart::triangle_action(const NcPoly& borel_poly, const OreFraction& x) const {
  OreFraction acc = frac_poly(ore_set(), nc_zero());
  TensorPoly d = comultiply(ctx_, borel_poly);
  for (const auto& [k, c] : d.terms()) {
    bool upper = false;
    for (char g : k.first)
      if (gen_upper(g)) upper = true;
    for (char g : k.second)
      if (gen_upper(g)) upper = true;
    if (upper) continue;
    NcPoly left;
    left.add_term(k.first, c);
    NcPoly right;
    right.add_term(k.second, ctx_.field.one());
    OreFraction term = solver_->mul(gamma(left), x);
    term = solver_->mul(term, gamma_bloc(bl_.antipode(right)));
    acc = solver_->add(acc, term);
  }
  return acc;
}

namespace {
struct ChartCacheKey {
  int n;
  std::vector<int> sigma;
  std::vector<int> blocks;
  bool symbolic;
  std::string q0;
  bool operator<(const ChartCacheKey& o) const {
    return std::tie(n, sigma, blocks, symbolic, q0) <
           std::tie(o.n, o.sigma, o.blocks, o.symbolic, o.q0);
  }
};
std::map<ChartCacheKey, ChartPtr> g_chart_cache;
}  // namespace

ChartPtr get_chart(const AlgebraCtx& ctx, const Perm& sigma, std::vector<int> blocks,
                   int ore_bound) {
  ChartCacheKey key{ctx.n, sigma.img, blocks, ctx.field.symbolic, ctx.field.q0.str()};
  auto it = g_chart_cache.find(key);
  if (it != g_chart_cache.end()) return it->second;
  auto chart = std::make_shared<const CellChart>(ctx, sigma, std::move(blocks), ore_bound);
  g_chart_cache.emplace(std::move(key), chart);
  return chart;
}

void clear_chart_cache() { g_chart_cache.clear(); }

std::vector<EntryCheck> gauss_verify(const CellChart& chart) {
  std::vector<EntryCheck> out;
  const auto& ctx = chart.ctx();
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = 1; j <= ctx.n; ++j) {
      OreFraction rhs = frac_poly(chart.ore_set(), nc_zero());
      for (int k = 1; k <= ctx.n; ++k) {
        if (chart.U(i, k).is_zero() || chart.A(k, j).is_zero()) continue;
        rhs = chart.solver().add(rhs, chart.solver().mul(chart.U(i, k), chart.A(k, j)));
      }
      OreFraction lhs = frac_poly(chart.ore_set(), nc_gen(ctx, chart.sigma()(i), j));
      EntryCheck ec{i, j, false, ""};
      ec.ok = chart.solver().equal(lhs, rhs);
      if (!ec.ok)
        ec.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                     "): lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
      out.push_back(std::move(ec));
    }
  return out;
}

std::vector<int> blocks_of_subset(int n, const std::set<int>& I) {
  std::vector<int> blocks;
  int cur = 1;
  for (int i = 1; i <= n - 1; ++i) {
    if (I.count(i)) {
      ++cur;
    } else {
      blocks.push_back(cur);
      cur = 1;
    }
  }
  blocks.push_back(cur);
  return blocks;
}

}  // namespace qg
