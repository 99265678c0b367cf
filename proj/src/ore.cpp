#include "qgauss/ore.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qg {

OreSetPtr make_ore_set(const AlgebraCtx& ctx, std::string name, std::vector<NcPoly> gens,
                       std::vector<std::string> gen_names) {
  if (gens.size() != gen_names.size()) throw OreError("generator name list mismatch");
  for (const auto& g : gens) {
    if (g.is_zero()) throw OreError("zero Ore generator");
    if (!is_homogeneous(ctx.n, g)) throw OreError("inhomogeneous Ore generator");
  }
  auto s = std::make_shared<OreSet>();
  s->name = std::move(name);
  s->gens = std::move(gens);
  s->gen_names = std::move(gen_names);
  return s;
}

OreSetPtr union_ore_set(const AlgebraCtx& ctx, const OreSetPtr& a, const OreSetPtr& b) {
  std::vector<NcPoly> gens = a->gens;
  std::vector<std::string> names = a->gen_names;
  for (size_t i = 0; i < b->gens.size(); ++i) {
    bool dup = false;
    for (const auto& g : gens)
      if (g == b->gens[i]) dup = true;
    if (!dup) {
      gens.push_back(b->gens[i]);
      names.push_back(b->gen_names[i]);
    }
  }
  return make_ore_set(ctx, a->name + "|" + b->name, std::move(gens), std::move(names));
}

int find_generator(const OreSetPtr& set, const NcPoly& g) {
  for (size_t i = 0; i < set->gens.size(); ++i)
    if (set->gens[i] == g) return static_cast<int>(i);
  throw OreError("generator not in Ore set " + set->name);
}

std::string OreFraction::to_string() const {
  if (den.empty()) return num.to_string();
  std::ostringstream os;
  os << "inv(";
  for (size_t i = 0; i < den.size(); ++i)
    os << (i ? "*" : "") << set->gen_names[static_cast<size_t>(den[i])];
  os << ")*(" << num.to_string() << ")";
  return os.str();
}

OreFraction frac_poly(const OreSetPtr& set, NcPoly p) {
  return OreFraction{set, {}, std::move(p)};
}

OreFraction frac_make(const OreSetPtr& set, std::vector<int> den, NcPoly num) {
  if (num.is_zero()) den.clear();
  return OreFraction{set, std::move(den), std::move(num)};
}

OreFraction frac_translate(const AlgebraCtx& ctx, const OreSetPtr& target, const OreFraction& x) {
  (void)ctx;
  std::vector<int> den;
  for (int i : x.den) den.push_back(find_generator(target, x.set->gens[static_cast<size_t>(i)]));
  return frac_make(target, std::move(den), x.num);
}

OreSolver::OreSolver(AlgebraCtx ctx, OreSetPtr set, int bound)
    : ctx_(std::move(ctx)), set_(std::move(set)), bound_(bound) {
  if (bound_ < 1) throw OreError("ore bound must be >= 1");
}

NcPoly OreSolver::word_poly(const std::vector<int>& word) const {
  NcPoly p = nc_one(ctx_);
  for (int i : word) p = nc_mul(ctx_, p, set_->gens[static_cast<size_t>(i)]);
  return p;
}

std::optional<OreWitness> OreSolver::solve_left(const NcPoly& r, const NcPoly& s) {
  return solve(r, s, true);
}

std::optional<OreWitness> OreSolver::solve_right(const NcPoly& r, const NcPoly& s) {
  return solve(r, s, false);
}

OreWitness OreSolver::require_left(const NcPoly& r, const NcPoly& s) {
  auto w = solve_left(r, s);
  if (!w)
    throw OreNotFound("no left Ore witness within bound " + std::to_string(bound_) +
                      " for r = " + r.to_string() + ", s = " + s.to_string());
  return *w;
}

std::optional<OreWitness> OreSolver::solve(const NcPoly& r, const NcPoly& s, bool left) {
  if (s.is_zero()) throw OreError("Ore denominator is zero");
  if (r.is_zero()) return OreWitness{nc_zero(), {}};
  auto& memo = left ? memo_left_ : memo_right_;
  std::string key = r.key() + "#" + s.key();
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  auto bs = homogeneous_bidegree(ctx_.n, s);
  if (!bs) throw OreError("Ore denominator is not homogeneous");
  auto comps = homogeneous_components(ctx_.n, r);

  const int ngens = static_cast<int>(set_->gens.size());
  std::optional<OreWitness> result;
  std::vector<int> word;
  std::function<bool()> attempt = [&]() -> bool {
    NcPoly sp = word_poly(word);
    Bidegree bsp = *homogeneous_bidegree(ctx_.n, sp);
    // Candidate monomials for the unknown, one graded block per homogeneous
    // component of r.
    std::vector<Word> cands;
    for (const auto& [bc, pc] : comps) {
      (void)pc;
      Bidegree target = bsp + bc - *bs;
      if (!target.nonnegative()) return false;
      auto ms = standard_monomials(ctx_.n, target);
      if (ms.empty()) return false;
      cands.insert(cands.end(), ms.begin(), ms.end());
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    NcPoly rhs = left ? nc_mul(ctx_, sp, r) : nc_mul(ctx_, r, sp);
    std::vector<NcPoly> cols;
    cols.reserve(cands.size());
    std::map<Word, size_t> rowindex;
    for (const auto& m : cands) {
      NcPoly mp = nc_word(ctx_, m);
      NcPoly col = left ? nc_mul(ctx_, mp, s) : nc_mul(ctx_, s, mp);
      for (const auto& [w, c] : col.terms()) {
        (void)c;
        rowindex.emplace(w, rowindex.size());
      }
      cols.push_back(std::move(col));
    }
    for (const auto& [w, c] : rhs.terms()) {
      (void)c;
      rowindex.emplace(w, rowindex.size());
    }
    std::vector<std::vector<Scalar>> A(rowindex.size(),
                                       std::vector<Scalar>(cands.size(), ctx_.field.zero()));
    std::vector<Scalar> b(rowindex.size(), ctx_.field.zero());
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [w, c] : cols[j].terms()) A[rowindex[w]][j] = c;
    for (const auto& [w, c] : rhs.terms()) b[rowindex[w]] = c;
    auto x = solve_linear(std::move(A), std::move(b), ctx_.field);
    if (!x) return false;
    NcPoly rp;
    for (size_t j = 0; j < cands.size(); ++j) rp.add_term(cands[j], (*x)[j]);
    // Independent soundness re-check of the witness.
    NcPoly lhs = left ? nc_mul(ctx_, rp, s) : nc_mul(ctx_, s, rp);
    if (lhs != rhs) throw OreError("ore witness failed re-verification");
    result = OreWitness{std::move(rp), word};
    return true;
  };

  bool found = false;
  for (int len = 0; len <= bound_ && !found; ++len) {
    word.assign(static_cast<size_t>(len), 0);
    // Lexicographic enumeration of words of this length.
    while (true) {
      if (attempt()) {
        found = true;
        break;
      }
      int pos = len - 1;
      while (pos >= 0 && word[static_cast<size_t>(pos)] == ngens - 1) {
        word[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      word[static_cast<size_t>(pos)]++;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

void OreSolver::check_set(const OreFraction& x) const {
  if (x.set != set_) throw OreError("fraction belongs to a different Ore set");
}

OreFraction OreSolver::left_of_right(const NcPoly& num, const std::vector<int>& word) {
  if (word.empty() || num.is_zero()) return frac_poly(set_, num);
  auto w = require_left(num, word_poly(word));
  return frac_make(set_, w.word, w.rprime);
}

std::pair<std::vector<int>, std::vector<NcPoly>> OreSolver::common_denominator(
    const std::vector<OreFraction>& xs) {
  std::vector<int> den;
  std::vector<NcPoly> nums;
  bool first = true;
  for (const auto& x : xs) {
    check_set(x);
    if (first) {
      den = x.den;
      nums.push_back(x.num);
      first = false;
      continue;
    }
    if (x.den == den) {
      nums.push_back(x.num);
      continue;
    }
    if (x.den.empty()) {
      // Amplify the polynomial by the current denominator.
      nums.push_back(nc_mul(ctx_, word_poly(den), x.num));
      continue;
    }
    if (den.empty()) {
      NcPoly sp = word_poly(x.den);
      for (auto& nm : nums) nm = nc_mul(ctx_, sp, nm);
      nums.push_back(x.num);
      den = x.den;
      continue;
    }
    // Find stilde in S, rtilde with stilde * den = rtilde * x.den, then
    // amplify everything by stilde and x by rtilde.
    auto w = require_left(word_poly(den), word_poly(x.den));
    NcPoly stilde = word_poly(w.word);
    for (auto& nm : nums) nm = nc_mul(ctx_, stilde, nm);
    nums.push_back(nc_mul(ctx_, w.rprime, x.num));
    std::vector<int> newden = w.word;
    newden.insert(newden.end(), den.begin(), den.end());
    den = std::move(newden);
  }
  return {den, nums};
}

OreFraction OreSolver::add(const OreFraction& x, const OreFraction& y) {
  check_set(x);
  check_set(y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den == y.den) return frac_make(set_, x.den, x.num + y.num);
  auto [den, nums] = common_denominator({x, y});
  return frac_make(set_, den, nums[0] + nums[1]);
}

OreFraction OreSolver::mul(const OreFraction& x, const OreFraction& y) {
  check_set(x);
  check_set(y);
  if (x.is_zero() || y.is_zero()) return frac_poly(set_, nc_zero());
  if (y.den.empty()) return frac_make(set_, x.den, nc_mul(ctx_, x.num, y.num));
  // s1^{-1} r1 * s2^{-1} r2 = (stilde s1)^{-1} (rtilde r2), rtilde s2 = stilde r1.
  auto w = require_left(x.num, word_poly(y.den));
  std::vector<int> den = w.word;
  den.insert(den.end(), x.den.begin(), x.den.end());
  return frac_make(set_, std::move(den), nc_mul(ctx_, w.rprime, y.num));
}

bool OreSolver::equal(const OreFraction& x, const OreFraction& y) {
  check_set(x);
  check_set(y);
  if (x.den == y.den) return x.num == y.num;
  auto [den, nums] = common_denominator({x, y});
  (void)den;
  return nums[0] == nums[1];
}

}  // namespace qg
