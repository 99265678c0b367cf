#include "qgauss/coaction.hpp"

#include <sstream>

namespace qg {

std::map<Word, NcPoly> rho_b(const AlgebraCtx& ctx, const NcPoly& x) {
  std::map<Word, NcPoly> out;
  TensorPoly d = comultiply(ctx, x);
  for (const auto& [k, c] : d.terms()) {
    bool upper = false;
    for (char g : k.second)
      if (gen_upper(g)) upper = true;
    if (upper) continue;
    out[k.second].add_term(k.first, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

CompatResult compat_check(const AlgebraCtx& ctx, const OreSetPtr& set) {
  CompatResult res;
  res.ok = true;
  for (const auto& g : set->gens) {
    CompatGenInfo info;
    auto rb = rho_b(ctx, g);
    if (rb.size() != 1) {
      info.detail = "off-diagonal Borel legs survive: " + std::to_string(rb.size()) + " legs";
      res.ok = false;
      res.gens.push_back(std::move(info));
      continue;
    }
    const auto& [leg, left] = *rb.begin();
    bool diag = true;
    for (char h : leg)
      if (!gen_diagonal(h)) diag = false;
    if (!diag) {
      info.detail = "Borel leg not diagonal: " + word_to_string(leg);
      res.ok = false;
    } else if (!(left == g)) {
      info.detail = "left leg differs from the generator: " + left.to_string();
      res.ok = false;
    } else {
      info.ok = true;
      info.diag_word = leg;
      info.diag_z.assign(static_cast<size_t>(ctx.n), 0);
      for (char h : leg) info.diag_z[static_cast<size_t>(gen_row(h) - 1)]++;
    }
    res.gens.push_back(std::move(info));
  }
  if (!res.ok) res.detail = "Ore set " + set->name + " is not coaction compatible";
  return res;
}

std::string CoactedFraction::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (legs.empty()) return "0";
  for (const auto& [k, p] : legs) {
    if (!first) os << " + ";
    first = false;
    OreFraction f{set, den, p};
    os << "[" << f.to_string() << "] (x) [";
    bool any = false;
    for (char g : k.lower) {
      os << (any ? "*" : "") << "b[" << gen_row(g) << "," << gen_col(g) << "]";
      any = true;
    }
    for (size_t i = 0; i < k.z.size(); ++i)
      if (k.z[i] != 0) {
        os << (any ? "*" : "") << "b[" << i + 1 << "," << i + 1 << "]^" << k.z[i];
        any = true;
      }
    if (!any) os << "1";
    os << "]";
  }
  return os.str();
}

CoactionEngine::CoactionEngine(AlgebraCtx ctx, std::shared_ptr<OreSolver> solver)
    : ctx_(std::move(ctx)), solver_(std::move(solver)) {
  compat_ = compat_check(ctx_, solver_->set());
}

std::vector<int> CoactionEngine::gs_z(const std::vector<int>& den) const {
  if (!compat_.ok) throw OreError(compat_.detail);
  std::vector<int> z(static_cast<size_t>(ctx_.n), 0);
  for (int i : den) {
    const auto& gi = compat_.gens[static_cast<size_t>(i)];
    for (size_t k = 0; k < z.size(); ++k) z[k] += gi.diag_z[k];
  }
  return z;
}

Word CoactionEngine::gs_word(const std::vector<int>& den) const {
  auto z = gs_z(den);
  Word w;
  for (size_t i = 0; i < z.size(); ++i)
    for (int k = 0; k < z[i]; ++k) w.push_back(pack_gen(static_cast<int>(i) + 1, static_cast<int>(i) + 1));
  return w;
}

CoactedFraction CoactionEngine::coact(const OreFraction& x) const {
  if (x.set != solver_->set()) throw OreError("fraction over a different Ore set");
  std::vector<int> zs = gs_z(x.den);
  BorelLoc bl(ctx_);
  CoactedFraction out;
  out.set = x.set;
  out.den = x.den;
  TensorPoly d = comultiply(ctx_, x.num);
  for (const auto& [k, c] : d.terms()) {
    bool upper = false;
    for (char g : k.second)
      if (gen_upper(g)) upper = true;
    if (upper) continue;
    // Split the Borel leg into strict word and diagonal part, then divide by
    // the group-like leg of the denominator on the left.
    NcPoly leg;
    leg.add_term(k.second, ctx_.field.one());
    for (const auto& [key, cc] : bl.from_borel(leg).terms()) {
      long e = 0;
      for (char h : key.lower)
        e += -zs[static_cast<size_t>(gen_col(h) - 1)] + zs[static_cast<size_t>(gen_row(h) - 1)];
      BLocKey shifted = key;
      for (size_t i = 0; i < shifted.z.size(); ++i) shifted.z[i] -= zs[i];
      out.legs[shifted].add_term(k.first, c * cc * ctx_.field.q_power(e));
    }
  }
  for (auto it = out.legs.begin(); it != out.legs.end();)
    it = it->second.is_zero() ? out.legs.erase(it) : std::next(it);
  return out;
}

bool CoactionEngine::coinvariant(const OreFraction& x, std::string* witness) const {
  if (x.set != solver_->set()) throw OreError("fraction over a different Ore set");
  auto rb = rho_b(ctx_, x.num);
  Word gw = gs_word(x.den);
  std::map<Word, NcPoly> expected;
  if (!x.num.is_zero()) expected.emplace(gw, x.num);
  if (rb == expected) return true;
  if (witness) {
    std::ostringstream os;
    os << "rho_B(num) = {";
    for (const auto& [w, p] : rb)
      os << " [" << p.to_string() << "] (x) [" << word_to_string(w) << "]";
    os << " } expected [" << x.num.to_string() << "] (x) [" << word_to_string(gw) << "]";
    *witness = os.str();
  }
  return false;
}

bool CoactionEngine::coacted_equal(const CoactedFraction& a, const CoactedFraction& b) const {
  std::set<BLocKey> keys;
  for (const auto& [k, p] : a.legs) keys.insert(k);
  for (const auto& [k, p] : b.legs) keys.insert(k);
  for (const auto& k : keys) {
    NcPoly pa = a.legs.count(k) ? a.legs.at(k) : nc_zero();
    NcPoly pb = b.legs.count(k) ? b.legs.at(k) : nc_zero();
    OreFraction fa = frac_make(solver_->set(), a.den, pa);
    OreFraction fb = frac_make(solver_->set(), b.den, pb);
    if (!solver_->equal(fa, fb)) return false;
  }
  return true;
}

}  // namespace qg
