#include "qgauss/borelloc.hpp"

#include <sstream>

namespace qg {

BLocElem BLocElem::operator+(const BLocElem& o) const {
  BLocElem r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

BLocElem BLocElem::operator-(const BLocElem& o) const {
  BLocElem r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, -c);
  return r;
}

BLocElem BLocElem::scaled(const Scalar& c) const {
  BLocElem r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.add_term(k, v * c);
  return r;
}

std::string BLocElem::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (char g : k.lower) os << "*b[" << gen_row(g) << "," << gen_col(g) << "]";
    for (size_t i = 0; i < k.z.size(); ++i)
      if (k.z[i] != 0) os << "*b[" << i + 1 << "," << i + 1 << "]^" << k.z[i];
  }
  return os.str();
}

BLocElem BorelLoc::one() const {
  BLocElem e;
  e.add_term(BLocKey{Word{}, std::vector<int>(static_cast<size_t>(ctx_.n), 0)}, ctx_.field.one());
  return e;
}

BLocElem BorelLoc::diagonal(std::vector<int> z, const Scalar& c) const {
  BLocElem e;
  e.add_term(BLocKey{Word{}, std::move(z)}, c);
  return e;
}

void BorelLoc::split_word(const Word& w, Word& strict, std::vector<int>& z, long& qexp) const {
  strict.clear();
  z.assign(static_cast<size_t>(ctx_.n), 0);
  qexp = 0;
  // Move each diagonal generator rightward past the strict generators that
  // follow it; b[r,r] b[k,l] = q^{[l==r]-[k==r]} b[k,l] b[r,r].
  for (size_t i = w.size(); i-- > 0;) {
    char g = w[i];
    if (gen_diagonal(g)) {
      int r = gen_row(g);
      for (char h : strict) qexp += (gen_col(h) == r ? 1 : 0) - (gen_row(h) == r ? 1 : 0);
      z[static_cast<size_t>(r - 1)] += 1;
    } else {
      strict.insert(strict.begin(), g);
    }
  }
}

BLocElem BorelLoc::from_borel(const NcPoly& x) const {
  BLocElem out;
  for (const auto& [w, c] : x.terms()) {
    for (char g : w)
      if (gen_upper(g)) throw AlgebraError("not a Borel polynomial: " + x.to_string());
    Word strict;
    std::vector<int> z;
    long e;
    split_word(w, strict, z, e);
    out.add_term(BLocKey{std::move(strict), std::move(z)}, c * ctx_.field.q_power(e));
  }
  return out;
}

BLocElem BorelLoc::gen(int i, int j) const { return from_borel(nc_gen(ctx_, i, j)); }

BLocElem BorelLoc::mul(const BLocElem& a, const BLocElem& b) const {
  BLocElem out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // Move the left diagonal part past the right strict word.
      long e = 0;
      for (char h : kb.lower)
        e += ka.z[static_cast<size_t>(gen_col(h) - 1)] - ka.z[static_cast<size_t>(gen_row(h) - 1)];
      Scalar c = ca * cb * ctx_.field.q_power(e);
      NcPoly prod = nc_mul(ctx_, nc_word(ctx_, ka.lower), nc_word(ctx_, kb.lower),
                           RewriteMode::borel);
      for (const auto& [w, cw] : prod.terms()) {
        Word strict;
        std::vector<int> z;
        long e2;
        split_word(w, strict, z, e2);
        for (size_t i = 0; i < z.size(); ++i) z[i] += ka.z[i] + kb.z[i];
        out.add_term(BLocKey{std::move(strict), std::move(z)},
                     c * cw * ctx_.field.q_power(e2));
      }
    }
  return out;
}

const BLocElem& BorelLoc::antipode_gen(int i, int j) const {
  if (i < j) throw AlgebraError("upper generator has no Borel antipode");
  auto key = std::make_pair(i, j);
  auto it = antipode_cache_.find(key);
  if (it != antipode_cache_.end()) return it->second;
  BLocElem val;
  if (i == j) {
    std::vector<int> z(static_cast<size_t>(ctx_.n), 0);
    z[static_cast<size_t>(i - 1)] = -1;
    val = diagonal(std::move(z), ctx_.field.one());
  } else {
    // 0 = sum_{j <= k <= i} S(b[i,k]) b[k,j]  =>  solve for S(b[i,j]).
    BLocElem acc;
    for (int k = j + 1; k <= i; ++k) acc = acc + mul(antipode_gen(i, k), gen(k, j));
    std::vector<int> z(static_cast<size_t>(ctx_.n), 0);
    z[static_cast<size_t>(j - 1)] = -1;
    val = mul(acc, diagonal(std::move(z), ctx_.field.one())).scaled(-ctx_.field.one());
  }
  return antipode_cache_.emplace(key, std::move(val)).first->second;
}

BLocElem BorelLoc::antipode(const NcPoly& x) const {
  BLocElem out;
  for (const auto& [w, c] : x.terms()) {
    BLocElem prod = one().scaled(c);
    for (size_t k = w.size(); k-- > 0;)
      prod = mul(prod, antipode_gen(gen_row(w[k]), gen_col(w[k])));
    out = out + prod;
  }
  return out;
}

std::optional<NcPoly> BorelLoc::to_borel_poly(const BLocElem& x) const {
  NcPoly out;
  for (const auto& [k, c] : x.terms()) {
    for (int v : k.z)
      if (v < 0) return std::nullopt;
    // Reassemble: strict word times diagonal word, then renormalize.
    Word w = k.lower;
    for (size_t i = 0; i < k.z.size(); ++i)
      for (int r = 0; r < k.z[i]; ++r) w.push_back(pack_gen(static_cast<int>(i) + 1, static_cast<int>(i) + 1));
    std::map<Word, Scalar> raw;
    raw.emplace(std::move(w), c);
    out = out + normal_form(ctx_, raw, RewriteMode::borel);
  }
  return out;
}

}  // namespace qg
