#include "qgauss/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qg {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << "t[" << gen_row(w[i]) << "," << gen_col(w[i]) << "]";
  }
  return os.str();
}

bool Bidegree::nonnegative() const {
  for (int v : rowdeg)
    if (v < 0) return false;
  for (int v : coldeg)
    if (v < 0) return false;
  return true;
}

int Bidegree::total() const {
  int s = 0;
  for (int v : rowdeg) s += v;
  return s;
}

Bidegree Bidegree::operator+(const Bidegree& o) const {
  Bidegree r = *this;
  for (size_t i = 0; i < r.rowdeg.size(); ++i) r.rowdeg[i] += o.rowdeg[i];
  for (size_t i = 0; i < r.coldeg.size(); ++i) r.coldeg[i] += o.coldeg[i];
  return r;
}

Bidegree Bidegree::operator-(const Bidegree& o) const {
  Bidegree r = *this;
  for (size_t i = 0; i < r.rowdeg.size(); ++i) r.rowdeg[i] -= o.rowdeg[i];
  for (size_t i = 0; i < r.coldeg.size(); ++i) r.coldeg[i] -= o.coldeg[i];
  return r;
}

std::string Bidegree::to_string() const {
  std::ostringstream os;
  os << "rows(";
  for (size_t i = 0; i < rowdeg.size(); ++i) os << (i ? "," : "") << rowdeg[i];
  os << ") cols(";
  for (size_t i = 0; i < coldeg.size(); ++i) os << (i ? "," : "") << coldeg[i];
  os << ")";
  return os.str();
}

Bidegree bidegree_of(int n, const Word& w) {
  Bidegree bd;
  bd.rowdeg.assign(static_cast<size_t>(n), 0);
  bd.coldeg.assign(static_cast<size_t>(n), 0);
  for (char g : w) {
    bd.rowdeg[static_cast<size_t>(gen_row(g) - 1)]++;
    bd.coldeg[static_cast<size_t>(gen_col(g) - 1)]++;
  }
  return bd;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  for (const auto& [w, c] : o.t_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  for (const auto& [w, c] : o.t_) r.add_term(w, -c);
  return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) r.add_term(w, v * c);
  return r;
}

namespace {
std::string coeff_mono(const Scalar& c, const std::string& mono) {
  std::string cs = c.to_string();
  bool simple = cs.find_first_of("+/") == std::string::npos &&
                cs.find('-', 1) == std::string::npos && cs.find('(') == std::string::npos;
  if (mono == "1") return simple ? cs : "(" + cs + ")";
  if (cs == "1") return mono;
  if (cs == "-1") return "-" + mono;
  if (simple) return cs + "*" + mono;
  return "(" + cs + ")*" + mono;
}
}  // namespace

std::string NcPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    std::string piece = coeff_mono(c, word_to_string(w));
    if (first) {
      os << piece;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
    first = false;
  }
  return os.str();
}

std::string NcPoly::key() const {
  std::ostringstream os;
  for (const auto& [w, c] : t_) os << w << '=' << c.to_string() << ';';
  return os.str();
}

NcPoly nc_zero() { return NcPoly{}; }

NcPoly nc_scalar(const AlgebraCtx& ctx, const Scalar& c) {
  (void)ctx;
  NcPoly p;
  p.add_term(Word{}, c);
  return p;
}

NcPoly nc_one(const AlgebraCtx& ctx) { return nc_scalar(ctx, ctx.field.one()); }

NcPoly nc_gen(const AlgebraCtx& ctx, int row, int col) {
  if (row < 1 || row > ctx.n || col < 1 || col > ctx.n)
    throw AlgebraError("generator index out of range");
  NcPoly p;
  p.add_term(Word(1, pack_gen(row, col)), ctx.field.one());
  return p;
}

NcPoly nc_word(const AlgebraCtx& ctx, const Word& w) {
  std::map<Word, Scalar> raw;
  raw.emplace(w, ctx.field.one());
  return normal_form(ctx, raw);
}

namespace {

inline bool word_has_upper(const Word& w) {
  for (char g : w)
    if (gen_upper(g)) return true;
  return false;
}

// Rewrites the adjacent out-of-order pair at position i. Every output word is
// strictly smaller than the input in positionwise lexicographic order, which
// makes the reduction terminate under any redex choice.
struct RuleOut {
  Word w;
  Scalar c;
};

void apply_rule(const AlgebraCtx& ctx, const Word& w, size_t i, std::vector<RuleOut>& out) {
  const char x = w[i], y = w[i + 1];
  const int a = gen_row(x), b = gen_col(x), c = gen_row(y), d = gen_col(y);
  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  if (a == c || b == d) {
    out.push_back({std::move(swapped), ctx.field.q_power(-1)});
    return;
  }
  // a > c here, distinct rows and columns
  out.push_back({std::move(swapped), ctx.field.one()});
  if (b > d) {
    Word corr = w;
    corr[i] = pack_gen(c, b);
    corr[i + 1] = pack_gen(a, d);
    out.push_back({std::move(corr), -ctx.field.q_minus_qinv()});
  }
}

std::optional<size_t> find_redex(const Word& w, RedexStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RedexStrategy::leftmost) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (static_cast<unsigned char>(w[i]) > static_cast<unsigned char>(w[i + 1])) return i;
  } else {
    for (size_t i = w.size() - 1; i-- > 0;)
      if (static_cast<unsigned char>(w[i]) > static_cast<unsigned char>(w[i + 1])) return i;
  }
  return std::nullopt;
}

}  // namespace

NcPoly normal_form(const AlgebraCtx& ctx, const std::map<Word, Scalar>& raw, RewriteMode mode,
                   RedexStrategy strategy) {
  std::map<Word, Scalar> pending;
  auto push = [&](const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (mode == RewriteMode::borel && word_has_upper(w)) return;
    auto it = pending.find(w);
    if (it == pending.end()) {
      pending.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, c] : raw) push(w, c);

  NcPoly result;
  std::vector<RuleOut> outs;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    auto redex = find_redex(w, strategy);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    outs.clear();
    apply_rule(ctx, w, *redex, outs);
    for (auto& o : outs) push(o.w, c * o.c);
  }
  return result;
}

NcPoly nc_mul(const AlgebraCtx& ctx, const NcPoly& a, const NcPoly& b, RewriteMode mode) {
  std::map<Word, Scalar> raw;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      Word w = wa + wb;
      auto it = raw.find(w);
      if (it == raw.end()) {
        raw.emplace(std::move(w), c);
      } else {
        it->second = it->second + c;
      }
    }
  return normal_form(ctx, raw, mode);
}

NcPoly nc_pow(const AlgebraCtx& ctx, const NcPoly& a, int k, RewriteMode mode) {
  if (k < 0) throw AlgebraError("negative power of a polynomial");
  NcPoly r = nc_one(ctx);
  for (int i = 0; i < k; ++i) r = nc_mul(ctx, r, a, mode);
  return r;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
  return r;
}

std::string TensorPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    os << coeff_mono(c, word_to_string(k.first) + " (x) " + word_to_string(k.second));
    first = false;
  }
  return os.str();
}

TensorPoly comultiply(const AlgebraCtx& ctx, const NcPoly& x) {
  TensorPoly out;
  for (const auto& [w, c] : x.terms()) {
    // Delta(t[r,s]) = sum_k t[r,k] (x) t[k,s], extended multiplicatively.
    std::map<std::pair<Word, Word>, Scalar> partial;
    partial.emplace(std::make_pair(Word{}, Word{}), c);
    for (char g : w) {
      const int r = gen_row(g), s = gen_col(g);
      std::map<std::pair<Word, Word>, Scalar> next;
      for (const auto& [lr, cc] : partial)
        for (int k = 1; k <= ctx.n; ++k) {
          auto key = std::make_pair(lr.first + pack_gen(r, k), lr.second + pack_gen(k, s));
          auto it = next.find(key);
          if (it == next.end())
            next.emplace(std::move(key), cc);
          else
            it->second = it->second + cc;
        }
      partial = std::move(next);
    }
    // Both legs to normal form, bilinearly.
    for (const auto& [lr, cc] : partial) {
      std::map<Word, Scalar> rawl, rawr;
      rawl.emplace(lr.first, cc);
      rawr.emplace(lr.second, ctx.field.one());
      NcPoly L = normal_form(ctx, rawl);
      NcPoly R = normal_form(ctx, rawr);
      for (const auto& [wl, cl] : L.terms())
        for (const auto& [wr, cr] : R.terms()) out.add_term(wl, wr, cl * cr);
    }
  }
  return out;
}

TensorPoly tensor_mul(const AlgebraCtx& ctx, const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      NcPoly L = nc_mul(ctx, nc_word(ctx, ka.first), nc_word(ctx, kb.first));
      NcPoly R = nc_mul(ctx, nc_word(ctx, ka.second), nc_word(ctx, kb.second));
      Scalar c = ca * cb;
      for (const auto& [wl, cl] : L.terms())
        for (const auto& [wr, cr] : R.terms()) out.add_term(wl, wr, c * cl * cr);
    }
  return out;
}

TensorPoly tensor_of(const NcPoly& a, const NcPoly& b) {
  TensorPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
  return out;
}

namespace {
bool word_all_diagonal(const Word& w) {
  for (char g : w)
    if (!gen_diagonal(g)) return false;
  return true;
}
}  // namespace

NcPoly tensor_counit_left(const AlgebraCtx& ctx, const TensorPoly& x) {
  (void)ctx;
  NcPoly out;
  for (const auto& [k, c] : x.terms())
    if (word_all_diagonal(k.first)) out.add_term(k.second, c);
  return out;
}

NcPoly tensor_counit_right(const AlgebraCtx& ctx, const TensorPoly& x) {
  (void)ctx;
  NcPoly out;
  for (const auto& [k, c] : x.terms())
    if (word_all_diagonal(k.second)) out.add_term(k.first, c);
  return out;
}

Scalar counit(const AlgebraCtx& ctx, const NcPoly& x) {
  Scalar s = ctx.field.zero();
  for (const auto& [w, c] : x.terms())
    if (word_all_diagonal(w)) s = s + c;
  return s;
}

NcPoly borel_project(const NcPoly& x) {
  NcPoly out;
  for (const auto& [w, c] : x.terms())
    if (!word_has_upper(w)) out.add_term(w, c);
  return out;
}

std::set<std::pair<int, int>> parabolic_killed_pairs(int n, const std::set<int>& I) {
  // Connected components of I, each widened by one.
  std::vector<std::set<int>> blocks;
  std::set<int> cur;
  for (int i = 1; i <= n - 1; ++i) {
    if (I.count(i)) {
      cur.insert(i);
      cur.insert(i + 1);
    } else if (!cur.empty()) {
      blocks.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) blocks.push_back(cur);
  std::set<std::pair<int, int>> killed;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool kept = false;
      for (const auto& b : blocks)
        if (b.count(i) && b.count(j)) kept = true;
      if (!kept) killed.insert({i, j});
    }
  return killed;
}

NcPoly parabolic_project(const AlgebraCtx& ctx, const NcPoly& x, const std::set<int>& I) {
  auto killed = parabolic_killed_pairs(ctx.n, I);
  NcPoly out;
  for (const auto& [w, c] : x.terms()) {
    bool dies = false;
    for (char g : w)
      if (killed.count({gen_row(g), gen_col(g)})) dies = true;
    if (!dies) out.add_term(w, c);
  }
  return out;
}

bool is_homogeneous(int n, const NcPoly& x) { return homogeneous_bidegree(n, x).has_value(); }

std::optional<Bidegree> homogeneous_bidegree(int n, const NcPoly& x) {
  std::optional<Bidegree> bd;
  for (const auto& [w, c] : x.terms()) {
    (void)c;
    Bidegree b = bidegree_of(n, w);
    if (!bd)
      bd = b;
    else if (!(*bd == b))
      return std::nullopt;
  }
  if (!bd) bd = bidegree_of(n, Word{});
  return bd;
}

std::vector<std::pair<Bidegree, NcPoly>> homogeneous_components(int n, const NcPoly& x) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, NcPoly> comp;
  for (const auto& [w, c] : x.terms()) {
    Bidegree b = bidegree_of(n, w);
    comp[{b.rowdeg, b.coldeg}].add_term(w, c);
  }
  std::vector<std::pair<Bidegree, NcPoly>> out;
  for (auto& [k, p] : comp) out.push_back({Bidegree{k.first, k.second}, std::move(p)});
  return out;
}

namespace {
void enumerate_tables(int n, int i, std::vector<int>& rowleft, std::vector<int>& colleft,
                      std::vector<std::vector<int>>& table, std::vector<Word>& out) {
  if (i == n) {
    Word w;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < table[static_cast<size_t>(r)][static_cast<size_t>(c)]; ++k)
          w.push_back(pack_gen(r + 1, c + 1));
    out.push_back(std::move(w));
    return;
  }
  // Distribute rowleft[i] into columns, bounded by colleft.
  std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == n) {
      if (remaining == 0) enumerate_tables(n, i + 1, rowleft, colleft, table, out);
      return;
    }
    int cap = std::min(remaining, colleft[static_cast<size_t>(j)]);
    for (int v = 0; v <= cap; ++v) {
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      colleft[static_cast<size_t>(j)] -= v;
      rec(j + 1, remaining - v);
      colleft[static_cast<size_t>(j)] += v;
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    }
  };
  rec(0, rowleft[static_cast<size_t>(i)]);
}
}  // namespace

std::vector<Word> standard_monomials(int n, const Bidegree& bd) {
  std::vector<Word> out;
  if (!bd.nonnegative()) return out;
  int rs = 0, cs = 0;
  for (int v : bd.rowdeg) rs += v;
  for (int v : bd.coldeg) cs += v;
  if (rs != cs) return out;
  std::vector<int> rowleft = bd.rowdeg, colleft = bd.coldeg;
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  enumerate_tables(n, 0, rowleft, colleft, table, out);
  std::sort(out.begin(), out.end());
  return out;
}

NcPoly specialize_poly(const ScalarField& numeric_field, const NcPoly& x) {
  NcPoly out;
  for (const auto& [w, c] : x.terms())
    out.add_term(w, numeric_field.rational(c.specialize(numeric_field.q0)));
  return out;
}

Perm Perm::identity(int n) {
  Perm p;
  for (int i = 1; i <= n; ++i) p.img.push_back(i);
  return p;
}

Perm Perm::from_images(std::vector<int> images) {
  Perm p;
  p.img = std::move(images);
  std::vector<bool> seen(p.img.size() + 1, false);
  for (int v : p.img) {
    if (v < 1 || v > static_cast<int>(p.img.size()) || seen[static_cast<size_t>(v)])
      throw AlgebraError("not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
  return p;
}

std::vector<Perm> Perm::all(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm Perm::order_reversing(int n) {
  Perm p;
  for (int i = n; i >= 1; --i) p.img.push_back(i);
  return p;
}

int Perm::inversions() const {
  int c = 0;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++c;
  return c;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.assign(img.size(), 0);
  for (size_t i = 0; i < img.size(); ++i) p.img[static_cast<size_t>(img[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < img.size(); ++i) os << (i ? "," : "") << img[i];
  return os.str();
}

}  // namespace qg
