#ifndef QGAUSS_ALGEBRA_HPP
#define QGAUSS_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgauss/scalar.hpp"

namespace qg {

/// A monomial in the generators t[i,j] is a byte string; each byte packs one
/// generator as (row << 4) | col. Byte order equals the (row, col)
/// lexicographic generator order, so standard (normal-form) monomials are
/// exactly the nondecreasing strings.
using Word = std::string;

inline char pack_gen(int row, int col) { return static_cast<char>((row << 4) | col); }
inline int gen_row(char g) { return (static_cast<unsigned char>(g) >> 4) & 15; }
inline int gen_col(char g) { return static_cast<unsigned char>(g) & 15; }
inline bool gen_upper(char g) { return gen_row(g) < gen_col(g); }
inline bool gen_diagonal(char g) { return gen_row(g) == gen_col(g); }

std::string word_to_string(const Word& w);

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& m) : std::runtime_error(m) {}
};

/// Matrix size plus the scalar kind; every algebra operation runs under one
/// of these.
struct AlgebraCtx {
  int n;
  ScalarField field;
};

struct Bidegree {
  std::vector<int> rowdeg, coldeg;
  bool operator==(const Bidegree& o) const = default;
  bool nonnegative() const;
  int total() const;
  Bidegree operator+(const Bidegree& o) const;
  Bidegree operator-(const Bidegree& o) const;
  std::string to_string() const;
};

Bidegree bidegree_of(int n, const Word& w);

/// Element of the quantum matrix algebra in normal form: standard monomials
/// with nonzero coefficients.
class NcPoly {
public:
  NcPoly() = default;

  const std::map<Word, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly scaled(const Scalar& c) const;
  bool operator==(const NcPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  std::string to_string() const;
  /// Deterministic serialization, used as a cache key.
  std::string key() const;

private:
  std::map<Word, Scalar> t_;
};

enum class RewriteMode { full, borel };
enum class RedexStrategy { leftmost, rightmost };

NcPoly nc_zero();
NcPoly nc_scalar(const AlgebraCtx& ctx, const Scalar& c);
NcPoly nc_one(const AlgebraCtx& ctx);
NcPoly nc_gen(const AlgebraCtx& ctx, int row, int col);
NcPoly nc_word(const AlgebraCtx& ctx, const Word& w);

/// Reduce an arbitrary linear combination of words to normal form with the
/// oriented quantum matrix relations. In borel mode every monomial that
/// contains a generator with row < col is dropped (computation in the Borel
/// quotient).
NcPoly normal_form(const AlgebraCtx& ctx, const std::map<Word, Scalar>& raw,
                   RewriteMode mode = RewriteMode::full,
                   RedexStrategy strategy = RedexStrategy::leftmost);

NcPoly nc_mul(const AlgebraCtx& ctx, const NcPoly& a, const NcPoly& b,
              RewriteMode mode = RewriteMode::full);

NcPoly nc_pow(const AlgebraCtx& ctx, const NcPoly& a, int k,
              RewriteMode mode = RewriteMode::full);

/// Element of the tensor square, both legs in normal form.
class TensorPoly {
public:
  const std::map<std::pair<Word, Word>, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto k = std::make_pair(l, r);
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  bool operator==(const TensorPoly& o) const { return t_ == o.t_; }
  bool operator!=(const TensorPoly& o) const { return !(*this == o); }
  std::string to_string() const;

private:
  std::map<std::pair<Word, Word>, Scalar> t_;
};

/// Matrix comultiplication extended as an algebra map.
TensorPoly comultiply(const AlgebraCtx& ctx, const NcPoly& x);
TensorPoly tensor_mul(const AlgebraCtx& ctx, const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor_of(const NcPoly& a, const NcPoly& b);
/// (epsilon x id) and (id x epsilon) contractions of a tensor.
NcPoly tensor_counit_left(const AlgebraCtx& ctx, const TensorPoly& x);
NcPoly tensor_counit_right(const AlgebraCtx& ctx, const TensorPoly& x);

Scalar counit(const AlgebraCtx& ctx, const NcPoly& x);

/// Delete every monomial containing a generator with row < col.
NcPoly borel_project(const NcPoly& x);
/// Delete monomials containing t[i,j] with i < j outside the blocks spanned
/// by the subset I of {1..n-1}.
NcPoly parabolic_project(const AlgebraCtx& ctx, const NcPoly& x, const std::set<int>& I);
/// The upper-index pairs (i, j), i < j, killed by the parabolic quotient.
std::set<std::pair<int, int>> parabolic_killed_pairs(int n, const std::set<int>& I);

bool is_homogeneous(int n, const NcPoly& x);
std::optional<Bidegree> homogeneous_bidegree(int n, const NcPoly& x);
std::vector<std::pair<Bidegree, NcPoly>> homogeneous_components(int n, const NcPoly& x);

/// All standard monomials with the given bidegree, in increasing word order.
std::vector<Word> standard_monomials(int n, const Bidegree& bd);

/// Map a symbolic polynomial into the numeric field at q = q0.
NcPoly specialize_poly(const ScalarField& numeric_field, const NcPoly& x);

struct Perm {
  std::vector<int> img;  // img[i-1] = sigma(i), values 1..n

  static Perm identity(int n);
  static Perm from_images(std::vector<int> images);
  static std::vector<Perm> all(int n);
  static Perm order_reversing(int n);

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i - 1)]; }
  int inversions() const;
  Perm inverse() const;
  bool is_identity() const;
  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }
  std::string to_string() const;
};

}  // namespace qg

#endif
