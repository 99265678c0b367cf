#ifndef QGAUSS_ORE_HPP
#define QGAUSS_ORE_HPP

#include <map>
#include <memory>
#include <optional>

#include "qgauss/linsolve.hpp"
#include "qgauss/minors.hpp"

namespace qg {

struct OreError : std::runtime_error {
  explicit OreError(const std::string& m) : std::runtime_error(m) {}
};

/// Ore-condition witness not found within the word-length bound. Reported as
/// inconclusive by the suites, never as a refutation.
struct OreNotFound : OreError {
  explicit OreNotFound(const std::string& m) : OreError(m) {}
};

/// Multiplicative set given by a list of nonzero homogeneous generators;
/// 1 is the empty word.
struct OreSet {
  std::string name;
  std::vector<NcPoly> gens;
  std::vector<std::string> gen_names;
};

using OreSetPtr = std::shared_ptr<const OreSet>;

OreSetPtr make_ore_set(const AlgebraCtx& ctx, std::string name, std::vector<NcPoly> gens,
                       std::vector<std::string> gen_names);
/// Union set S v T, multiplicatively generated by both generator lists
/// (duplicates removed).
OreSetPtr union_ore_set(const AlgebraCtx& ctx, const OreSetPtr& a, const OreSetPtr& b);
/// Index of an equal generator in the target set; throws if absent.
int find_generator(const OreSetPtr& set, const NcPoly& g);

/// Left fraction s^{-1} r. The denominator is a word of generator indices,
/// read left to right as a product; the empty word is an honest polynomial.
/// Representations are not canonical; equality is semantic.
struct OreFraction {
  OreSetPtr set;
  std::vector<int> den;
  NcPoly num;

  bool is_polynomial() const { return den.empty(); }
  bool is_zero() const { return num.is_zero(); }
  std::string to_string() const;
};

OreFraction frac_poly(const OreSetPtr& set, NcPoly p);
OreFraction frac_make(const OreSetPtr& set, std::vector<int> den, NcPoly num);
/// Re-express a fraction over a set whose generator list contains every
/// generator of the original set.
OreFraction frac_translate(const AlgebraCtx& ctx, const OreSetPtr& target, const OreFraction& x);

struct OreWitness {
  NcPoly rprime;
  std::vector<int> word;
};

/// Exact bounded-degree solver for the left and right Ore conditions:
/// candidate denominator words are searched in increasing length (ties by
/// lexicographic word order); for each word the unknown element is the
/// general member of the forced graded pieces and the condition becomes an
/// exact linear system over the scalar field. Every witness is re-verified by
/// normal-form multiplication before being returned. Solved pairs are
/// memoized; the cache is transparent.
class OreSolver {
public:
  OreSolver(AlgebraCtx ctx, OreSetPtr set, int bound = 3);

  const OreSetPtr& set() const { return set_; }
  const AlgebraCtx& ctx() const { return ctx_; }
  int bound() const { return bound_; }

  NcPoly word_poly(const std::vector<int>& word) const;

  /// Left Ore condition: find (r', s') with r' s = s' r.
  std::optional<OreWitness> solve_left(const NcPoly& r, const NcPoly& s);
  /// Right Ore condition: find (r', s') with s r' = r s'.
  std::optional<OreWitness> solve_right(const NcPoly& r, const NcPoly& s);

  /// Same, throwing OreNotFound instead of returning nullopt.
  OreWitness require_left(const NcPoly& r, const NcPoly& s);

  /// Convert a right fraction num * word^{-1} into a left fraction.
  OreFraction left_of_right(const NcPoly& num, const std::vector<int>& word);

  /// Bring fractions to one common left denominator word; returns the word
  /// and matching numerators.
  std::pair<std::vector<int>, std::vector<NcPoly>> common_denominator(
      const std::vector<OreFraction>& xs);

  OreFraction add(const OreFraction& x, const OreFraction& y);
  OreFraction mul(const OreFraction& x, const OreFraction& y);
  OreFraction scaled(const OreFraction& x, const Scalar& c) {
    return frac_make(x.set, x.den, x.num.scaled(c));
  }
  bool equal(const OreFraction& x, const OreFraction& y);

private:
  std::optional<OreWitness> solve(const NcPoly& r, const NcPoly& s, bool left);
  void check_set(const OreFraction& x) const;

  AlgebraCtx ctx_;
  OreSetPtr set_;
  int bound_;
  std::map<std::string, std::optional<OreWitness>> memo_left_, memo_right_;
};

}  // namespace qg

#endif
