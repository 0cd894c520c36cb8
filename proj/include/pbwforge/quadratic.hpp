#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pbwforge/group.hpp"
#include "pbwforge/scalars.hpp"

namespace pbwforge {

/// Free word in V-letters and group letters. A letter l < dim names v_{l+1};
/// a letter l >= dim names the group element with index l - dim. Identity
/// group letters are never stored.
using Word = std::vector<std::int32_t>;
using FreeElement = std::map<Word, Scalar>;

void fe_add(FreeElement& e, const Word& w, const Scalar& c);
void fe_add_all(FreeElement& e, const FreeElement& o, const Scalar& c);
FreeElement fe_concat(const FreeElement& a, const FreeElement& b);

/// One oriented quadratic rule: v_{lead_a} v_{lead_b} -> tail, with the tail a
/// vector in V (x) V supported on non-leading monomials.
struct RewriteRule {
  int lead_a = 0;
  int lead_b = 0;
  Vec tail;
};

/// Quadratic algebra S = T(V)/(R) given by a relation basis together with a
/// confluent quadratic rewriting system for it.
struct QuadraticPresentation {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;
  std::vector<Vec> relation_basis;  // vectors of length dim^2, index i*dim+j
  std::vector<RewriteRule> rules;
  std::vector<int> letter_rank;  // precedence of each letter; default identity
  bool symmetric_shape = false;  // built as the canonical symmetric algebra

  int tensor_index(int i, int j) const { return i * dim + j; }
  /// lead - tail of rule r as a vector in V (x) V.
  Vec rule_relation(int r) const;
};

/// Canonical symmetric-algebra presentation: relation basis
/// { v_j(x)v_i - v_i(x)v_j : i < j } in lexicographic pair order, rules
/// v_j v_i -> v_i v_j.
QuadraticPresentation symmetric_presentation(const FieldSpec& f, int dim);
int pair_index(int dim, int i, int j);               // i < j
std::pair<int, int> pair_of_index(int dim, int idx);
int pair_count(int dim);

/// Diagonal action of a group element on V (x) V coordinates.
Vec tensor2_act(const GroupData& G, int g, const Vec& t);

struct ValidationIssue {
  std::string code;
  std::string detail;
};
struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  std::string summary() const;
};

/// Checks shape, termination, span(rules) = span(relation basis), G-stability
/// of the relations, and confluence of all degree-3 overlaps.
ValidationReport validate_presentation(const QuadraticPresentation& P,
                                       const GroupData& G);

struct SmashKey {
  Word vword;
  int g = 0;
  auto tied() const { return std::tie(vword, g); }
  bool operator<(const SmashKey& o) const { return tied() < o.tied(); }
  bool operator==(const SmashKey& o) const { return tied() == o.tied(); }
};

/// Element of the skew group algebra in normal form: sum of (reduced V-word,
/// group element) terms.
class SmashElement {
public:
  void add(const SmashKey& k, const Scalar& c);
  bool is_zero() const noexcept { return c_.empty(); }
  const std::map<SmashKey, Scalar>& terms() const noexcept { return c_; }

  SmashElement operator+(const SmashElement& o) const;
  SmashElement operator-(const SmashElement& o) const;
  SmashElement scaled(const Scalar& c) const;
  bool operator==(const SmashElement& o) const { return c_ == o.c_; }

  int filtered_degree() const;  // max V-length; -1 for zero
  std::string str(int identity_index = 0) const;

private:
  std::map<SmashKey, Scalar> c_;
};

/// Normal-form engine for S x| G and for its filtered deformations. The
/// homogeneous engine rewrites with g.h -> [gh], g.v -> (g.v).g and the
/// quadratic rules; install_lower_terms adds the filtered tails.
class SmashProduct {
public:
  SmashProduct(GroupData G, QuadraticPresentation P);

  /// Installs filtered lower-order data: straightening tails lambda[g][v] and
  /// per-rule degree-1/degree-0 tails.
  void install_lower_terms(LambdaTable lambda, std::vector<VkGElement> rule_alpha,
                           std::vector<GroupAlgebraElement> rule_beta);

  const GroupData& group() const noexcept { return G_; }
  const QuadraticPresentation& presentation() const noexcept { return P_; }
  bool filtered() const noexcept { return filtered_; }
  int rule_at(int a, int b) const { return rule_of_pair_[a * P_.dim + b]; }

  SmashElement reduce(const FreeElement& e) const;
  SmashElement reduce_word(const Word& w) const;
  SmashElement mul(const SmashElement& a, const SmashElement& b) const;

  /// Applies the rule/straightening/merge at position pos of w, appending the
  /// resulting terms to out with coefficient c. pos must be a redex.
  void rewrite_at(const Word& w, int pos, const Scalar& c, FreeElement& out) const;
  /// Leftmost redex position, or -1 if the word is normal.
  int find_redex(const Word& w) const;

  // word-building helpers
  Word word_of_key(const SmashKey& k) const;
  FreeElement fe_of_ga(const GroupAlgebraElement& a) const;
  FreeElement fe_of_vkg(const VkGElement& a) const;
  FreeElement fe_of_vec(const Vec& v) const;
  FreeElement fe_of_smash(const SmashElement& s) const;

private:
  SmashKey normal_key(const Word& w) const;

  GroupData G_;
  QuadraticPresentation P_;
  std::vector<int> rule_of_pair_;
  LambdaTable lambda_;
  std::vector<VkGElement> rule_alpha_;
  std::vector<GroupAlgebraElement> rule_beta_;
  bool filtered_ = false;
};

/// Dimensions of the degree-0..d components of S x| G:
/// (#normal V-words of length j) * |G|.
std::vector<long long> graded_dims(const QuadraticPresentation& P,
                                   const GroupData& G, int d);

/// Basis of (V (x) R) \cap (R (x) V) inside V (x) V (x) V.
struct IntersectionSpace {
  std::vector<Vec> basis;  // vectors of length dim^3, index (i*dim+j)*dim+k
};
IntersectionSpace intersection_VR_RV(const QuadraticPresentation& P);

}  // namespace pbwforge
