#include "pbwforge/quadratic.hpp"

#include <algorithm>

namespace pbwforge {

void fe_add(FreeElement& e, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

void fe_add_all(FreeElement& e, const FreeElement& o, const Scalar& c) {
  for (const auto& [w, x] : o) fe_add(e, w, x * c);
}

FreeElement fe_concat(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      fe_add(out, w, ca * cb);
    }
  return out;
}

Vec QuadraticPresentation::rule_relation(int r) const {
  Vec v = vec_scaled(rules[r].tail, -Scalar::one(field));
  v[tensor_index(rules[r].lead_a, rules[r].lead_b)] += Scalar::one(field);
  return v;
}

int pair_count(int dim) { return dim * (dim - 1) / 2; }

int pair_index(int dim, int i, int j) {
  // pairs (i,j), i<j, in lexicographic order
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_of_index(int dim, int idx) {
  for (int i = 0; i < dim; ++i) {
    int row = dim - i - 1;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw pbw_error("DimensionMismatch", "pair index out of range");
}

QuadraticPresentation symmetric_presentation(const FieldSpec& f, int dim) {
  QuadraticPresentation P;
  P.field = f;
  P.dim = dim;
  P.symmetric_shape = true;
  P.letter_rank.resize(dim);
  for (int i = 0; i < dim; ++i) P.letter_rank[i] = i;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Vec r = vec_zero(f, dim * dim);
      r[P.tensor_index(j, i)] = Scalar::one(f);
      r[P.tensor_index(i, j)] = -Scalar::one(f);
      P.relation_basis.push_back(std::move(r));
      RewriteRule rule;
      rule.lead_a = j;
      rule.lead_b = i;
      rule.tail = vec_zero(f, dim * dim);
      rule.tail[P.tensor_index(i, j)] = Scalar::one(f);
      P.rules.push_back(std::move(rule));
    }
  return P;
}

Vec tensor2_act(const GroupData& G, int g, const Vec& t) {
  const int n = G.dim;
  const Matrix& m = G.elements[g];
  Vec out = vec_zero(G.field, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& c = t[i * n + j];
      if (c.is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        if (m.at(k, i).is_zero()) continue;
        for (int l = 0; l < n; ++l)
          out[k * n + l] += m.at(k, i) * m.at(l, j) * c;
      }
    }
  return out;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "ok";
  std::string s;
  for (const auto& i : issues) {
    if (!s.empty()) s += "; ";
    s += i.code + " (" + i.detail + ")";
  }
  return s;
}

ValidationReport validate_presentation(const QuadraticPresentation& P,
                                       const GroupData& G) {
  ValidationReport rep;
  auto issue = [&](const std::string& code, const std::string& detail) {
    rep.issues.push_back({code, detail});
  };

  if (P.field != G.field) {
    issue("FieldMismatch", "presentation and group use different fields");
    return rep;
  }
  if (P.dim != G.dim) {
    issue("DimensionMismatch", "presentation dim differs from the action");
    return rep;
  }
  const int n = P.dim;
  if (static_cast<int>(P.letter_rank.size()) != n) {
    issue("ValidationError", "letter order must list every generator once");
    return rep;
  }
  {
    std::vector<bool> seen(n, false);
    for (int r : P.letter_rank) {
      if (r < 0 || r >= n || seen[r]) {
        issue("ValidationError", "letter order is not a permutation");
        return rep;
      }
      seen[r] = true;
    }
  }
  for (const auto& r : P.relation_basis)
    if (static_cast<int>(r.size()) != n * n) {
      issue("DimensionMismatch", "relation vector of wrong length");
      return rep;
    }
  for (const auto& rule : P.rules) {
    if (rule.lead_a < 0 || rule.lead_a >= n || rule.lead_b < 0 || rule.lead_b >= n) {
      issue("ValidationError", "rule lead out of range");
      return rep;
    }
    if (static_cast<int>(rule.tail.size()) != n * n) {
      issue("DimensionMismatch", "rule tail of wrong length");
      return rep;
    }
  }

  // distinct leads
  std::vector<int> lead_rule(n * n, -1);
  for (std::size_t r = 0; r < P.rules.size(); ++r) {
    int idx = P.tensor_index(P.rules[r].lead_a, P.rules[r].lead_b);
    if (lead_rule[idx] >= 0) {
      issue("ValidationError", "duplicate leading monomial");
      return rep;
    }
    lead_rule[idx] = static_cast<int>(r);
  }

  // tails reduced and smaller than their lead
  for (const auto& rule : P.rules) {
    auto lead_key = std::make_pair(P.letter_rank[rule.lead_a],
                                   P.letter_rank[rule.lead_b]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (rule.tail[P.tensor_index(i, j)].is_zero()) continue;
        if (lead_rule[P.tensor_index(i, j)] >= 0)
          issue("ValidationError", "rule tail touches a leading monomial");
        auto key = std::make_pair(P.letter_rank[i], P.letter_rank[j]);
        if (!(key < lead_key))
          issue("NonTermination", "tail monomial not below the lead v" +
                                      std::to_string(rule.lead_a + 1) + "v" +
                                      std::to_string(rule.lead_b + 1));
      }
  }
  if (!rep.ok()) return rep;

  // span(rule relations) = span(relation basis)
  LinearSolver rspan(P.field, P.relation_basis);
  if (!rspan.basis_independent()) {
    issue("ValidationError", "relation basis is linearly dependent");
    return rep;
  }
  if (static_cast<int>(P.rules.size()) != rspan.rank())
    issue("RuleRelationMismatch", "rule count differs from relation count");
  for (std::size_t r = 0; r < P.rules.size(); ++r)
    if (!rspan.contains(P.rule_relation(static_cast<int>(r))))
      issue("RuleRelationMismatch",
            "rule " + std::to_string(r) + " is not a relation");
  if (!rep.ok()) return rep;

  // G-stability of the relation space
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t b = 0; b < P.relation_basis.size(); ++b)
      if (!rspan.contains(tensor2_act(G, g, P.relation_basis[b]))) {
        issue("NotGStable", "g" + std::to_string(g) + " moves relation " +
                                std::to_string(b) + " out of the span");
        return rep;
      }

  // degree-3 overlap confluence of the homogeneous rules
  SmashProduct engine(G, P);
  for (const auto& r1 : P.rules)
    for (const auto& r2 : P.rules) {
      if (r1.lead_b != r2.lead_a) continue;
      const int a = r1.lead_a, b = r1.lead_b, c = r2.lead_b;
      FreeElement left, right;
      // apply r1 to the front, r2 to the back of the word a b c
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& t1 = r1.tail[P.tensor_index(i, j)];
          if (!t1.is_zero())
            fe_add(left, Word{i, j, c}, t1);
          const Scalar& t2 = r2.tail[P.tensor_index(i, j)];
          if (!t2.is_zero())
            fe_add(right, Word{a, i, j}, t2);
        }
      SmashElement diff = engine.reduce(left) - engine.reduce(right);
      if (!diff.is_zero()) {
        issue("NotConfluent", "overlap v" + std::to_string(a + 1) + "v" +
                                  std::to_string(b + 1) + "v" +
                                  std::to_string(c + 1) + " leaves residual " +
                                  diff.str(G.identity));
        return rep;
      }
    }

  return rep;
}

void SmashElement::add(const SmashKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
  SmashElement out = *this;
  for (const auto& [k, c] : o.c_) out.add(k, c);
  return out;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
  SmashElement out = *this;
  for (const auto& [k, c] : o.c_) out.add(k, -c);
  return out;
}

SmashElement SmashElement::scaled(const Scalar& c) const {
  SmashElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : c_) out.add(k, x * c);
  return out;
}

int SmashElement::filtered_degree() const {
  int d = -1;
  for (const auto& [k, c] : c_)
    d = std::max(d, static_cast<int>(k.vword.size()));
  return d;
}

std::string SmashElement::str(int identity_index) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (int l : k.vword) out += "*v" + std::to_string(l + 1);
    if (k.g != identity_index) out += "*g" + std::to_string(k.g);
  }
  return out;
}

SmashProduct::SmashProduct(GroupData G, QuadraticPresentation P)
    : G_(std::move(G)), P_(std::move(P)) {
  rule_of_pair_.assign(P_.dim * P_.dim, -1);
  for (std::size_t r = 0; r < P_.rules.size(); ++r)
    rule_of_pair_[P_.tensor_index(P_.rules[r].lead_a, P_.rules[r].lead_b)] =
        static_cast<int>(r);
  lambda_ = zero_lambda(G_);
  rule_alpha_.assign(P_.rules.size(), VkGElement{});
  rule_beta_.assign(P_.rules.size(), GroupAlgebraElement{});
}

void SmashProduct::install_lower_terms(LambdaTable lambda,
                                       std::vector<VkGElement> rule_alpha,
                                       std::vector<GroupAlgebraElement> rule_beta) {
  if (static_cast<int>(lambda.size()) != G_.order() ||
      rule_alpha.size() != P_.rules.size() || rule_beta.size() != P_.rules.size())
    throw pbw_error("DimensionMismatch", "lower-term tables of wrong shape");
  for (int i = 0; i < G_.dim; ++i)
    if (!lambda[G_.identity][i].is_zero())
      throw pbw_error("LambdaOnIdentity",
                      "straightening tail on the identity must vanish");
  lambda_ = std::move(lambda);
  rule_alpha_ = std::move(rule_alpha);
  rule_beta_ = std::move(rule_beta);
  filtered_ = true;
}

int SmashProduct::find_redex(const Word& w) const {
  const int n = P_.dim;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    bool av = w[i] < n, bv = w[i + 1] < n;
    if (!av) return static_cast<int>(i);  // group letter followed by anything
    if (av && bv && rule_of_pair_[w[i] * n + w[i + 1]] >= 0)
      return static_cast<int>(i);
  }
  return -1;
}

void SmashProduct::rewrite_at(const Word& w, int pos, const Scalar& c,
                              FreeElement& out) const {
  const int n = P_.dim;
  Word prefix(w.begin(), w.begin() + pos);
  Word suffix(w.begin() + pos + 2, w.end());
  auto emit = [&](std::initializer_list<int> mid, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    Word nw = prefix;
    for (int l : mid)
      if (l >= 0) nw.push_back(l);
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    fe_add(out, nw, coeff);
  };
  auto gl = [&](int g) { return g == G_.identity ? -1 : n + g; };

  const int a = w[pos], b = w[pos + 1];
  if (a >= n && b >= n) {  // merge group letters
    emit({gl(G_.mul(a - n, b - n))}, c);
    return;
  }
  if (a >= n && b < n) {  // straighten g.v -> (g.v).g + lambda(g,v)
    const int g = a - n, v = b;
    Vec gv = G_.act(g, [&] {
      Vec e = vec_zero(P_.field, n);
      e[v] = Scalar::one(P_.field);
      return e;
    }());
    for (int m = 0; m < n; ++m) emit({m, gl(g)}, c * gv[m]);
    for (const auto& [h, cl] : lambda_[g][v].terms()) emit({gl(h)}, c * cl);
    return;
  }
  const int r = rule_of_pair_[a * n + b];
  if (r < 0) throw pbw_error("ValidationError", "rewrite_at on a normal pair");
  const RewriteRule& rule = P_.rules[r];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      emit({i, j}, c * rule.tail[P_.tensor_index(i, j)]);
  for (const auto& [k, ca] : rule_alpha_[r].terms())
    emit({k.first, gl(k.second)}, c * ca);
  for (const auto& [h, cb] : rule_beta_[r].terms()) emit({gl(h)}, c * cb);
}

SmashKey SmashProduct::normal_key(const Word& w) const {
  SmashKey key;
  key.g = G_.identity;
  const int n = P_.dim;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < n) {
      key.vword.push_back(w[i]);
    } else {
      if (i + 1 != w.size())
        throw pbw_error("ValidationError", "group letter not trailing in a normal word");
      key.g = w[i] - n;
    }
  }
  return key;
}

SmashElement SmashProduct::reduce(const FreeElement& e) const {
  SmashElement out;
  FreeElement pending;
  for (const auto& [w, c] : e) {
    // strip identity letters from externally built words
    Word nw;
    nw.reserve(w.size());
    for (int l : w)
      if (!(l >= P_.dim && l - P_.dim == G_.identity)) nw.push_back(l);
    fe_add(pending, nw, c);
  }
  while (!pending.empty()) {
    auto it = pending.begin();
    Word w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;
    int pos = find_redex(w);
    if (pos < 0)
      out.add(normal_key(w), c);
    else
      rewrite_at(w, pos, c, pending);
  }
  return out;
}

SmashElement SmashProduct::reduce_word(const Word& w) const {
  FreeElement e;
  fe_add(e, w, Scalar::one(P_.field));
  return reduce(e);
}

Word SmashProduct::word_of_key(const SmashKey& k) const {
  Word w = k.vword;
  if (k.g != G_.identity) w.push_back(P_.dim + k.g);
  return w;
}

SmashElement SmashProduct::mul(const SmashElement& a, const SmashElement& b) const {
  FreeElement e;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Word w = word_of_key(ka);
      Word wb = word_of_key(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      fe_add(e, w, ca * cb);
    }
  return reduce(e);
}

FreeElement SmashProduct::fe_of_ga(const GroupAlgebraElement& a) const {
  FreeElement out;
  for (const auto& [g, c] : a.terms()) {
    Word w;
    if (g != G_.identity) w.push_back(P_.dim + g);
    fe_add(out, w, c);
  }
  return out;
}

FreeElement SmashProduct::fe_of_vkg(const VkGElement& a) const {
  FreeElement out;
  for (const auto& [k, c] : a.terms()) {
    Word w{k.first};
    if (k.second != G_.identity) w.push_back(P_.dim + k.second);
    fe_add(out, w, c);
  }
  return out;
}

FreeElement SmashProduct::fe_of_vec(const Vec& v) const {
  FreeElement out;
  for (std::size_t i = 0; i < v.size(); ++i)
    fe_add(out, Word{static_cast<int>(i)}, v[i]);
  return out;
}

FreeElement SmashProduct::fe_of_smash(const SmashElement& s) const {
  FreeElement out;
  for (const auto& [k, c] : s.terms()) fe_add(out, word_of_key(k), c);
  return out;
}

std::vector<long long> graded_dims(const QuadraticPresentation& P,
                                   const GroupData& G, int d) {
  const int n = P.dim;
  std::vector<std::vector<bool>> normal_pair(n, std::vector<bool>(n, true));
  for (const auto& r : P.rules) normal_pair[r.lead_a][r.lead_b] = false;

  std::vector<long long> dims;
  dims.push_back(G.order());  // degree 0
  std::vector<long long> by_last(n, 1);  // words of length 1
  if (d >= 1) dims.push_back(static_cast<long long>(n) * G.order());
  for (int j = 2; j <= d; ++j) {
    std::vector<long long> next(n, 0);
    for (int last = 0; last < n; ++last)
      for (int nxt = 0; nxt < n; ++nxt)
        if (normal_pair[last][nxt]) next[nxt] += by_last[last];
    by_last = std::move(next);
    long long total = 0;
    for (long long x : by_last) total += x;
    dims.push_back(total * G.order());
  }
  return dims;
}

IntersectionSpace intersection_VR_RV(const QuadraticPresentation& P) {
  IntersectionSpace out;
  const int n = P.dim;
  const int m = static_cast<int>(P.relation_basis.size());
  if (m == 0 || n == 0) return out;
  const FieldSpec& f = P.field;

  // columns: e_i (x) r_b (first block), r_b (x) e_k (second block)
  Matrix M(f, n * n * n, 2 * n * m);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b) {
      int col = i * m + b;
      for (int jk = 0; jk < n * n; ++jk)
        M.at(i * n * n + jk, col) = P.relation_basis[b][jk];
    }
  for (int b = 0; b < m; ++b)
    for (int k = 0; k < n; ++k) {
      int col = n * m + b * n + k;
      for (int ij = 0; ij < n * n; ++ij)
        M.at(ij * n + k, col) = -P.relation_basis[b][ij];
    }

  for (const auto& ker : M.kernel_basis()) {
    Vec x = vec_zero(f, n * n * n);
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < m; ++b) {
        const Scalar& c = ker[i * m + b];
        if (c.is_zero()) continue;
        for (int jk = 0; jk < n * n; ++jk)
          x[i * n * n + jk] += P.relation_basis[b][jk] * c;
      }
    if (!vec_is_zero(x)) out.basis.push_back(std::move(x));
  }

  // sanity: every basis vector lies in both V(x)R and R(x)V
  LinearSolver rspan(f, P.relation_basis);
  for (const auto& x : out.basis) {
    for (int i = 0; i < n; ++i) {
      Vec slice = vec_zero(f, n * n);
      for (int jk = 0; jk < n * n; ++jk) slice[jk] = x[i * n * n + jk];
      if (!rspan.contains(slice))
        throw pbw_error("ValidationError", "intersection vector escapes V(x)R");
    }
    for (int k = 0; k < n; ++k) {
      Vec slice = vec_zero(f, n * n);
      for (int ij = 0; ij < n * n; ++ij) slice[ij] = x[ij * n + k];
      if (!rspan.contains(slice))
        throw pbw_error("ValidationError", "intersection vector escapes R(x)V");
    }
  }
  return out;
}

}  // namespace pbwforge
