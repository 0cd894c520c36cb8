#include "pbwforge/params.hpp"

namespace pbwforge {

GroupAlgebraElement PolyParameterSet::kappa_c(const FieldSpec& f, int u, int v) const {
  (void)f;
  if (u == v) return {};
  bool flip = u > v;
  auto it = kappaC.find(flip ? std::make_pair(v, u) : std::make_pair(u, v));
  if (it == kappaC.end()) return {};
  return flip ? -it->second : it->second;
}

VkGElement PolyParameterSet::kappa_l(const FieldSpec& f, int u, int v) const {
  (void)f;
  if (u == v) return {};
  bool flip = u > v;
  auto it = kappaL.find(flip ? std::make_pair(v, u) : std::make_pair(u, v));
  if (it == kappaL.end()) return {};
  return flip ? -it->second : it->second;
}

GroupAlgebraElement PolyParameterSet::kappa_c_bilinear(const FieldSpec& f,
                                                       const Vec& u,
                                                       const Vec& v) const {
  GroupAlgebraElement out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      auto part = kappa_c(f, static_cast<int>(i), static_cast<int>(j));
      for (const auto& [g, c] : part.terms()) out.add(g, c * u[i] * v[j]);
    }
  }
  return out;
}

VkGElement PolyParameterSet::kappa_l_bilinear(const FieldSpec& f, const Vec& u,
                                              const Vec& v) const {
  VkGElement out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      auto part = kappa_l(f, static_cast<int>(i), static_cast<int>(j));
      for (const auto& [k, c] : part.terms())
        out.add(k.first, k.second, c * u[i] * v[j]);
    }
  }
  return out;
}

namespace {

void validate_lambda(const GroupData& G, const LambdaTable& t) {
  if (static_cast<int>(t.size()) != G.order())
    throw pbw_error("DimensionMismatch", "lambda table must have one row per group element");
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != G.dim)
      throw pbw_error("DimensionMismatch", "lambda row must have one entry per generator of V");
  for (int i = 0; i < G.dim; ++i)
    if (!t[G.identity][i].is_zero())
      throw pbw_error("LambdaOnIdentity",
                      "lambda on the identity group element must vanish");
  for (const auto& row : t)
    for (const auto& e : row)
      for (const auto& [g, c] : e.terms())
        if (g < 0 || g >= G.order())
          throw pbw_error("ValidationError", "lambda references an unknown group element");
}

}  // namespace

void validate_parameters(const DeformationPresentation& D) {
  const GroupData& G = D.group;
  if (D.field != G.field || D.field != D.quadratic.field)
    throw pbw_error("FieldMismatch", "instance components use different fields");
  if (G.dim != D.quadratic.dim)
    throw pbw_error("DimensionMismatch", "group action and algebra dimension differ");
  validate_lambda(G, D.lambda());
  if (D.is_poly()) {
    require_canonical_symmetric(D.quadratic);
    for (const auto& [key, val] : D.poly().kappaC) {
      if (!(key.first < key.second))
        throw pbw_error("ValidationError", "kappaC keys must have u < v");
      if (key.first < 0 || key.second >= G.dim)
        throw pbw_error("ValidationError", "kappaC key out of range");
      (void)val;
    }
    for (const auto& [key, val] : D.poly().kappaL) {
      if (!(key.first < key.second))
        throw pbw_error("ValidationError", "kappaL keys must have u < v");
      if (key.first < 0 || key.second >= G.dim)
        throw pbw_error("ValidationError", "kappaL key out of range");
      for (const auto& [vk, c] : val.terms()) {
        (void)c;
        if (vk.first < 0 || vk.first >= G.dim || vk.second < 0 ||
            vk.second >= G.order())
          throw pbw_error("ValidationError", "kappaL value out of range");
      }
    }
  } else {
    const auto& ps = D.general();
    if (ps.alpha.size() != D.quadratic.relation_basis.size() ||
        ps.beta.size() != D.quadratic.relation_basis.size())
      throw pbw_error("DimensionMismatch",
                      "alpha/beta must be given on every relation basis element");
  }
}

ParameterSet zero_general(const GroupData& G, const QuadraticPresentation& P) {
  ParameterSet ps;
  ps.alpha.assign(P.relation_basis.size(), VkGElement{});
  ps.beta.assign(P.relation_basis.size(), GroupAlgebraElement{});
  ps.lambda = zero_lambda(G);
  return ps;
}

PolyParameterSet zero_poly(const GroupData& G) {
  PolyParameterSet ps;
  ps.lambda = zero_lambda(G);
  return ps;
}

void require_canonical_symmetric(const QuadraticPresentation& Q) {
  QuadraticPresentation ref = symmetric_presentation(Q.field, Q.dim);
  auto fail = [&]() {
    throw pbw_error("WrongRelationShape",
                    "expected the canonical symmetric-algebra presentation");
  };
  if (Q.relation_basis.size() != ref.relation_basis.size() ||
      Q.rules.size() != ref.rules.size())
    fail();
  for (std::size_t b = 0; b < ref.relation_basis.size(); ++b)
    if (!vec_equal(Q.relation_basis[b], ref.relation_basis[b])) fail();
  for (std::size_t r = 0; r < ref.rules.size(); ++r) {
    if (Q.rules[r].lead_a != ref.rules[r].lead_a ||
        Q.rules[r].lead_b != ref.rules[r].lead_b ||
        !vec_equal(Q.rules[r].tail, ref.rules[r].tail))
      fail();
  }
}

ParameterSet poly_to_general(const PolyParameterSet& P,
                             const QuadraticPresentation& Q) {
  require_canonical_symmetric(Q);
  ParameterSet out;
  out.lambda = P.lambda;
  const FieldSpec& f = Q.field;
  for (int b = 0; b < pair_count(Q.dim); ++b) {
    auto [i, j] = pair_of_index(Q.dim, b);
    // relation basis element v_j (x) v_i - v_i (x) v_j, so the parameter value
    // is kappa(v_j, v_i) = -kappa(v_i, v_j)
    out.alpha.push_back(P.kappa_l(f, j, i));
    out.beta.push_back(P.kappa_c(f, j, i));
  }
  return out;
}

PolyParameterSet general_to_poly(const ParameterSet& P,
                                 const QuadraticPresentation& Q) {
  require_canonical_symmetric(Q);
  PolyParameterSet out;
  out.lambda = P.lambda;
  for (int b = 0; b < pair_count(Q.dim); ++b) {
    auto [i, j] = pair_of_index(Q.dim, b);
    if (!P.beta[b].is_zero()) out.kappaC[{i, j}] = -P.beta[b];
    if (!P.alpha[b].is_zero()) out.kappaL[{i, j}] = -P.alpha[b];
  }
  return out;
}

VkGElement alpha_on_element(const LinearSolver& relation_span,
                            const std::vector<VkGElement>& alpha, const Vec& r) {
  auto coords = relation_span.coordinates(r);
  if (!coords)
    throw pbw_error("NotInR", "element is not in the span of the relations");
  VkGElement out;
  for (std::size_t b = 0; b < alpha.size(); ++b) {
    if ((*coords)[b].is_zero()) continue;
    for (const auto& [k, c] : alpha[b].terms())
      out.add(k.first, k.second, c * (*coords)[b]);
  }
  return out;
}

GroupAlgebraElement beta_on_element(const LinearSolver& relation_span,
                                    const std::vector<GroupAlgebraElement>& beta,
                                    const Vec& r) {
  auto coords = relation_span.coordinates(r);
  if (!coords)
    throw pbw_error("NotInR", "element is not in the span of the relations");
  GroupAlgebraElement out;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    if ((*coords)[b].is_zero()) continue;
    for (const auto& [g, c] : beta[b].terms()) out.add(g, c * (*coords)[b]);
  }
  return out;
}

}  // namespace pbwforge
