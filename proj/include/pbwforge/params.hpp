#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "pbwforge/group.hpp"
#include "pbwforge/quadratic.hpp"
#include "pbwforge/scalars.hpp"

namespace pbwforge {

/// Deformation data for a general quadratic presentation: alpha/beta are
/// indexed by the relation basis, lambda by (group element, V-basis vector).
struct ParameterSet {
  std::vector<VkGElement> alpha;
  std::vector<GroupAlgebraElement> beta;
  LambdaTable lambda;
};

/// Deformation data in commutator form for the symmetric algebra. kappaC and
/// kappaL are stored on pairs i < j and extended antisymmetrically;
/// kappa(v,v) = 0.
struct PolyParameterSet {
  std::map<std::pair<int, int>, GroupAlgebraElement> kappaC;
  std::map<std::pair<int, int>, VkGElement> kappaL;
  LambdaTable lambda;

  GroupAlgebraElement kappa_c(const FieldSpec& f, int u, int v) const;
  VkGElement kappa_l(const FieldSpec& f, int u, int v) const;
  /// kappaC / kappaL extended bilinearly over vectors.
  GroupAlgebraElement kappa_c_bilinear(const FieldSpec& f, const Vec& u,
                                       const Vec& v) const;
  VkGElement kappa_l_bilinear(const FieldSpec& f, const Vec& u, const Vec& v) const;
};

/// A complete problem instance: field, group action, quadratic algebra, and
/// one of the two parameter encodings.
struct DeformationPresentation {
  FieldSpec field = FieldSpec::rationals();
  GroupData group;
  QuadraticPresentation quadratic;
  std::variant<ParameterSet, PolyParameterSet> params;

  bool is_poly() const noexcept {
    return std::holds_alternative<PolyParameterSet>(params);
  }
  const ParameterSet& general() const { return std::get<ParameterSet>(params); }
  const PolyParameterSet& poly() const { return std::get<PolyParameterSet>(params); }
  const LambdaTable& lambda() const {
    return is_poly() ? poly().lambda : general().lambda;
  }
};

/// Shape/consistency checks shared by both encodings; enforces that the
/// straightening table vanishes on the identity. Throws on violation.
void validate_parameters(const DeformationPresentation& D);

ParameterSet zero_general(const GroupData& G, const QuadraticPresentation& P);
PolyParameterSet zero_poly(const GroupData& G);

/// Translation between the commutator encoding and the relation-basis
/// encoding, against the canonical symmetric presentation. Throws
/// WrongRelationShape when the presentation is not in canonical shape.
ParameterSet poly_to_general(const PolyParameterSet& P,
                             const QuadraticPresentation& Q);
PolyParameterSet general_to_poly(const ParameterSet& P,
                                 const QuadraticPresentation& Q);

/// Applies alpha (or beta) linearly to an element of span(relation basis).
/// Throws NotInR if the element is outside the span.
VkGElement alpha_on_element(const LinearSolver& relation_span,
                            const std::vector<VkGElement>& alpha, const Vec& r);
GroupAlgebraElement beta_on_element(const LinearSolver& relation_span,
                                    const std::vector<GroupAlgebraElement>& beta,
                                    const Vec& r);

/// Asserts the presentation is the canonical symmetric one.
void require_canonical_symmetric(const QuadraticPresentation& Q);

}  // namespace pbwforge
