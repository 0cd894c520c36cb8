#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbwforge/scalars.hpp"

namespace pbwforge {

/// A finite matrix group with full multiplication table, acting on V.
/// elements[0] is the identity; the element list order is the deterministic
/// closure order (breadth-first over right-multiplication by generators).
struct GroupData {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;  // dim V
  std::vector<Matrix> elements;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  int identity = 0;

  int order() const noexcept { return static_cast<int>(elements.size()); }
  int mul(int i, int j) const { return mult[i][j]; }
  int inv(int i) const { return inverse[i]; }
  /// Action of group element g on a coordinate vector of V.
  Vec act(int g, const Vec& v) const { return elements[g].apply(v); }
};

/// Closes the group generated by invertible matrices, filling all tables.
/// Throws NotClosedWithinCap / SingularGenerator.
GroupData close_group(const std::vector<Matrix>& generators, int cap = 2048);

/// Sparse element of the group algebra kG; no zero coefficients stored.
class GroupAlgebraElement {
public:
  GroupAlgebraElement() = default;

  static GroupAlgebraElement unit(const FieldSpec& f, const GroupData& g);
  static GroupAlgebraElement basis(int g_index, const Scalar& c);

  void add(int g_index, const Scalar& c);
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Scalar coeff(int g_index, const FieldSpec& f) const;
  const std::map<int, Scalar>& terms() const noexcept { return coeffs_; }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement scaled(const Scalar& c) const;
  bool operator==(const GroupAlgebraElement& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;

private:
  std::map<int, Scalar> coeffs_;
};

/// Convolution product in kG via the multiplication table.
GroupAlgebraElement ga_mul(const GroupData& G, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b);
/// Left/right translate by a single group element.
GroupAlgebraElement ga_translate_left(const GroupData& G, int g,
                                      const GroupAlgebraElement& a);
GroupAlgebraElement ga_translate_right(const GroupData& G,
                                       const GroupAlgebraElement& a, int g);
/// Conjugation h -> g h g^{-1}, extended linearly.
GroupAlgebraElement ga_conjugate(const GroupData& G, int g,
                                 const GroupAlgebraElement& a);

/// Sparse element of V (x) kG, keyed by (V-basis index, group index).
class VkGElement {
public:
  VkGElement() = default;

  void add(int v_index, int g_index, const Scalar& c);
  /// Adds vec (x) g_index.
  void add_vector(const Vec& vec, int g_index);
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<std::pair<int, int>, Scalar>& terms() const noexcept {
    return coeffs_;
  }

  VkGElement operator+(const VkGElement& o) const;
  VkGElement operator-(const VkGElement& o) const;
  VkGElement operator-() const;
  VkGElement scaled(const Scalar& c) const;
  bool operator==(const VkGElement& o) const { return coeffs_ == o.coeffs_; }

  /// The V-component paired with group element g, as a coordinate vector.
  Vec vector_at(const FieldSpec& f, int dim, int g_index) const;

  std::string str() const;

private:
  std::map<std::pair<int, int>, Scalar> coeffs_;
};

/// Twist g (x) v -> (g.v) (x) g.
VkGElement sigma(const GroupData& G, int g, const Vec& v);
/// Right translation (v (x) h) . g = v (x) hg, extended linearly.
VkGElement vkg_translate_right(const GroupData& G, const VkGElement& a, int g);
/// Conjugation action g.(v (x) h) = (g.v) (x) ghg^{-1}, extended linearly.
VkGElement vkg_conjugate(const GroupData& G, int g, const VkGElement& a);

/// Straightening data lambda[g][v-basis-index] in kG.
using LambdaTable = std::vector<std::vector<GroupAlgebraElement>>;

LambdaTable zero_lambda(const GroupData& G);
bool lambda_is_zero(const LambdaTable& t);
/// lambda extended linearly over a vector second argument.
GroupAlgebraElement lambda_on_vector(const GroupData& G, const LambdaTable& t,
                                     int g, const Vec& v);
/// lambda extended bilinearly: first argument a group-algebra element.
GroupAlgebraElement lambda_extended(const GroupData& G, const LambdaTable& t,
                                    const GroupAlgebraElement& x, const Vec& v);

}  // namespace pbwforge
