#include "pbwforge/group.hpp"

#include <map>

namespace pbwforge {

GroupData close_group(const std::vector<Matrix>& generators, int cap) {
  if (generators.empty())
    throw pbw_error("ValidationError", "need at least one generator matrix");
  const FieldSpec field = generators[0].field();
  const int dim = generators[0].rows();
  for (const auto& g : generators) {
    if (g.field() != field)
      throw pbw_error("ValidationError", "generators over mixed fields");
    if (g.rows() != dim || g.cols() != dim)
      throw pbw_error("ValidationError", "generators must be square of one size");
    if (g.rank() != dim)
      throw pbw_error("SingularGenerator", "generator is not invertible: " + g.str());
  }

  GroupData G;
  G.field = field;
  G.dim = dim;
  std::map<std::string, int> index_of;
  Matrix id = Matrix::identity(field, dim);
  G.elements.push_back(id);
  index_of[id.key()] = 0;

  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    for (const auto& gen : generators) {
      Matrix p = G.elements[i] * gen;
      std::string k = p.key();
      if (index_of.count(k)) continue;
      if (static_cast<int>(G.elements.size()) >= cap)
        throw pbw_error("NotClosedWithinCap",
                        "group order exceeds cap " + std::to_string(cap));
      index_of[k] = static_cast<int>(G.elements.size());
      G.elements.push_back(std::move(p));
    }
  }

  const int n = G.order();
  G.mult.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix p = G.elements[i] * G.elements[j];
      auto it = index_of.find(p.key());
      if (it == index_of.end())
        throw pbw_error("NotClosedWithinCap", "product fell outside closure");
      G.mult[i][j] = it->second;
    }

  G.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (G.mult[i][j] == 0) {
        G.inverse[i] = j;
        break;
      }
  for (int i = 0; i < n; ++i)
    if (G.inverse[i] < 0)
      throw pbw_error("ValidationError", "element without inverse in table");

  // Associativity holds because entries come from matrix products; verify the
  // table anyway on small groups.
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.mult[G.mult[a][b]][c] != G.mult[a][G.mult[b][c]])
            throw pbw_error("ValidationError", "multiplication table not associative");
  }
  return G;
}

GroupAlgebraElement GroupAlgebraElement::unit(const FieldSpec& f,
                                              const GroupData& g) {
  GroupAlgebraElement e;
  e.add(g.identity, Scalar::one(f));
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(int g_index, const Scalar& c) {
  GroupAlgebraElement e;
  e.add(g_index, c);
  return e;
}

void GroupAlgebraElement::add(int g_index, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(g_index);
  if (it == coeffs_.end()) {
    coeffs_.emplace(g_index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar GroupAlgebraElement::coeff(int g_index, const FieldSpec& f) const {
  auto it = coeffs_.find(g_index);
  return it == coeffs_.end() ? Scalar::zero(f) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.coeffs_) out.add(g, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.coeffs_) out.add(g, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out;
  for (const auto& [g, c] : coeffs_) out.coeffs_.emplace(g, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& c) const {
  GroupAlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, x] : coeffs_) out.add(g, x * c);
  return out;
}

std::string GroupAlgebraElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : coeffs_) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + "*g" + std::to_string(g);
  }
  return out;
}

GroupAlgebraElement ga_mul(const GroupData& G, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms()) out.add(G.mul(g, h), cg * ch);
  return out;
}

GroupAlgebraElement ga_translate_left(const GroupData& G, int g,
                                      const GroupAlgebraElement& a) {
  GroupAlgebraElement out;
  for (const auto& [h, c] : a.terms()) out.add(G.mul(g, h), c);
  return out;
}

GroupAlgebraElement ga_translate_right(const GroupData& G,
                                       const GroupAlgebraElement& a, int g) {
  GroupAlgebraElement out;
  for (const auto& [h, c] : a.terms()) out.add(G.mul(h, g), c);
  return out;
}

GroupAlgebraElement ga_conjugate(const GroupData& G, int g,
                                 const GroupAlgebraElement& a) {
  GroupAlgebraElement out;
  int gi = G.inv(g);
  for (const auto& [h, c] : a.terms()) out.add(G.mul(G.mul(g, h), gi), c);
  return out;
}

void VkGElement::add(int v_index, int g_index, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(v_index, g_index);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void VkGElement::add_vector(const Vec& vec, int g_index) {
  for (std::size_t i = 0; i < vec.size(); ++i)
    add(static_cast<int>(i), g_index, vec[i]);
}

VkGElement VkGElement::operator+(const VkGElement& o) const {
  VkGElement out = *this;
  for (const auto& [k, c] : o.coeffs_) out.add(k.first, k.second, c);
  return out;
}

VkGElement VkGElement::operator-(const VkGElement& o) const {
  VkGElement out = *this;
  for (const auto& [k, c] : o.coeffs_) out.add(k.first, k.second, -c);
  return out;
}

VkGElement VkGElement::operator-() const {
  VkGElement out;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

VkGElement VkGElement::scaled(const Scalar& c) const {
  VkGElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : coeffs_) out.add(k.first, k.second, x * c);
  return out;
}

Vec VkGElement::vector_at(const FieldSpec& f, int dim, int g_index) const {
  Vec out = vec_zero(f, dim);
  for (const auto& [k, c] : coeffs_)
    if (k.second == g_index) out[k.first] += c;
  return out;
}

std::string VkGElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + "*v" + std::to_string(k.first + 1) + "g" +
           std::to_string(k.second);
  }
  return out;
}

VkGElement sigma(const GroupData& G, int g, const Vec& v) {
  VkGElement out;
  out.add_vector(G.act(g, v), g);
  return out;
}

VkGElement vkg_translate_right(const GroupData& G, const VkGElement& a, int g) {
  VkGElement out;
  for (const auto& [k, c] : a.terms()) out.add(k.first, G.mul(k.second, g), c);
  return out;
}

VkGElement vkg_conjugate(const GroupData& G, int g, const VkGElement& a) {
  VkGElement out;
  int gi = G.inv(g);
  for (const auto& [k, c] : a.terms()) {
    Vec e = vec_zero(G.field, G.dim);
    e[k.first] = c;
    out.add_vector(G.act(g, e), G.mul(G.mul(g, k.second), gi));
  }
  return out;
}

LambdaTable zero_lambda(const GroupData& G) {
  return LambdaTable(G.order(), std::vector<GroupAlgebraElement>(G.dim));
}

bool lambda_is_zero(const LambdaTable& t) {
  for (const auto& row : t)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

GroupAlgebraElement lambda_on_vector(const GroupData& G, const LambdaTable& t,
                                     int g, const Vec& v) {
  GroupAlgebraElement out;
  for (int i = 0; i < G.dim; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& [h, c] : t[g][i].terms()) out.add(h, c * v[i]);
  }
  return out;
}

GroupAlgebraElement lambda_extended(const GroupData& G, const LambdaTable& t,
                                    const GroupAlgebraElement& x, const Vec& v) {
  GroupAlgebraElement out;
  for (const auto& [g, c] : x.terms()) {
    GroupAlgebraElement part = lambda_on_vector(G, t, g, v);
    for (const auto& [h, ch] : part.terms()) out.add(h, ch * c);
  }
  return out;
}

}  // namespace pbwforge
