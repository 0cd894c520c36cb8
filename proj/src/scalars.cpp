#include "pbwforge/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace pbwforge {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// extended Euclid, p prime, 0 < a < p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

std::int64_t big_mod(const BigInt& n, std::int64_t p) {
  BigInt r = n % p;
  auto v = static_cast<std::int64_t>(r);
  return v < 0 ? v + p : v;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2)
    throw pbw_error("ValidationError", "characteristic 2 is not supported");
  if (!is_odd_prime(p))
    throw pbw_error("ValidationError",
                    "modulus " + std::to_string(p) + " is not an odd prime");
  if (p > 2147483647)
    throw pbw_error("ValidationError", "modulus too large (needs p < 2^31)");
  return FieldSpec(FieldKind::prime_field, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rationals, 0); }

std::string FieldSpec::describe() const {
  return kind_ == FieldKind::prime_field ? "F_" + std::to_string(modulus_) : "Q";
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) { return of(f, 1); }

Scalar Scalar::of(const FieldSpec& f, std::int64_t n) {
  Scalar s(f);
  if (f.kind() == FieldKind::prime_field)
    s.rep_ = mod_reduce(n, f.modulus());
  else
    s.rat_ = n;
  return s;
}

Scalar Scalar::of_big(const FieldSpec& f, const BigInt& num, const BigInt& den) {
  if (den == 0) throw pbw_error("DivisionByZero", "zero denominator");
  Scalar s(f);
  if (f.kind() == FieldKind::prime_field) {
    std::int64_t d = big_mod(den, f.modulus());
    if (d == 0)
      throw pbw_error("DivisionByZero", "denominator vanishes mod " +
                                            std::to_string(f.modulus()));
    std::int64_t n = big_mod(num, f.modulus());
    s.rep_ = mod_reduce(n * mod_inverse(d, f.modulus()), f.modulus());
  } else {
    s.rat_ = BigRational(num, den);
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  auto bad = [&]() {
    return pbw_error("ParseError", "bad scalar literal '" + text + "'");
  };
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw bad();
  std::string num = t, den = "1";
  if (auto pos = t.find('/'); pos != std::string::npos) {
    num = t.substr(0, pos);
    den = t.substr(pos + 1);
    if (num.empty() || den.empty()) throw bad();
  }
  auto check_digits = [&](const std::string& s) {
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  check_digits(num);
  check_digits(den);
  return of_big(f, BigInt(num), BigInt(den));
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::prime_field ? rep_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::prime_field ? rep_ == 1 : rat_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw pbw_error("FieldMismatch", "scalars over " + field_.describe() +
                                         " and " + o.field_.describe());
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime_field)
    s.rep_ = rep_ == 0 ? 0 : field_.modulus() - rep_;
  else
    s.rat_ = -rat_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime_field)
    s.rep_ = mod_reduce(rep_ + o.rep_, field_.modulus());
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime_field)
    s.rep_ = mod_reduce(rep_ * o.rep_, field_.modulus());
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.kind() == FieldKind::prime_field ? rep_ == o.rep_
                                                 : rat_ == o.rat_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw pbw_error("DivisionByZero", "inverse of zero");
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime_field)
    s.rep_ = mod_inverse(rep_, field_.modulus());
  else
    s.rat_ = 1 / rat_;
  return s;
}

std::string Scalar::str() const {
  if (field_.kind() == FieldKind::prime_field) return std::to_string(rep_);
  std::ostringstream os;
  os << boost::multiprecision::numerator(rat_);
  if (boost::multiprecision::denominator(rat_) != 1)
    os << "/" << boost::multiprecision::denominator(rat_);
  return os.str();
}

std::int64_t Scalar::rep() const {
  if (field_.kind() != FieldKind::prime_field)
    throw pbw_error("FieldMismatch", "rep() is only defined over prime fields");
  return rep_;
}

const BigRational& Scalar::rational() const {
  if (field_.kind() != FieldKind::rationals)
    throw pbw_error("FieldMismatch", "rational() needs the rational field");
  return rat_;
}

Vec vec_zero(const FieldSpec& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void vec_add_scaled(Vec& target, const Vec& src, const Scalar& c) {
  if (target.size() != src.size())
    throw pbw_error("DimensionMismatch", "vector lengths differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < target.size(); ++i) target[i] += src[i] * c;
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0)
    throw pbw_error("DimensionMismatch", "negative matrix dimension");
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw pbw_error("DimensionMismatch", "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw pbw_error("DimensionMismatch", "matrix product");
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw pbw_error("DimensionMismatch", "matrix-vector product");
  Vec out = vec_zero(field_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

namespace {

// in-place forward elimination; returns pivot columns
std::vector<int> echelonize(std::vector<Vec>& rows, const FieldSpec& f) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  std::size_t width = rows[0].size();
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < width && next_row < rows.size(); ++col) {
    std::size_t sel = next_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next_row], rows[sel]);
    Scalar inv = rows[next_row][col].inverse();
    for (auto& x : rows[next_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c2 = 0; c2 < width; ++c2)
        rows[r][c2] -= rows[next_row][c2] * factor;
    }
    pivots.push_back(static_cast<int>(col));
    ++next_row;
  }
  (void)f;
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  std::vector<Vec> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    Vec r(cols_, Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    rows.push_back(std::move(r));
  }
  return static_cast<int>(echelonize(rows, field_).size());
}

std::vector<Vec> Matrix::kernel_basis() const {
  std::vector<Vec> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    Vec r(cols_, Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    rows.push_back(std::move(r));
  }
  std::vector<int> pivots = echelonize(rows, field_);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = vec_zero(field_, cols_);
    v[free_col] = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::key() const {
  std::string k;
  for (const auto& x : a_) {
    k += x.str();
    k += ',';
  }
  return k;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      out += at(i, j).str();
      if (j + 1 < cols_) out += ",";
    }
    out += "]";
    if (i + 1 < rows_) out += ",";
  }
  return out + "]";
}

LinearSolver::LinearSolver(const FieldSpec& f, const std::vector<Vec>& basis)
    : field_(f), count_(basis.size()) {
  if (!basis.empty()) width_ = basis[0].size();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].size() != width_)
      throw pbw_error("DimensionMismatch", "ragged basis");
    Vec row = basis[b];
    Vec combo = vec_zero(field_, count_);
    combo[b] = Scalar::one(field_);
    // reduce against existing echelon rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Scalar factor = row[pivots_[r]];
      if (factor.is_zero()) continue;
      vec_add_scaled(row, rows_[r], -factor);
      vec_add_scaled(combo, combo_[r], -factor);
    }
    int pivot = -1;
    for (std::size_t j = 0; j < width_; ++j)
      if (!row[j].is_zero()) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) {
      independent_ = false;
      continue;
    }
    Scalar inv = row[pivot].inverse();
    for (auto& x : row) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(std::move(row));
    combo_.push_back(std::move(combo));
    pivots_.push_back(pivot);
  }
}

bool LinearSolver::contains(const Vec& v) const {
  if (v.size() != width_) {
    if (width_ == 0) return vec_is_zero(v);
    throw pbw_error("DimensionMismatch", "vector length differs from basis");
  }
  Vec row = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = row[pivots_[r]];
    if (c.is_zero()) continue;
    vec_add_scaled(row, rows_[r], -c);
  }
  return vec_is_zero(row);
}

std::optional<Vec> LinearSolver::coordinates(const Vec& v) const {
  if (!independent_)
    throw pbw_error("DependentBasis", "coordinates need an independent basis");
  if (count_ == 0)
    return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  if (v.size() != width_)
    throw pbw_error("DimensionMismatch", "vector length differs from basis");
  Vec row = v;
  Vec combo = vec_zero(field_, count_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = row[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    vec_add_scaled(row, rows_[r], -factor);
    vec_add_scaled(combo, combo_[r], factor);
  }
  if (!vec_is_zero(row)) return std::nullopt;
  return combo;
}

bool in_span(const Vec& v, const std::vector<Vec>& span_vecs, const FieldSpec& f) {
  if (vec_is_zero(v)) return true;
  LinearSolver solver(f, span_vecs);
  return solver.contains(v);
}

}  // namespace pbwforge
