#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbwforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Error with a stable machine-readable code ("ModularObstruction", "NotInR", ...).
class pbw_error : public std::runtime_error {
public:
  pbw_error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

enum class FieldKind : std::uint8_t { prime_field, rationals };

/// Base field: F_p for an odd prime p, or the rationals.
class FieldSpec {
public:
  static FieldSpec prime(std::int64_t p);
  static FieldSpec rationals();

  FieldKind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t characteristic() const noexcept {
    return kind_ == FieldKind::prime_field ? modulus_ : 0;
  }
  bool operator==(const FieldSpec& o) const noexcept {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FieldSpec& o) const noexcept { return !(*this == o); }
  std::string describe() const;

private:
  FieldSpec(FieldKind k, std::int64_t m) : kind_(k), modulus_(m) {}
  FieldKind kind_;
  std::int64_t modulus_;
};

/// Exact field element in canonical form: 0 <= rep < p over F_p,
/// reduced fraction over the rationals.
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()) {}  // rational zero

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of(const FieldSpec& f, std::int64_t n);
  static Scalar of_big(const FieldSpec& f, const BigInt& num, const BigInt& den);
  /// Parses "n" or "n/d" (decimal, optional sign).
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  /// Canonical text form: "7" over F_p, "n" or "n/d" over Q.
  std::string str() const;

  /// F_p representative (prime fields only).
  std::int64_t rep() const;
  const BigRational& rational() const;

private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  std::int64_t rep_ = 0;   // prime-field value
  BigRational rat_ = 0;    // rational value
};

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
bool vec_is_zero(const Vec& v);
void vec_add_scaled(Vec& target, const Vec& src, const Scalar& c);
Vec vec_scaled(const Vec& v, const Scalar& c);
bool vec_equal(const Vec& a, const Vec& b);

/// Dense exact matrix over one FieldSpec.
class Matrix {
public:
  Matrix(const FieldSpec& f, int rows, int cols);
  static Matrix identity(const FieldSpec& f, int n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // M*v
  Matrix transpose() const;

  int rank() const;
  /// Basis of the right null space; size = cols - rank.
  std::vector<Vec> kernel_basis() const;

  /// Canonical key on entries, usable for hashing group elements.
  std::string key() const;
  std::string str() const;

private:
  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Row-space helper: membership tests and coordinates with respect to a
/// fixed list of basis vectors.
class LinearSolver {
public:
  LinearSolver(const FieldSpec& f, const std::vector<Vec>& basis);

  int rank() const noexcept { return static_cast<int>(pivots_.size()); }
  bool basis_independent() const noexcept { return independent_; }
  bool contains(const Vec& v) const;
  /// Coordinates of v in the original basis list, if v lies in its span.
  /// Requires an independent basis.
  std::optional<Vec> coordinates(const Vec& v) const;

private:
  FieldSpec field_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;  // number of original basis vectors
  bool independent_ = true;
  // echelon rows, each paired with its expression in the original basis
  std::vector<Vec> rows_;
  std::vector<Vec> combo_;
  std::vector<int> pivots_;
};

bool in_span(const Vec& v, const std::vector<Vec>& span_vecs, const FieldSpec& f);

}  // namespace pbwforge
