#include "doctest.h"
#include "pbwforge/scalars.hpp"

#include <random>

using namespace pbwforge;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-20, 20);
  if (f.kind() == FieldKind::prime_field) return Scalar::of(f, d(rng));
  std::uniform_int_distribution<int> den(1, 9);
  return Scalar::of_big(f, BigInt(d(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("field spec accepts odd primes only") {
  CHECK_NOTHROW(FieldSpec::prime(3));
  CHECK_NOTHROW(FieldSpec::prime(7919));
  CHECK_THROWS_AS(FieldSpec::prime(2), pbw_error);
  CHECK_THROWS_AS(FieldSpec::prime(9), pbw_error);
  CHECK_THROWS_AS(FieldSpec::prime(1), pbw_error);
  CHECK_THROWS_AS(FieldSpec::prime(-5), pbw_error);
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK(FieldSpec::prime(5).characteristic() == 5);
}

TEST_CASE("scalar canonical forms") {
  auto f5 = FieldSpec::prime(5);
  CHECK(Scalar::of(f5, -1).str() == "4");
  CHECK(Scalar::of(f5, 10).is_zero());
  CHECK(Scalar::parse(f5, "7").str() == "2");
  CHECK(Scalar::parse(f5, "1/2").str() == "3");  // 2*3 = 6 = 1

  auto q = FieldSpec::rationals();
  CHECK(Scalar::parse(q, "4/6").str() == "2/3");
  CHECK(Scalar::parse(q, "-4/2").str() == "-2");
  CHECK((Scalar::parse(q, "1/3") + Scalar::parse(q, "1/6")).str() == "1/2");
  CHECK_THROWS_AS(Scalar::parse(q, "a"), pbw_error);
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), pbw_error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(5),
                        FieldSpec::prime(7), FieldSpec::rationals()}) {
    for (int t = 0; t < 400; ++t) {
      Scalar a = random_scalar(f, rng);
      Scalar b = random_scalar(f, rng);
      Scalar c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("rank examples") {
  auto f5 = FieldSpec::prime(5);
  CHECK(Matrix::identity(f5, 3).rank() == 3);
  CHECK(Matrix(f5, 2, 4).rank() == 0);

  auto q = FieldSpec::rationals();
  Matrix m(q, 2, 2);
  m.at(0, 0) = Scalar::of(q, 1);
  m.at(0, 1) = Scalar::of(q, 2);
  m.at(1, 0) = Scalar::of(q, 2);
  m.at(1, 1) = Scalar::of(q, 4);
  CHECK(m.rank() == 1);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
  std::mt19937_64 rng(99);
  for (const auto& f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
    for (int t = 0; t < 60; ++t) {
      std::uniform_int_distribution<int> dim(1, 6);
      int r = dim(rng), c = dim(rng);
      Matrix m(f, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = random_scalar(f, rng);
      CHECK(m.rank() == m.transpose().rank());
    }
  }
}

TEST_CASE("kernel basis") {
  auto f3 = FieldSpec::prime(3);
  CHECK(Matrix::identity(f3, 4).kernel_basis().empty());
  CHECK(Matrix(f3, 1, 3).kernel_basis().size() == 3);

  Matrix m(f3, 1, 3);
  m.at(0, 0) = Scalar::of(f3, 1);
  m.at(0, 1) = Scalar::of(f3, 1);
  auto kb = m.kernel_basis();
  REQUIRE(kb.size() == 2);
  for (const auto& w : kb) CHECK(vec_is_zero(m.apply(w)));
}

TEST_CASE("kernel vectors annihilated on random matrices") {
  std::mt19937_64 rng(7);
  auto f7 = FieldSpec::prime(7);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    int r = dim(rng), c = dim(rng);
    Matrix m(f7, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = random_scalar(f7, rng);
    auto kb = m.kernel_basis();
    CHECK(static_cast<int>(kb.size()) == c - m.rank());
    for (const auto& w : kb) CHECK(vec_is_zero(m.apply(w)));
  }
}

TEST_CASE("in_span") {
  auto q = FieldSpec::rationals();
  Vec zero = vec_zero(q, 2);
  Vec e1 = {Scalar::of(q, 1), Scalar::of(q, 0)};
  Vec ones = {Scalar::of(q, 1), Scalar::of(q, 1)};
  CHECK(in_span(zero, {}, q));
  CHECK(in_span(e1, {e1}, q));
  CHECK_FALSE(in_span(ones, {e1}, q));
}

TEST_CASE("linear solver coordinates") {
  auto q = FieldSpec::rationals();
  Vec b0 = {Scalar::of(q, 1), Scalar::of(q, 1), Scalar::of(q, 0)};
  Vec b1 = {Scalar::of(q, 0), Scalar::of(q, 1), Scalar::of(q, 1)};
  LinearSolver solver(q, {b0, b1});
  CHECK(solver.rank() == 2);

  Vec v = vec_zero(q, 3);
  vec_add_scaled(v, b0, Scalar::of(q, 2));
  vec_add_scaled(v, b1, Scalar::of(q, -3));
  auto coords = solver.coordinates(v);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Scalar::of(q, 2));
  CHECK((*coords)[1] == Scalar::of(q, -3));

  Vec off = {Scalar::of(q, 1), Scalar::of(q, 0), Scalar::of(q, 0)};
  CHECK_FALSE(solver.coordinates(off).has_value());
}
