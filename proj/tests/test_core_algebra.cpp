#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcs4/json_io.hpp"
#include "gcs4/linalg.hpp"
#include "test_util.hpp"

using namespace gcs4;

TEST_CASE("Rational: construction, reduction, canonical forms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("Rational: field arithmetic") {
  Rational a(2, 3), b(-5, 7);
  CHECK(a + b == Rational(-1, 21));
  CHECK(a * b == Rational(-10, 21));
  CHECK(a / b == Rational(-14, 15));
  CHECK((a - a).is_zero());
  CHECK(a.inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(-7, 2) < Rational(1, 3));
}

TEST_CASE("Rational: string round trip") {
  for (const char* s : {"0", "7", "-3", "5/3", "-12/35", "100000000000000000001/3"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/6").str() == "2/3");  // reduced on parse
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("GaussianRational: field laws and conjugation involution") {
  GaussianRational z(Rational(1, 2), Rational(-3));
  GaussianRational w(Rational(2), Rational(1, 5));
  CHECK((z * w) / w == z);
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);

  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 50; ++t) {
    auto a = testutil::rand_gaussian(rng);
    auto b = testutil::rand_gaussian(rng);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("rref: worked examples") {
  QMatrix id3 = QMatrix::identity(3);
  CHECK(rref(id3) == id3);

  QMatrix m{{Rational(2), Rational(4)}, {Rational(1), Rational(2)}};
  QMatrix expect{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}};
  CHECK(rref(m) == expect);
}

TEST_CASE("rref: idempotent and span-preserving on random matrices") {
  std::mt19937_64 rng(20240812);
  for (int t = 0; t < 40; ++t) {
    QMatrix m = testutil::rand_qmatrix(rng, 4, 6);
    QMatrix r = rref(m);
    CHECK(rref(r) == r);
    // Row span preserved: mutual containment, decided by an independent
    // solve-based membership oracle.
    for (std::size_t i = 0; i < m.rows(); ++i) {
      CHECK(testutil::in_row_span_via_solve(r, m.row(i)));
      CHECK(testutil::in_row_span_via_solve(m, r.row(i)));
    }
  }
}

TEST_CASE("rank, kernel, solve: basic contracts") {
  CHECK(kernel_basis(QMatrix::zero(4, 4)) == QMatrix::identity(4));
  CHECK(rank(QMatrix::zero(4, 4)) == 0);

  // Skew rank-2 matrix supported on the (1,2)-plane inside dimension 4.
  QMatrix biv(4, 4);
  biv(0, 1) = Rational(-1);
  biv(1, 0) = Rational(1);
  CHECK(rank(biv) == 2);

  QMatrix m{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
  QVec b{Rational(0), Rational(1)};
  auto x = solve(m, b);
  CHECK(!x.has_value());
  // Oracle: unsolvable exactly when the augmented rank exceeds rank(m).
  QMatrix aug(2, 3);
  aug.set_block(0, 0, m);
  aug(0, 2) = b[0];
  aug(1, 2) = b[1];
  CHECK(rank(aug) > rank(m));

  CHECK_THROWS_AS(solve(m, QVec{Rational(1)}), std::invalid_argument);
}

TEST_CASE("rank-nullity and solve correctness on random systems") {
  std::mt19937_64 rng(20240813);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t r = dim(rng), c = dim(rng);
    QMatrix m = testutil::rand_qmatrix(rng, r, c);
    CHECK(rank(m) + kernel_basis(m).rows() == c);

    QMatrix k = kernel_basis(m);
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero_vec(m * k.row(i)));

    // Solvable instance: manufacture b = m*x0 and verify the returned solution.
    QVec x0 = testutil::rand_qvec(rng, c);
    QVec b = m * x0;
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
}

TEST_CASE("complex linear algebra mirrors the rational one") {
  std::mt19937_64 rng(20240814);
  for (int t = 0; t < 25; ++t) {
    CMatrix m = testutil::rand_cmatrix(rng, 3, 5);
    CHECK(rank(m) + kernel_basis(m).rows() == 5);
    CHECK(rref(rref(m)) == rref(m));
  }
  CMatrix j{{GaussianRational::i()}};
  CHECK(inverse(j)(0, 0) == -GaussianRational::i());
}

TEST_CASE("inverse: exactness and error on singular input") {
  std::mt19937_64 rng(20240815);
  int invertible_seen = 0;
  for (int t = 0; t < 40; ++t) {
    QMatrix m = testutil::rand_qmatrix(rng, 4, 4);
    if (rank(m) < 4) {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
      continue;
    }
    ++invertible_seen;
    CHECK(m * inverse(m) == QMatrix::identity(4));
  }
  CHECK(invertible_seen > 10);
}

TEST_CASE("Subspace: canonical equality and worked intersections") {
  auto e = [](int i) {
    QVec v(4);
    v[i] = Rational(1);
    return v;
  };
  auto s12 = QSubspace::span(4, {e(0), e(1)});
  auto s23 = QSubspace::span(4, {e(1), e(2)});
  CHECK(intersect(s12, s23) == QSubspace::span(4, {e(1)}));
  CHECK(sum(s12, s23).dim() == 3);
  CHECK(quotient_dim(sum(s12, s23), s12) == 1);
  CHECK_THROWS_AS(quotient_dim(s12, s23), std::invalid_argument);

  // Same span, different generators → identical canonical basis.
  auto a = QSubspace::span(4, {e(0) + e(1), e(1)});
  CHECK(a == s12);
}

TEST_CASE("Subspace: dimension formula and containment cross-check") {
  std::mt19937_64 rng(20240816);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> cnt(0, 4);
    QMatrix ga = testutil::rand_qmatrix(rng, cnt(rng), 5);
    QMatrix gb = testutil::rand_qmatrix(rng, cnt(rng), 5);
    auto a = QSubspace::row_span(ga);
    auto b = QSubspace::row_span(gb);
    auto s = sum(a, b);
    auto i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));

    // Equality of canonical bases ⇔ mutual containment (independent oracle).
    bool mutual = a.contains(b) && b.contains(a);
    CHECK(mutual == (a == b));
    for (std::size_t r = 0; r < i.dim(); ++r) {
      CHECK(testutil::in_row_span_via_solve(ga, i.basis_vector(r)));
      CHECK(testutil::in_row_span_via_solve(gb, i.basis_vector(r)));
    }
  }
}

TEST_CASE("congruence diagonalization: signature basics") {
  auto r1 = congruence_diagonalize(QMatrix::identity(3));
  CHECK(r1.positives == 3);
  CHECK(r1.positive_definite());

  QMatrix d{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
  auto r2 = congruence_diagonalize(d);
  CHECK(r2.positives == 1);
  CHECK(r2.negatives == 1);
  CHECK(!r2.positive_definite());

  CHECK_THROWS_AS(congruence_diagonalize(QMatrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("congruence diagonalization: P^T s P = D exactly, zero pivots handled") {
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 50; ++t) {
    QMatrix s = testutil::rand_symmetric(rng, 5, -4, 4);
    auto res = congruence_diagonalize(s);
    QMatrix d(5, 5);
    for (std::size_t i = 0; i < 5; ++i) d(i, i) = res.diagonal[i];
    CHECK(res.transform.transpose() * s * res.transform == d);
    CHECK(rank(res.transform) == 5);
    CHECK(res.zeros == 5 - rank(s));
  }

  // Hyperbolic plane: zero diagonal throughout, needs the repair step.
  QMatrix h{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  auto rh = congruence_diagonalize(h);
  CHECK(rh.positives == 1);
  CHECK(rh.negatives == 1);
}

TEST_CASE("congruence signature is basis-independent") {
  std::mt19937_64 rng(20240818);
  for (int t = 0; t < 30; ++t) {
    QMatrix s = testutil::rand_symmetric(rng, 4, -3, 3);
    auto base = congruence_diagonalize(s);
    // Second run on a congruent copy in a mixed basis must agree
    // (Sylvester's law of inertia, checked rather than assumed).
    QMatrix c = testutil::rand_qmatrix(rng, 4, 4, -2, 2, 2);
    if (rank(c) < 4) continue;
    auto moved = congruence_diagonalize(c.transpose() * s * c);
    CHECK(moved.positives == base.positives);
    CHECK(moved.negatives == base.negatives);
    CHECK(moved.zeros == base.zeros);
  }
}

TEST_CASE("congruence diagonalization: degenerate plugged-in form has a zero entry") {
  // Restricted trace form on a 2-plane whose parameters collide
  // (x1^2 = y1^2, x1*x2 = y1*y2): the form degenerates and the diagonal
  // picks up an exact zero.
  Rational a1(1), a2(0), x1(1), y1(1), x2(2), y2(2);
  QMatrix q(2, 2);
  q(0, 0) = a2 * a2 + Rational(2) * (x1 * x1 - y1 * y1);
  q(0, 1) = -a1 * a2 + Rational(2) * (x1 * x2 - y1 * y2);
  q(1, 0) = q(0, 1);
  q(1, 1) = a1 * a1 + Rational(2) * (x2 * x2 - y2 * y2);
  auto res = congruence_diagonalize(q);
  CHECK(res.zeros >= 1);
}

TEST_CASE("JSON scalar and matrix encodings round-trip") {
  using io::json;
  Rational r(-12, 35);
  CHECK(io::to_json(r) == json("-12/35"));
  CHECK(io::rational_from_json(io::to_json(r)) == r);

  GaussianRational z(Rational(1, 2), Rational(-3, 7));
  json jz = io::to_json(z);
  CHECK(jz.at("re") == json("1/2"));
  CHECK(jz.at("im") == json("-3/7"));
  CHECK(io::gaussian_from_json(jz) == z);
  CHECK(io::gaussian_from_json(json("5/3")) == GaussianRational(Rational(5, 3)));

  std::mt19937_64 rng(20240819);
  QMatrix m = testutil::rand_qmatrix(rng, 3, 4);
  CHECK(io::qmatrix_from_json(io::to_json(m)) == m);
  CMatrix c = testutil::rand_cmatrix(rng, 2, 5);
  CHECK(io::cmatrix_from_json(io::to_json(c)) == c);
}
