#include <doctest.h>

#include "support.hpp"

#include <secular/error.hpp>
#include <secular/invariants.hpp>
#include <secular/spectral.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>

using namespace secular;
using secular::testing::Rng;

namespace {

const QMatrix kSym3{{1, -1, 0}, {-1, 2, 1}, {0, 1, 1}};

UPoly lin(const Rat& r) { return UPoly::linear_root(r); }

PMatrix char_matrix(const QMatrix& m) { return Pencil::standard(m).characteristic_matrix(); }

// Sign counts from a floating symmetric eigensolver.
struct Counts {
  int pos = 0, neg = 0, zero = 0;
};
Counts eigen_counts(const QMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.to_eigen(), Eigen::EigenvaluesOnly);
  Counts c;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (v > 1e-9)
      ++c.pos;
    else if (v < -1e-9)
      ++c.neg;
    else
      ++c.zero;
  }
  return c;
}

}  // namespace

TEST_CASE("minor gcd chains") {
  const QMatrix one = QMatrix::identity(3);
  const auto chain = minor_gcd_chain(char_matrix(one));
  REQUIRE(chain.deltas.size() == 3);
  CHECK(chain.deltas[0] == lin(Rat(1)));
  CHECK(chain.deltas[1] == pow(lin(Rat(1)), 2));
  CHECK(chain.deltas[2] == pow(lin(Rat(1)), 3));

  const auto c23 = minor_gcd_chain(char_matrix(kSym3));
  CHECK(c23.deltas[0] == UPoly::constant(Rat(1)));
  CHECK(c23.deltas[1] == UPoly::constant(Rat(1)));
  CHECK(c23.deltas[2] == UPoly::x() * lin(Rat(1)) * lin(Rat(3)));

  // companion matrix of (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
  const QMatrix comp{{0, 0, 2}, {1, 0, -5}, {0, 1, 4}};
  const auto cc = minor_gcd_chain(char_matrix(comp));
  CHECK(cc.deltas[0] == UPoly::constant(Rat(1)));
  CHECK(cc.deltas[1] == UPoly::constant(Rat(1)));
  CHECK(cc.deltas[2] == pow(lin(Rat(1)), 2) * lin(Rat(2)));

  const QMatrix zero(2, 2);
  CHECK_THROWS_AS(minor_gcd_chain(Pencil(zero, zero, Orientation::kSAMinusB).characteristic_matrix()),
                  SingularPencilError);
}

TEST_CASE("invariant factors and elementary divisors") {
  const auto inv1 = invariant_factors(minor_gcd_chain(char_matrix(QMatrix::identity(3))));
  for (const auto& f : inv1.factors) CHECK(f == lin(Rat(1)));

  const auto inv23 = invariant_factors(minor_gcd_chain(char_matrix(kSym3)));
  CHECK(inv23.factors[2] == UPoly::x() * lin(Rat(1)) * lin(Rat(3)));

  const QMatrix d223 = QMatrix::diagonal({2, 2, 3});
  const auto inv = invariant_factors(minor_gcd_chain(char_matrix(d223)));
  CHECK(inv.factors[0] == UPoly::constant(Rat(1)));
  CHECK(inv.factors[1] == lin(Rat(2)));
  CHECK(inv.factors[2] == lin(Rat(2)) * lin(Rat(3)));

  const auto ed = elementary_divisors(inv);
  std::vector<UPoly> got;
  for (const auto& d : ed.divisors) got.push_back(pow(d.factor, static_cast<unsigned>(d.exponent)));
  CHECK(got.size() == 3);
  CHECK(std::count(got.begin(), got.end(), lin(Rat(2))) == 2);
  CHECK(std::count(got.begin(), got.end(), lin(Rat(3))) == 1);

  InvariantFactors sextic;
  sextic.factors = {pow(lin(Rat(1)), 2) * pow(lin(Rat(2)), 3) * lin(Rat(3))};
  const auto ed8 = elementary_divisors(sextic);
  REQUIRE(ed8.divisors.size() == 3);
  std::vector<int> exps;
  for (const auto& d : ed8.divisors) exps.push_back(d.exponent);
  std::sort(exps.begin(), exps.end());
  CHECK(exps == std::vector<int>{1, 2, 3});
}

TEST_CASE("chain property: divisibility and product on random matrices") {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const QMatrix m = testing::random_matrix(rng, n, n, 4);
    const auto chain = minor_gcd_chain(char_matrix(m));
    for (std::size_t k = 0; k + 1 < chain.deltas.size(); ++k) CHECK(divides(chain.deltas[k], chain.deltas[k + 1]));
    CHECK(chain.deltas.back() == testing::det_oracle(char_matrix(m)).monic());
    const auto inv = invariant_factors(chain);
    UPoly prod = UPoly::constant(Rat(1));
    for (std::size_t k = 0; k < inv.factors.size(); ++k) {
      prod *= inv.factors[k];
      if (k + 1 < inv.factors.size()) CHECK(divides(inv.factors[k], inv.factors[k + 1]));
    }
    CHECK(prod == chain.deltas.back());
  }
}

TEST_CASE("diagonalizability") {
  CHECK(is_diagonalizable(Pencil::standard(kSym3)).diagonalizable);
  const QMatrix comp{{0, -1}, {1, 2}};  // companion of (x-1)^2
  const auto r = is_diagonalizable(Pencil::standard(comp));
  CHECK_FALSE(r.diagonalizable);
  REQUIRE(r.witnesses.size() == 1);
  CHECK_FALSE(r.witnesses[0].annihilates);
  const auto id = is_diagonalizable(Pencil::standard(QMatrix::identity(2)));
  CHECK(id.diagonalizable);
  REQUIRE(id.witnesses.size() == 1);
  CHECK(id.witnesses[0].annihilates);
  CHECK_THROWS_AS(is_diagonalizable(Pencil(kSym3, kSym3, Orientation::kSAMinusB)), PreconditionError);
}

TEST_CASE("inertia by minors and by congruence") {
  const auto r = inertia(QMatrix{{1, 2}, {2, 1}});
  CHECK(r.positives == 1);
  CHECK(r.negatives == 1);
  CHECK(r.minor_sequence == std::vector<Rat>{-3, 1, 1});
  CHECK(inertia(QMatrix::identity(4)).positives == 4);
  const auto r23 = inertia(kSym3);
  CHECK(r23.positives == 2);
  CHECK(r23.zeros == 1);
  CHECK(r23.negatives == 0);
  CHECK(r23.method == InertiaMethod::kCongruenceFallback);
  CHECK_THROWS_AS(inertia_by_minors(kSym3), PreconditionError);

  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const QMatrix m = testing::random_symmetric(rng, n, 5, 2);
    const InertiaReport a = inertia(m);
    const Counts c = eigen_counts(m);
    CHECK(a.positives == c.pos);
    CHECK(a.negatives == c.neg);
    CHECK(a.zeros == c.zero);
    CHECK(a.positives + a.negatives + a.zeros == static_cast<int>(n));
  }
}

TEST_CASE("Darboux signature steps") {
  const auto s = darboux_signature_steps(QMatrix::diagonal({1, 2}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].root.value == 1);
  CHECK(s[0].jump == -1);
  CHECK(s[1].root.value == 2);
  CHECK(s[1].jump == -1);

  const auto s23 = darboux_signature_steps(kSym3);
  REQUIRE(s23.size() == 3);
  for (const auto& st : s23) CHECK(st.jump == -1);

  const auto s22 = darboux_signature_steps(QMatrix::diagonal({2, 2}));
  REQUIRE(s22.size() == 1);
  CHECK(s22[0].jump == -2);

  // irrational eigenvalues (1 +- sqrt 2)
  const auto si = darboux_signature_steps(QMatrix{{1, 1}, {1, -1}} + QMatrix::identity(2));
  REQUIRE(si.size() == 2);
  for (const auto& st : si) CHECK(st.jump == -st.root.multiplicity);
}

TEST_CASE("serial minor chain matches") {
  Rng rng(8);
  for (int i = 0; i < 5; ++i) {
    const QMatrix m = testing::random_matrix(rng, 4, 4, 3);
    CHECK(minor_gcd_chain(char_matrix(m)).deltas == reference::minor_gcd_chain(char_matrix(m)).deltas);
  }
}
