#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlattice/errors.hpp"
#include "spinlattice/random.hpp"
#include "spinlattice/tensor.hpp"

using namespace spinlattice;

namespace {
const cx I1(0, 1);

double mdiff(const MatrixC& a, const MatrixC& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("pauli algebra") {
  MatrixC sx = pauli(PauliAxis::X), sy = pauli(PauliAxis::Y), sz = pauli(PauliAxis::Z);
  // [sigma^a, sigma^b] = 2i eps_abc sigma^c, checked exactly for all 9 pairs
  MatrixC zero = MatrixC::Zero(2, 2);
  auto comm = [](const MatrixC& a, const MatrixC& b) { return MatrixC(a * b - b * a); };
  CHECK(mdiff(comm(sx, sx), zero) == 0.0);
  CHECK(mdiff(comm(sy, sy), zero) == 0.0);
  CHECK(mdiff(comm(sz, sz), zero) == 0.0);
  CHECK(mdiff(comm(sx, sy), 2.0 * I1 * sz) == 0.0);
  CHECK(mdiff(comm(sy, sx), -2.0 * I1 * sz) == 0.0);
  CHECK(mdiff(comm(sy, sz), 2.0 * I1 * sx) == 0.0);
  CHECK(mdiff(comm(sz, sy), -2.0 * I1 * sx) == 0.0);
  CHECK(mdiff(comm(sz, sx), 2.0 * I1 * sy) == 0.0);
  CHECK(mdiff(comm(sx, sz), -2.0 * I1 * sy) == 0.0);

  for (MatrixC s : {sx, sy, sz}) {
    CHECK(mdiff(s * s, pauli_id()) == 0.0);       // squares to identity
    CHECK(mdiff(s, s.adjoint()) == 0.0);          // Hermitian
    CHECK(std::abs(s.trace()) == 0.0);            // traceless
  }
}

TEST_CASE("kronecker convention pinned") {
  MatrixC a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  MatrixC expected(4, 4);
  expected << 0, 5, 0, 10,
              6, 7, 12, 14,
              0, 15, 0, 20,
              18, 21, 24, 28;
  CHECK(mdiff(kron(a, b), expected) == 0.0);
}

TEST_CASE("embed inserts identity legs") {
  Region chain = Region::line(0, 2);
  LocalOperator a = pauli_at(Site{1}, PauliAxis::Z);
  LocalOperator e = embed(a, chain);
  REQUIRE(e.dim() == 8);
  CHECK(mdiff(e.matrix, kron(kron(pauli_id(), pauli(PauliAxis::Z)), pauli_id())) == 0.0);
  CHECK(operator_norm(e) == doctest::Approx(operator_norm(a)).epsilon(1e-12));

  // identity case and two-step composition
  CHECK(mdiff(embed(a, a.support).matrix, a.matrix) == 0.0);
  Region mid = Region::line(0, 1);
  LocalOperator via = embed(embed(pauli_at(Site{0}, PauliAxis::X), mid), chain);
  LocalOperator direct = embed(pauli_at(Site{0}, PauliAxis::X), chain);
  CHECK(mdiff(via.matrix, direct.matrix) == 0.0);

  CHECK_THROWS_AS(embed(pauli_at(Site{5}, PauliAxis::X), chain), std::invalid_argument);
}

TEST_CASE("embed is a *-homomorphism") {
  Rng rng(11);
  Region sup = Region::open({Site{0}, Site{2}});
  Region target = Region::line(0, 3);
  for (int it = 0; it < 20; ++it) {
    LocalOperator a(sup, random_gaussian(4, rng));
    LocalOperator b(sup, random_gaussian(4, rng));
    CHECK(mdiff(embed(LocalOperator(sup, a.matrix * b.matrix), target).matrix,
                embed(a, target).matrix * embed(b, target).matrix) < 1e-12);
    CHECK(mdiff(embed(adjoint(a), target).matrix, embed(a, target).matrix.adjoint()) < 1e-12);
  }
}

TEST_CASE("operator_norm") {
  CHECK(operator_norm(pauli(PauliAxis::Z)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(MatrixC(2.0 * kron(pauli(PauliAxis::X), pauli(PauliAxis::X)))) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // oracle: sqrt of the largest eigenvalue of A^* A from a separate eigensolve
  Rng rng(23);
  for (int it = 0; it < 10; ++it) {
    MatrixC a = random_gaussian(16, rng);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(MatrixC(a.adjoint() * a));
    double expected = std::sqrt(es.eigenvalues()(15));
    CHECK(operator_norm(a) == doctest::Approx(expected).epsilon(1e-10));

    MatrixC h = random_hermitian(16, rng);  // exercises the Hermitian fast path
    Eigen::SelfAdjointEigenSolver<MatrixC> esh(MatrixC(h.adjoint() * h));
    CHECK(operator_norm(h) == doctest::Approx(std::sqrt(esh.eigenvalues()(15))).epsilon(1e-10));
  }
}

TEST_CASE("operator_norm C*-property and submultiplicativity") {
  Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    MatrixC a = random_gaussian(8, rng), b = random_gaussian(8, rng);
    double na = operator_norm(a);
    CHECK(operator_norm(MatrixC(a.adjoint() * a)) == doctest::Approx(na * na).epsilon(1e-9));
    CHECK(operator_norm(MatrixC(a * b)) <= na * operator_norm(b) * (1 + 1e-12));
  }
}

TEST_CASE("commutator") {
  // disjoint supports commute
  LocalOperator a = pauli_at(Site{0}, PauliAxis::X);
  LocalOperator b = pauli_at(Site{3}, PauliAxis::Y);
  CHECK(operator_norm(commutator(a, b)) == 0.0);
  CHECK(commutator(a, b).support == region_union(a.support, b.support));

  LocalOperator sx = pauli_at(Site{0}, PauliAxis::X);
  LocalOperator sy = pauli_at(Site{0}, PauliAxis::Y);
  LocalOperator sz = pauli_at(Site{0}, PauliAxis::Z);
  CHECK(mdiff(commutator(sx, sy).matrix, (2.0 * I1 * sz).matrix) == 0.0);

  Rng rng(17);
  LocalOperator r(Region::line(0, 1), random_gaussian(4, rng));
  CHECK(operator_norm(commutator(r, r)) == 0.0);
}

TEST_CASE("hermitian_eig") {
  HermitianEigen ez = hermitian_eig(pauli(PauliAxis::Z));
  CHECK(ez.values(0) == doctest::Approx(-1.0));
  CHECK(ez.values(1) == doctest::Approx(1.0));
  HermitianEigen ei = hermitian_eig(MatrixC::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(ei.values(i) == doctest::Approx(1.0));

  Rng rng(29);
  for (int it = 0; it < 10; ++it) {
    MatrixC h = random_hermitian(8, rng);
    HermitianEigen e = hermitian_eig(h);
    MatrixC rebuilt = e.vectors * e.values.cast<cx>().asDiagonal() * e.vectors.adjoint();
    CHECK((rebuilt - h).norm() <= 1e-9 * h.norm());
    CHECK((e.vectors.adjoint() * e.vectors - MatrixC::Identity(8, 8)).norm() < 1e-10);
    for (int i = 0; i + 1 < 8; ++i) CHECK(e.values(i) <= e.values(i + 1));
  }

  CHECK_THROWS_AS(hermitian_eig(random_gaussian(4, rng)), std::invalid_argument);
}

TEST_CASE("evolve_operator") {
  LocalOperator h = pauli_at(Site{0}, PauliAxis::Z);
  LocalOperator a = pauli_at(Site{0}, PauliAxis::X);

  CHECK(mdiff(evolve_operator(h, a, 0).matrix, a.matrix) < 1e-14);

  // alpha_t(sigma^x) = cos(2t) sigma^x - sin(2t) sigma^y for H = sigma^z
  for (double t : {0.2, 0.9, -1.3}) {
    MatrixC expected = std::cos(2 * t) * pauli(PauliAxis::X) - std::sin(2 * t) * pauli(PauliAxis::Y);
    CHECK(mdiff(evolve_operator(h, a, t).matrix, expected) < 1e-12);
  }

  // complex time, closed form: entries (0,1) -> e^{2iz}, (1,0) -> e^{-2iz}
  cx z(0.3, 0.2);
  MatrixC expected(2, 2);
  expected << 0, std::exp(2.0 * I1 * z), std::exp(-2.0 * I1 * z), 0;
  CHECK(mdiff(evolve_operator(h, a, z).matrix, expected) < 1e-12);

  // norm preservation at real time on a bigger window
  Rng rng(31);
  Region chain = Region::line(0, 2);
  LocalOperator hh(chain, random_hermitian(8, rng));
  LocalOperator aa(chain, random_gaussian(8, rng));
  CHECK(operator_norm(evolve_operator(hh, aa, 0.7)) ==
        doctest::Approx(operator_norm(aa)).epsilon(1e-9));

  // one-parameter group and multiplicativity
  LocalOperator bb(chain, random_gaussian(8, rng));
  LocalOperator once = evolve_operator(hh, evolve_operator(hh, aa, 0.4), 0.3);
  CHECK(mdiff(once.matrix, evolve_operator(hh, aa, 0.7).matrix) < 1e-9);
  CHECK(mdiff(evolve_operator(hh, aa * bb, 0.5).matrix,
              (evolve_operator(hh, aa, 0.5) * evolve_operator(hh, bb, 0.5)).matrix) < 1e-9);

  // overflow guard
  CHECK_THROWS_AS(evolve_operator(cx(500, 0) * h, a, cx(0, 1)), guard_error);
}

TEST_CASE("partial_trace") {
  Rng rng(37);
  MatrixC x = random_gaussian(2, rng), y = random_gaussian(2, rng);
  Region pair = Region::line(0, 1);
  LocalOperator xy(pair, kron(x, y));
  LocalOperator first = partial_trace(xy, Region::open({Site{0}}));
  CHECK(mdiff(first.matrix, MatrixC(x * y.trace())) < 1e-12);

  // identity on n legs traces to 2^{n-k} identity
  Region three = Region::line(0, 2);
  LocalOperator id3 = identity_on(three);
  LocalOperator kept = partial_trace(id3, Region::open({Site{1}}));
  CHECK(mdiff(kept.matrix, MatrixC(4.0 * pauli_id())) == 0.0);

  // quadruple-loop oracle on a random 2-site operator
  LocalOperator a(pair, random_gaussian(4, rng));
  MatrixC oracle = MatrixC::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) oracle(i, j) += a.matrix(i * 2 + k, j * 2 + k);
  CHECK(mdiff(partial_trace(a, Region::open({Site{0}})).matrix, oracle) < 1e-14);
  CHECK(std::abs(trace(partial_trace(a, Region::open({Site{0}}))) - trace(a)) < 1e-12);

  CHECK_THROWS_AS(partial_trace(a, Region::open({Site{7}})), std::invalid_argument);

  // tracing out the legs added by embed recovers A times the complement dimension
  LocalOperator local = pauli_at(Site{1}, PauliAxis::Y);
  Region window = Region::line(0, 3);
  LocalOperator back = partial_trace(embed(local, window), local.support);
  CHECK(mdiff(back.matrix, MatrixC(8.0 * local.matrix)) < 1e-12);
}

TEST_CASE("conditional_expectation") {
  Region pair = Region::line(0, 1);
  Region first = Region::open({Site{0}});

  // operator already supported on `onto` is unchanged
  LocalOperator a = embed(pauli_at(Site{0}, PauliAxis::Z), pair);
  LocalOperator tw = conditional_expectation(a, first);
  CHECK(mdiff(embed(tw, pair).matrix, a.matrix) < 1e-12);

  // sigma^x ox sigma^x twirls to zero
  LocalOperator xx(pair, kron(pauli(PauliAxis::X), pauli(PauliAxis::X)));
  CHECK(operator_norm(conditional_expectation(xx, first)) < 1e-14);

  // idempotent
  Rng rng(41);
  LocalOperator r(pair, random_gaussian(4, rng));
  LocalOperator once = conditional_expectation(r, first);
  CHECK(mdiff(conditional_expectation(embed(once, pair), first).matrix, once.matrix) < 1e-12);

  // commutator smallness against the complement basis bounds the twirl error
  // with module constant c = complement dimension
  for (int it = 0; it < 10; ++it) {
    LocalOperator nearlocal =
        embed(LocalOperator(first, random_gaussian(2, rng)), pair) +
        LocalOperator(pair, 0.01 * random_gaussian(4, rng));
    double na = operator_norm(nearlocal);
    double eps = 0;
    for (PauliAxis ax : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
      LocalOperator p = embed(pauli_at(Site{1}, ax), pair);
      eps = std::max(eps, operator_norm(commutator(nearlocal, p)) / na);
    }
    double err = operator_norm(nearlocal - embed(conditional_expectation(nearlocal, first), pair));
    CHECK(err <= 2.0 * eps * na + 1e-12);
  }
}

TEST_CASE("formatting") {
  CHECK(format_real(1.0) == "1.0000000000000000e+00");
  CHECK(format_complex(cx(0.5, -0.25)) == "5.0000000000000000e-01-2.5000000000000000e-01j");
}
