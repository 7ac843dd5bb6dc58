#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "walkinv/error.hpp"
#include "walkinv/linalg.hpp"

using namespace walkinv;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no walkinv::Error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(GraphMatrices, LaplacianOfK2) {
  EXPECT_EQ(laplacian(complete(2)), (RationalMatrix{{1, -1}, {-1, 1}}));
}

TEST(GraphMatrices, TransitionOfK3) {
  const RationalMatrix m = transition(complete(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), i == j ? q(0) : q(1, 2));
}

TEST(GraphMatrices, NMatrixOfPath3) {
  const RationalMatrix nm = n_matrix(path(3));
  EXPECT_EQ(nm(1, 0), q(-1, 2));
  EXPECT_EQ(nm(1, 1), q(1));
  EXPECT_EQ(nm(1, 2), q(-1, 2));
}

TEST(GraphMatrices, StructuralPropertiesOnAllGraphsUpToFive) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const RationalMatrix l = laplacian(g), m = transition(g), nm = n_matrix(g);
      EXPECT_TRUE(l.is_symmetric());
      EXPECT_EQ(degree_matrix(g) * RationalMatrix::identity(n), degree_matrix(g));
      for (std::size_t i = 0; i < n; ++i) {
        Rational lsum = 0, msum = 0, nsum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          lsum += l(i, j);
          msum += m(i, j);
          nsum += nm(i, j);
          EXPECT_EQ(l(i, j), degree_matrix(g)(i, j) - adjacency_matrix(g)(i, j));
        }
        EXPECT_EQ(lsum, 0);
        EXPECT_EQ(msum, 1);
        EXPECT_EQ(nsum, 0);
      }
    }
  }
}

TEST(DeleteRc, Examples) {
  const RationalMatrix l3 = laplacian(complete(3));
  EXPECT_EQ(delete_rc(l3, {0}), (RationalMatrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(delete_rc(laplacian(complete(2)), {0}), (RationalMatrix{{1}}));
  EXPECT_EQ(delete_rc(l3, {0, 1}), (RationalMatrix{{2}}));
  EXPECT_EQ(delete_rc(l3, {1, 1}), delete_rc(l3, {1}));
}

TEST(DeleteRc, Errors) {
  const RationalMatrix l3 = laplacian(complete(3));
  EXPECT_EQ(code_of([&] { delete_rc(l3, {3}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { delete_rc(l3, {0, 1, 2}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { delete_rc(RationalMatrix(2, 3), {0}); }), ErrorCode::DimensionMismatch);
}

TEST(Det, SpanningTreeExamples) {
  EXPECT_EQ(det(delete_rc(laplacian(complete(3)), {0})), 3);
  EXPECT_EQ(det(delete_rc(laplacian(path(3)), {0})), 1);
  EXPECT_EQ(det(RationalMatrix(0, 0)), 1);
}

TEST(Det, MatchesLeibnizOnRandomRationalMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 1 + trial % 6;
    const RationalMatrix a = oracle::random_matrix(rng, dim);
    EXPECT_EQ(det(a), oracle::leibniz_det(a)) << "dim " << dim;
  }
}

TEST(Det, SingularMatrixIsZero) {
  EXPECT_EQ(det(RationalMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(det(laplacian(cycle(5))), 0);
}

TEST(Solve, MultiplyBackReproducesRhsExactly) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(-9, 9);
  int solved = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int dim = 1 + trial % 7;
    const RationalMatrix a = oracle::random_matrix(rng, dim);
    if (oracle::leibniz_det(a) == 0) continue;
    std::vector<Rational> rhs;
    for (int i = 0; i < dim; ++i) rhs.push_back(q(num(rng), 3));
    const std::vector<Rational> x = solve(a, rhs);
    EXPECT_EQ(a * std::span<const Rational>(x), rhs);
    ++solved;
  }
  EXPECT_GT(solved, 60);
}

TEST(Solve, Errors) {
  const std::vector<Rational> rhs{1, 1};
  EXPECT_EQ(code_of([&] { solve(RationalMatrix{{1, 2}, {2, 4}}, rhs); }), ErrorCode::SingularMatrix);
  EXPECT_EQ(code_of([&] { solve(RationalMatrix{{1}}, rhs); }), ErrorCode::DimensionMismatch);
}

TEST(Inverse, MatchesOracleAndIdentity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 1 + trial % 5;
    const RationalMatrix a = oracle::random_matrix(rng, dim);
    if (oracle::leibniz_det(a) == 0) continue;
    const RationalMatrix inv = inverse(a);
    EXPECT_EQ(inv, oracle::gauss_jordan_inverse(a));
    EXPECT_EQ(a * inv, RationalMatrix::identity(dim));
  }
  EXPECT_EQ(code_of([] { inverse(RationalMatrix{{0, 0}, {0, 1}}); }), ErrorCode::SingularMatrix);
}

TEST(Polynomial, TrimsAndEvaluates) {
  const Polynomial p({q(1), q(0), q(2), q(0), q(0)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(q(3)), 19);
  EXPECT_EQ(p.coefficient(7), 0);
  EXPECT_EQ(Polynomial({q(0)}).degree(), -1);
}

TEST(Interpolate, RecoversCubic) {
  const Polynomial cubic({q(-1), q(1, 2), q(0), q(3)});
  std::vector<Rational> xs, ys;
  for (long t : {-2L, 0L, 1L, 5L}) {
    xs.push_back(t);
    ys.push_back(cubic.evaluate(t));
  }
  EXPECT_EQ(interpolate(xs, ys), cubic);
}

TEST(Charpoly, K2Laplacian) {
  EXPECT_EQ(charpoly(laplacian(complete(2))), Polynomial({q(0), q(-2), q(1)}));
}

TEST(Charpoly, K3Laplacian) {
  EXPECT_EQ(charpoly(laplacian(complete(3))), Polynomial({q(0), q(9), q(-6), q(1)}));
}

TEST(Charpoly, MonicAndConstantTermIsSignedDeterminant) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + trial % 6;
    const RationalMatrix a = oracle::random_matrix(rng, dim);
    const Polynomial p = charpoly(a);
    ASSERT_EQ(p.degree(), dim);
    EXPECT_EQ(p.coefficient(dim), 1);
    const Rational sign = dim % 2 ? -1 : 1;
    EXPECT_EQ(p.evaluate(0), sign * oracle::leibniz_det(a));
    // Trace appears as minus the subleading coefficient.
    Rational trace = 0;
    for (int i = 0; i < dim; ++i) trace += a(i, i);
    EXPECT_EQ(p.coefficient(dim - 1), -trace);
  }
}

TEST(Bivariate, K2ClosedForm) {
  // (u+v-1)^2 - 1 = u^2 + v^2 + 2uv - 2u - 2v
  const BivariatePoly p = bivariate_det(complete(2));
  EXPECT_EQ(p.coefficient(2, 0), 1);
  EXPECT_EQ(p.coefficient(0, 2), 1);
  EXPECT_EQ(p.coefficient(1, 1), 2);
  EXPECT_EQ(p.coefficient(1, 0), -2);
  EXPECT_EQ(p.coefficient(0, 1), -2);
  EXPECT_EQ(p.coefficient(0, 0), 0);
  EXPECT_EQ(p.evaluate(q(1, 2), q(3)), (q(1, 2) + 3 - 1) * (q(1, 2) + 3 - 1) - 1);
}

TEST(Bivariate, MatchesLeibnizExpansionOnSmallGraphs) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const BivariatePoly p = bivariate_det(g);
      const oracle::Bivariate ref = oracle::leibniz_puv(g);
      for (std::size_t i = 0; i <= n + 1; ++i) {
        for (std::size_t j = 0; j <= n + 1; ++j) {
          const auto it = ref.find({static_cast<int>(i), static_cast<int>(j)});
          const Rational expected = it == ref.end() ? Rational(0) : it->second;
          ASSERT_EQ(p.coefficient(i, j), expected) << "n=" << n << " u^" << i << " v^" << j;
        }
      }
    }
  }
}

TEST(Bivariate, OriginVanishesAndUSliceIsCharpoly) {
  for (const Graph& g : {path(3), complete(3), star(5), cycle(5)}) {
    const BivariatePoly p = bivariate_det(g);
    EXPECT_EQ(p.evaluate(0, 0), 0);
    EXPECT_EQ(p.restrict_v(0), charpoly(laplacian(g)));
  }
}

TEST(Properties, AllPrincipalCofactorsEqualSpanningTreeCount) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const RationalMatrix l = laplacian(g);
      const Rational tau = det(delete_rc(l, {0}));
      for (std::size_t v = 1; v < n; ++v) ASSERT_EQ(det(delete_rc(l, {v})), tau);
      if (n <= 5) ASSERT_EQ(tau, oracle::spanning_trees_by_subsets(g));
    }
  }
}
