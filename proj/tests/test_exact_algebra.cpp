#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkkp/multipoly.hpp"
#include "lgkkp/qmatrix.hpp"
#include "lgkkp/rational.hpp"
#include "lgkkp/subspace.hpp"
#include "support.hpp"

using namespace lgkkp;
using lgkkp::testing::leibniz_det;
using lgkkp::testing::minor_rank;
using lgkkp::testing::random_matrix;

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/6") == Rational{Integer(-2), Integer(3)});
    CHECK(parse_rational("10/5") == Rational(2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(to_string(parse_rational("-7/21")) == "-1/3");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("parse_rational_list")
{
    const QVector v = parse_rational_list("1,2,-3/4");
    REQUIRE(v.size() == 3);
    CHECK(v[2] == Rational{Integer(-3), Integer(4)});
    CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
}

TEST_CASE("rank agrees with largest nonzero minor")
{
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 60; ++rep) {
        std::uniform_int_distribution<std::size_t> d(1, 4);
        const std::size_t r = d(rng), c = d(rng);
        QMatrix M = random_matrix(rng, r, c, 2);
        if (rep % 3 == 0 && r > 1)  // force a dependent row
            for (std::size_t j = 0; j < c; ++j)
                M(r - 1, j) = M(0, j) * Rational(2) - M(r - 2 == 0 ? 0 : r - 2, j);
        CHECK(rank(M) == minor_rank(M));
    }
}

TEST_CASE("determinant agrees with Leibniz expansion")
{
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        std::uniform_int_distribution<std::size_t> d(1, 5);
        const std::size_t n = d(rng);
        const QMatrix M = random_matrix(rng, n, n, 4);
        CHECK(determinant(M) == leibniz_det(M));
    }
    CHECK(determinant(QMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("characteristic polynomial")
{
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<std::size_t> d(1, 4);
        const std::size_t n = d(rng);
        const QMatrix M = random_matrix(rng, n, n, 3);
        const QVector p = characteristic_polynomial(M);
        REQUIRE(p.size() == n + 1);
        CHECK(p[n] == 1);
        // det(tI - M) at integer t by Leibniz
        for (long t = -2; t <= 2; ++t) {
            Rational value = 0;
            Rational tp = 1;
            for (std::size_t k = 0; k <= n; ++k) {
                value += p[k] * tp;
                tp *= Rational(t);
            }
            CHECK(value == leibniz_det(QMatrix::identity(n) * Rational(t) - M));
        }
        // Cayley-Hamilton
        QMatrix sum(n, n);
        for (std::size_t k = 0; k <= n; ++k)
            sum = sum + M.power(static_cast<unsigned>(k)) * p[k];
        CHECK(sum.is_zero());
    }
}

TEST_CASE("matrix arithmetic")
{
    const QMatrix A{{1, 2}, {3, 4}};
    const QMatrix B{{0, 1}, {1, 0}};
    CHECK(A * B == QMatrix{{2, 1}, {4, 3}});
    CHECK(A.transpose() == QMatrix{{1, 3}, {2, 4}});
    CHECK(A.trace() == 5);
    CHECK(A.power(0) == QMatrix::identity(2));
    CHECK(A.apply({1, 1}) == QVector{3, 7});
    CHECK_THROWS(A * QMatrix(3, 3));
}

TEST_CASE("rref pivots")
{
    const RowEchelon e = rref(QMatrix{{0, 2, 4}, {0, 1, 2}, {1, 0, 1}});
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == QMatrix{{1, 0, 1}, {0, 1, 2}, {0, 0, 0}});
}

TEST_CASE("subspace canonical form")
{
    const Subspace a = Subspace::span(QMatrix{{1, 1, 0}, {0, 1, 1}});
    const Subspace b = Subspace::span(QMatrix{{1, 2, 1}, {1, 0, -1}});
    CHECK(a == b);
    CHECK(a.contains(QVector{2, 3, 1}));
    CHECK_FALSE(a.contains(QVector{1, 0, 0}));
    CHECK(Subspace::zero(3).dim() == 0);
    CHECK(Subspace::full(3).dim() == 3);
}

TEST_CASE("subspace operations satisfy the dimension formula")
{
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<std::size_t> d(0, 4);
        const std::size_t amb = 5;
        const Subspace A = Subspace::span(random_matrix(rng, d(rng), amb, 2));
        const Subspace B = Subspace::span(random_matrix(rng, d(rng), amb, 2));
        const Subspace S = sum(A, B);
        const Subspace I = intersect(A, B);
        CHECK(S.dim() + I.dim() == A.dim() + B.dim());
        CHECK(A.contains(I));
        CHECK(B.contains(I));
        CHECK(S.contains(A));
        CHECK(S.contains(B));
        CHECK(annihilator(A).dim() == amb - A.dim());
        CHECK(subspace_combine(CombineMode::Sum, A, B) == S);
        CHECK(subspace_combine(CombineMode::Intersect, A, B) == I);

        const QMatrix M = random_matrix(rng, amb, amb, 1);
        const Subspace pre = preimage(M, A);
        for (std::size_t i = 0; i < pre.dim(); ++i)
            CHECK(A.contains(M.apply(pre.basis_vector(i))));
        // pre contains the kernel, and image(M, pre) = A cap image(M)
        CHECK(pre.contains(kernel(M)));
        CHECK(image(M, pre) == intersect(A, image(M, Subspace::full(amb))));

        const auto comp = complement_basis(I, A);
        CHECK(comp.size() == A.dim() - I.dim());
    }
}

TEST_CASE("preimage restricted to a subspace")
{
    const QMatrix N{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    const Subspace full = Subspace::full(3);
    const Subspace zero = Subspace::zero(3);
    // {v : N v = 0} = span(e1)
    CHECK(subspace_combine(CombineMode::Preimage, zero, full, N) == Subspace::span(QMatrix{{1, 0, 0}}));
    CHECK_THROWS(subspace_combine(CombineMode::Preimage, zero, full));
}

TEST_CASE("rank_and_kernel")
{
    const RankKernel rk = rank_and_kernel(QMatrix{{1, 2, 3}, {2, 4, 6}});
    CHECK(rk.rank == 1);
    CHECK(rk.kernel.dim() == 2);
    CHECK(rk.kernel.contains(QVector{-2, 1, 0}));
}

TEST_CASE("multivariate polynomials")
{
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    const MultiPoly p = x * x * y + y * Rational(3) - MultiPoly::constant(2, 1);
    CHECK(p.total_degree() == 3);
    CHECK(p.evaluate({2, 5}) == 34);
    CHECK(poly_partial(p, 0) == x * y * Rational(2));
    CHECK(poly_partial(p, 1) == x * x + MultiPoly::constant(2, 3));
    CHECK((p - p).is_zero());
    CHECK(p.to_string({"x", "y"}) == "x^2y + 3y - 1");

    const MultiPoly q = p.specialize(0, 2);
    CHECK(q.num_vars() == 1);
    CHECK(q.evaluate({5}) == 34);
}

TEST_CASE("polynomial product rule")
{
    std::mt19937_64 rng(31);
    auto random_poly = [&](std::size_t vars) {
        MultiPoly p(vars);
        std::uniform_int_distribution<unsigned> e(0, 2);
        for (int t = 0; t < 4; ++t) {
            Exponent ex(vars);
            for (auto& v : ex)
                v = e(rng);
            p.add_term(ex, random_rational(rng, 3));
        }
        return p;
    };
    for (int rep = 0; rep < 20; ++rep) {
        const MultiPoly a = random_poly(3), b = random_poly(3);
        for (std::size_t v = 0; v < 3; ++v)
            CHECK(poly_partial(a * b, v) == poly_partial(a, v) * b + a * poly_partial(b, v));
        const QVector pt{random_rational(rng, 4), random_rational(rng, 4), random_rational(rng, 4)};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}
