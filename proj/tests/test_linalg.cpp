#include "oracles.hpp"

#include <doctest.h>

using namespace haal;

namespace {

RatMatrix j2() { return RatMatrix::from_ints({{0, 0}, {1, 0}}); }

// Rank by plain Gaussian elimination on a copy, kept separate from the library routine.
std::size_t naive_rank(RatMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && sgn(m(piv, c)) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        for (std::size_t k = 0; k < m.cols(); ++k)
            std::swap(m(r, k), m(piv, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Rational f = m(i, c) / m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k)
                m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank of small examples")
{
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(j2()) == 1);
    RatMatrix big = jordan_block_beta(2, 4);
    CHECK(big.rows() == 8);
    CHECK(rank(big) == 4);
    CHECK(naive_rank(big) == 4);
    CHECK(rank(RatMatrix(3, 5)) == 0);
}

TEST_CASE("kernel sequences")
{
    RatMatrix m = direct_sum(jordan_block_beta(2, 4), RatMatrix(4, 4));
    CHECK(kernel_dim_sequence(m) == std::vector<std::size_t>{8, 12});
    CHECK(kernel_dim_sequence(RatMatrix(5, 5)) == std::vector<std::size_t>{5});

    SigmaTuple s{1, {2}, {1}, 0};
    RatMatrix a1 = canonical_matrix(s, 1, StructureKind::Hypercomplex).matrix;
    CHECK(a1.rows() == 11);
    CHECK(kernel_dim_sequence(a1) == std::vector<std::size_t>{4, 8, 11});
}

TEST_CASE("characteristic polynomials")
{
    IntPoly h3 = h_poly(3);
    CHECK(char_poly(companion_matrix(h3)) == h3.to_rat());
    RatMatrix tilde = direct_sum(RatMatrix::identity(3), repeat_sum(companion_matrix(h3), 4));
    RatPoly want = poly_pow(RatPoly::from_ints({-1, 1}), 3) * poly_pow(h3.to_rat(), 4);
    CHECK(char_poly(tilde) == want);
    CHECK(char_poly(RatMatrix(3, 3)) == RatPoly::x_power(3));
}

TEST_CASE("conjugacy examples")
{
    CHECK(conjugate_test(jordan_block_beta(2, 4), repeat_sum(j2(), 4)));
    CHECK_FALSE(conjugate_test(direct_sum(j2(), RatMatrix(2, 2)), direct_sum(j2(), j2())));

    // the insert block of A_1 for m_1 = 2, p_1 = 1 behaves like j_3^3 ⊕ j_2 on R^11
    SigmaTuple s{1, {2}, {1}, 0};
    RatMatrix a1 = canonical_matrix(s, 1, StructureKind::Hypercomplex).matrix;
    CHECK(conjugate_test(a1, jordan_matrix(JordanData{{{3, 3}, {2, 1}}, 0})));
    CHECK_FALSE(conjugate_test(a1, jordan_matrix(JordanData{{{3, 2}, {2, 2}}, 1})));

    // non-nilpotent: same spectrum, different Jordan structure
    RatMatrix d = RatMatrix::from_ints({{2, 0}, {0, 2}});
    RatMatrix e = RatMatrix::from_ints({{2, 0}, {1, 2}});
    CHECK_FALSE(conjugate_test(d, e));
    CHECK(conjugate_test(RatMatrix::from_ints({{1, 2}, {0, 3}}), RatMatrix::from_ints({{3, 0}, {5, 1}})));
}

TEST_CASE("solve_linear")
{
    RatVector b{1, Rational(2, 3), -4, 0};
    CHECK(*solve_linear(RatMatrix::identity(4), b) == b);
    auto x = solve_linear(j2(), RatVector{0, 1});
    REQUIRE(x);
    CHECK(j2() * *x == RatVector{0, 1});
    CHECK((*x)[0] == 1);
    CHECK_FALSE(solve_linear(j2(), RatVector{1, 0}));
}

TEST_CASE("rank plus nullity equals columns")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 60; ++i) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        RatMatrix m = oracle::random_matrix(rng, r, c, 2);
        if (i % 3 == 0 && r > 1)
            for (std::size_t k = 0; k < c; ++k)
                m(r - 1, k) = m(0, k) * 2;  // force a dependency
        CHECK(rank(m) + nullspace(m).size() == c);
        CHECK(rank(m) == naive_rank(m));
        for (const auto& v : nullspace(m))
            CHECK(is_zero(m * v));
    }
}

TEST_CASE("kernel sequence staircase")
{
    std::mt19937_64 rng(2);
    for (const auto& jd : oracle::all_jordan_types(7)) {
        RatMatrix p = oracle::random_invertible(rng, 7);
        RatMatrix m = p * jordan_matrix(jd) * *inverse(p);
        auto seq = kernel_dim_sequence(m);
        std::size_t prev = 0, prev_step = 7;
        for (std::size_t k : seq) {
            CHECK(k >= prev);
            CHECK(k - prev <= prev_step);
            prev_step = k - prev;
            prev = k;
        }
        CHECK(seq.back() == 7);
        CHECK(jordan_data_of(m) == jd);
        CHECK(oracle::jordan_type_by_ranks(m) == jd);
    }
}

TEST_CASE("conjugation is detected")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = 1 + rng() % 8;
        RatMatrix m = oracle::random_matrix(rng, n, n, 2);
        RatMatrix p = oracle::random_invertible(rng, n);
        CHECK(conjugate_test(p * m * *inverse(p), m));
        RatMatrix shifted = m + RatMatrix::identity(n);
        CHECK_FALSE(conjugate_test(shifted, m));
    }
}

TEST_CASE("Cayley-Hamilton")
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = 1 + rng() % 6;
        RatMatrix m = oracle::random_matrix(rng, n, n, 3, 2);
        RatPoly cp = char_poly(m);
        CHECK(cp.degree() == static_cast<int>(n));
        CHECK(cp.lead() == 1);
        CHECK(cp.eval(m).is_zero());
        Rational det = determinant(m);
        CHECK(cp.coeff(0) == (n % 2 ? Rational(-det) : det));
        RatPoly mp = minimal_polynomial(m);
        CHECK(mp.eval(m).is_zero());
        CHECK(divmod(cp, mp).second.is_zero());
    }
}

TEST_CASE("inverse and determinant agree")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        RatMatrix p = oracle::random_invertible(rng, 1 + rng() % 6);
        RatMatrix q = *inverse(p);
        CHECK(p * q == RatMatrix::identity(p.rows()));
        CHECK(determinant(p) * determinant(q) == 1);
    }
    CHECK_FALSE(inverse(RatMatrix::from_ints({{1, 2}, {2, 4}})));
}
