#include "oracles.hpp"

#include "haal/errors.hpp"

#include <doctest.h>

using namespace haal;

namespace {

constexpr auto H = StructureKind::Hypercomplex;
constexpr auto C = StructureKind::Complex;

HcxAAData data(std::size_t n, Rational mu, RatVector v0, RatMatrix b) { return {n, std::move(mu), std::move(v0), std::move(b)}; }

}  // namespace

TEST_CASE("assemble_A")
{
    RatMatrix n1 = assemble_A(data(2, 0, unit_vector(4, 0), RatMatrix(4, 4)));
    CanonicalNilpotent canon = canonical_matrix(SigmaTuple{0, {}, {}, 1}, 1, H);
    CHECK(canon.kind == CanonKind::N);
    CHECK(n1 == canon.matrix);
    StandardJTriple t(1);
    for (int a = 1; a <= 3; ++a)
        for (std::size_t r = 0; r < 4; ++r)
            CHECK(n1(3 + r, static_cast<std::size_t>(a - 1)) == (t[a] * unit_vector(4, 0))[r]);

    CHECK(assemble_A(data(2, 1, RatVector(4), RatMatrix::identity(4))) == RatMatrix::identity(7));

    RatMatrix a0 = assemble_A(data(3, 0, RatVector(8), jordan_block_beta(2, 4)));
    CHECK(a0 == canonical_matrix(SigmaTuple{1, {2}, {1}, 0}, 0, H).matrix);

    RatMatrix bad = RatMatrix::identity(4);
    bad(0, 1) = 1;
    try {
        (void)assemble_A(data(2, 0, RatVector(4), bad));
        FAIL("expected NotQuaternionLinear");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotQuaternionLinear);
    }
}

TEST_CASE("canonical matrices")
{
    CanonicalNilpotent a1 = canonical_matrix(SigmaTuple{1, {2}, {1}, 0}, 1, H);
    CHECK(a1.matrix.rows() == 11);
    CHECK(kernel_dim_sequence(a1.matrix) == std::vector<std::size_t>{4, 8, 11});
    CHECK(conjugate_test(a1.matrix, a1.block_sum));

    for (std::size_t s = 1; s <= 4; ++s) {
        CanonicalNilpotent n = canonical_matrix(SigmaTuple{0, {}, {}, s}, 1, H);
        CHECK(n.kind == CanonKind::N);
        CHECK(n.n == s + 1);
        CHECK_FALSE(n.matrix.is_zero());
        CHECK((n.matrix * n.matrix).is_zero());
    }

    CanonicalNilpotent c2 = canonical_matrix(SigmaTuple{1, {2}, {1}, 1}, 2, C);
    CHECK(c2.matrix.rows() == 7);
    // 𝒥_2 ⊕ 𝒩 with a single-column insert: j_2^2 on the block, plus j_2 from the insert
    CHECK(is_nilpotent(c2.matrix));
    CHECK(nilpotency_index(c2.matrix) == 2);

    CHECK_THROWS_AS(canonical_matrix(SigmaTuple{1, {2}, {1}, 0}, 2, H), Error);
    try {
        (void)canonical_matrix(SigmaTuple{1, {2}, {1}, 0}, 2, H);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IndexOutOfRange);
    }
}

TEST_CASE("identify_class")
{
    RatMatrix b = jordan_block_beta(2, 4);
    CanonicalNilpotent c = identify_class(data(3, 0, unit_vector(8, 0), b));
    CHECK(c.sigma == SigmaTuple{1, {2}, {1}, 0});
    CHECK(c.ell == 1);

    c = identify_class(data(3, 0, RatVector(8), b));
    CHECK(c.ell == 0);
    c = identify_class(data(3, 0, unit_vector(8, 4), b));  // v0 ∈ Im B
    CHECK(c.ell == 0);

    RatMatrix b2 = direct_sum(b, RatMatrix(4, 4));
    RatMatrix a = assemble_A(data(4, 0, unit_vector(12, 8), b2));
    c = identify_class(data(4, 0, unit_vector(12, 8), b2));
    CHECK(c.sigma == SigmaTuple{1, {2}, {1}, 1});
    CHECK(c.ell == 2);
    CHECK(conjugate_test(a, canonical_matrix(c.sigma, 2, H).matrix));

    c = identify_class(data(3, 0, unit_vector(8, 0), RatMatrix(8, 8)));
    CHECK(c.kind == CanonKind::N);
}

TEST_CASE("normalize_v0")
{
    HcxAAData d = normalize_v0(data(2, 1, unit_vector(4, 0), RatMatrix(4, 4)));
    CHECK(is_zero(d.v0));

    RatMatrix b = jordan_block_beta(2, 4);
    RatVector x{1, 2, -1, 3, 5, 0, 1, 1};
    d = normalize_v0(data(3, 0, b * x, b));
    CHECK(is_zero(d.v0));

    d = normalize_v0(data(2, 0, unit_vector(4, 0), RatMatrix(4, 4)));
    CHECK(d.v0 == unit_vector(4, 0));

    // a mixed vector keeps only its W-component and the algebra does not change
    RatVector v = b * x;
    v[1] += 1;
    HcxAAData raw = data(3, 0, v, b);
    d = normalize_v0(raw);
    CHECK(d.v0 == unit_vector(8, 1));
    CHECK(identify_class(raw).ell == identify_class(d).ell);
}

TEST_CASE("admissibility examples")
{
    AdmissibilityVerdict v = admissible(JordanData{{{2, 3}}, 1}, H);
    CHECK(v.admissible);
    CHECK(v.condition == AdmissibleCondition::CondI);

    v = admissible(JordanData{{{3, 3}, {2, 1}}, 0}, H);
    CHECK(v.admissible);
    CHECK(v.condition == AdmissibleCondition::CondIII);
    CHECK(v.t == 2);

    v = admissible(JordanData{{{2, 1}}, 1}, C);
    CHECK(v.admissible);
    REQUIRE(v.witness);
    CHECK(conjugate_test(*v.witness, canonical_matrix(SigmaTuple{0, {}, {}, 1}, 1, C).matrix));

    v = admissible(JordanData{{{2, 2}}, 3}, H);
    CHECK_FALSE(v.admissible);
    CHECK_FALSE(v.condition);
    CHECK_FALSE(v.witness);

    CHECK_THROWS_AS(admissible(JordanData{{{2, 2}}, 0}, H), Error);
}

TEST_CASE("class counts")
{
    CHECK(count_classes(3, H).total == 3);
    CHECK(count_classes(4, H).total == 6);
    for (std::size_t n = 3; n <= 8; ++n)
        CHECK(count_classes(n, H).two_step == n - 1);
    // the count formula recomputed from the Sigma enumeration
    for (std::size_t n = 2; n <= 7; ++n) {
        std::size_t want = 0;
        for (const auto& s : enumerate_sigma(n - 1))
            want += s.r == 0 ? 1 : s.r + 2 - (s.s == 0 ? 1 : 0);
        CHECK(count_classes(n, H).total == want);
    }
}

TEST_CASE("verdict witnesses match their Jordan types")
{
    for (auto kind : {H, C}) {
        const std::size_t beta_ = beta(kind);
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& jd : oracle::all_jordan_types(beta_ * n - 1)) {
                AdmissibilityVerdict v = admissible(jd, kind);
                CHECK(v.admissible == v.condition.has_value());
                CHECK(v.admissible == v.witness.has_value());
                if (v.witness)
                    CHECK(conjugate_test(*v.witness, jordan_matrix(jd)));
            }
    }
}

TEST_CASE("step bound and the unique longer step")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& s : enumerate_sigma(n - 1)) {
            std::size_t longer = 0;
            for (std::size_t ell = s.r ? 0 : 1; ell <= max_ell(s); ++ell) {
                std::size_t step = nilpotency_index(canonical_matrix(s, ell, H).matrix);
                CHECK(step <= n);
                if (s.r == 0)
                    continue;
                if (step == s.m[0] + 1) {
                    ++longer;
                    CHECK(ell == 1);
                } else {
                    CHECK(step == s.m[0]);
                }
            }
            if (s.r)
                CHECK(longer == 1);
        }
}

TEST_CASE("canonical forms carry the structure and are recognized")
{
    std::mt19937_64 rng(21);
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& s : enumerate_sigma(n - 1))
            for (std::size_t ell = s.r ? 0 : 1; ell <= max_ell(s); ++ell) {
                CanonicalNilpotent c = canonical_matrix(s, ell, H);
                CHECK(admissible(jordan_data_of(c.matrix), H).admissible);
                CanonicalNilpotent back = identify_class_matrix(c.matrix, H);
                CHECK(back.sigma == s);
                CHECK(back.ell == ell);
                // a quaternionic change of basis of the ideal gives an isomorphic algebra
                const std::size_t dim = 4 * (n - 1);
                // column 0 carries J_1 v0, so v0 = −J_1 of it
                RatVector v0 = -StandardJTriple(n - 1).J1 * c.matrix.block(3, 0, dim, 1).col(0);
                HcxAAData d{n, 0, v0, c.matrix.block(3, 3, dim, dim)};
                CHECK(assemble_A(d) == c.matrix);
                RatMatrix p = oracle::random_j_invertible(rng, n - 1);
                HcxAAData moved{n, 0, p * d.v0, p * d.B * *inverse(p)};
                CanonicalNilpotent m = identify_class(moved);
                CHECK(m.sigma == s);
                CHECK(m.ell == ell);
            }
}

TEST_CASE("complex engine mirrors the quaternionic one")
{
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& s : enumerate_sigma(n - 1))
            for (std::size_t ell = s.r ? 0 : 1; ell <= max_ell(s); ++ell) {
                CanonicalNilpotent c = canonical_matrix(s, ell, C);
                CHECK(c.matrix.rows() == 2 * (n - 1) + 1);
                CHECK(admissible(jordan_data_of(c.matrix), C).admissible);
                CanonicalNilpotent back = identify_class_matrix(c.matrix, C);
                CHECK(back.sigma == s);
                CHECK(back.ell == ell);
            }
}
