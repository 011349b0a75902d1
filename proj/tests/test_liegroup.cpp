#include "oracles.hpp"

#include "haal/dim12.hpp"
#include "haal/errors.hpp"
#include "haal/liegroup.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace haal;

namespace {

RatMatrix j2() { return RatMatrix::from_ints({{0, 0}, {1, 0}}); }

template <class F>
Errc error_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidParams;
}

// Imaginary-axis test on numerically computed eigenvalues.
bool numeric_phi_invertible(const RatMatrix& a)
{
    Eigen::EigenSolver<MatD> es(to_eigen(a));
    for (auto l : es.eigenvalues())
        if (std::abs(l.real()) < 1e-9 && std::abs(l.imag()) > 1e-9)
            return false;
    return true;
}

RatMatrix rotation() { return RatMatrix::from_ints({{0, -1}, {1, 0}}); }

}  // namespace

TEST_CASE("Phi")
{
    CHECK(phi_scalar(0) == 1.0);
    CHECK(phi_scalar(1) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
    CHECK(phi_scalar(1e-12) == doctest::Approx(1.0));
    CHECK(phi_scalar(-2) == doctest::Approx((std::exp(-2.0) - 1) / -2));

    RatMatrix half = RatMatrix::identity(2) + Rational(1, 2) * j2();
    CHECK(phi_matrix_exact(1, j2()) == half);
    CHECK(error_of([] { (void)phi_matrix_exact(1, rotation()); }) == Errc::NotNilpotent);
    CHECK((phi_matrix(1.0, to_eigen(j2())) - to_eigen(half)).norm() < 1e-14);

    // (e^{tA} − I)(tA)^{-1} where tA is invertible
    MatD a = to_eigen(RatMatrix::from_ints({{1, 2}, {0, 3}}));
    MatD want = (expm(0.7 * a) - MatD::Identity(2, 2)) * (0.7 * a).inverse();
    CHECK((phi_matrix(0.7, a) - want).norm() < 1e-12);
    CHECK(exp_nilpotent(j2()) == RatMatrix::identity(2) + j2());
}

TEST_CASE("invertibility of Phi for all t")
{
    CHECK(phi_invertible_all_t(jordan_block_beta(3, 4)));
    CHECK_FALSE(phi_invertible_all_t(rotation()));
    CHECK(phi_invertible_all_t(RatMatrix::from_ints({{1, 0}, {0, -1}})));
    CHECK_FALSE(phi_invertible_all_t(direct_sum(RatMatrix::identity(2), Rational(3) * rotation())));
    // eigenvalues 1 ± i are off the axis
    CHECK(phi_invertible_all_t(RatMatrix::from_ints({{1, -1}, {1, 1}})));
}

TEST_CASE("group exponential")
{
    MatD a = to_eigen(j2());
    VecD v = VecD::Unit(2, 1);
    GroupElement g = exp_group(0, v, a);
    CHECK(g.t == 0);
    CHECK((g.v - v).norm() == 0);

    g = exp_group(1, VecD::Unit(2, 0), a);
    CHECK(g.t == 1);
    CHECK(g.v(0) == doctest::Approx(1.0));
    CHECK(g.v(1) == doctest::Approx(0.5));

    GroupElement back = log_group(g.t, g.v, a);
    CHECK((back.v - VecD::Unit(2, 0)).norm() < 1e-12);
    CHECK_THROWS_AS(log_group(2 * std::numbers::pi, VecD::Ones(2), to_eigen(rotation())), Error);

    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 50; ++i) {
        RatMatrix ra = oracle::random_matrix(rng, 4, 4, 2, 2);
        if (!phi_invertible_all_t(ra))
            continue;
        MatD m = to_eigen(ra);
        m /= std::max(1.0, m.norm() / 2);
        VecD w = VecD::Random(4);
        double t = 2 * u(rng);
        GroupElement l = log_group(t, w, m);
        GroupElement e = exp_group(l.t, l.v, m);
        CHECK((e.v - w).norm() < 1e-10 * std::max(1.0, w.norm()));
    }
}

TEST_CASE("one-parameter subgroups")
{
    std::mt19937_64 rng(52);
    for (int i = 0; i < 40; ++i) {
        std::size_t d = 2 + rng() % 4;
        RatMatrix strict(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = r + 1; c < d; ++c)
                strict(r, c) = oracle::random_rational(rng);
        RatVector v0(d);
        for (auto& x : v0)
            x = oracle::random_rational(rng);
        auto [l, r] = monop_sides_exact(strict, oracle::random_rational(rng), v0, oracle::random_rational(rng),
                                        oracle::random_rational(rng));
        CHECK(l == r);
    }
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 100; ++i) {
        int d = 1 + static_cast<int>(rng() % 6);
        MatD a = MatD::NullaryExpr(d, d, [&] { return u(rng); });
        a *= 2.0 / std::max(1.0, a.norm());
        VecD v0 = VecD::NullaryExpr(d, [&] { return u(rng); });
        double t0 = 2 * u(rng), t = 2 * u(rng), s = 2 * u(rng);
        CHECK(monop_defect(a, t0, v0, t, s) < 1e-10);
        // the same identity through the group law
        GroupElement lhs = exp_group((t + s) * t0, (t + s) * v0, a);
        GroupElement rhs = group_multiply(exp_group(t * t0, t * v0, a), exp_group(s * t0, s * v0, a), a);
        CHECK((lhs.v - rhs.v).norm() < 1e-10 * std::max(1.0, lhs.v.norm()));
    }
}

TEST_CASE("scaled conjugacy")
{
    std::mt19937_64 rng(53);
    RatMatrix big = jordan_block_beta(2, 4);
    RatMatrix p = oracle::random_invertible(rng, 8);
    auto r = ad_conjugate_iso(big, p * big * *inverse(p));
    REQUIRE(r);
    CHECK(r->c == 1);
    CHECK(big == r->c * (r->P * (p * big * *inverse(p)) * *inverse(r->P)));

    RatMatrix d2 = RatMatrix::from_ints({{2, 0}, {0, -2}}), d1 = RatMatrix::from_ints({{1, 0}, {0, -1}});
    r = ad_conjugate_iso(d2, d1);
    REQUIRE(r);
    CHECK(abs(r->c) == 2);
    CHECK(d2 == r->c * (r->P * d1 * *inverse(r->P)));

    CHECK_FALSE(ad_conjugate_iso(RatMatrix::from_ints({{1, 0}, {0, 2}}), RatMatrix::from_ints({{1, 0}, {0, 3}})));

    for (int i = 0; i < 15; ++i) {
        RatMatrix a2 = oracle::random_matrix(rng, 4, 4, 3);
        Rational c = oracle::random_rational(rng, 3, 3);
        if (sgn(c) == 0 || is_nilpotent(a2))
            continue;
        RatMatrix q = oracle::random_invertible(rng, 4);
        RatMatrix a1 = c * (q * a2 * *inverse(q));
        auto found = ad_conjugate_iso(a1, a2);
        REQUIRE(found);
        CHECK(a1 == found->c * (found->P * a2 * *inverse(found->P)));
    }
}

TEST_CASE("group isomorphisms")
{
    RatMatrix a = RatMatrix::from_ints({{1, 2}, {0, 3}});
    GroupIso id = lie_iso_build(a, a, 1, RatMatrix::identity(2), 1, RatVector(2));
    CHECK(id.verified);
    CHECK(id.mu == 1);
    CHECK(id.L == RatMatrix::identity(2));
    GroupElement g{0.3, VecD::Ones(2)};
    GroupElement fg = id.apply(g, to_eigen(a));
    CHECK(fg.t == doctest::Approx(0.3));
    CHECK((fg.v - g.v).norm() < 1e-14);

    GroupIso dbl = lie_iso_build(Rational(2) * a, a, 2, RatMatrix::identity(2), 1, RatVector{1, -1});
    CHECK(dbl.verified);
    CHECK(dbl.mu == 2);
    CHECK(dbl.L == RatMatrix::identity(2));
    CHECK(dbl.homomorphism_defect < 1e-9);
    CHECK(dbl.exp_defect < 1e-9);

    RatMatrix d1 = RatMatrix::from_ints({{1, 0}, {0, -1}});
    GroupIso flip = lie_iso_build(d1, d1, 1, RatMatrix::identity(2), -1, RatVector(2));
    CHECK(flip.verified);
    CHECK(flip.mu == -1);
    CHECK(flip.L * d1 == -(d1 * flip.L));

    CHECK(error_of([&] { (void)lie_iso_build(a, a, 2, RatMatrix::identity(2), 1, RatVector(2)); }) ==
          Errc::NotConjugate);
    RatMatrix heis = direct_sum(j2(), RatMatrix(3, 3));
    CHECK(error_of([&] { (void)lie_iso_build(heis, heis, 1, RatMatrix::identity(5), 1, RatVector(5)); }) ==
          Errc::HeisenbergExcluded);
    RatMatrix d12 = RatMatrix::from_ints({{1, 0}, {0, 2}});
    CHECK(error_of([&] { (void)lie_iso_build(d12, d12, 1, RatMatrix::identity(2), -1, RatVector(2)); }) ==
          Errc::NoAnticommutingL);
}

TEST_CASE("isomorphisms intertwine the exponentials")
{
    std::mt19937_64 rng(54);
    int built = 0;
    for (int i = 0; i < 20; ++i) {
        RatMatrix a2 = oracle::random_matrix(rng, 3, 3, 2);
        if (detect_heisenberg(a2) || a2.is_zero())
            continue;
        Rational c = oracle::random_rational(rng, 2, 2);
        if (sgn(c) == 0)
            continue;
        RatMatrix p = oracle::random_invertible(rng, 3);
        RatMatrix a1 = c * (p * a2 * *inverse(p));
        RatVector v0{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
        GroupIso f = lie_iso_build(a1, a2, c, p, 1, v0);
        CHECK(f.verified);
        CHECK(f.exp_defect < 1e-9);
        CHECK(f.homomorphism_defect < 1e-9);
        ++built;
    }
    CHECK(built > 10);
}

TEST_CASE("Heisenberg detection")
{
    CHECK(detect_heisenberg(direct_sum(j2(), RatMatrix(3, 3))));
    CHECK_FALSE(detect_heisenberg(jordan_block_beta(2, 4)));
    CHECK_FALSE(detect_heisenberg(RatMatrix(4, 4)));
}

TEST_CASE("witness verification")
{
    WitnessCase s9 = witness_s9(3);
    CHECK(s9.witness.t0 == doctest::Approx(std::log((3 + std::sqrt(5.0)) / 2)));
    CHECK(bock_verify(s9.A, s9.witness, 1e-8).accepted);

    WitnessCase s6 = witness_s6(1);
    CHECK(s6.witness.t0 == doctest::Approx(2 * std::numbers::pi));
    BockReport r6 = bock_verify(s6.A, s6.witness, 1e-8);
    CHECK(r6.accepted);
    CHECK(r6.charpoly_ok);
    CHECK(r6.jordan_ok);

    // nonzero nilpotent: e^{tA} is unipotent but not the identity
    RatMatrix n = jordan_block_beta(2, 4);
    BockReport bad = bock_verify(n, LatticeWitness{1.0, RatMatrix::identity(8), std::nullopt}, 1e-8);
    CHECK_FALSE(bad.accepted);
    CHECK(bad.charpoly_ok);
    CHECK_FALSE(bad.jordan_ok);

    // E = I + N is accepted for the same A, and a conjugator check can be attached
    LatticeWitness w{1.0, RatMatrix::identity(8) + n, MatD::Identity(8, 8)};
    BockReport ok = bock_verify(n, w, 1e-8);
    CHECK(ok.accepted);
    CHECK(ok.conjugator_ok == true);
    w.P = 2 * MatD::Identity(8, 8) + to_eigen(n);
    CHECK(bock_verify(n, w, 1e-8).accepted);  // P commutes with e^{A}

    w.P = MatD::Identity(8, 8);
    w.P->col(0).swap(w.P->col(7));
    BockReport wrong = bock_verify(n, w, 1e-8);
    CHECK_FALSE(wrong.accepted);
    CHECK(wrong.conjugator_ok == false);

    // det E ≠ 1 is rejected
    CHECK_FALSE(bock_verify(RatMatrix(2, 2), LatticeWitness{1.0, Rational(2) * RatMatrix::identity(2), std::nullopt}, 1e-8)
                    .accepted);
}

TEST_CASE("all standard witnesses verify, and verification is monotone in the tolerance")
{
    auto cases = standard_witnesses();
    CHECK(cases.size() == 21);
    for (const auto& c : cases) {
        BockReport r = bock_verify(c.A, c.witness, 1e-8);
        CHECK_MESSAGE(r.accepted, c.family << " " << c.instance << ": " << r.diagnostic);
        CHECK(r.coeff_error < 1e-8);
    }
    // a slightly wrong t0 is accepted exactly from some tolerance on
    for (const auto& c : cases) {
        LatticeWitness off = c.witness;
        off.t0 *= 1 + 1e-6;
        bool seen = false;
        for (double tol : {1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2, 1.0}) {
            bool acc = bock_verify(c.A, off, tol).accepted;
            CHECK_MESSAGE(!(seen && !acc), c.family << " " << c.instance << " tol " << tol);
            seen = seen || acc;
        }
    }
}

TEST_CASE("S5 with a real parameter has a lattice")
{
    // A(a) is affine in a; interpolate the a = 0 and a = 1 representatives
    using V = V0Status;
    RatMatrix a0 = representative_matrix(classify12({0, BCase::B1, 0, 0, 0, 1, V::Zero}));
    RatMatrix a1 = representative_matrix(classify12({0, BCase::B1, 1, 0, -1, 1, V::Zero}));
    const double lambda = (3 + std::sqrt(5.0)) / 2;
    const double a = std::log(lambda) / (2 * std::numbers::pi);
    MatD A = to_eigen(a0) + a * (to_eigen(a1) - to_eigen(a0));
    RatMatrix E = direct_sum(RatMatrix::identity(3), repeat_sum(companion_matrix(h_poly(3)), 4));
    BockReport r = bock_verify(A, LatticeWitness{2 * std::numbers::pi, E, std::nullopt}, 1e-8);
    CHECK_MESSAGE(r.accepted, r.diagnostic);
    // rational a ≠ 0 stays obstructed
    CHECK(classify12({0, BCase::B1, Rational(1, 3), 0, Rational(-1, 3), 1, V::Zero}).lattice.tag == LatticeTag::No);
}

TEST_CASE("necessary condition for lattices")
{
    CHECK(lattice_necessary(0, RatMatrix::from_ints({{1, 0}, {0, -1}})));
    CHECK_FALSE(lattice_necessary(1, RatMatrix(4, 4)));
    CHECK_FALSE(lattice_necessary(0, RatMatrix::identity(4)));
}

TEST_CASE("structure verification")
{
    CHECK(verify_hypercomplex_structure(HcxAAData{2, 0, RatVector(4), RatMatrix(4, 4)}));
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& s : enumerate_sigma(n - 1))
            for (std::size_t ell = s.r ? 0 : 1; ell <= max_ell(s); ++ell) {
                CHECK(verify_structure(canonical_matrix(s, ell, StructureKind::Hypercomplex).matrix,
                                       StructureKind::Hypercomplex));
                CHECK(verify_structure(canonical_matrix(s, ell, StructureKind::Complex).matrix, StructureKind::Complex));
            }

    std::mt19937_64 rng(55);
    for (int i = 0; i < 40; ++i) {
        std::size_t q = 1 + rng() % 3;
        HcxAAData d{q + 1, oracle::random_rational(rng), RatVector(4 * q), sigma_inv(oracle::random_quat_matrix(rng, q))};
        for (auto& x : d.v0)
            x = oracle::random_rational(rng);
        CHECK(verify_hypercomplex_structure(d));
        RatMatrix e;
        do {
            e = oracle::random_matrix(rng, 4 * q, 4 * q, 1);
        } while (commutes_with_j(e));
        d.B = d.B + e;
        CHECK_FALSE(verify_hypercomplex_structure(d));
    }
}

TEST_CASE("invertibility test agrees with numeric eigenvalues")
{
    std::mt19937_64 rng(56);
    std::size_t singular = 0;
    for (int i = 0; i < 500; ++i) {
        std::size_t d = 1 + rng() % 6;
        RatMatrix m = oracle::random_matrix(rng, d, d, 3, 2);
        if (i % 3 == 0 && d >= 2) {
            // plant a purely imaginary pair and hide it by a change of basis
            RatMatrix core = direct_sum(Rational(1 + static_cast<long>(rng() % 3)) * rotation(),
                                        oracle::random_matrix(rng, d - 2, d - 2, 3, 2));
            RatMatrix p = oracle::random_invertible(rng, d);
            m = p * core * *inverse(p);
        }
        bool exact = phi_invertible_all_t(m);
        singular += !exact;
        CHECK(exact == numeric_phi_invertible(m));
    }
    CHECK(singular > 100);
}
