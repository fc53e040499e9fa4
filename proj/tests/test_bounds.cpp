#include <doctest.h>

#include <cmath>

#include "statedist/bounds.hpp"
#include "statedist/pgm.hpp"
#include "statedist/spectral.hpp"
#include "test_util.hpp"

using namespace statedist;

TEST_CASE("tangent parabola coefficients and tangency") {
    SUBCASE("r = 1") {
        const TangentParabola tp = tangent_parabola(1.0);
        CHECK(tp.a == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(tp.b == doctest::Approx(-0.5).epsilon(1e-15));
    }
    SUBCASE("r = 4") {
        const TangentParabola tp = tangent_parabola(4.0);
        CHECK(tp.a == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(tp.b == doctest::Approx(-0.0625).epsilon(1e-15));
    }
    SUBCASE("tangency and lower-bound property") {
        for (double r : {0.3, 1.0, 2.5, 7.0}) {
            const TangentParabola tp = tangent_parabola(r);
            const auto f = [&](double x) { return tp.a * x + tp.b * x * x; };
            CHECK(std::abs(f(r) - std::sqrt(r)) < 1e-12);
            const double slope = tp.a + 2.0 * tp.b * r;
            CHECK(std::abs(slope - 0.5 / std::sqrt(r)) < 1e-12);
            for (int i = 0; i <= 200; ++i) {
                const double x = 10.0 * r * i / 200.0;
                CHECK(f(x) <= std::sqrt(x) + 1e-12);
            }
        }
    }
    SUBCASE("nonpositive r is rejected") {
        CHECK_THROWS_AS(tangent_parabola(0.0), ValidationError);
        CHECK_THROWS_AS(tangent_parabola(-1.0), ValidationError);
    }
}

TEST_CASE("inner product bound reference values") {
    SUBCASE("orthonormal equiprobable states") {
        const PureEnsemble e = make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}});
        CHECK(inner_product_bound(e) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("identical equiprobable states") {
        const PureEnsemble e = make_pure_ensemble({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
        CHECK(inner_product_bound(e) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("constant overlap ensemble hits 1/(1 + p^2 (n-1))") {
        const std::size_t n = 6;
        const double p = 0.4;
        const PureEnsemble e = realize_gram(constant_overlap_gram(n, p));
        CHECK(inner_product_bound(e) ==
              doctest::Approx(1.0 / (1.0 + p * p * (n - 1))).epsilon(1e-9));
    }
}

TEST_CASE("eigenvalue bound reference values") {
    SUBCASE("maximally mixed gram means orthonormal states") {
        GramMatrix g{ComplexMatrix::identity(4) * 0.25};
        CHECK(eigenvalue_bound(g) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("rank-1 gram means identical states") {
        const std::size_t n = 5;
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = 1.0 / n;
        CHECK(eigenvalue_bound(GramMatrix{m}) == doctest::Approx(1.0 / n).epsilon(1e-7));
    }
    SUBCASE("n = 4, p = 0.5 closed form") {
        const double expected =
            0.25 * std::pow(std::sqrt(0.625) + 3.0 * std::sqrt(0.125), 2.0);
        CHECK(expected == doctest::Approx(0.856762).epsilon(1e-6));
        CHECK(eigenvalue_bound(constant_overlap_gram(4, 0.5)) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("eigenvalue bound equals fidelity with the maximally mixed state") {
    SeededRng rng(41, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 5;
        const std::size_t d = 2 + rng.next_u64() % 5;
        const GramMatrix g = gram(test_util::random_ensemble_with_probs(n, d, rng));
        const ComplexMatrix mixed = ComplexMatrix::identity(n) * (1.0 / n);
        CHECK(std::abs(eigenvalue_bound(g) - fidelity(g.mat, mixed)) < 1e-9);
    }
}

TEST_CASE("bounds never exceed the exact pgm value") {
    SeededRng rng(42, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 8;
        const std::size_t d = 1 + rng.next_u64() % 8;
        const PureEnsemble e = test_util::random_ensemble_with_probs(n, d, rng);
        const double pgm = pgm_success_pure(e);
        double guessing = 0.0;
        for (double p : e.probs) guessing += p * p;
        CHECK(inner_product_bound(e) <= pgm + 1e-9);
        CHECK(eigenvalue_bound(gram(e)) <= pgm + 1e-9);
        CHECK(inner_product_bound(e) >= guessing - 1e-12);
    }
}

TEST_CASE("mixed fidelity bound reference values") {
    SUBCASE("counterexample ensemble") {
        ComplexMatrix rho1(3, 3), rho2(3, 3);
        rho1(0, 0) = 0.5;
        rho1(1, 1) = 0.5;
        rho2(0, 0) = 0.5;
        rho2(2, 2) = 0.5;
        const MixedEnsemble e = make_mixed_ensemble({rho1, rho2}, {0.5, 0.5});
        CHECK(mixed_fidelity_bound(e) == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(naive_mixed_bound(e) == doctest::Approx(0.8).epsilon(1e-12));
        CHECK(naive_mixed_bound(e) > pgm_success_mixed(e));  // the naive form overshoots
    }
    SUBCASE("rank-1 states reduce to the inner product bound") {
        SeededRng rng(43, 0);
        const std::size_t n = 3, d = 4;
        std::vector<std::vector<cplx>> pures;
        std::vector<ComplexMatrix> projs;
        for (std::size_t i = 0; i < n; ++i) {
            pures.push_back(haar_state(d, rng));
            projs.push_back(projector(pures.back()));
        }
        const auto probs = test_util::random_probs(n, rng);
        const double mixed = mixed_fidelity_bound(make_mixed_ensemble(projs, probs));
        const double pure = inner_product_bound(make_pure_ensemble(pures, probs));
        CHECK(std::abs(mixed - pure) < 1e-10);
        const double naive = naive_mixed_bound(make_mixed_ensemble(projs, probs));
        CHECK(std::abs(naive - pure) < 1e-10);
    }
    SUBCASE("single mixed state gives its purity") {
        SeededRng rng(44, 0);
        const ComplexMatrix rho = test_util::random_density(3, rng);
        const MixedEnsemble e = make_mixed_ensemble({rho});
        CHECK(mixed_fidelity_bound(e) == doctest::Approx(purity(rho)).epsilon(1e-10));
        CHECK(naive_mixed_bound(e) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("bound stays below the mixed pgm value") {
        SeededRng rng(45, 0);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 2 + rng.next_u64() % 3;
            const std::size_t d = 2 + rng.next_u64() % 3;
            std::vector<ComplexMatrix> states;
            for (std::size_t i = 0; i < n; ++i)
                states.push_back(test_util::random_density(d, rng));
            const MixedEnsemble e = make_mixed_ensemble(states, test_util::random_probs(n, rng));
            CHECK(mixed_fidelity_bound(e) <= pgm_success_mixed(e) + 1e-9);
        }
    }
}

TEST_CASE("constant overlap gram spectrum") {
    SUBCASE("p = 0 is the maximally mixed gram") {
        const GramMatrix g = constant_overlap_gram(4, 0.0);
        CHECK((g.mat - ComplexMatrix::identity(4) * 0.25).max_abs() == 0.0);
    }
    SUBCASE("n = 2 eigenvalues") {
        const double p = 0.37;
        const auto eigs = eig_hermitian_values(constant_overlap_gram(2, p).mat);
        CHECK(eigs[0] == doctest::Approx((1.0 + p) / 2.0).epsilon(1e-12));
        CHECK(eigs[1] == doctest::Approx((1.0 - p) / 2.0).epsilon(1e-12));
    }
    SUBCASE("n = 4, p = 0.5 spectrum") {
        const auto eigs = eig_hermitian_values(constant_overlap_gram(4, 0.5).mat);
        CHECK(eigs[0] == doctest::Approx(0.625).epsilon(1e-10));
        for (int i = 1; i < 4; ++i) CHECK(eigs[i] == doctest::Approx(0.125).epsilon(1e-10));
    }
    SUBCASE("out-of-range p is rejected") {
        CHECK_THROWS_AS(constant_overlap_gram(4, 1.0), ValidationError);
        CHECK_THROWS_AS(constant_overlap_gram(4, -0.1), ValidationError);
    }
}

TEST_CASE("constant overlap exact success probability") {
    SUBCASE("p = 0 distinguishes perfectly") {
        CHECK(constant_overlap_exact(7, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("n = 2 matches helstrom") {
        CHECK(constant_overlap_exact(2, 0.6) == doctest::Approx(0.9).epsilon(1e-12));
    }
    SUBCASE("n = 4, p = 0.5") {
        CHECK(constant_overlap_exact(4, 0.5) == doctest::Approx(0.856762).epsilon(1e-6));
    }
    SUBCASE("asymptotic lower bound") {
        for (std::size_t n : {2u, 8u, 64u})
            for (double p : {0.1, 0.5, 0.9}) {
                const double nn = static_cast<double>(n);
                CHECK(constant_overlap_exact(n, p) >=
                      (1.0 - p) - 2.0 * (1.0 - p) / nn - 1e-9);
            }
    }
}

TEST_CASE("realized gram ensembles reproduce the closed form") {
    for (std::size_t n : {2u, 5u, 16u}) {
        for (double p : {0.0, 0.3, 0.8}) {
            const GramMatrix g = constant_overlap_gram(n, p);
            const PureEnsemble e = realize_gram(g);
            CHECK(e.dim == n);
            // the realized ensemble has exactly the prescribed gram matrix
            CHECK((gram(e).mat - g.mat).max_abs() < 1e-12);
            CHECK(std::abs(pgm_success_pure(e) - constant_overlap_exact(n, p)) < 1e-9);
            CHECK(std::abs(eigenvalue_bound(g) - constant_overlap_exact(n, p)) < 1e-9);
        }
    }
}

TEST_CASE("bound_report is self-consistent") {
    SUBCASE("orthonormal ensemble saturates everything") {
        const BoundReport r =
            bound_report(make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}}));
        CHECK(r.pgm_exact == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.inner_product_bound == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.eigenvalue_bound == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.guessing_baseline == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.inner_product_ok);
        CHECK(r.eigenvalue_ok);
    }
    SUBCASE("identical states pin everything at 1/n") {
        const BoundReport r =
            bound_report(make_pure_ensemble({{1.0, 0.0}, {1.0, 0.0}}));
        CHECK(r.pgm_exact == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.inner_product_bound == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.eigenvalue_bound == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.inner_product_ok);
        CHECK(r.eigenvalue_ok);
    }
    SUBCASE("random ensemble keeps ordering flags") {
        SeededRng rng(46, 0);
        const BoundReport r = bound_report(random_pure_ensemble(8, 8, rng));
        CHECK(r.inner_product_ok);
        CHECK(r.eigenvalue_ok);
        CHECK(r.inner_product_bound >= r.guessing_baseline - 1e-12);
    }
}
