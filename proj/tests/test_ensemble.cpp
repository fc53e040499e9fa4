#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "statedist/ensemble.hpp"
#include "statedist/spectral.hpp"
#include "test_util.hpp"

using namespace statedist;

namespace {

PureEnsemble orthonormal_pair() {
    return make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}}, {0.5, 0.5});
}

}  // namespace

TEST_CASE("make_pure_ensemble accepts a basis pair") {
    const PureEnsemble e = orthonormal_pair();
    CHECK(e.dim == 2);
    CHECK(e.size() == 2);
    CHECK(e.probs[0] == doctest::Approx(0.5));
}

TEST_CASE("make_pure_ensemble defaults to uniform probabilities") {
    const PureEnsemble e = make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}});
    for (double p : e.probs) CHECK(p == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("make_pure_ensemble rejects bad input") {
    CHECK_THROWS_AS(make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0, 0.0}}), ValidationError);
    CHECK_THROWS_AS(make_pure_ensemble({{0.5, 0.0}}), ValidationError);  // norm 0.5
    CHECK_THROWS_AS(make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}}, {0.4, 0.4}), ValidationError);
    CHECK_THROWS_AS(make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}}, {1.5, -0.5}), ValidationError);
}

TEST_CASE("state_matrix columns carry sqrt(p)") {
    SUBCASE("single state equals the vector") {
        const PureEnsemble e = make_pure_ensemble({{cplx(0.0, 1.0), 0.0}});
        const ComplexMatrix s = state_matrix(e);
        CHECK(s(0, 0) == cplx(0.0, 1.0));
        CHECK(s.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("orthonormal pair gets 1/sqrt(2) columns") {
        const ComplexMatrix s = state_matrix(orthonormal_pair());
        CHECK(s(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(s.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("random ensemble has unit Frobenius norm") {
        SeededRng rng(21, 0);
        const PureEnsemble e = random_pure_ensemble(4, 4, rng);
        CHECK(state_matrix(e).frobenius_norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("gram matrix reference values") {
    SUBCASE("orthonormal pair") {
        const GramMatrix g = gram(orthonormal_pair());
        CHECK(g.mat(0, 0).real() == doctest::Approx(0.5));
        CHECK(std::abs(g.mat(0, 1)) < 1e-15);
    }
    SUBCASE("single state") {
        const GramMatrix g = gram(make_pure_ensemble({{1.0, 0.0}}));
        CHECK(g.size() == 1);
        CHECK(g.mat(0, 0).real() == doctest::Approx(1.0));
    }
    SUBCASE("real overlap c") {
        const double c = 0.6;
        const PureEnsemble e = make_pure_ensemble(
            {{1.0, 0.0}, {c, std::sqrt(1.0 - c * c)}}, {0.5, 0.5});
        const GramMatrix g = gram(e);
        CHECK(g.mat(0, 0).real() == doctest::Approx(0.5));
        CHECK(g.mat(0, 1).real() == doctest::Approx(c / 2.0));
        CHECK(g.mat(1, 0).real() == doctest::Approx(c / 2.0));
    }
}

TEST_CASE("gram trace is 1 and matches density spectrum") {
    SeededRng rng(22, 0);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 6;
        const std::size_t d = 1 + rng.next_u64() % 6;
        const PureEnsemble e = test_util::random_ensemble_with_probs(n, d, rng);
        const GramMatrix g = gram(e);
        CHECK(g.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-9));

        // nonzero spectra of G (n x n) and rho (d x d) coincide
        std::vector<double> ge = eig_hermitian_values(g.mat);
        std::vector<double> de = eig_hermitian_values(density(e));
        const std::size_t k = std::max(ge.size(), de.size());
        ge.resize(k, 0.0);
        de.resize(k, 0.0);
        for (std::size_t i = 0; i < k; ++i) CHECK(std::abs(ge[i] - de[i]) < 1e-8);
    }
}

TEST_CASE("gram eigenvalues are invariant under a global state phase") {
    SeededRng rng(23, 0);
    const PureEnsemble e = test_util::random_ensemble_with_probs(4, 3, rng);
    PureEnsemble rotated = e;
    const cplx phase = std::polar(1.0, 1.234);
    for (auto& a : rotated.states[2]) a *= phase;
    const auto base = eig_hermitian_values(gram(e).mat);
    const auto rot = eig_hermitian_values(gram(rotated).mat);
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(std::abs(base[i] - rot[i]) < 1e-10);
}

TEST_CASE("density reference values") {
    SUBCASE("complete orthonormal set gives I/d") {
        const PureEnsemble e = make_pure_ensemble({{1.0, 0.0}, {0.0, 1.0}});
        const ComplexMatrix rho = density(e);
        CHECK((rho - ComplexMatrix::identity(2) * 0.5).max_abs() < 1e-15);
    }
    SUBCASE("single pure state is a rank-1 projector") {
        SeededRng rng(24, 0);
        const auto psi = haar_state(3, rng);
        const ComplexMatrix rho = density(make_pure_ensemble({psi}));
        CHECK((rho - projector(psi)).max_abs() < 1e-12);
        const auto eigs = eig_hermitian_values(rho);
        CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("mixed ensemble density is the probability mixture") {
        SeededRng rng(25, 0);
        const ComplexMatrix rho1 = test_util::random_density(3, rng);
        const ComplexMatrix rho2 = test_util::random_density(3, rng);
        const MixedEnsemble e = make_mixed_ensemble({rho1, rho2}, {0.3, 0.7});
        const ComplexMatrix rho = density(e);
        CHECK((rho - (rho1 * 0.3 + rho2 * 0.7)).max_abs() < 1e-12);
    }
}

TEST_CASE("make_mixed_ensemble validates states") {
    ComplexMatrix not_herm(2, 2);
    not_herm(0, 0) = 0.5;
    not_herm(1, 1) = 0.5;
    not_herm(0, 1) = cplx(0.0, 0.3);
    not_herm(1, 0) = cplx(0.0, 0.3);  // conj would be -0.3i
    CHECK_THROWS_AS(make_mixed_ensemble({not_herm}), ValidationError);

    ComplexMatrix wrong_trace = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(make_mixed_ensemble({wrong_trace}), ValidationError);

    ComplexMatrix indefinite(2, 2);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(make_mixed_ensemble({indefinite}), ValidationError);
}

TEST_CASE("serialization round trip is exact") {
    SeededRng rng(26, 0);
    const PureEnsemble e = test_util::random_ensemble_with_probs(3, 4, rng);
    const std::string text = serialize_ensemble(e);
    const Ensemble back = deserialize_ensemble(text);
    const auto& p = std::get<PureEnsemble>(back);
    CHECK(p.dim == e.dim);
    CHECK(p.size() == e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(p.probs[i] == e.probs[i]);  // bitwise
        for (std::size_t k = 0; k < e.dim; ++k) CHECK(p.states[i][k] == e.states[i][k]);
    }
    // serialized form is reproduced byte-for-byte
    CHECK(serialize_ensemble(p) == text);
}

TEST_CASE("mixed serialization round trip") {
    SeededRng rng(27, 0);
    const MixedEnsemble e = make_mixed_ensemble(
        {test_util::random_density(2, rng), test_util::random_density(2, rng)}, {0.25, 0.75});
    const std::string text = serialize_ensemble(e);
    const Ensemble round = deserialize_ensemble(text);
    const auto& back = std::get<MixedEnsemble>(round);
    CHECK(serialize_ensemble(back) == text);
    for (std::size_t i = 0; i < e.size(); ++i)
        CHECK((back.states[i] - e.states[i]).max_abs() == 0.0);
}

TEST_CASE("deserialization distinguishes parse and validation failures") {
    // malformed documents
    CHECK_THROWS_AS(deserialize_ensemble("not json"), ParseError);
    CHECK_THROWS_AS(deserialize_ensemble(R"({"kind": "pure"})"), ParseError);  // missing dim
    CHECK_THROWS_AS(
        deserialize_ensemble(
            R"({"dim": 2, "kind": "odd", "probs": [1.0], "states": [[[1,0],[0,0]]]})"),
        ParseError);

    // parses, but violates invariants
    CHECK_THROWS_AS(
        deserialize_ensemble(
            R"({"dim": 2, "kind": "pure", "probs": [0.4, 0.4],
                "states": [[[1,0],[0,0]], [[0,0],[1,0]]]})"),
        ValidationError);
}
