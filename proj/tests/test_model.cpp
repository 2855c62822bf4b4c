#include <catch2/catch_amalgamated.hpp>

#include "sasakian/builders.hpp"
#include "sasakian/gysin.hpp"
#include "sasakian/minimal_model.hpp"
#include "sasakian/random_algebra.hpp"

using namespace sasakian;

namespace {

GradedAlgebra cube() {
    return tensor_product(
        tensor_product(projective_space(1, "a"), projective_space(1, "b")),
        projective_space(1, "c"));
}

CohomologyClass cls2(const GradedAlgebra& a, std::initializer_list<int> coords) {
    CohomologyClass c = zero_class(a, 2);
    int i = 0;
    for (int x : coords) c.coords[i++] = x;
    return c;
}

ModelElement scale(ModelElement e, const Rational& c) {
    for (auto& x : e.h) x *= c;
    for (auto& x : e.xh) x *= c;
    return e;
}

} // namespace

TEST_CASE("the model differential squares to zero") {
    const GradedAlgebra a = cube();
    const SullivanModel s = build_sullivan_model(a, cls2(a, {1, 1, 1}));
    for (int d = 0; d <= s.top(); ++d)
        for (int j = 0; j < s.dim(d); ++j) {
            const ModelElement e = model_basis_element(s, d, j);
            CHECK(model_is_zero(model_d(s, model_d(s, e))));
        }
}

TEST_CASE("the differential sends x to omega and H to zero") {
    const GradedAlgebra a = synthetic_oddker();
    const CohomologyClass omega = cls2(a, {1, 0});
    const SullivanModel s = build_sullivan_model(a, omega);
    REQUIRE(s.dim(1) == 1);  // no H^1, so degree 1 is spanned by x
    const ModelElement x = model_basis_element(s, 1, 0);
    const ModelElement dx = model_d(s, x);
    CHECK(dx.h == omega.coords);
    CHECK(is_zero(dx.xh));
    for (int j = 0; j < a.dim(2); ++j)
        CHECK(model_is_zero(model_d(s, model_basis_element(s, 2, j))));
}

TEST_CASE("the differential is a derivation for the model product") {
    const GradedAlgebra a = cube();
    const SullivanModel s = build_sullivan_model(a, cls2(a, {1, 2, 1}));
    for (int du = 0; du <= 4; ++du)
        for (int dv = 0; dv + du + 1 <= s.top(); ++dv)
            for (int i = 0; i < s.dim(du); ++i)
                for (int j = 0; j < s.dim(dv); ++j) {
                    const ModelElement u = model_basis_element(s, du, i);
                    const ModelElement v = model_basis_element(s, dv, j);
                    const ModelElement lhs = model_d(s, model_mul(s, u, v));
                    const ModelElement rhs = model_add(
                        s, model_mul(s, model_d(s, u), v),
                        scale(model_mul(s, u, model_d(s, v)),
                              du % 2 == 0 ? Rational(1) : Rational(-1)));
                    CHECK(model_coords(s, lhs) == model_coords(s, rhs));
                }
}

TEST_CASE("model cohomology equals the circle-bundle cohomology") {
    std::mt19937_64 rng(777);
    std::vector<std::pair<GradedAlgebra, CohomologyClass>> inputs;
    {
        const GradedAlgebra cp3 = projective_space(3);
        inputs.emplace_back(cp3, cls2(cp3, {1}));
        const GradedAlgebra c = cube();
        inputs.emplace_back(c, cls2(c, {1, 1, 1}));
        const GradedAlgebra p12 =
            tensor_product(projective_space(1, "a"), projective_space(2, "h"));
        inputs.emplace_back(p12, cls2(p12, {1, 1}));
        const GradedAlgebra odd = synthetic_oddker();
        inputs.emplace_back(odd, cls2(odd, {1, 0}));
        const GradedAlgebra oddb3 = synthetic_oddker_b3();
        inputs.emplace_back(oddb3, cls2(oddb3, {1, 0}));
        const GradedAlgebra h3 = synthetic_h3();
        inputs.emplace_back(h3, cls2(h3, {1, 1, 1}));
        const GradedAlgebra ind = synthetic_indefinite();
        inputs.emplace_back(ind, cls2(ind, {1, 0, 0}));
        const GradedAlgebra pos = synthetic_posdef();
        inputs.emplace_back(pos, cls2(pos, {1, 0, 0}));
    }
    for (int trial = 0; trial < 25; ++trial) inputs.push_back(random_valid_pair(rng));

    for (const auto& [a, omega] : inputs) {
        const SullivanModel s = build_sullivan_model(a, omega);
        const ModelCohomology mc = model_cohomology(s);
        const CircleBundleCohomology e = total_space_cohomology(a, omega);
        CHECK(mc.betti == e.betti);
        // Top class: [omega^3 x] spans H^7 of the model.
        REQUIRE(mc.betti[7] == 1);
        CHECK(model_integrate_top(s, mc.reps[7][0]) != 0);
        for (int d = 0; d <= 7; ++d)
            for (const ModelElement& rep : mc.reps[d])
                CHECK(model_is_zero(model_d(s, rep)));
    }
}

TEST_CASE("partial minimal model dimensions on the packaged examples") {
    SECTION("cp3: everything below the top is omega-generated") {
        const GradedAlgebra a = projective_space(3);
        const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1}));
        CHECK(pm.p_basis.empty());
        CHECK(pm.c3_basis.empty());
        CHECK(pm.n3.size() == 0);
    }
    SECTION("triple product: V2 = P has rank 2, N3 = Sym²P has rank 3") {
        const GradedAlgebra a = cube();
        const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1, 1, 1}));
        CHECK(pm.p_basis.size() == 2);
        CHECK(pm.c3_basis.empty());
        CHECK(pm.n3.size() == 3);
        CHECK(pm.d_n3 == QMat::identity(3));
        for (const ModelElement& rp : pm.rho_p) CHECK(model_is_zero(model_d(pm.model, rp)));
        // chain map: d(rho(n_ij)) = rho(p_i)·rho(p_j)
        for (int idx = 0; idx < pm.n3.size(); ++idx) {
            const auto [i, j] = pm.n3.pairs[idx];
            const ModelElement lhs = model_d(pm.model, pm.rho_n3[idx]);
            const ModelElement rhs = model_mul(pm.model, pm.rho_p[i], pm.rho_p[j]);
            CHECK(lhs.h == rhs.h);
            CHECK(lhs.xh == rhs.xh);
        }
    }
    SECTION("closed degree-3 generators survive as C3") {
        const GradedAlgebra a = synthetic_h3();
        const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1, 1, 1}));
        CHECK(pm.p_basis.size() == 2);
        CHECK(pm.c3_basis.size() == 2);
        CHECK(pm.n3.size() == 3);
        for (const ModelElement& rc : pm.rho_c3) CHECK(model_is_zero(model_d(pm.model, rc)));
    }
    SECTION("hard lefschetz failure is refused") {
        const GradedAlgebra a = synthetic_oddker();
        CHECK_THROWS_AS(build_partial_minimal_model(a, cls2(a, {1, 0})), inapplicable_error);
    }
    SECTION("degree-6 bases only") {
        const GradedAlgebra a = projective_space(2);
        CHECK_THROWS_AS(build_sullivan_model(a, cls2(a, {1})), inapplicable_error);
    }
}

TEST_CASE("the morphism is a 3-equivalence on hard lefschetz inputs") {
    SECTION("packaged examples") {
        {
            const GradedAlgebra a = cube();
            const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1, 1, 1}));
            const ThreeEquivalenceReport eq = verify_three_equivalence(pm);
            CHECK(eq.free_dims == std::vector<int>{1, 0, 2, 0, 0});
            CHECK(eq.model_dims == std::vector<int>{1, 0, 2, 0, 0});
            CHECK(eq.ok);
        }
        {
            const GradedAlgebra a = synthetic_h3();
            const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1, 1, 1}));
            const ThreeEquivalenceReport eq = verify_three_equivalence(pm);
            CHECK(eq.free_dims == std::vector<int>{1, 0, 2, 2, 0});
            CHECK(eq.h2_iso);
            CHECK(eq.h3_iso);
            CHECK(eq.h4_injective);
            CHECK(eq.ok);
        }
        {
            const GradedAlgebra a = projective_space(3);
            const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1}));
            CHECK(verify_three_equivalence(pm).ok);
        }
        {
            const GradedAlgebra a = synthetic_posdef();
            const PartialMinimalModel pm = build_partial_minimal_model(a, cls2(a, {1, 0, 0}));
            CHECK(verify_three_equivalence(pm).ok);
        }
    }
    SECTION("random hard lefschetz corpus") {
        std::mt19937_64 rng(909090);
        for (int trial = 0; trial < 15; ++trial) {
            const auto [a, omega] = random_hl_pair(rng);
            const PartialMinimalModel pm = build_partial_minimal_model(a, omega);
            const ThreeEquivalenceReport eq = verify_three_equivalence(pm);
            CHECK(eq.ok);
        }
    }
}

TEST_CASE("obstruction values are independent of the chosen splitting") {
    const GradedAlgebra a = synthetic_h3();
    const CohomologyClass omega = cls2(a, {1, 1, 1});
    const int rows = a.dim(3), cols = 3;

    CHECK(splitting_invariance_check(a, omega, QMat(rows, cols)));  // S = 0

    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        QMat s(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s.at(r, c) = Rational(entry(rng), 1 + trial % 3);
        CHECK(splitting_invariance_check(a, omega, s));
    }

    CHECK_THROWS_AS(build_partial_minimal_model(a, omega, QMat(rows + 1, cols)), api_error);
    CHECK_THROWS_AS(build_partial_minimal_model(a, omega, QMat(rows, cols + 1)), api_error);
}

TEST_CASE("splittings also leave the cube obstruction untouched") {
    const GradedAlgebra a = cube();  // dim H^3 = 0: the only splitting is 0
    const CohomologyClass omega = cls2(a, {1, 1, 1});
    CHECK(splitting_invariance_check(a, omega, QMat(0, 3)));
}
