#include <catch2/catch_amalgamated.hpp>

#include "sasakian/builders.hpp"
#include "sasakian/formality.hpp"
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

} // namespace

TEST_CASE("symmetrization kernel has the expected dimension") {
    CHECK(obstruction_kernel(0).dimension == 0);
    CHECK(obstruction_kernel(1).dimension == 0);

    const ObstructionKernel k2 = obstruction_kernel(2);
    CHECK(k2.sym2.size() == 3);
    CHECK(k2.outer.size() == 6);
    REQUIRE(k2.dimension == 1);
    // The only relation: (p1p1)(p2p2) − (p1p2)(p1p2), leading coefficient +1.
    QVec expected(6, Rational(0));
    expected[k2.outer.index_of(k2.sym2.index_of(0, 0), k2.sym2.index_of(1, 1))] = 1;
    expected[k2.outer.index_of(k2.sym2.index_of(0, 1), k2.sym2.index_of(0, 1))] = -1;
    CHECK(k2.kernel_basis[0] == expected);

    const ObstructionKernel k3 = obstruction_kernel(3);
    CHECK(k3.outer.size() == 21);
    CHECK(k3.dimension == 6);  // 21 − 15: the symmetrization to Sym⁴ is onto

    const QMat sym = symmetrization_map(3);
    for (const QVec& v : k3.kernel_basis) CHECK(is_zero(sym.apply(v)));
}

TEST_CASE("frozen F table on the triple product") {
    const GradedAlgebra a = cube();
    const FormalityReport rep = evaluate_F_M(a, cls2(a, {1, 1, 1}));
    REQUIRE(rep.m == 2);
    const auto F = [&](int x, int y, int z, int w) {
        return rep.f_pairs[rep.kernel.sym2.index_of(x, y)][rep.kernel.sym2.index_of(z, w)];
    };
    CHECK(F(0, 0, 0, 0) == -2);
    CHECK(F(0, 0, 0, 1) == -1);
    CHECK(F(0, 0, 1, 1) == 2);
    CHECK(F(0, 1, 0, 1) == Rational(-5, 2));
    CHECK(F(0, 1, 1, 1) == -1);
    CHECK(F(1, 1, 1, 1) == -2);
    // Self-adjointness of L_omega^{-1} makes the pair table symmetric.
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(rep.f_pairs[x][y] == rep.f_pairs[y][x]);

    REQUIRE(rep.kernel.dimension == 1);
    CHECK(rep.values[0] == Rational(9, 2));
    CHECK_FALSE(rep.formal);
    REQUIRE(rep.witness_index.has_value());
    CHECK(*rep.witness_index == 0);
}

TEST_CASE("F agrees with a direct four-class evaluation") {
    const GradedAlgebra a = cube();
    const CohomologyClass omega = cls2(a, {1, 1, 1});
    const CohomologyClass p1 = cls2(a, {1, -1, 0}), p2 = cls2(a, {1, 0, -1});
    CHECK(F_eval(a, omega, p1, p1, p2, p2) == 2);
    CHECK(F_eval(a, omega, p1, p2, p1, p2) == Rational(-5, 2));
    // slot symmetries
    CHECK(F_eval(a, omega, p1, p2, p2, p2) == F_eval(a, omega, p2, p1, p2, p2));
    CHECK(F_eval(a, omega, p1, p1, p1, p2) == F_eval(a, omega, p1, p2, p1, p1));
    // non-primitive arguments are refused
    CHECK_THROWS_AS(F_eval(a, omega, omega, p1, p2, p2), api_error);
}

TEST_CASE("formal examples produce no obstruction") {
    const GradedAlgebra cp3 = projective_space(3);
    const FormalityReport r3 = evaluate_F_M(cp3, cls2(cp3, {1}));
    CHECK(r3.m == 0);
    CHECK(r3.kernel.dimension == 0);
    CHECK(r3.formal);

    const GradedAlgebra p12 = tensor_product(projective_space(1, "a"), projective_space(2, "h"));
    const FormalityReport r12 = evaluate_F_M(p12, cls2(p12, {1, 1}));
    CHECK(r12.m == 1);
    CHECK(r12.kernel.dimension == 0);  // Sym²(Sym²P) → Sym⁴P is injective for m = 1
    CHECK(r12.formal);
}

TEST_CASE("synthetic examples witness both signs of the obstruction") {
    const GradedAlgebra ind = synthetic_indefinite();
    const FormalityReport ri = evaluate_F_M(ind, cls2(ind, {1, 0, 0}));
    REQUIRE(ri.kernel.dimension == 1);
    CHECK(ri.values[0] == -1);
    CHECK_FALSE(ri.formal);

    const GradedAlgebra pos = synthetic_posdef();
    const FormalityReport rp = evaluate_F_M(pos, cls2(pos, {1, 0, 0}));
    REQUIRE(rp.kernel.dimension == 1);
    CHECK(rp.values[0] == 1);
    CHECK_FALSE(rp.formal);
}

TEST_CASE("verdict is invariant under basis rescaling and omega scaling") {
    const GradedAlgebra a = cube();
    const CohomologyClass omega = cls2(a, {1, 1, 1});

    std::vector<CohomologyClass> scaled = {Rational(2) * cls2(a, {1, -1, 0}),
                                           cls2(a, {1, 0, -1})};
    const FormalityReport rep = evaluate_F_M(a, omega, &scaled);
    REQUIRE(rep.kernel.dimension == 1);
    CHECK(rep.values[0] == 18);  // (2p1)²(p2)² slot picks up 2⁴/... net factor 4
    CHECK_FALSE(rep.formal);

    const FormalityReport rep2 = evaluate_F_M(a, Rational(2) * omega);
    REQUIRE(rep2.kernel.dimension == 1);
    CHECK(rep2.values[0] == Rational(9, 4));  // L^{-1} halves, one omega inverse in F
    CHECK_FALSE(rep2.formal);
}

TEST_CASE("alternative primitive bases are checked for shape") {
    const GradedAlgebra a = cube();
    const CohomologyClass omega = cls2(a, {1, 1, 1});
    std::vector<CohomologyClass> bad = {cls2(a, {1, -1, 0})};  // wrong size
    CHECK_THROWS_AS(evaluate_F_M(a, omega, &bad), api_error);
    bad = {cls2(a, {1, -1, 0}), cls2(a, {1, 0, 0})};  // a is not primitive
    CHECK_THROWS_AS(evaluate_F_M(a, omega, &bad), api_error);
    bad = {cls2(a, {1, -1, 0}), cls2(a, {2, -2, 0})};  // dependent
    CHECK_THROWS_AS(evaluate_F_M(a, omega, &bad), api_error);
}

TEST_CASE("formality machinery enforces its preconditions") {
    const GradedAlgebra odd = synthetic_oddker();
    CHECK_THROWS_AS(evaluate_F_M(odd, cls2(odd, {1, 0})), inapplicable_error);
    const GradedAlgebra cp2 = projective_space(2);
    CHECK_THROWS_AS(evaluate_F_M(cp2, cls2(cp2, {1})), inapplicable_error);
}

TEST_CASE("massey values on the triple product") {
    const GradedAlgebra a = cube();
    const FormalityReport rep = evaluate_F_M(a, cls2(a, {1, 1, 1}));
    CHECK(massey_triple(rep, 1, 2, 1, 2) == Rational(-9, 2));
    CHECK(massey_triple(rep, 1, 1, 2, 2) == Rational(9, 2));
    CHECK(massey_triple(rep, 2, 1, 1, 2) == 0);
    CHECK(massey_triple(rep, 1, 1, 1, 1) == 0);
    CHECK_THROWS_AS(massey_triple(rep, 0, 1, 1, 1), api_error);
    CHECK_THROWS_AS(massey_triple(rep, 1, 1, 1, 3), api_error);
}

TEST_CASE("massey table is antisymmetric in the middle pair") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 8; ++trial) {
        const auto [a, omega] = random_hl_pair(rng);
        const FormalityReport rep = evaluate_F_M(a, omega);
        bool any_nonzero = false;
        for (const MasseyEntry& e : massey_table(rep)) {
            CHECK(e.value == -massey_triple(rep, e.i, e.k, e.j, e.l));
            if (e.value != 0) any_nonzero = true;
        }
        // K_M is spanned by the massey elements, so the table vanishes
        // exactly when the obstruction class does.
        CHECK(any_nonzero == !rep.formal);
    }
}

TEST_CASE("massey elements land in the symmetrization kernel") {
    const ObstructionKernel k = obstruction_kernel(3);
    const QMat sym = symmetrization_map(3);
    RowSpan span(k.outer.size());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int kk = 1; kk <= 3; ++kk)
                for (int l = 1; l <= 3; ++l) {
                    const QVec v = massey_element(k, i, j, kk, l);
                    CHECK(is_zero(sym.apply(v)));
                    span.insert(v);
                }
    CHECK(span.dim() == k.dimension);  // they span all of K_M
}

TEST_CASE("gram matrix and definiteness classification") {
    const GradedAlgebra a = cube();
    const CohomologyClass omega = cls2(a, {1, 1, 1});
    const PrimitiveData p = primitive_subspace(a, omega);
    const auto g = gram_matrix(a, omega, p.basis);
    CHECK(g[0][0] == -2);
    CHECK(g[0][1] == -1);
    CHECK(g[1][0] == -1);
    CHECK(g[1][1] == -2);
}

TEST_CASE("lambda crosscheck validates the triple-integral formula") {
    SECTION("triple product: negative definite, frozen value 3/2") {
        const GradedAlgebra a = cube();
        const LambdaCrosscheck cc = lambda_crosscheck(a, cls2(a, {1, 1, 1}));
        REQUIRE(cc.applicable);
        CHECK(cc.definiteness == -1);
        REQUIRE(cc.exact_values.size() == 1);
        CHECK(cc.exact_values[0] == Catch::Approx(1.5).epsilon(1e-9));
        CHECK(cc.formula_values[0] == Catch::Approx(1.5).epsilon(1e-9));
        CHECK(cc.max_abs_discrepancy < 1e-9);
    }
    SECTION("positive definite variant is exact with all lambda zero") {
        const GradedAlgebra a = synthetic_posdef();
        const LambdaCrosscheck cc = lambda_crosscheck(a, cls2(a, {1, 0, 0}));
        REQUIRE(cc.applicable);
        CHECK(cc.definiteness == 1);
        REQUIRE(cc.exact_values.size() == 1);
        CHECK(cc.exact_values[0] == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(cc.max_abs_discrepancy < 1e-12);
    }
    SECTION("indefinite form opts out") {
        const GradedAlgebra a = synthetic_indefinite();
        const LambdaCrosscheck cc = lambda_crosscheck(a, cls2(a, {1, 0, 0}));
        CHECK_FALSE(cc.applicable);
        CHECK(cc.definiteness == 0);
    }
    SECTION("empty primitive space is vacuously definite") {
        const GradedAlgebra cp3 = projective_space(3);
        const LambdaCrosscheck cc = lambda_crosscheck(cp3, cls2(cp3, {1}));
        CHECK(cc.applicable);
        CHECK(cc.max_abs_discrepancy == 0.0);
    }
    SECTION("rank-one primitive space has no kernel but stays applicable") {
        const GradedAlgebra a =
            tensor_product(projective_space(1, "a"), projective_space(2, "h"));
        const LambdaCrosscheck cc = lambda_crosscheck(a, cls2(a, {1, 1}));
        CHECK(cc.applicable);
        CHECK(cc.definiteness == -1);
        CHECK(cc.exact_values.empty());
    }
}

TEST_CASE("random hard lefschetz pairs: F is symmetric and well-defined") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 5; ++trial) {
        const auto [a, omega] = random_hl_pair(rng);
        const PrimitiveData prim = primitive_subspace(a, omega);
        if (prim.basis.size() < 2) continue;
        const CohomologyClass &x = prim.basis[0], &y = prim.basis[1];
        CHECK(F_eval(a, omega, x, y, x, y) == F_eval(a, omega, y, x, x, y));
        CHECK(F_eval(a, omega, x, x, y, y) == F_eval(a, omega, y, y, x, x));
        CHECK(F_eval(a, omega, x, y, y, y) == F_eval(a, omega, y, y, x, y));
    }
}
