#pragma once
// Ring constructors: complex projective spaces, tensor (Künneth) products, and
// the synthetic test algebras shipped as builtins.

#include <string>
#include <vector>

#include "sasakian/graded_algebra.hpp"

namespace sasakian {

inline GradedAlgebra point_algebra() {
    GradedAlgebra a;
    a.top_degree = 0;
    a.basis = {{"1"}};
    a.init_product_tables();
    a.product_entry(0, 0, 0, 0) = {Rational(1)};
    a.integration = {Rational(1)};
    return a;
}

// H*(CP^n): one generator h in degree 2, h^n integrates to 1.
inline GradedAlgebra projective_space(int n, const std::string& generator = "h") {
    if (n < 1) throw api_error("projective_space needs n >= 1");
    GradedAlgebra a;
    a.top_degree = 2 * n;
    a.basis.assign(2 * n + 1, {});
    a.basis[0] = {"1"};
    for (int k = 1; k <= n; ++k)
        a.basis[2 * k] = {k == 1 ? generator : generator + "^" + std::to_string(k)};
    a.init_product_tables();
    for (int i = 0; i <= n; ++i)
        for (int j = i; i + j <= n; ++j) a.product_entry(2 * i, 2 * j, 0, 0) = {Rational(1)};
    a.integration = {Rational(1)};
    return a;
}

namespace detail {

// Basis of degree d in A (x) B: pairs (u_p, v_q), p + q = d, ordered by p
// descending, then by the two factor indices. This makes products of
// projective lines come out as (a, b, c) in degree 2 and (ab, ac, bc) in
// degree 4.
struct TensorIndex {
    struct Entry {
        int p, i, j; // u = A-basis i in degree p, v = B-basis j in degree d-p
    };
    std::vector<std::vector<Entry>> by_degree;
    std::vector<std::vector<std::vector<int>>> lookup; // [d][p index]: see build()

    static TensorIndex build(const GradedAlgebra& A, const GradedAlgebra& B) {
        TensorIndex t;
        const int N = A.top_degree + B.top_degree;
        t.by_degree.resize(N + 1);
        for (int d = 0; d <= N; ++d)
            for (int p = d; p >= 0; --p) {
                const int q = d - p;
                for (int i = 0; i < A.dim(p); ++i)
                    for (int j = 0; j < B.dim(q); ++j) t.by_degree[d].push_back({p, i, j});
            }
        return t;
    }

    int index_of(int d, int p, int i, int j, const GradedAlgebra& A,
                 const GradedAlgebra& B) const {
        int idx = 0;
        for (int pp = d; pp > p; --pp) idx += A.dim(pp) * B.dim(d - pp);
        return idx + i * B.dim(d - p) + j;
    }
};

} // namespace detail

// Künneth product with the Koszul sign (a(x)b)·(a'(x)b') = (-1)^{|b||a'|} aa'(x)bb'.
inline GradedAlgebra tensor_product(const GradedAlgebra& A, const GradedAlgebra& B) {
    require_valid(A);
    require_valid(B);
    GradedAlgebra t;
    t.top_degree = A.top_degree + B.top_degree;
    const detail::TensorIndex ti = detail::TensorIndex::build(A, B);
    t.basis.assign(t.top_degree + 1, {});
    for (int d = 0; d <= t.top_degree; ++d)
        for (const auto& e : ti.by_degree[d]) {
            const std::string& lu = A.basis[e.p][e.i];
            const std::string& lv = B.basis[d - e.p][e.j];
            t.basis[d].push_back(lu == "1" ? lv : (lv == "1" ? lu : lu + lv));
        }
    t.init_product_tables();
    for (int p = 0; p <= t.top_degree; ++p)
        for (int q = p; p + q <= t.top_degree; ++q)
            for (std::size_t ui = 0; ui < ti.by_degree[p].size(); ++ui)
                for (std::size_t vj = 0; vj < ti.by_degree[q].size(); ++vj) {
                    const auto& u = ti.by_degree[p][ui];
                    const auto& v = ti.by_degree[q][vj];
                    const int up = u.p, uq = p - u.p;
                    const int vp = v.p, vq = q - v.p;
                    if (up + vp > A.top_degree || uq + vq > B.top_degree) continue;
                    const QVec& pa = basis_product_stored(A, up, vp, u.i, v.i);
                    const QVec& pb = basis_product_stored(B, uq, vq, u.j, v.j);
                    Rational sign = 1;
                    if ((uq % 2) && (vp % 2)) sign = -1;              // Koszul: b past a'
                    if (up > vp && (up % 2) && (vp % 2)) sign = -sign; // stored-orientation
                    if (uq > vq && (uq % 2) && (vq % 2)) sign = -sign;
                    QVec& out = t.product_entry(p, q, static_cast<int>(ui), static_cast<int>(vj));
                    for (int ai = 0; ai < A.dim(up + vp); ++ai) {
                        if (pa[ai] == 0) continue;
                        for (int bj = 0; bj < B.dim(uq + vq); ++bj) {
                            if (pb[bj] == 0) continue;
                            const int k =
                                ti.index_of(p + q, up + vp, ai, bj, A, B);
                            out[k] += sign * pa[ai] * pb[bj];
                        }
                    }
                }
    t.integration.assign(t.dim(t.top_degree), Rational(0));
    // top degree splits only as (N_A, N_B); integration is the product functional
    for (int ai = 0; ai < A.dim(A.top_degree); ++ai)
        for (int bj = 0; bj < B.dim(B.top_degree); ++bj) {
            const int k = ti.index_of(t.top_degree, A.top_degree, ai, bj, A, B);
            t.integration[k] = A.integration[ai] * B.integration[bj];
        }
    return t;
}

// dims (1,0,2,0,2,0,1): H^2 = <w, u> with w·u = 0, so ker(·w: H^2 -> H^4) = <u>
// while w^3 != 0. The circle bundle over it has b3 = 1 (odd), and u·u = U is
// not a multiple of w·H^2, so the quotient cup square fires.
inline GradedAlgebra synthetic_oddker() {
    GradedAlgebra a;
    a.top_degree = 6;
    a.basis = {{"1"}, {}, {"w", "u"}, {}, {"W", "U"}, {}, {"v"}};
    a.init_product_tables();
    auto unit = [&](int q) {
        for (int j = 0; j < a.dim(q); ++j) {
            QVec e(a.dim(q));
            e[j] = 1;
            a.product_entry(0, q, 0, j) = e;
        }
    };
    for (int q = 0; q <= 6; ++q) unit(q);
    a.product_entry(2, 2, 0, 0) = {Rational(1), Rational(0)}; // w·w = W
    a.product_entry(2, 2, 0, 1) = {Rational(0), Rational(0)}; // w·u = 0
    a.product_entry(2, 2, 1, 0) = {Rational(0), Rational(0)};
    a.product_entry(2, 2, 1, 1) = {Rational(0), Rational(1)}; // u·u = U
    a.product_entry(2, 4, 0, 0) = {Rational(1)};              // w·W = v
    a.product_entry(2, 4, 1, 1) = {Rational(1)};              // u·U = v
    a.integration = {Rational(1)};
    a.omega = QVec{Rational(1), Rational(0)};
    return a;
}

// synthetic_oddker with a hyperbolic H^3 block added: dims (1,0,2,2,2,0,1),
// b3 = 2 and dim ker(·w) = 1, so the circle bundle has b3 = 3.
inline GradedAlgebra synthetic_oddker_b3() {
    GradedAlgebra a = synthetic_oddker();
    a.basis[3] = {"s", "t"};
    a.init_product_tables();
    auto unit = [&](int q) {
        for (int j = 0; j < a.dim(q); ++j) {
            QVec e(a.dim(q));
            e[j] = 1;
            a.product_entry(0, q, 0, j) = e;
        }
    };
    for (int q = 0; q <= 6; ++q) unit(q);
    a.product_entry(2, 2, 0, 0) = {Rational(1), Rational(0)};
    a.product_entry(2, 2, 1, 1) = {Rational(0), Rational(1)};
    a.product_entry(2, 4, 0, 0) = {Rational(1)};
    a.product_entry(2, 4, 1, 1) = {Rational(1)};
    a.product_entry(3, 3, 0, 1) = {Rational(1)};  // s·t = v
    a.product_entry(3, 3, 1, 0) = {Rational(-1)}; // t·s = -v
    a.integration = {Rational(1)};
    a.omega = QVec{Rational(1), Rational(0)};
    return a;
}

// Connected-sum ring of (CP^1)^3 with S^3 x S^3: hard Lefschetz holds for
// omega = a+b+c, H^3 = <s, t> is nonzero, and the primitive subspace is
// 2-dimensional — the interesting case for splitting perturbations.
inline GradedAlgebra synthetic_h3() {
    GradedAlgebra cube = tensor_product(
        tensor_product(projective_space(1, "a"), projective_space(1, "b")),
        projective_space(1, "c"));
    GradedAlgebra a = cube;
    a.basis[3] = {"s", "t"};
    a.init_product_tables();
    // copy the (CP^1)^3 tables, which the re-init wiped
    for (const auto& [key, table] : cube.products) {
        auto it = a.products.find(key);
        for (std::size_t idx = 0; idx < table.size(); ++idx) it->second[idx] = table[idx];
    }
    auto unit = [&](int q) {
        for (int j = 0; j < a.dim(q); ++j) {
            QVec e(a.dim(q));
            e[j] = 1;
            a.product_entry(0, q, 0, j) = e;
        }
    };
    unit(3);
    a.product_entry(3, 3, 0, 1) = {Rational(1)};  // s·t = abc
    a.product_entry(3, 3, 1, 0) = {Rational(-1)};
    a.omega = QVec{Rational(1), Rational(1), Rational(1)};
    return a;
}

// dims (1,0,3,0,3,0,1), hard Lefschetz for omega = w, but the form
// (α,β) -> ∫αβω on the primitive subspace <p, q> is diag(1,-1): indefinite,
// so the floating-point orthonormal cross-check must declare itself
// inapplicable while the exact route still works (and finds non-formality).
inline GradedAlgebra synthetic_indefinite() {
    GradedAlgebra a;
    a.top_degree = 6;
    a.basis = {{"1"}, {}, {"w", "p", "q"}, {}, {"W", "X", "Y"}, {}, {"v"}};
    a.init_product_tables();
    auto unit = [&](int deg) {
        for (int j = 0; j < a.dim(deg); ++j) {
            QVec e(a.dim(deg));
            e[j] = 1;
            a.product_entry(0, deg, 0, j) = e;
        }
    };
    for (int deg = 0; deg <= 6; ++deg) unit(deg);
    auto set22 = [&](int i, int j, QVec val) {
        a.product_entry(2, 2, i, j) = val;
        a.product_entry(2, 2, j, i) = std::move(val);
    };
    set22(0, 0, {Rational(1), Rational(0), Rational(0)});  // w·w = W
    set22(0, 1, {Rational(0), Rational(1), Rational(0)});  // w·p = X
    set22(0, 2, {Rational(0), Rational(0), Rational(1)});  // w·q = Y
    set22(1, 1, {Rational(1), Rational(0), Rational(0)});  // p·p = W
    set22(1, 2, {Rational(0), Rational(0), Rational(0)});  // p·q = 0
    set22(2, 2, {Rational(-1), Rational(0), Rational(0)}); // q·q = -W
    a.product_entry(2, 4, 0, 0) = {Rational(1)};  // w·W = v
    a.product_entry(2, 4, 1, 1) = {Rational(1)};  // p·X = v
    a.product_entry(2, 4, 2, 2) = {Rational(-1)}; // q·Y = -v
    a.integration = {Rational(1)};
    a.omega = QVec{Rational(1), Rational(0), Rational(0)};
    return a;
}

// Twin of synthetic_indefinite with q·q = +W: the form on the primitive
// subspace is diag(1,1), positive definite, so the orthonormal cross-check
// runs with the opposite sign than on the Kähler-type examples (where the
// Hodge–Riemann form is negative definite). Still non-formal.
inline GradedAlgebra synthetic_posdef() {
    GradedAlgebra a = synthetic_indefinite();
    a.product_entry(2, 2, 2, 2) = {Rational(1), Rational(0), Rational(0)}; // q·q = W
    a.product_entry(2, 4, 2, 2) = {Rational(1)};                           // q·Y = v
    return a;
}

} // namespace sasakian
