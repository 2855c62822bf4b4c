#pragma once
// The degree-7 formality obstruction of the circle bundle over a degree-6
// Poincaré duality algebra: the quadrilinear form
//     F(α,β,γ,δ) = ∫ L_ω^{-1}(α·β) · γ·δ
// on primitive degree-2 classes, restricted to the kernel K_M of the
// symmetrization map Sym²(Sym²P) → Sym⁴P. Vanishing of F on K_M decides
// formality; the individual kernel evaluations are triple Massey products
// ⟨e_i,e_j,e_k⟩∪e_l up to the index bookkeeping below. A floating-point
// cross-check re-derives the same numbers from the triple-integral tensor of
// an orthonormalized basis whenever the form (α,β) ↦ ∫ α·β·ω is definite on P.

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "sasakian/graded_algebra.hpp"
#include "sasakian/lefschetz.hpp"
#include "sasakian/sym_index.hpp"

namespace sasakian {

// Columns are indexed by unordered pairs (A,B) of Sym²P monomials, rows by
// degree-4 monomials; the map multiplies monomials with no combinatorial
// prefactor, so each column has exactly one unit entry.
inline QMat symmetrization_map(int m) {
    const Sym2Index s2(m);
    const Sym2Index outer(s2.size());
    const Sym4Index s4(m);
    QMat mat(s4.size(), outer.size());
    for (int c = 0; c < outer.size(); ++c) {
        const auto [ia, ib] = outer.pairs[c];
        const auto [i, j] = s2.pairs[ia];
        const auto [k, l] = s2.pairs[ib];
        mat.at(s4.index_of({i, j, k, l}), c) = 1;
    }
    return mat;
}

struct ObstructionKernel {
    int m = 0;
    Sym2Index sym2{0};       // monomial basis of Sym²P
    Sym2Index outer{0};      // unordered pairs of Sym² monomials = basis of Sym²(Sym²P)
    std::vector<QVec> kernel_basis;  // lex order, leading coefficient +1
    int dimension = 0;
};

inline ObstructionKernel obstruction_kernel(int m) {
    ObstructionKernel k;
    k.m = m;
    k.sym2 = Sym2Index(m);
    k.outer = Sym2Index(k.sym2.size());
    k.kernel_basis = kernel_basis_vectors(symmetrization_map(m));
    k.dimension = static_cast<int>(k.kernel_basis.size());
    return k;
}

namespace detail {

struct FContext {
    std::vector<CohomologyClass> p;  // basis of P
    QMat linv;                       // (·omega: H² → H⁴)^{-1}
};

inline FContext make_f_context(const GradedAlgebra& a, const CohomologyClass& omega,
                               const std::vector<CohomologyClass>* p_override) {
    require_valid(a);
    if (a.top_degree != 6)
        throw inapplicable_error("formality obstruction needs a degree-6 base algebra");
    const PrimitiveData prim = primitive_subspace(a, omega);  // carries the hard Lefschetz gate
    FContext ctx;
    if (p_override) {
        if (p_override->size() != prim.basis.size())
            throw api_error("supplied P basis has the wrong size");
        QMat coords(a.dim(2), static_cast<int>(p_override->size()));
        const CohomologyClass omega2 = power(a, omega, 2);
        for (std::size_t t = 0; t < p_override->size(); ++t) {
            const CohomologyClass& cls = (*p_override)[t];
            if (cls.degree != 2) throw api_error("P basis classes must have degree 2");
            if (!is_zero(mul(a, cls, omega2).coords))
                throw api_error("supplied class is not primitive (omega^2 · class != 0)");
            for (int r = 0; r < a.dim(2); ++r) coords.at(r, static_cast<int>(t)) = cls.coords[r];
        }
        if (rank(coords) != static_cast<int>(p_override->size()))
            throw api_error("supplied P basis is linearly dependent");
        ctx.p = *p_override;
    } else {
        ctx.p = prim.basis;
    }
    const auto inv = inverse(multiplication_matrix(a, omega, 2));
    if (!inv) throw inapplicable_error("·omega: H² → H⁴ is not invertible");
    ctx.linv = *inv;
    return ctx;
}

} // namespace detail

// Exact evaluation of F on four primitive classes. Symmetric in (α,β), in
// (γ,δ), and under (α,β)↔(γ,δ) — the last because L_ω^{-1} is self-adjoint
// for the integration pairing.
inline Rational F_eval(const GradedAlgebra& a, const CohomologyClass& omega,
                       const CohomologyClass& alpha, const CohomologyClass& beta,
                       const CohomologyClass& gamma, const CohomologyClass& delta) {
    const detail::FContext ctx = detail::make_f_context(a, omega, nullptr);
    const CohomologyClass omega2 = power(a, omega, 2);
    for (const CohomologyClass* arg : {&alpha, &beta, &gamma, &delta}) {
        if (arg->degree != 2) throw api_error("F arguments must have degree 2");
        if (!is_zero(mul(a, *arg, omega2).coords))
            throw api_error("F arguments must be primitive (omega^2 · arg = 0)");
    }
    const CohomologyClass linv_ab{2, ctx.linv.apply(mul(a, alpha, beta).coords)};
    return integrate(a, mul(a, mul(a, linv_ab, gamma), delta));
}

struct FormalityReport {
    int m = 0;
    std::vector<CohomologyClass> p_basis;
    ObstructionKernel kernel;
    std::vector<std::vector<Rational>> f_pairs;  // F on Sym²-monomial pairs, s × s
    std::vector<Rational> values;                // F_M on the kernel basis, lex order
    bool formal = true;
    std::optional<int> witness_index;            // first kernel index with nonzero value
};

inline FormalityReport evaluate_F_M(const GradedAlgebra& a, const CohomologyClass& omega,
                                    const std::vector<CohomologyClass>* p_basis = nullptr) {
    const detail::FContext ctx = detail::make_f_context(a, omega, p_basis);
    FormalityReport rep;
    rep.m = static_cast<int>(ctx.p.size());
    rep.p_basis = ctx.p;
    rep.kernel = obstruction_kernel(rep.m);
    const int s = rep.kernel.sym2.size();

    std::vector<CohomologyClass> prods;      // p_i·p_j per Sym² monomial
    std::vector<CohomologyClass> linv_prods; // L_ω^{-1}(p_i·p_j)
    for (const auto& [i, j] : rep.kernel.sym2.pairs) {
        prods.push_back(mul(a, ctx.p[i], ctx.p[j]));
        linv_prods.push_back({2, ctx.linv.apply(prods.back().coords)});
    }
    rep.f_pairs.assign(s, std::vector<Rational>(s));
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            rep.f_pairs[x][y] = integrate(a, mul(a, linv_prods[x], prods[y]));

    for (int r = 0; r < rep.kernel.dimension; ++r) {
        Rational val = 0;
        const QVec& vec = rep.kernel.kernel_basis[r];
        for (int c = 0; c < rep.kernel.outer.size(); ++c) {
            if (vec[c] == 0) continue;
            const auto [x, y] = rep.kernel.outer.pairs[c];
            val += vec[c] * rep.f_pairs[x][y];
        }
        rep.values.push_back(val);
        if (val != 0 && !rep.witness_index) {
            rep.formal = false;
            rep.witness_index = r;
        }
    }
    return rep;
}

// ⟨e_i,e_j,e_k⟩∪e_l as the F-value of the kernel element
//     (e_i·e_j)·(e_k·e_l) − (e_i·e_k)·(e_j·e_l),
// antisymmetric under the swap of the two middle indices. Indices are 1-based
// over the primitive basis.
inline Rational massey_triple(const FormalityReport& rep, int i, int j, int k, int l) {
    for (int idx : {i, j, k, l})
        if (idx < 1 || idx > rep.m) throw api_error("massey indices must lie in 1..m");
    const Sym2Index& s2 = rep.kernel.sym2;
    return rep.f_pairs[s2.index_of(i - 1, j - 1)][s2.index_of(k - 1, l - 1)] -
           rep.f_pairs[s2.index_of(i - 1, k - 1)][s2.index_of(j - 1, l - 1)];
}

inline Rational massey_triple(const GradedAlgebra& a, const CohomologyClass& omega, int i,
                              int j, int k, int l) {
    return massey_triple(evaluate_F_M(a, omega), i, j, k, l);
}

// Coordinates of the Massey kernel element in Sym²(Sym²P); these span K_M.
inline QVec massey_element(const ObstructionKernel& kernel, int i, int j, int k, int l) {
    for (int idx : {i, j, k, l})
        if (idx < 1 || idx > kernel.m) throw api_error("massey indices must lie in 1..m");
    QVec v(kernel.outer.size(), Rational(0));
    const Sym2Index& s2 = kernel.sym2;
    v[kernel.outer.index_of(s2.index_of(i - 1, j - 1), s2.index_of(k - 1, l - 1))] += 1;
    v[kernel.outer.index_of(s2.index_of(i - 1, k - 1), s2.index_of(j - 1, l - 1))] -= 1;
    return v;
}

struct MasseyEntry {
    int i, j, k, l;
    Rational value;
};

inline std::vector<MasseyEntry> massey_table(const FormalityReport& rep) {
    std::vector<MasseyEntry> out;
    for (int i = 1; i <= rep.m; ++i)
        for (int j = 1; j <= rep.m; ++j)
            for (int k = 1; k <= rep.m; ++k)
                for (int l = 1; l <= rep.m; ++l)
                    out.push_back({i, j, k, l, massey_triple(rep, i, j, k, l)});
    return out;
}

// Exact Gram matrix of the form (α,β) ↦ ∫ α·β·ω on a family of degree-2 classes.
inline std::vector<std::vector<Rational>> gram_matrix(const GradedAlgebra& a,
                                                      const CohomologyClass& omega,
                                                      const std::vector<CohomologyClass>& fam) {
    const std::size_t n = fam.size();
    std::vector g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = integrate(a, mul(a, mul(a, fam[i], fam[j]), omega));
    return g;
}

namespace detail {
// +1 / -1 for a definite symmetric matrix (leading-principal-minor test), 0 otherwise.
inline int definiteness_sign(const std::vector<std::vector<Rational>>& g) {
    const int n = static_cast<int>(g.size());
    bool pos = true, neg = true;
    for (int k = 1; k <= n; ++k) {
        QMat sub(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub.at(r, c) = g[r][c];
        const Rational minor = det(sub);
        if (minor <= 0) pos = false;
        if ((k % 2 == 1 && minor >= 0) || (k % 2 == 0 && minor <= 0)) neg = false;
    }
    return pos ? 1 : (neg ? -1 : 0);
}
} // namespace detail

struct LambdaCrosscheck {
    bool applicable = false;
    int definiteness = 0;              // sign of the form on P when definite
    double max_abs_discrepancy = 0.0;
    std::vector<double> exact_values;    // F_M on the kernel basis over the orthonormalized P
    std::vector<double> formula_values;  // δ_{ij}δ_{kl}/∫ω³ + ε·Σ_t λ_{ijt}λ_{klt} on the same
};

// Orthonormalize P for the definite form ε·∫(α·β·ω), then compare the exact
// F values (transported into that basis) against the triple-integral formula
//     F(e_i e_j, e_k e_l) = δ_{ij} δ_{kl} / ∫ω³ + ε · Σ_t λ_{ijt} λ_{klt}
// with λ_{ijt} = ∫ e_i e_j e_t. The first summand is the ω-direction of
// L_ω^{-1}(e_i e_j); the rest is its primitive part paired entry by entry.
inline LambdaCrosscheck lambda_crosscheck(const GradedAlgebra& a, const CohomologyClass& omega) {
    const FormalityReport rep = evaluate_F_M(a, omega);
    LambdaCrosscheck out;
    const int m = rep.m;
    if (m == 0) {
        out.applicable = true;
        out.definiteness = 1;
        return out;
    }
    const auto g = gram_matrix(a, omega, rep.p_basis);
    out.definiteness = detail::definiteness_sign(g);
    if (out.definiteness == 0) return out;  // inapplicable; exact verdict stands on its own
    out.applicable = true;
    const double eps = out.definiteness;

    std::vector gd(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gd[i][j] = eps * to_double(g[i][j]);
    // Gram–Schmidt in P-coordinates for the positive form gd.
    std::vector<std::vector<double>> e;  // e[t][r]: coordinates of ê_t over p_1..p_m
    const auto dot = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double acc = 0;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) acc += u[r] * gd[r][c] * v[c];
        return acc;
    };
    for (int t = 0; t < m; ++t) {
        std::vector<double> v(m, 0.0);
        v[t] = 1.0;
        for (int u = 0; u < t; ++u) {
            const double proj = dot(v, e[u]);
            for (int r = 0; r < m; ++r) v[r] -= proj * e[u][r];
        }
        const double norm = std::sqrt(dot(v, v));
        for (double& x : v) x /= norm;
        e.push_back(v);
    }

    const auto lam = triple_integrals(a, rep.p_basis);
    std::vector lamd(m, std::vector(m, std::vector<double>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) lamd[i][j][k] = to_double(lam[i][j][k]);
    // λ̂ over the orthonormalized basis.
    std::vector lhat(m, std::vector(m, std::vector<double>(m, 0.0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < m; ++t) {
                double acc = 0;
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        for (int u = 0; u < m; ++u)
                            acc += e[i][r] * e[j][s] * e[t][u] * lamd[r][s][u];
                lhat[i][j][t] = acc;
            }

    const Sym2Index& s2 = rep.kernel.sym2;
    std::vector f4(s2.size(), std::vector<double>(s2.size()));  // exact F in ê-coordinates
    for (int xa = 0; xa < s2.size(); ++xa)
        for (int xb = 0; xb < s2.size(); ++xb) {
            const auto [i, j] = s2.pairs[xa];
            const auto [k, l] = s2.pairs[xb];
            double acc = 0;
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    for (int t = 0; t < m; ++t)
                        for (int u = 0; u < m; ++u)
                            acc += e[i][r] * e[j][s] * e[k][t] * e[l][u] *
                                   to_double(rep.f_pairs[s2.index_of(r, s)][s2.index_of(t, u)]);
            f4[xa][xb] = acc;
        }
    const double c = to_double(integrate(a, power(a, omega, 3)));
    const auto formula = [&](int xa, int xb) {
        const auto [i, j] = s2.pairs[xa];
        const auto [k, l] = s2.pairs[xb];
        double acc = (i == j && k == l) ? 1.0 / c : 0.0;
        for (int t = 0; t < m; ++t) acc += eps * lhat[i][j][t] * lhat[k][l][t];
        return acc;
    };
    for (const QVec& vec : rep.kernel.kernel_basis) {
        double exact = 0, form = 0;
        for (int col = 0; col < rep.kernel.outer.size(); ++col) {
            if (vec[col] == 0) continue;
            const auto [xa, xb] = rep.kernel.outer.pairs[col];
            exact += to_double(vec[col]) * f4[xa][xb];
            form += to_double(vec[col]) * formula(xa, xb);
        }
        out.exact_values.push_back(exact);
        out.formula_values.push_back(form);
        out.max_abs_discrepancy = std::max(out.max_abs_discrepancy, std::abs(exact - form));
    }
    return out;
}

} // namespace sasakian
