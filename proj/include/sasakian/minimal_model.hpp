#pragma once
// The Sullivan model (H ⊗ Λx, dx = omega) of the circle bundle: a finite
// bigraded complex whose degree-d piece is H^d ⊕ H^{d-1}·x, with
// d(h) = 0 and d(h·x) = (-1)^{|h|} h·omega. Its cohomology is computed by
// plain exact linear algebra and must reproduce the Gysin-sequence answer.
// On top of it, the degree-≤3 partial minimal model: generators V² = P,
// V³ = C³ ⊕ N³ with C³ = H³ and N³ = Sym²P, the quasi-isomorphism data ρ
// with ρ(α·β) = L_ω^{-1}(α·β)·x (plus an optional splitting perturbation
// valued in H³), and the 3-equivalence verification.

#include <optional>
#include <string>
#include <vector>

#include "sasakian/formality.hpp"
#include "sasakian/graded_algebra.hpp"
#include "sasakian/lefschetz.hpp"
#include "sasakian/sym_index.hpp"

namespace sasakian {

// Homogeneous element of degree `degree`: h lives in H^degree, xh in
// H^{degree-1} (the coefficient of x). Out-of-range components are empty.
struct ModelElement {
    int degree = 0;
    QVec h;
    QVec xh;
};

struct SullivanModel {
    GradedAlgebra base;
    CohomologyClass omega;

    int dim_h(int d) const {
        return (d >= 0 && d <= base.top_degree) ? base.dim(d) : 0;
    }
    int dim(int d) const { return dim_h(d) + dim_h(d - 1); }
    int top() const { return base.top_degree + 1; }
};

inline ModelElement model_zero(const SullivanModel& s, int degree) {
    return {degree, QVec(s.dim_h(degree), Rational(0)), QVec(s.dim_h(degree - 1), Rational(0))};
}

// Basis order per degree: the H^d basis first, then the H^{d-1}·x part.
inline ModelElement model_basis_element(const SullivanModel& s, int degree, int index) {
    ModelElement e = model_zero(s, degree);
    if (index < 0 || index >= s.dim(degree)) throw api_error("model basis index out of range");
    if (index < s.dim_h(degree))
        e.h[index] = 1;
    else
        e.xh[index - s.dim_h(degree)] = 1;
    return e;
}

inline QVec model_coords(const SullivanModel& s, const ModelElement& e) {
    QVec v = e.h;
    v.insert(v.end(), e.xh.begin(), e.xh.end());
    (void)s;
    return v;
}

inline ModelElement model_from_coords(const SullivanModel& s, int degree, const QVec& v) {
    if (static_cast<int>(v.size()) != s.dim(degree))
        throw api_error("model coordinate vector has the wrong length");
    ModelElement e{degree, QVec(v.begin(), v.begin() + s.dim_h(degree)),
                   QVec(v.begin() + s.dim_h(degree), v.end())};
    return e;
}

inline ModelElement model_from_class(const SullivanModel& s, const CohomologyClass& cls) {
    ModelElement e = model_zero(s, cls.degree);
    e.h = cls.coords;
    return e;
}

namespace detail {
// Product of homogeneous pieces of the base algebra, zero past the top degree.
inline QVec mul_h(const GradedAlgebra& a, int p, const QVec& u, int q, const QVec& v) {
    if (p + q > a.top_degree) return {};
    if (u.empty() || v.empty()) return QVec(a.dim(p + q), Rational(0));
    return mul(a, {p, u}, {q, v}).coords;
}
} // namespace detail

inline ModelElement model_mul(const SullivanModel& s, const ModelElement& u,
                              const ModelElement& v) {
    ModelElement out = model_zero(s, u.degree + v.degree);
    if (s.dim_h(out.degree) > 0)
        out.h = detail::mul_h(s.base, u.degree, u.h, v.degree, v.h);
    if (s.dim_h(out.degree - 1) > 0) {
        QVec acc(s.dim_h(out.degree - 1), Rational(0));
        const QVec t1 = detail::mul_h(s.base, u.degree, u.h, v.degree - 1, v.xh);
        if (!t1.empty()) add_scaled(acc, 1, t1);
        // x·h = (-1)^{|h|} h·x: moving x past the plain part of v costs its degree.
        const QVec t2 = detail::mul_h(s.base, u.degree - 1, u.xh, v.degree, v.h);
        if (!t2.empty()) add_scaled(acc, (v.degree % 2 == 0) ? Rational(1) : Rational(-1), t2);
        out.xh = acc;
    }
    return out;
}

inline ModelElement model_d(const SullivanModel& s, const ModelElement& u) {
    ModelElement out = model_zero(s, u.degree + 1);
    if (s.dim_h(u.degree + 1) > 0 && !u.xh.empty()) {
        const QVec t = detail::mul_h(s.base, u.degree - 1, u.xh, 2, s.omega.coords);
        if (!t.empty())
            add_scaled(out.h, ((u.degree - 1) % 2 == 0) ? Rational(1) : Rational(-1), t);
    }
    return out;
}

inline QMat model_d_matrix(const SullivanModel& s, int degree) {
    QMat m(s.dim(degree + 1), s.dim(degree));
    for (int j = 0; j < s.dim(degree); ++j) {
        const QVec img = model_coords(s, model_d(s, model_basis_element(s, degree, j)));
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = img[i];
    }
    return m;
}

inline ModelElement model_add(const SullivanModel& s, ModelElement u, const ModelElement& v) {
    if (u.degree != v.degree) throw api_error("model elements of different degrees");
    (void)s;
    add_scaled(u.h, 1, v.h);
    add_scaled(u.xh, 1, v.xh);
    return u;
}

inline bool model_is_zero(const ModelElement& e) { return is_zero(e.h) && is_zero(e.xh); }

inline std::string model_to_string(const SullivanModel& s, const ModelElement& e) {
    const bool has_h = !is_zero(e.h);
    const bool has_x = !is_zero(e.xh);
    if (!has_h && !has_x) return "0";
    std::string out;
    if (has_h) out = class_to_string(s.base, {e.degree, e.h});
    if (has_x) {
        if (has_h) out += " + ";
        out += "(" + class_to_string(s.base, {e.degree - 1, e.xh}) + ")·x";
    }
    return out;
}

// Coefficient of the top model degree 2n+1 = N+1, i.e. the H^N·x component.
inline Rational model_integrate_top(const SullivanModel& s, const ModelElement& e) {
    if (e.degree != s.top()) throw api_error("model integration needs the top degree");
    Rational acc = 0;
    for (std::size_t i = 0; i < e.xh.size(); ++i) acc += e.xh[i] * s.base.integration[i];
    return acc;
}

inline SullivanModel build_sullivan_model(const GradedAlgebra& a, const CohomologyClass& omega) {
    require_valid(a);
    if (a.top_degree != 6)
        throw inapplicable_error("the circle-bundle model needs a degree-6 base algebra");
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    SullivanModel s{a, omega};
    for (int d = 0; d <= s.top(); ++d)
        for (int j = 0; j < s.dim(d); ++j)
            if (!model_is_zero(model_d(s, model_d(s, model_basis_element(s, d, j)))))
                throw api_error("internal error: d∘d != 0 on the Sullivan model");
    return s;
}

struct ModelCohomology {
    std::vector<int> betti;                        // degrees 0 .. 7
    std::vector<std::vector<ModelElement>> reps;   // deterministic cocycle representatives
};

inline ModelCohomology model_cohomology(const SullivanModel& s) {
    ModelCohomology out;
    out.reps.resize(s.top() + 1);
    for (int d = 0; d <= s.top(); ++d) {
        RowSpan boundaries(s.dim(d));
        if (d >= 1) {
            const QMat prev = model_d_matrix(s, d - 1);
            for (int j = 0; j < prev.cols; ++j) boundaries.insert(prev.col(j));
        }
        int betti = 0;
        for (const QVec& z : kernel_basis_vectors(model_d_matrix(s, d)))
            if (boundaries.insert(z)) {
                ++betti;
                out.reps[d].push_back(model_from_coords(s, d, z));
            }
        out.betti.push_back(betti);
    }
    return out;
}

struct PartialMinimalModel {
    SullivanModel model;
    std::vector<CohomologyClass> p_basis;     // V² = P
    std::vector<CohomologyClass> c3_basis;    // C³ = H³ (the closed generators)
    Sym2Index n3{0};                          // N³ = Sym²P, lex monomial order
    QMat d_n3;                                // d: N³ → Λ²V² in Sym² coordinates (the identity)
    QMat splitting;                           // optional S: Sym²P → H³ shifting N³ to its graph
    std::vector<ModelElement> rho_p, rho_c3, rho_n3;
};

// Builds the generators through degree 3 and the morphism ρ into the model.
// A splitting matrix S (dim H³ × dim Sym²P) replaces each n ∈ N³ by n + S(n);
// the defaulted S = 0 is the splitting used everywhere else in the library.
inline PartialMinimalModel build_partial_minimal_model(
    const GradedAlgebra& a, const CohomologyClass& omega,
    const std::optional<QMat>& splitting = std::nullopt) {
    const PrimitiveData prim = primitive_subspace(a, omega);  // hard Lefschetz gate
    PartialMinimalModel pm{build_sullivan_model(a, omega),
                           prim.basis,
                           {},
                           Sym2Index(static_cast<int>(prim.basis.size())),
                           QMat::identity(0),
                           QMat(0, 0),
                           {},
                           {},
                           {}};
    const int m = static_cast<int>(pm.p_basis.size());
    const int s = pm.n3.size();
    pm.d_n3 = QMat::identity(s);
    pm.splitting = QMat(a.dim(3), s);
    if (splitting) {
        if (splitting->rows != a.dim(3) || splitting->cols != s)
            throw api_error("splitting matrix must map Sym²P (columns) to H³ (rows)");
        pm.splitting = *splitting;
    }
    for (int i = 0; i < a.dim(3); ++i) pm.c3_basis.push_back(basis_class(a, 3, i));

    const auto inv = inverse(multiplication_matrix(a, omega, 2));
    if (!inv) throw inapplicable_error("·omega: H² → H⁴ is not invertible");
    for (int i = 0; i < m; ++i) pm.rho_p.push_back(model_from_class(pm.model, pm.p_basis[i]));
    for (const CohomologyClass& c : pm.c3_basis)
        pm.rho_c3.push_back(model_from_class(pm.model, c));
    for (int idx = 0; idx < s; ++idx) {
        const auto [i, j] = pm.n3.pairs[idx];
        ModelElement r = model_zero(pm.model, 3);
        r.xh = inv->apply(mul(a, pm.p_basis[i], pm.p_basis[j]).coords);
        r.h = pm.splitting.col(idx);
        pm.rho_n3.push_back(r);
        // Chain-map identity d(ρ(n)) = ρ(dn) = ρ(p_i)·ρ(p_j), verified exactly.
        const ModelElement lhs = model_d(pm.model, r);
        const ModelElement rhs = model_mul(pm.model, pm.rho_p[i], pm.rho_p[j]);
        if (!(lhs.h == rhs.h && lhs.xh == rhs.xh))
            throw api_error("internal error: ρ∘d != d∘ρ on N³");
    }
    if (rank(pm.d_n3) != s) throw api_error("internal error: d is not injective on N³");
    return pm;
}

struct ThreeEquivalenceReport {
    std::vector<int> free_dims;   // H^0..H^4 of Λ(V² ⊕ V³)
    std::vector<int> model_dims;  // H^0..H^4 of the Sullivan model
    bool h2_iso = false;
    bool h3_iso = false;
    bool h4_injective = false;
    bool ok = false;
};

namespace detail {
// Coordinates of the class of cocycle z in the span of `reps` modulo `boundaries`.
inline std::optional<QVec> class_coordinates(const std::vector<QVec>& reps,
                                             const std::vector<QVec>& boundaries,
                                             const QVec& z) {
    if (z.empty()) return QVec{};
    const int n = static_cast<int>(z.size());
    QMat m(n, static_cast<int>(reps.size() + boundaries.size()));
    for (std::size_t j = 0; j < reps.size(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = reps[j][i];
    for (std::size_t j = 0; j < boundaries.size(); ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, static_cast<int>(reps.size() + j)) = boundaries[j][i];
    const auto sol = solve(m, z);
    if (!sol) return std::nullopt;
    return QVec(sol->begin(), sol->begin() + static_cast<int>(reps.size()));
}
} // namespace detail

// H^i of the free algebra on V^{≤3} vanishes in degree 4 because d maps N³
// isomorphically onto Λ²V²; the interesting content is that ρ identifies
// V² with H²(model) and C³ with H³(model).
inline ThreeEquivalenceReport verify_three_equivalence(const PartialMinimalModel& pm) {
    ThreeEquivalenceReport rep;
    const int m = static_cast<int>(pm.p_basis.size());
    const int c3 = static_cast<int>(pm.c3_basis.size());
    const int s = pm.n3.size();
    const int rank_dn3 = rank(pm.d_n3);
    rep.free_dims = {1, 0, m, c3 + (s - rank_dn3), s - rank_dn3};
    const ModelCohomology mc = model_cohomology(pm.model);
    rep.model_dims.assign(mc.betti.begin(), mc.betti.begin() + 5);

    const auto cocycle_matrix = [&](const std::vector<ModelElement>& gens, int degree) {
        std::vector<QVec> reps;
        for (const ModelElement& r : mc.reps[degree]) reps.push_back(model_coords(pm.model, r));
        std::vector<QVec> bnd;
        if (degree >= 1) {
            const QMat prev = model_d_matrix(pm.model, degree - 1);
            for (int j = 0; j < prev.cols; ++j) bnd.push_back(prev.col(j));
        }
        QMat out(static_cast<int>(reps.size()), static_cast<int>(gens.size()));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const auto coords = detail::class_coordinates(
                reps, bnd, model_coords(pm.model, gens[j]));
            if (!coords) throw api_error("internal error: ρ image is not a cocycle class");
            for (std::size_t i = 0; i < coords->size(); ++i)
                out.at(static_cast<int>(i), static_cast<int>(j)) = (*coords)[i];
        }
        return out;
    };
    const QMat h2 = cocycle_matrix(pm.rho_p, 2);
    const QMat h3 = cocycle_matrix(pm.rho_c3, 3);
    rep.h2_iso = (m == mc.betti[2]) && rank(h2) == m;
    rep.h3_iso = (c3 == mc.betti[3]) && rank(h3) == c3;
    rep.h4_injective = rep.free_dims[4] == 0;  // nothing in degree 4 to embed
    rep.ok = rep.h2_iso && rep.h3_iso && rep.h4_injective;
    return rep;
}

// Recomputes every F_M kernel value through the model with the perturbed
// splitting N³ ∋ n ↦ n + S(n) and checks the numbers are unchanged. The
// degree-3 correction S(n) multiplies into H³·H²·H² ⊂ H⁷ = 0, which is the
// reason the obstruction is splitting-independent.
inline bool splitting_invariance_check(const GradedAlgebra& a, const CohomologyClass& omega,
                                       const QMat& splitting) {
    const PartialMinimalModel base = build_partial_minimal_model(a, omega);
    const PartialMinimalModel pert = build_partial_minimal_model(a, omega, splitting);
    const FormalityReport rep = evaluate_F_M(a, omega);
    const auto eval_with = [&](const PartialMinimalModel& pm, const QVec& kernel_vec) {
        Rational acc = 0;
        for (int c = 0; c < rep.kernel.outer.size(); ++c) {
            if (kernel_vec[c] == 0) continue;
            const auto [xa, xb] = rep.kernel.outer.pairs[c];
            const auto [k, l] = rep.kernel.sym2.pairs[xb];
            const ModelElement prod = model_mul(
                pm.model, model_mul(pm.model, pm.rho_n3[xa], pm.rho_p[k]), pm.rho_p[l]);
            acc += kernel_vec[c] * model_integrate_top(pm.model, prod);
        }
        return acc;
    };
    for (int r = 0; r < rep.kernel.dimension; ++r) {
        const QVec& v = rep.kernel.kernel_basis[r];
        const Rational v0 = eval_with(base, v);
        const Rational v1 = eval_with(pert, v);
        if (v0 != v1 || v0 != rep.values[r]) return false;
    }
    return true;
}

} // namespace sasakian
