#pragma once
// Lefschetz-type structure of a degree-2 class omega on a Poincaré duality
// algebra: the multiplication maps ·omega^k, their kernels/cokernels with
// deterministic representative bases, the hard Lefschetz test, the primitive
// subspace P = ker(omega^2·: H^2 -> H^6), and the lambda tensor of triple
// integrals.

#include <optional>
#include <string>
#include <vector>

#include "sasakian/graded_algebra.hpp"

namespace sasakian {

// Matrix of multiplication by cls from H^p to H^{p+|cls|}.
inline QMat multiplication_matrix(const GradedAlgebra& a, const CohomologyClass& cls, int p) {
    const int target = p + cls.degree;
    QMat m(a.dim(target), a.dim(p));
    for (int j = 0; j < a.dim(p); ++j) {
        const CohomologyClass img = mul(a, basis_class(a, p, j), cls);
        for (int i = 0; i < a.dim(target); ++i) m.at(i, j) = img.coords[i];
    }
    return m;
}

// Step map ·omega: H^p -> H^{p+2} as a d_{p+2} x d_p matrix.
inline QMat lefschetz_step(const GradedAlgebra& a, const CohomologyClass& omega, int p) {
    require_valid(a);
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    if (p < 0 || p + 2 > a.top_degree) throw api_error("lefschetz_step degree out of range");
    return multiplication_matrix(a, omega, p);
}

// Basis of ker(·omega: H^p -> H^{p+2}); H^{p+2} is zero above the top degree.
inline std::vector<CohomologyClass> kernel_basis(const GradedAlgebra& a,
                                                 const CohomologyClass& omega, int p) {
    require_valid(a);
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    if (p < 0 || p > a.top_degree) throw api_error("kernel degree out of range");
    std::vector<CohomologyClass> out;
    if (p + 2 > a.top_degree) {
        for (int i = 0; i < a.dim(p); ++i) out.push_back(basis_class(a, p, i));
        return out;
    }
    for (QVec& v : kernel_basis_vectors(multiplication_matrix(a, omega, p)))
        out.push_back({p, std::move(v)});
    return out;
}

// Representatives of coker(·omega: H^{p-2} -> H^p): the standard basis vectors
// of H^p at the non-pivot coordinates of the image's echelon form.
inline std::vector<CohomologyClass> cokernel_basis(const GradedAlgebra& a,
                                                   const CohomologyClass& omega, int p) {
    require_valid(a);
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    if (p < 0 || p > a.top_degree) throw api_error("cokernel degree out of range");
    RowSpan image(a.dim(p));
    if (p >= 2) {
        const QMat step = multiplication_matrix(a, omega, p - 2);
        for (int j = 0; j < step.cols; ++j) image.insert(step.col(j));
    }
    std::vector<bool> is_pivot(a.dim(p), false);
    for (int piv : image.pivots) is_pivot[piv] = true;
    std::vector<CohomologyClass> out;
    for (int i = 0; i < a.dim(p); ++i)
        if (!is_pivot[i]) out.push_back(basis_class(a, p, i));
    return out;
}

struct HardLefschetzResult {
    int n = 0;                   // top_degree / 2
    bool holds = false;
    std::vector<bool> holds_at;  // indexed by k = 0..n
    std::vector<int> failing;    // all k where omega^k: H^{n-k} -> H^{n+k} is not an iso
    std::optional<int> smallest_failing_k;
};

inline HardLefschetzResult hard_lefschetz(const GradedAlgebra& a, const CohomologyClass& omega) {
    require_valid(a);
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    if (a.top_degree % 2) throw inapplicable_error("hard Lefschetz needs an even top degree");
    HardLefschetzResult r;
    r.n = a.top_degree / 2;
    for (int k = 0; k <= r.n; ++k) {
        const QMat m = multiplication_matrix(a, power(a, omega, k), r.n - k);
        const bool iso = m.rows == m.cols && rank(m) == m.rows;
        r.holds_at.push_back(iso);
        if (!iso) r.failing.push_back(k);
    }
    r.holds = r.failing.empty();
    if (!r.holds) r.smallest_failing_k = r.failing.front();
    return r;
}

struct PrimitiveData {
    std::vector<CohomologyClass> basis;                 // basis of P inside H^2
    std::vector<std::vector<std::vector<Rational>>> lambda; // lambda[i][j][k] = ∫ p_i p_j p_k
};

// lambda tensor over an arbitrary family of degree-2 classes.
inline std::vector<std::vector<std::vector<Rational>>> triple_integrals(
    const GradedAlgebra& a, const std::vector<CohomologyClass>& family) {
    const std::size_t m = family.size();
    std::vector lambda(m, std::vector(m, std::vector<Rational>(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                lambda[i][j][k] =
                    integrate(a, mul(a, mul(a, family[i], family[j]), family[k]));
    return lambda;
}

// lambda_{ijk} = ∫ e_i e_j e_k for a spanning basis of H^2 (N = 6).
inline std::vector<std::vector<std::vector<Rational>>> lambda_tensor(
    const GradedAlgebra& a, const std::vector<CohomologyClass>& basis_of_h2) {
    require_valid(a);
    if (a.top_degree != 6) throw inapplicable_error("lambda tensor needs top degree 6");
    if (static_cast<int>(basis_of_h2.size()) != a.dim(2))
        throw api_error("lambda_tensor needs a full basis of H^2");
    QMat m(a.dim(2), a.dim(2));
    for (int j = 0; j < a.dim(2); ++j) {
        if (basis_of_h2[j].degree != 2) throw api_error("lambda_tensor basis must sit in H^2");
        for (int i = 0; i < a.dim(2); ++i) m.at(i, j) = basis_of_h2[j].coords[i];
    }
    if (rank(m) != a.dim(2)) throw api_error("lambda_tensor family does not span H^2");
    return triple_integrals(a, basis_of_h2);
}

// P = ker(omega^2·: H^2 -> H^6). Refuses when hard Lefschetz fails: the
// decomposition H^2 = <omega> + P needs omega outside the kernel.
inline PrimitiveData primitive_subspace(const GradedAlgebra& a, const CohomologyClass& omega) {
    require_valid(a);
    if (a.top_degree != 6) throw inapplicable_error("primitive subspace needs top degree 6");
    const HardLefschetzResult hl = hard_lefschetz(a, omega);
    if (!hl.holds)
        throw inapplicable_error("primitive subspace needs hard Lefschetz (fails at k = " +
                                 std::to_string(*hl.smallest_failing_k) + ")");
    PrimitiveData p;
    const QMat sq = multiplication_matrix(a, power(a, omega, 2), 2);
    for (QVec& v : kernel_basis_vectors(sq)) p.basis.push_back({2, std::move(v)});
    p.lambda = triple_integrals(a, p.basis);
    return p;
}

struct LefschetzAnalysis {
    HardLefschetzResult hard;
    std::vector<QMat> steps;                               // ·omega: H^p -> H^{p+2}, p = 0..N-2
    std::vector<std::vector<CohomologyClass>> kernels;     // K^p, p = 0..N
    std::vector<std::vector<CohomologyClass>> cokernels;   // Q^p, p = 0..N
};

inline LefschetzAnalysis analyze_lefschetz(const GradedAlgebra& a, const CohomologyClass& omega) {
    LefschetzAnalysis out;
    out.hard = hard_lefschetz(a, omega);
    for (int p = 0; p + 2 <= a.top_degree; ++p) out.steps.push_back(lefschetz_step(a, omega, p));
    for (int p = 0; p <= a.top_degree; ++p) {
        out.kernels.push_back(kernel_basis(a, omega, p));
        out.cokernels.push_back(cokernel_basis(a, omega, p));
    }
    return out;
}

} // namespace sasakian
