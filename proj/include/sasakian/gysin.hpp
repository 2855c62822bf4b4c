#pragma once
// Cohomology of the circle bundle with Euler class omega over a degree-6
// Poincaré duality algebra, assembled degree by degree from the Gysin
// sequence: H^i(E) ≅ Q^i ⊕ K^{i-1}·x with K = ker(·omega) and Q = coker(·omega).
// Also the two Sasakian exclusion checks that live at this level: parity of
// the odd Betti numbers below the middle dimension, and the cup-square map
// Q² × Q² → Q⁴.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasakian/lefschetz.hpp"

namespace sasakian {

struct TotalSpaceGenerator {
    int degree = 0;
    bool from_kernel = false;  // false: Q^degree summand, true: K^{degree-1}·x summand
    CohomologyClass base_class;
    std::string label;         // base-class string; renderers append "·x" for kernel summands
};

struct CircleBundleCohomology {
    std::vector<int> betti;                                    // b_0 .. b_7
    std::vector<std::vector<TotalSpaceGenerator>> generators;  // by total-space degree
    int b(int i) const {
        return (i >= 0 && i < static_cast<int>(betti.size())) ? betti[i] : 0;
    }
};

namespace detail {
inline void check_bundle_input(const GradedAlgebra& a, const CohomologyClass& omega) {
    require_valid(a);
    if (a.top_degree != 6)
        throw inapplicable_error("circle-bundle analysis needs a degree-6 base algebra");
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    if (is_zero(power(a, omega, 3).coords))
        throw inapplicable_error(
            "omega^3 = 0: the Euler class must be symplectic-type (omega^3 != 0)");
}
} // namespace detail

inline CircleBundleCohomology total_space_cohomology(const GradedAlgebra& a,
                                                     const CohomologyClass& omega) {
    detail::check_bundle_input(a, omega);
    CircleBundleCohomology e;
    e.generators.resize(8);
    for (int i = 0; i <= 7; ++i) {
        if (i <= 6)
            for (CohomologyClass& q : cokernel_basis(a, omega, i))
                e.generators[i].push_back(
                    {i, false, q, class_to_string(a, q)});
        if (i >= 1)
            for (CohomologyClass& k : kernel_basis(a, omega, i - 1))
                e.generators[i].push_back(
                    {i, true, k, class_to_string(a, k)});
        e.betti.push_back(static_cast<int>(e.generators[i].size()));
    }
    return e;
}

inline int b3_of_total_space(const GradedAlgebra& a, const CohomologyClass& omega) {
    detail::check_bundle_input(a, omega);
    return a.dim(3) + static_cast<int>(kernel_basis(a, omega, 2).size());
}

struct BettiParityResult {
    std::vector<int> applicable_degrees;  // odd p with 1 <= p <= n, dim = 2n+1
    std::vector<int> violations;          // subset with b_p odd
    bool excluded() const { return !violations.empty(); }
};

inline BettiParityResult sasaki_betti_parity(const std::vector<int>& betti, int dim) {
    if (dim < 1 || dim % 2 == 0) throw api_error("parity check needs an odd dimension 2n+1");
    if (static_cast<int>(betti.size()) != dim + 1)
        throw api_error("betti vector must have length dim+1");
    BettiParityResult r;
    const int n = dim / 2;
    for (int p = 1; p <= n; p += 2) {
        r.applicable_degrees.push_back(p);
        if (betti[p] % 2 != 0) r.violations.push_back(p);
    }
    return r;
}

struct CupSquareResult {
    bool fired = false;
    int q2_dim = 0;
    int q4_dim = 0;
    std::optional<std::pair<CohomologyClass, CohomologyClass>> witness;
    std::string witness_text;
};

// The cup product descends to Q² × Q² → Q⁴ (shifting a representative by a
// multiple of omega changes the product by an element of omega·H²). Nonzero
// on the quotient means the total space cannot be Sasakian; it also forces
// Q⁴ ≠ 0, i.e. ·omega: H² → H⁴ is not an isomorphism.
inline CupSquareResult cup_square_obstruction(const GradedAlgebra& a,
                                              const CohomologyClass& omega) {
    require_valid(a);
    if (a.top_degree != 6)
        throw inapplicable_error("cup-square obstruction needs a degree-6 base algebra");
    if (omega.degree != 2) throw api_error("omega must have degree 2");
    CupSquareResult r;
    const std::vector<CohomologyClass> q2 = cokernel_basis(a, omega, 2);
    r.q2_dim = static_cast<int>(q2.size());
    RowSpan omega_h2(a.dim(4));
    const QMat step = multiplication_matrix(a, omega, 2);
    for (int j = 0; j < step.cols; ++j) omega_h2.insert(step.col(j));
    r.q4_dim = a.dim(4) - omega_h2.dim();
    for (std::size_t i = 0; i < q2.size() && !r.fired; ++i)
        for (std::size_t j = i; j < q2.size() && !r.fired; ++j) {
            const CohomologyClass prod = mul(a, q2[i], q2[j]);
            if (!omega_h2.contains(prod.coords)) {
                r.fired = true;
                r.witness = {q2[i], q2[j]};
                r.witness_text = "[" + class_to_string(a, q2[i]) + "]·[" +
                                 class_to_string(a, q2[j]) + "] = [" +
                                 class_to_string(a, prod) + "] not in omega·H^2";
            }
        }
    return r;
}

} // namespace sasakian
