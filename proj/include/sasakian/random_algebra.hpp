#pragma once
// Randomized degree-6 Poincaré duality algebras for the property suites.
// The construction is duality-first: H⁴ is declared to be the basis dual to
// H² (∫ e_i·f_j = δ_ij), the degree-2 products are e_i·e_j = Σ_k λ_{ijk} f_k
// with a random symmetric tensor λ, and H³ carries a block-diagonal
// nondegenerate antisymmetric pairing. Associativity then reduces to the
// symmetry of λ, so every sample is a valid algebra by construction; omega
// is resampled until omega³ ≠ 0.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sasakian/graded_algebra.hpp"
#include "sasakian/lefschetz.hpp"

namespace sasakian {

struct RandomAlgebraOptions {
    int min_d2 = 1;
    int max_d2 = 4;
    int max_d3 = 4;      // rounded down to even; the H³ pairing needs even rank
    int coeff_bound = 3; // λ entries drawn from [-coeff_bound, coeff_bound]
};

inline GradedAlgebra random_pd_algebra(std::mt19937_64& rng,
                                       const RandomAlgebraOptions& opt = {}) {
    std::uniform_int_distribution<int> d2_dist(opt.min_d2, opt.max_d2);
    std::uniform_int_distribution<int> d3_dist(0, opt.max_d3 / 2);
    std::uniform_int_distribution<int> coeff(-opt.coeff_bound, opt.coeff_bound);
    std::uniform_int_distribution<int> block(1, 3);
    const int d2 = d2_dist(rng);
    const int d3 = 2 * d3_dist(rng);

    GradedAlgebra a;
    a.top_degree = 6;
    a.basis.assign(7, {});
    a.basis[0] = {"1"};
    for (int i = 0; i < d2; ++i) a.basis[2].push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < d3; ++i) a.basis[3].push_back("s" + std::to_string(i + 1));
    for (int i = 0; i < d2; ++i) a.basis[4].push_back("f" + std::to_string(i + 1));
    a.basis[6] = {"v"};
    a.init_product_tables();
    for (int q = 0; q <= 6; ++q)
        for (int j = 0; j < a.dim(q); ++j) {
            QVec e(a.dim(q));
            e[j] = 1;
            a.product_entry(0, q, 0, j) = std::move(e);
        }
    std::vector lambda(d2, std::vector(d2, std::vector<Rational>(d2)));
    for (int i = 0; i < d2; ++i)
        for (int j = i; j < d2; ++j)
            for (int k = j; k < d2; ++k) {
                const Rational val = coeff(rng);
                lambda[i][j][k] = lambda[i][k][j] = lambda[j][i][k] = val;
                lambda[j][k][i] = lambda[k][i][j] = lambda[k][j][i] = val;
            }
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j) {
            QVec prod(d2);
            for (int k = 0; k < d2; ++k) prod[k] = lambda[i][j][k];
            a.product_entry(2, 2, i, j) = std::move(prod);
            a.product_entry(2, 4, i, j) = {i == j ? Rational(1) : Rational(0)};
        }
    for (int t = 0; t + 1 < d3; t += 2) {
        const Rational r = block(rng);
        a.product_entry(3, 3, t, t + 1) = {r};
        a.product_entry(3, 3, t + 1, t) = {-r};
    }
    a.integration = {Rational(1)};
    return a;
}

inline std::optional<CohomologyClass> random_omega(std::mt19937_64& rng,
                                                   const GradedAlgebra& a, int tries = 64) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < tries; ++t) {
        CohomologyClass w = zero_class(a, 2);
        for (auto& c : w.coords) c = coeff(rng);
        if (is_zero(w.coords)) continue;
        if (!is_zero(power(a, w, 3).coords)) return w;
    }
    return std::nullopt;
}

// A valid algebra together with an omega satisfying omega³ ≠ 0.
inline std::pair<GradedAlgebra, CohomologyClass> random_valid_pair(
    std::mt19937_64& rng, const RandomAlgebraOptions& opt = {}) {
    for (;;) {
        GradedAlgebra a = random_pd_algebra(rng, opt);
        if (auto w = random_omega(rng, a)) return {std::move(a), std::move(*w)};
        // degenerate λ (e.g. identically zero): draw a fresh algebra
    }
}

// As above but restricted to pairs with the full hard Lefschetz property.
inline std::pair<GradedAlgebra, CohomologyClass> random_hl_pair(
    std::mt19937_64& rng, const RandomAlgebraOptions& opt = {}, int max_attempts = 4000) {
    for (int t = 0; t < max_attempts; ++t) {
        auto pair = random_valid_pair(rng, opt);
        if (hard_lefschetz(pair.first, pair.second).holds) return pair;
    }
    throw api_error("random_hl_pair: no hard Lefschetz sample found");
}

} // namespace sasakian
