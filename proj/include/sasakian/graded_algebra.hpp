#pragma once
// Finite-dimensional graded-commutative rational algebras with a top-degree
// integration functional (cohomology rings of closed oriented manifolds, given
// by basis + multiplication tensor). Multiplication is stored only for degree
// pairs p <= q with p + q <= N; the p > q case is derived from graded
// commutativity with the Koszul sign (-1)^{pq}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasakian/errors.hpp"
#include "sasakian/matrix.hpp"
#include "sasakian/rational.hpp"

namespace sasakian {

struct CohomologyClass {
    int degree = 0;
    QVec coords;

    bool is_zero() const { return sasakian::is_zero(coords); }
    bool operator==(const CohomologyClass& o) const = default;
};

inline CohomologyClass operator+(CohomologyClass u, const CohomologyClass& v) {
    if (u.degree != v.degree || u.coords.size() != v.coords.size())
        throw api_error("class addition degree mismatch");
    for (std::size_t i = 0; i < u.coords.size(); ++i) u.coords[i] += v.coords[i];
    return u;
}

inline CohomologyClass operator-(CohomologyClass u, const CohomologyClass& v) {
    if (u.degree != v.degree || u.coords.size() != v.coords.size())
        throw api_error("class subtraction degree mismatch");
    for (std::size_t i = 0; i < u.coords.size(); ++i) u.coords[i] -= v.coords[i];
    return u;
}

inline CohomologyClass operator*(const Rational& c, CohomologyClass u) {
    for (auto& x : u.coords) x *= c;
    return u;
}

struct GradedAlgebra {
    int top_degree = 0;                          // N (even for the rings we model)
    std::vector<std::vector<std::string>> basis; // labels, indexed by degree 0..N
    // (p,q) -> dense table: entry [i*d_q + j] = coords of e_i^{(p)}·e_j^{(q)} in degree p+q.
    // Keys: exactly the pairs with p <= q, p + q <= N.
    std::map<std::pair<int, int>, std::vector<QVec>> products;
    QVec integration;                            // functional on degree N
    std::optional<QVec> omega;                   // distinguished degree-2 class, if any

    int dim(int p) const {
        if (p < 0 || p > top_degree) return 0;
        return static_cast<int>(basis[p].size());
    }

    // Size every product table (zero-filled); builders and the parser start here.
    void init_product_tables() {
        products.clear();
        for (int p = 0; p <= top_degree; ++p)
            for (int q = p; p + q <= top_degree; ++q)
                products[{p, q}] =
                    std::vector<QVec>(static_cast<std::size_t>(dim(p)) * dim(q), QVec(dim(p + q)));
    }

    const QVec& product_entry(int p, int q, int i, int j) const {
        auto it = products.find({p, q});
        if (it == products.end()) throw api_error("product table missing");
        return it->second[static_cast<std::size_t>(i) * dim(q) + j];
    }

    QVec& product_entry(int p, int q, int i, int j) {
        auto it = products.find({p, q});
        if (it == products.end()) throw api_error("product table missing");
        return it->second[static_cast<std::size_t>(i) * dim(q) + j];
    }

    bool operator==(const GradedAlgebra& o) const {
        return top_degree == o.top_degree && basis == o.basis && products == o.products &&
               integration == o.integration && omega == o.omega;
    }
};

inline CohomologyClass zero_class(const GradedAlgebra& a, int degree) {
    return {degree, QVec(a.dim(degree))};
}

inline CohomologyClass basis_class(const GradedAlgebra& a, int degree, int index) {
    if (index < 0 || index >= a.dim(degree)) throw api_error("basis index out of range");
    CohomologyClass c = zero_class(a, degree);
    c.coords[index] = 1;
    return c;
}

inline CohomologyClass omega_class(const GradedAlgebra& a) {
    if (!a.omega) throw api_error("algebra carries no omega");
    return {2, *a.omega};
}

// Product of basis elements, handling the stored-orientation sign.
inline const QVec& basis_product_stored(const GradedAlgebra& a, int p, int q, int i, int j) {
    return p <= q ? a.product_entry(p, q, i, j) : a.product_entry(q, p, j, i);
}

inline CohomologyClass mul(const GradedAlgebra& a, const CohomologyClass& u,
                           const CohomologyClass& v) {
    const int p = u.degree, q = v.degree;
    if (p < 0 || q < 0 || p + q > a.top_degree)
        throw api_error("product degree out of range (degree " + std::to_string(p) + " * " +
                        std::to_string(q) + " exceeds top degree " +
                        std::to_string(a.top_degree) + ")");
    if (static_cast<int>(u.coords.size()) != a.dim(p) ||
        static_cast<int>(v.coords.size()) != a.dim(q))
        throw api_error("class coordinate size mismatch");
    CohomologyClass r = zero_class(a, p + q);
    const bool flip = p > q && (p % 2) && (q % 2); // Koszul sign (-1)^{pq} when swapping
    for (int i = 0; i < a.dim(p); ++i) {
        if (u.coords[i] == 0) continue;
        for (int j = 0; j < a.dim(q); ++j) {
            if (v.coords[j] == 0) continue;
            Rational c = u.coords[i] * v.coords[j];
            if (flip) c = -c;
            const QVec& entry = basis_product_stored(a, p, q, i, j);
            for (int k = 0; k < a.dim(p + q); ++k) r.coords[k] += c * entry[k];
        }
    }
    return r;
}

inline CohomologyClass power(const GradedAlgebra& a, const CohomologyClass& u, int k) {
    if (k < 0) throw api_error("negative power");
    CohomologyClass r = basis_class(a, 0, 0);
    for (int i = 0; i < k; ++i) r = mul(a, r, u);
    return r;
}

inline Rational integrate(const GradedAlgebra& a, const CohomologyClass& u) {
    if (u.degree != a.top_degree) throw api_error("integrate expects a top-degree class");
    if (u.coords.size() != a.integration.size()) throw api_error("class coordinate size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * a.integration[i];
    return s;
}

// Pairing H^p x H^{N-p} -> Q; entry (i,j) = integral of e_i^{(p)}·e_j^{(N-p)}.
inline QMat pairing_matrix(const GradedAlgebra& a, int p) {
    if (p < 0 || p > a.top_degree) throw api_error("pairing degree out of range");
    const int q = a.top_degree - p;
    QMat m(a.dim(p), a.dim(q));
    for (int i = 0; i < a.dim(p); ++i)
        for (int j = 0; j < a.dim(q); ++j) {
            const QVec& prod = basis_product_stored(a, p, q, i, j);
            Rational s = 0;
            for (int k = 0; k < a.dim(a.top_degree); ++k) s += prod[k] * a.integration[k];
            m.at(i, j) = p <= q || !((p % 2) && (q % 2)) ? s : -s;
        }
    return m;
}

// Human-readable rendering: "a - b", "2*ab + 1/2*c", "0".
inline std::string class_to_string(const GradedAlgebra& a, const CohomologyClass& u) {
    std::string out;
    for (int i = 0; i < a.dim(u.degree); ++i) {
        const Rational& c = u.coords[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const std::string& label = a.basis[u.degree][i];
        if (mag == 1)
            out += label;
        else
            out += to_string(mag) + "*" + label;
    }
    return out.empty() ? "0" : out;
}

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return c.name + ": " + c.detail;
        return "";
    }
};

namespace detail {

inline bool shape_ok(const GradedAlgebra& a, std::string& why) {
    if (a.top_degree < 0) {
        why = "negative top degree";
        return false;
    }
    if (static_cast<int>(a.basis.size()) != a.top_degree + 1) {
        why = "basis label table must cover degrees 0..N";
        return false;
    }
    if (static_cast<int>(a.integration.size()) != a.dim(a.top_degree)) {
        why = "integration functional size differs from dim H^N";
        return false;
    }
    if (a.omega && static_cast<int>(a.omega->size()) != a.dim(2)) {
        why = "omega coordinate size differs from dim H^2";
        return false;
    }
    for (int p = 0; p <= a.top_degree; ++p)
        for (int q = p; p + q <= a.top_degree; ++q) {
            auto it = a.products.find({p, q});
            if (it == a.products.end()) {
                why = "missing product table for degrees (" + std::to_string(p) + "," +
                      std::to_string(q) + ")";
                return false;
            }
            if (static_cast<int>(it->second.size()) !=
                a.dim(p) * a.dim(q)) {
                why = "product table for degrees (" + std::to_string(p) + "," +
                      std::to_string(q) + ") has wrong size";
                return false;
            }
            for (const QVec& v : it->second)
                if (static_cast<int>(v.size()) != a.dim(p + q)) {
                    why = "product entry for degrees (" + std::to_string(p) + "," +
                          std::to_string(q) + ") has wrong target size";
                    return false;
                }
        }
    for (const auto& [key, table] : a.products) {
        if (key.first > key.second || key.first < 0 || key.first + key.second > a.top_degree) {
            why = "stray product table for degrees (" + std::to_string(key.first) + "," +
                  std::to_string(key.second) + ")";
            return false;
        }
        (void)table;
    }
    return true;
}

} // namespace detail

// Structural and axiomatic checks; every failure carries a witness.
inline ValidationReport validate(const GradedAlgebra& a) {
    ValidationReport rep;
    auto push = [&rep](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
    };

    std::string why;
    if (!detail::shape_ok(a, why)) {
        push("shape", false, why);
        return rep; // nothing else is safe to evaluate
    }
    push("shape", true, "");

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= a.top_degree && ok; ++p)
            for (int i = 0; i < a.dim(p) && ok; ++i)
                for (int j = i + 1; j < a.dim(p); ++j)
                    if (a.basis[p][i] == a.basis[p][j]) {
                        ok = false;
                        detail = "duplicate basis label \"" + a.basis[p][i] + "\" in degree " +
                                 std::to_string(p);
                        break;
                    }
        push("labels-unique", ok, detail);
    }

    push("connected", a.dim(0) == 1,
         a.dim(0) == 1 ? "" : "dim H^0 = " + std::to_string(a.dim(0)) + ", expected 1");
    if (a.top_degree >= 1)
        push("simply-connected", a.dim(1) == 0,
             a.dim(1) == 0 ? "" : "dim H^1 = " + std::to_string(a.dim(1)) + ", expected 0");
    push("top-dimension", a.dim(a.top_degree) == 1,
         a.dim(a.top_degree) == 1
             ? ""
             : "dim H^N = " + std::to_string(a.dim(a.top_degree)) + ", expected 1");

    {
        // Scalars are canonical by the Rational type's invariant; verify anyway.
        bool ok = true;
        std::string detail;
        auto scan = [&](const QVec& v) {
            for (const auto& x : v)
                if (!is_canonical(x)) {
                    ok = false;
                    detail = "non-canonical scalar " + to_string(x);
                }
        };
        for (const auto& [key, table] : a.products) {
            (void)key;
            for (const QVec& v : table) scan(v);
        }
        scan(a.integration);
        push("scalar-canonical", ok, detail);
    }

    if (a.dim(0) == 1) {
        bool ok = true;
        std::string detail;
        for (int q = 0; q <= a.top_degree && ok; ++q)
            for (int j = 0; j < a.dim(q); ++j) {
                const QVec& e = a.product_entry(0, q, 0, j);
                bool unit = true;
                for (int k = 0; k < a.dim(q); ++k)
                    if (e[k] != Rational(k == j ? 1 : 0)) unit = false;
                if (!unit) {
                    ok = false;
                    detail = "1·" + a.basis[q][j] + " != " + a.basis[q][j];
                    break;
                }
            }
        push("unit-law", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; 2 * p <= a.top_degree && ok; ++p) {
            const bool anti = p % 2;
            for (int i = 0; i < a.dim(p) && ok; ++i)
                for (int j = anti ? i : i + 1; j < a.dim(p); ++j) {
                    const QVec& ij = a.product_entry(p, p, i, j);
                    const QVec& ji = a.product_entry(p, p, j, i);
                    bool match = true;
                    for (int k = 0; k < a.dim(2 * p); ++k)
                        if (ij[k] != (anti ? Rational(-ji[k]) : ji[k])) match = false;
                    if (!match) {
                        ok = false;
                        detail = "graded commutativity fails at " + a.basis[p][i] + "·" +
                                 a.basis[p][j] + " (degree " + std::to_string(p) + ")";
                        break;
                    }
                }
        }
        push("graded-commutativity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= a.top_degree && ok; ++p)
            for (int q = 0; p + q <= a.top_degree && ok; ++q)
                for (int r = 0; p + q + r <= a.top_degree && ok; ++r)
                    for (int i = 0; i < a.dim(p) && ok; ++i)
                        for (int j = 0; j < a.dim(q) && ok; ++j)
                            for (int k = 0; k < a.dim(r); ++k) {
                                const CohomologyClass lhs = mul(
                                    a, mul(a, basis_class(a, p, i), basis_class(a, q, j)),
                                    basis_class(a, r, k));
                                const CohomologyClass rhs = mul(
                                    a, basis_class(a, p, i),
                                    mul(a, basis_class(a, q, j), basis_class(a, r, k)));
                                if (!(lhs == rhs)) {
                                    ok = false;
                                    detail = "associativity fails at (" + a.basis[p][i] + "·" +
                                             a.basis[q][j] + ")·" + a.basis[r][k] +
                                             " vs " + a.basis[p][i] + "·(" + a.basis[q][j] +
                                             "·" + a.basis[r][k] + ")";
                                    break;
                                }
                            }
        push("associativity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 0; p <= a.top_degree; ++p) {
            if (a.dim(p) != a.dim(a.top_degree - p)) {
                ok = false;
                detail = "dim H^" + std::to_string(p) + " = " + std::to_string(a.dim(p)) +
                         " but dim H^" + std::to_string(a.top_degree - p) + " = " +
                         std::to_string(a.dim(a.top_degree - p));
                break;
            }
            if (rank(pairing_matrix(a, p)) != a.dim(p)) {
                ok = false;
                detail = "duality pairing degenerate at p = " + std::to_string(p);
                break;
            }
        }
        push("poincare-duality", ok, detail);
    }

    return rep;
}

inline void require_valid(const GradedAlgebra& a) {
    const ValidationReport rep = validate(a);
    if (!rep.ok()) throw input_error("algebra fails validation (" + rep.first_failure() + ")");
}

} // namespace sasakian
