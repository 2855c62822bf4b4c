#pragma once
// Dense exact linear algebra over the rationals. Everything here is pinned to
// deterministic conventions because downstream results (kernel generators,
// cokernel representatives) are part of the tool's output contract:
//  - row reduction scans pivot columns left to right, rows top to bottom;
//  - kernel basis vectors come from the reduced echelon free columns in
//    ascending order and are rescaled so the lowest-index nonzero entry is +1;
//  - cokernel representatives are the non-pivot standard basis vectors of the
//    image's echelon form.

#include <optional>
#include <vector>

#include "sasakian/errors.hpp"
#include "sasakian/rational.hpp"

namespace sasakian {

using QVec = std::vector<Rational>;

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec& add_scaled(QVec& v, const Rational& c, const QVec& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
    return v;
}

struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a; // row-major

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    QVec row(int i) const {
        return QVec(a.begin() + static_cast<std::size_t>(i) * cols,
                    a.begin() + static_cast<std::size_t>(i + 1) * cols);
    }
    QVec col(int j) const {
        QVec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    QMat transpose() const {
        QMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QMat operator*(const QMat& o) const {
        if (cols != o.rows) throw api_error("matrix product shape mismatch");
        QMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    QVec apply(const QVec& v) const {
        if (static_cast<int>(v.size()) != cols) throw api_error("matrix apply shape mismatch");
        QVec r(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// In-place reduced row echelon form; returns pivot column indices in order.
inline std::vector<int> rref_in_place(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMat m) { return static_cast<int>(rref_in_place(m).size()); }

// Null space basis; one vector per free column, normalized to leading entry +1.
inline std::vector<QVec> kernel_basis_vectors(QMat m) {
    const std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(m.cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), f);
        for (int j = 0; j < m.cols; ++j) {
            if (v[j] == 0) continue;
            if (v[j] != 1) {
                const Rational inv = Rational(1) / v[j];
                for (int k = j; k < m.cols; ++k) v[k] *= inv;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b (free variables set to 0), or nullopt if inconsistent.
inline std::optional<QVec> solve(const QMat& m, const QVec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw api_error("solve shape mismatch");
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    const std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    QVec x(m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    return x;
}

inline std::optional<QMat> inverse(const QMat& m) {
    if (m.rows != m.cols) throw api_error("inverse needs a square matrix");
    QMat aug(m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    rref_in_place(aug);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (aug.at(i, j) != Rational(i == j ? 1 : 0)) return std::nullopt;
    QMat inv(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

inline Rational det(QMat m) {
    if (m.rows != m.cols) throw api_error("det needs a square matrix");
    Rational d = 1;
    for (int col = 0; col < m.cols; ++col) {
        int pr = -1;
        for (int i = col; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return Rational(0);
        if (pr != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

// Incrementally maintained reduced row space; used for membership tests and for
// picking quotient/cokernel representatives deterministically.
struct RowSpan {
    int cols = 0;
    std::vector<QVec> rows;    // reduced echelon rows
    std::vector<int> pivots;   // pivot column of each row, strictly increasing overall set

    explicit RowSpan(int c) : cols(c) {}

    QVec reduce(QVec v) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v[pivots[i]] != 0) add_scaled(v, -v[pivots[i]], rows[i]);
        return v;
    }

    bool contains(const QVec& v) const { return is_zero(reduce(v)); }

    // Returns true (and grows the span) when v was independent.
    bool insert(const QVec& v) {
        QVec r = reduce(v);
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (r[j] != 0) {
                p = j;
                break;
            }
        if (p < 0) return false;
        const Rational inv = Rational(1) / r[p];
        for (int j = 0; j < cols; ++j) r[j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i][p] != 0) add_scaled(rows[i], -rows[i][p], r);
        // keep rows sorted by pivot column
        std::size_t pos = 0;
        while (pos < rows.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + pos, std::move(r));
        pivots.insert(pivots.begin() + pos, p);
        return true;
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

} // namespace sasakian
