#pragma once
// Index systems for the symmetric powers that carry the formality
// obstruction: Sym²P, Sym⁴P and Sym²(Sym²P) over a basis p_1..p_m.
// Everything is enumerated in lexicographic order of the sorted index
// tuples so that coordinates (and hence reports) are reproducible.

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "sasakian/errors.hpp"

namespace sasakian {

// Unordered pairs {i, j} over 0..m-1, stored as (i <= j) in lex order:
// (0,0), (0,1), ..., (0,m-1), (1,1), ...
struct Sym2Index {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;

    explicit Sym2Index(int m_) : m(m_) {
        if (m < 0) throw api_error("Sym2Index needs m >= 0");
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) pairs.emplace_back(i, j);
    }
    int size() const { return static_cast<int>(pairs.size()); }
    int index_of(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= m) throw api_error("Sym2Index indices out of range");
        return i * m - i * (i - 1) / 2 + (j - i);
    }
};

// Degree-4 monomials p_i p_j p_k p_l as sorted multisets (i<=j<=k<=l), lex order.
struct Sym4Index {
    int m = 0;
    std::vector<std::array<int, 4>> quads;

    explicit Sym4Index(int m_) : m(m_) {
        if (m < 0) throw api_error("Sym4Index needs m >= 0");
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j)
                for (int k = j; k < m; ++k)
                    for (int l = k; l < m; ++l) quads.push_back({i, j, k, l});
    }
    int size() const { return static_cast<int>(quads.size()); }
    int index_of(std::array<int, 4> q) const {
        std::sort(q.begin(), q.end());
        const auto it = std::lower_bound(quads.begin(), quads.end(), q);
        if (it == quads.end() || *it != q) throw api_error("Sym4Index indices out of range");
        return static_cast<int>(it - quads.begin());
    }
};

} // namespace sasakian
