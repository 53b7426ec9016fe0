#pragma once

#include "random.hpp"

#include <fano3lab/linalgeom.hpp>

#include <utility>
#include <vector>

namespace testing {

// index pairs of the 4x4 block in Pluecker order 12 13 14 23 24 34
inline const std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline Matrix rand_skew(std::size_t n = 6, long range = 3) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rand_int(-range, range);
            m(j, i) = -m(i, j);
        }
    return m;
}

inline Matrix rand_invertible(std::size_t n) {
    for (;;) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rand_int(-2, 2);
        if (!det(g).is_zero()) return g;
    }
}

// skew form with the given 4x4 block (Pluecker order) and random entries elsewhere
inline Matrix with_block(const std::vector<CycNum>& block) {
    Matrix m = rand_skew();
    for (std::size_t k = 0; k < 6; ++k) {
        auto [i, j] = std::pair{kPairs[k][0], kPairs[k][1]};
        m(i, j) = block[k];
        m(j, i) = -block[k];
    }
    return m;
}

inline Matrix congruent(const Matrix& g, const Matrix& m) { return g.transpose() * m * g; }

struct Instance {
    Pencil a2;
    std::vector<Matrix> a;
    Matrix w4;  // hidden, reduced row-echelon
    std::size_t rank;
};

// Planes in Lambda^2 of a 4-space on which the Pluecker quadric has rank 3, 2, 1.
inline std::vector<std::vector<CycNum>> plane_of_rank(std::size_t r) {
    using V = std::vector<CycNum>;
    switch (r) {
        case 3: return {V{1, 0, 0, 0, 0, 0}, V{0, 0, 0, 0, 0, 1}, V{0, 1, 0, 0, -1, 0}};
        case 2: return {V{1, 0, 0, 0, 0, 0}, V{0, 0, 0, 0, 0, 1}, V{0, 0, 1, 0, 0, 0}};
        default: return {V{1, 0, 0, 0, 0, 1}, V{0, 1, 0, 0, 0, 0}, V{0, 0, 1, 0, 0, 0}};
    }
}

inline Instance hidden_instance(std::size_t r, bool hide = true) {
    Matrix u = Matrix::from_rows(plane_of_rank(r));
    Matrix v = kernel(u);  // restrictions of the three extra forms
    Instance in;
    Matrix g = hide ? rand_invertible(6) : Matrix::identity(6);
    std::vector<CycNum> zero(6, CycNum(0));
    // the kernels of the two generators must span W4, otherwise W4 is not determined by the pencil
    for (;;) {
        for (auto& m : in.a2) do {
                m = with_block(zero);
            } while (rank(m) != 4);
        Matrix k0 = kernel(in.a2[0]), k1 = kernel(in.a2[1]);
        if (rank(Matrix::from_rows({k0.row(0), k0.row(1), k1.row(0), k1.row(1)})) == 4) break;
    }
    for (auto& m : in.a2) m = congruent(g, m);
    in.a = {in.a2[0], in.a2[1]};
    for (std::size_t i = 0; i < 3; ++i) in.a.push_back(congruent(g, with_block(v.row(i))));
    Matrix ginv = inverse(g);
    Matrix w(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) w(i, j) = ginv(j, i);
    in.w4 = row_space(w);
    in.rank = r;
    return in;
}

}  // namespace testing
