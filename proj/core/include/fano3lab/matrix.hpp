#pragma once

#include <fano3lab/cyclotomic.hpp>

#include <cstddef>
#include <vector>

namespace fano3lab {

// Dense row-major matrix over the cyclotomic scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<CycNum>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::vector<CycNum> row(std::size_t i) const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycNum& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNum> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
CycNum det(Matrix m);
// Basis of {v : m v = 0} as the rows of the returned matrix (cols = m.cols()).
Matrix kernel(const Matrix& m);
// Row space in reduced row-echelon form with zero rows dropped.
Matrix row_space(const Matrix& m);
// Solves m x = b; returns false when inconsistent.
bool solve(const Matrix& m, const std::vector<CycNum>& b, std::vector<CycNum>& x);
Matrix inverse(const Matrix& m);

}  // namespace fano3lab
