#pragma once

#include <fano3lab/polynomial.hpp>

#include <array>
#include <string>
#include <vector>

namespace fano3lab {

// Raises OutOfRange unless m is a square antisymmetric matrix of even size.
void require_skew(const Matrix& m);
CycNum pfaffian(const Matrix& m);

using Pencil = std::array<Matrix, 2>;

struct PfaffianLineCheck {
    bool on_pfaffian = false;
    BinaryForm cubic;  // Pf(lambda a1 + mu a2)
};
// Raises NotInA when the pencil is not inside the span of A.
PfaffianLineCheck pencil_is_line_on_Y(const Pencil& a2, const std::vector<Matrix>& a);

struct W4Result {
    Matrix basis;  // 4 x 6, reduced row-echelon
    std::vector<long> parameters;  // pencil members a1 + t a2 whose kernels were used
    bool ambiguous = false;
};
W4Result recover_W4(const Pencil& a2);
// Is w isotropic for the skew form m (all rows pairwise)?
bool is_isotropic(const Matrix& w, const Matrix& m);

enum class ConicType { Smooth, Reducible, NonReduced };
const char* to_string(ConicType t);

struct PfaffianConic {
    MultiPoly quadric;  // ternary quadratic in u0, u1, u2
    Matrix plane;       // 3 x 6 basis in Pluecker coordinates p12 p13 p14 p23 p24 p34
    std::size_t rank = 0;
    ConicType type = ConicType::Smooth;
};
// Raises WrongImageDimension unless the restriction A -> Lambda^2 W4^* has rank 3.
PfaffianConic conic_from_line(const Pencil& a2, const Matrix& w4, const std::vector<Matrix>& a);

struct PencilDiscriminant {
    BinaryForm det;  // det(lambda Q1 + mu Q2)
    std::vector<LinearFactor> factors;
    std::vector<std::array<CycNum, 2>> members;  // (lambda : mu) of the degenerate members
    BinaryForm remainder;
    bool squarefree = false;
};
PencilDiscriminant pencil_discriminant(const Matrix& q1, const Matrix& q2, unsigned conductor = kDefaultConductor);

// Pluecker restriction of a skew form to span(w rows): entries w_a^T m w_b, a < b.
std::vector<CycNum> restrict_to(const Matrix& m, const Matrix& w);

}  // namespace fano3lab
