#pragma once

#include <fano3lab/rational.hpp>

#include <compare>
#include <string>
#include <vector>

namespace fano3lab {

// Dense integer polynomial, index = degree.
using IntPoly = std::vector<Integer>;

unsigned euler_phi(unsigned n);
unsigned carmichael_lambda(unsigned n);
IntPoly cyclotomic_polynomial(unsigned n);

// Largest conductor for which contexts are built.
inline constexpr unsigned kMaxConductor = 4096;

namespace detail {
struct CycContext;
const CycContext& cyc_context(unsigned n);
}  // namespace detail

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1) modulo Phi_n.
class CycNum {
public:
    CycNum();
    CycNum(long v);  // NOLINT: implicit from integers on purpose
    CycNum(const Integer& v);
    CycNum(const Rational& v);
    CycNum(const Rational& v, unsigned conductor);

    static CycNum zeta(unsigned n, long k = 1);
    static CycNum from_coords(unsigned n, std::vector<Rational> coords);

    unsigned conductor() const;
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);

    CycNum inverse() const;
    CycNum pow(long e) const;

    // Exact equality; operands at unrelated conductors are compared inside the
    // compositum, so this never throws.
    friend bool operator==(const CycNum& a, const CycNum& b);
    // Total order used for deterministic tie-breaking: lexicographic on
    // coordinates after embedding both sides at a common conductor.
    friend std::strong_ordering operator<=>(const CycNum& a, const CycNum& b);

    // Human readable, e.g. "3/2 - z^5 + 2*z^7".
    std::string to_string() const;

private:
    CycNum(const detail::CycContext* ctx, std::vector<Rational> coords);
    friend CycNum embed(const CycNum& a, unsigned m);
    friend CycNum project(const CycNum& a, unsigned n);
    friend CycNum operator*(const CycNum& a, const CycNum& b);

    const detail::CycContext* ctx_;
    std::vector<Rational> coords_;
};

CycNum operator+(CycNum a, const CycNum& b);
CycNum operator-(CycNum a, const CycNum& b);
CycNum operator*(const CycNum& a, const CycNum& b);
CycNum operator/(CycNum a, const CycNum& b);

// The same element at conductor m; NotASubfield unless conductor(a) | m.
CycNum embed(const CycNum& a, unsigned m);
// Expresses a at conductor n; NotASubfield when a does not lie in Q(zeta_n).
CycNum project(const CycNum& a, unsigned n);
// Common conductor for binary operations: the larger one when one divides the
// other, otherwise ConductorMismatch.
unsigned promote_conductor(unsigned a, unsigned b);

}  // namespace fano3lab
