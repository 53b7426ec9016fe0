#pragma once

#include <fano3lab/cyclotomic.hpp>
#include <fano3lab/matrix.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fano3lab {

inline constexpr unsigned kDefaultConductor = 40;

// Dense univariate polynomial, index = degree; no trailing zero coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<CycNum> coeffs);
    UniPoly(const CycNum& c);  // NOLINT: constants convert implicitly
    static UniPoly monomial(const CycNum& c, std::size_t k);
    static UniPoly x_minus(const CycNum& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<CycNum>& coeffs() const { return c_; }
    CycNum coeff(std::size_t k) const { return k < c_.size() ? c_[k] : CycNum(0); }
    const CycNum& lead() const { return c_.back(); }

    CycNum eval(const CycNum& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    UniPoly operator-() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<CycNum> c_;
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // quotient
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);  // monic; gcd(0, 0) = 0
// Sylvester determinant with the rows of f on top.
CycNum resultant(const UniPoly& f, const UniPoly& g);
UniPoly interpolate(const std::vector<CycNum>& xs, const std::vector<CycNum>& ys);

struct RootMult {
    CycNum root;
    unsigned multiplicity;
};
// All roots of f in Q(zeta_m), m = lcm(conductor, conductors of the
// coefficients), sorted ascending. f must be nonzero.
std::vector<RootMult> roots_in_field(const UniPoly& f, unsigned conductor = kDefaultConductor);

// Homogeneous form in x, y; coeffs[k] multiplies x^(d-k) y^k.
class BinaryForm {
public:
    BinaryForm() : c_(1) {}
    explicit BinaryForm(std::vector<CycNum> coeffs);
    static BinaryForm zero(unsigned degree);
    static BinaryForm constant(const CycNum& c) { return BinaryForm({c}); }
    static BinaryForm linear(const CycNum& a, const CycNum& b) { return BinaryForm({a, b}); }
    static BinaryForm monomial(unsigned degree, unsigned k, const CycNum& c = CycNum(1));
    static BinaryForm x() { return linear(1, 0); }
    static BinaryForm y() { return linear(0, 1); }
    // t1^d * p(t0/t1): the coefficient of t^j lands at index d - j
    static BinaryForm homogenize(const UniPoly& p, unsigned degree);

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<CycNum>& coeffs() const { return c_; }
    const CycNum& operator[](std::size_t k) const { return c_[k]; }
    CycNum& operator[](std::size_t k) { return c_[k]; }

    bool is_zero() const;
    // multiplicity of y as a factor (index of the first nonzero coefficient)
    unsigned y_order() const;
    unsigned x_order() const;
    // f(t, 1) as a polynomial in t
    UniPoly dehomogenize() const;
    // canonical representative: first nonzero coefficient scaled to 1
    BinaryForm normalized() const;
    CycNum eval(const CycNum& x, const CycNum& y) const;
    BinaryForm pow(unsigned k) const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const CycNum& s, const BinaryForm& a);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }
    BinaryForm operator-() const;

    std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

private:
    std::vector<CycNum> c_;
};

// Exact division f / g of forms; throws if g does not divide f.
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);
bool proj_eq(const BinaryForm& f, const BinaryForm& g);
BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g);
// Ordering used for tie-breaking: lexicographic on normalized coefficients.
bool form_less(const BinaryForm& a, const BinaryForm& b);

struct LinearFactor {
    BinaryForm form;  // normalized linear form
    unsigned multiplicity;
};
struct LinearFactorization {
    std::vector<LinearFactor> factors;  // ascending by form_less
    BinaryForm remainder;               // f = prod(factors) * remainder
};
LinearFactorization factor_linear(const BinaryForm& f, unsigned conductor = kDefaultConductor);

// Element of GL2; acts by x -> a x + c y, y -> b x + d y.
class GroupElt2 {
public:
    GroupElt2(CycNum a, CycNum b, CycNum c, CycNum d, bool det_normalized = false);
    static GroupElt2 identity() { return GroupElt2(1, 0, 0, 1, true); }

    const CycNum& a() const { return a_; }
    const CycNum& b() const { return b_; }
    const CycNum& c() const { return c_; }
    const CycNum& d() const { return d_; }
    bool det_normalized() const { return det1_; }
    CycNum det() const { return a_ * d_ - b_ * c_; }
    GroupElt2 inverse() const;
    GroupElt2 scaled(const CycNum& s) const;  // entries times s; flag recomputed
    friend GroupElt2 operator*(const GroupElt2& g, const GroupElt2& h);
    friend bool operator==(const GroupElt2& g, const GroupElt2& h);

private:
    CycNum a_, b_, c_, d_;
    bool det1_;
};

BinaryForm act(const GroupElt2& g, const BinaryForm& f);
std::pair<BinaryForm, CycNum> act_pointed(const GroupElt2& g, const BinaryForm& f, const CycNum& c);
// Matrix of act(g, -) on M_d: column k is act(g, x^(d-k) y^k).
Matrix act_matrix(const GroupElt2& g, unsigned degree);

// Sparse polynomial in named variables; terms kept in descending lex order.
class MultiPoly {
public:
    using Exponent = std::vector<unsigned>;
    using TermMap = std::map<Exponent, CycNum, std::greater<Exponent>>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(std::vector<std::string> vars, const CycNum& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t i);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycNum constant_value() const;  // requires is_constant()
    CycNum coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const CycNum& c);

    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;
    CycNum eval(const std::vector<CycNum>& point) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly pow(unsigned k) const;
    // Replace each variable i by images[i]; all images share one variable list.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    // Re-expresses over another variable list containing all used variables.
    MultiPoly with_variables(const std::vector<std::string>& vars) const;
    MultiPoly normalized() const;  // leading coefficient 1

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const CycNum& s, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

bool proj_eq(const MultiPoly& f, const MultiPoly& g);

// Binary forms <-> MultiPoly in two named variables.
BinaryForm to_binary_form(const MultiPoly& p, const std::string& x = "x", const std::string& y = "y");
MultiPoly to_multipoly(const BinaryForm& f, const std::string& x = "x", const std::string& y = "y");

// Expression parser: integers, '+ - * / ^', parentheses, the listed variable
// names and 'z' for zeta at the given conductor. Division only by constants.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                           unsigned conductor = kDefaultConductor);
CycNum parse_scalar(const std::string& text, unsigned conductor = kDefaultConductor);
// Homogeneous binary form in x, y of the stated degree (or any degree if -1).
BinaryForm parse_binary_form(const std::string& text, int degree = -1,
                             unsigned conductor = kDefaultConductor);

}  // namespace fano3lab
