#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

#include <algorithm>

namespace fano3lab {

BinaryForm::BinaryForm(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
}

BinaryForm BinaryForm::zero(unsigned degree) { return BinaryForm(std::vector<CycNum>(degree + 1)); }

BinaryForm BinaryForm::monomial(unsigned degree, unsigned k, const CycNum& c) {
    BinaryForm f = zero(degree);
    f.c_[k] = c;
    return f;
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, unsigned degree) {
    if (p.degree() > static_cast<int>(degree)) raise("OutOfRange", "homogenize: degree too small");
    BinaryForm f = zero(degree);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) f.c_[degree - j] = p.coeffs()[j];
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const CycNum& c) { return c.is_zero(); });
}

unsigned BinaryForm::y_order() const {
    unsigned k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

unsigned BinaryForm::x_order() const {
    unsigned k = 0;
    while (k < c_.size() && c_[c_.size() - 1 - k].is_zero()) ++k;
    return k;
}

UniPoly BinaryForm::dehomogenize() const {
    std::vector<CycNum> p(c_.size());
    unsigned d = degree();
    for (unsigned k = 0; k <= d; ++k) p[d - k] = c_[k];
    return UniPoly(std::move(p));
}

BinaryForm BinaryForm::normalized() const {
    unsigned k = y_order();
    if (k == c_.size()) return *this;
    CycNum inv = c_[k].inverse();
    BinaryForm r = *this;
    for (auto& c : r.c_) c = c * inv;
    return r;
}

CycNum BinaryForm::eval(const CycNum& x, const CycNum& y) const {
    CycNum acc(0), yp(1);
    std::vector<CycNum> xp(c_.size());
    xp[0] = CycNum(1);
    for (std::size_t i = 1; i < c_.size(); ++i) xp[i] = xp[i - 1] * x;
    unsigned d = degree();
    for (unsigned k = 0; k <= d; ++k) {
        if (!c_[k].is_zero()) acc += c_[k] * xp[d - k] * yp;
        yp = yp * y;
    }
    return acc;
}

BinaryForm BinaryForm::pow(unsigned k) const {
    BinaryForm acc = constant(1), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) raise("OutOfRange", "adding forms of different degree");
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = BinaryForm::zero(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

BinaryForm operator*(const CycNum& s, const BinaryForm& a) {
    BinaryForm r = a;
    for (auto& c : r.c_) c = s * c;
    return r;
}

std::string BinaryForm::to_string(const std::string& x, const std::string& y) const {
    std::string out;
    unsigned d = degree();
    for (unsigned k = 0; k <= d; ++k) {
        if (c_[k].is_zero()) continue;
        std::string mono;
        auto pw = [](const std::string& v, unsigned e) {
            return e == 0 ? std::string() : (e == 1 ? v : v + "^" + std::to_string(e));
        };
        std::string px = pw(x, d - k), py = pw(y, k);
        mono = px.empty() ? py : (py.empty() ? px : px + "*" + py);
        std::string coef = c_[k].to_string();
        bool simple = c_[k].is_rational();
        std::string term;
        if (mono.empty())
            term = simple ? coef : "(" + coef + ")";
        else if (c_[k].is_one())
            term = mono;
        else if (c_[k] == CycNum(-1))
            term = "-" + mono;
        else
            term = (simple ? coef : "(" + coef + ")") + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) raise("DivisionByZero", "division by the zero form");
    if (f.is_zero()) return BinaryForm::zero(f.degree() >= g.degree() ? f.degree() - g.degree() : 0);
    if (g.degree() > f.degree()) raise("NotDivisible", "form does not divide");
    unsigned ay = f.y_order(), by = g.y_order();
    if (by > ay) raise("NotDivisible", "form does not divide");
    UniPoly F = BinaryForm(std::vector<CycNum>(f.coeffs().begin() + ay, f.coeffs().end())).dehomogenize();
    UniPoly G = BinaryForm(std::vector<CycNum>(g.coeffs().begin() + by, g.coeffs().end())).dehomogenize();
    UniPoly q, r;
    divmod(F, G, q, r);
    if (!r.is_zero()) raise("NotDivisible", "form does not divide");
    unsigned dq = f.degree() - g.degree();
    BinaryForm Q = BinaryForm::homogenize(q, dq - (ay - by));
    return Q * BinaryForm::monomial(ay - by, ay - by);
}

bool proj_eq(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) raise("OutOfRange", "proj_eq: degrees differ");
    bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) raise("BothZero", "proj_eq: both forms are zero");
    if (fz || gz) return false;
    return f.normalized() == g.normalized();
}

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) raise("BothZero", "gcd of two zero forms");
    if (g.is_zero()) return f.normalized();
    if (f.is_zero()) return g.normalized();
    unsigned af = f.y_order(), ag = g.y_order();
    auto strip = [](const BinaryForm& h, unsigned a) {
        return BinaryForm(std::vector<CycNum>(h.coeffs().begin() + a, h.coeffs().end())).dehomogenize();
    };
    UniPoly G = gcd(strip(f, af), strip(g, ag));
    unsigned m = std::min(af, ag);
    return BinaryForm::homogenize(G, G.degree()) * BinaryForm::monomial(m, m);
}

bool form_less(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    BinaryForm na = a.normalized(), nb = b.normalized();
    return std::lexicographical_compare(na.coeffs().begin(), na.coeffs().end(), nb.coeffs().begin(),
                                        nb.coeffs().end());
}

LinearFactorization factor_linear(const BinaryForm& f, unsigned conductor) {
    if (f.is_zero()) raise("OutOfRange", "factor_linear of the zero form");
    LinearFactorization out;
    unsigned a = f.y_order();
    if (a > 0) out.factors.push_back({BinaryForm::y(), a});
    BinaryForm rest(std::vector<CycNum>(f.coeffs().begin() + a, f.coeffs().end()));
    UniPoly F = rest.dehomogenize();
    unsigned split = 0;
    if (F.degree() > 0) {
        for (const auto& rm : roots_in_field(F, conductor)) {
            out.factors.push_back({BinaryForm::linear(1, -rm.root), rm.multiplicity});
            for (unsigned k = 0; k < rm.multiplicity; ++k) F = F / UniPoly::x_minus(rm.root);
            split += rm.multiplicity;
        }
    }
    out.remainder = BinaryForm::homogenize(F, rest.degree() - split);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const LinearFactor& p, const LinearFactor& q) { return form_less(p.form, q.form); });
    return out;
}

// -- GL2 ---------------------------------------------------------------------

GroupElt2::GroupElt2(CycNum a, CycNum b, CycNum c, CycNum d, bool det_normalized)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), det1_(det_normalized) {
    CycNum dt = det();
    if (dt.is_zero()) raise("Singular", "group element with zero determinant");
    if (det1_ && !dt.is_one())
        raise("NotDetNormalized", "det_normalized flag set but det = " + dt.to_string());
}

GroupElt2 GroupElt2::inverse() const {
    CycNum inv = det().inverse();
    return GroupElt2(d_ * inv, -b_ * inv, -c_ * inv, a_ * inv, det1_);
}

GroupElt2 GroupElt2::scaled(const CycNum& s) const {
    CycNum a = s * a_, b = s * b_, c = s * c_, d = s * d_;
    bool one = (a * d - b * c).is_one();
    return GroupElt2(a, b, c, d, one);
}

GroupElt2 operator*(const GroupElt2& g, const GroupElt2& h) {
    return GroupElt2(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_, g.c_ * h.a_ + g.d_ * h.c_,
                     g.c_ * h.b_ + g.d_ * h.d_, g.det1_ && h.det1_);
}

bool operator==(const GroupElt2& g, const GroupElt2& h) {
    return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
}

namespace {

std::vector<BinaryForm> powers(const BinaryForm& l, unsigned n) {
    std::vector<BinaryForm> p{BinaryForm::constant(1)};
    for (unsigned i = 1; i <= n; ++i) p.push_back(p.back() * l);
    return p;
}

}  // namespace

BinaryForm act(const GroupElt2& g, const BinaryForm& f) {
    unsigned d = f.degree();
    // fast path for diagonal and anti-diagonal elements
    if (g.b().is_zero() && g.c().is_zero()) {
        BinaryForm r = f;
        std::vector<CycNum> ap{CycNum(1)}, dp{CycNum(1)};
        for (unsigned i = 1; i <= d; ++i) ap.push_back(ap.back() * g.a()), dp.push_back(dp.back() * g.d());
        for (unsigned k = 0; k <= d; ++k)
            if (!r[k].is_zero()) r[k] = r[k] * ap[d - k] * dp[k];
        return r;
    }
    auto L1 = powers(BinaryForm::linear(g.a(), g.c()), d);
    auto L2 = powers(BinaryForm::linear(g.b(), g.d()), d);
    BinaryForm r = BinaryForm::zero(d);
    for (unsigned k = 0; k <= d; ++k) {
        if (f[k].is_zero()) continue;
        r = r + f[k] * (L1[d - k] * L2[k]);
    }
    return r;
}

std::pair<BinaryForm, CycNum> act_pointed(const GroupElt2& g, const BinaryForm& f, const CycNum& c) {
    if (!g.det_normalized())
        raise("NotDetNormalized", "pointed action requires a determinant-one representative");
    return {act(g, f), c};
}

Matrix act_matrix(const GroupElt2& g, unsigned degree) {
    Matrix m(degree + 1, degree + 1);
    for (unsigned k = 0; k <= degree; ++k) {
        BinaryForm img = act(g, BinaryForm::monomial(degree, k));
        for (unsigned i = 0; i <= degree; ++i) m(i, k) = img[i];
    }
    return m;
}

}  // namespace fano3lab
