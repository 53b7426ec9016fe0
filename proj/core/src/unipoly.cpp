#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

namespace fano3lab {

UniPoly::UniPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const CycNum& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::monomial(const CycNum& c, std::size_t k) {
    std::vector<CycNum> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x_minus(const CycNum& r) { return UniPoly({-r, CycNum(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycNum UniPoly::eval(const CycNum& x) const {
    CycNum acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<CycNum> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = CycNum(static_cast<long>(k)) * c_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    CycNum inv = lead().inverse();
    UniPoly r = *this;
    for (auto& c : r.c_) c = c * inv;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<CycNum> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CycNum> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string coef = c_[k].to_string();
        std::string term;
        if (mono.empty())
            term = "(" + coef + ")";
        else if (c_[k].is_one())
            term = mono;
        else
            term = "(" + coef + ")*" + mono;
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) raise("DivisionByZero", "polynomial division by zero");
    std::vector<CycNum> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) {
        q = UniPoly();
        r = a;
        return;
    }
    std::vector<CycNum> quo(a.degree() - db + 1);
    CycNum inv = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        CycNum c = rem[k] * inv;
        quo[k - db] = c;
        for (int j = 0; j <= db; ++j)
            if (!b.coeffs()[j].is_zero()) rem[k - db + j] -= c * b.coeffs()[j];
    }
    rem.resize(db);
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

CycNum resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) raise("OutOfRange", "resultant of a zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0) return f.lead().pow(n);
    if (n == 0) return g.lead().pow(m);
    std::size_t N = m + n;
    Matrix S(N, N);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S(i, i + k) = f.coeffs()[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S(n + i, i + k) = g.coeffs()[n - k];
    return det(std::move(S));
}

UniPoly interpolate(const std::vector<CycNum>& xs, const std::vector<CycNum>& ys) {
    // Newton divided differences
    std::size_t n = xs.size();
    std::vector<CycNum> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly p;
    for (std::size_t k = n; k-- > 0;) p = p * UniPoly::x_minus(xs[k]) + UniPoly(dd[k]);
    return p;
}

}  // namespace fano3lab
