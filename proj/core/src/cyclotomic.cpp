#include <fano3lab/cyclotomic.hpp>
#include <fano3lab/errors.hpp>

#include "detail_cyc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace fano3lab {

namespace {

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(unsigned n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic divisor
IntPoly div_exact(IntPoly a, const IntPoly& b) {
    size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    for (size_t k = a.size(); k-- > db;) {
        Integer c = a[k];
        q[k - db] = c;
        if (c != 0)
            for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    return q;
}

std::unique_ptr<detail::CycContext> build_context(unsigned n) {
    auto ctx = std::make_unique<detail::CycContext>();
    ctx->n = n;
    ctx->poly = cyclotomic_polynomial(n);
    ctx->phi = static_cast<unsigned>(ctx->poly.size() - 1);
    unsigned phi = ctx->phi;
    std::vector<long> v(phi, 0);
    v[0] = 1;
    std::vector<long> c(phi);
    for (unsigned i = 0; i < phi; ++i) c[i] = ctx->poly[i].get_si();
    ctx->powers.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        auto& row = ctx->powers[k];
        for (unsigned i = 0; i < phi; ++i)
            if (v[i]) row.emplace_back(i, v[i]);
        // multiply by z, reduce the z^phi term with the monic Phi_n
        long top = v[phi - 1];
        for (unsigned i = phi - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = 0;
        if (top)
            for (unsigned i = 0; i < phi; ++i) v[i] -= top * c[i];
    }
    return ctx;
}

// -- dense Q[t] helpers for inversion ---------------------------------------

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly r = a;
    if (q.empty() || b.empty()) return r;
    if (r.size() < q.size() + b.size() - 1) r.resize(q.size() + b.size() - 1);
    for (size_t i = 0; i < q.size(); ++i) {
        if (sgn(q[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    }
    trim(r);
    return r;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    Rational lead_inv = 1 / b.back();
    while (a.size() >= b.size()) {
        size_t sh = a.size() - b.size();
        Rational c = a.back() * lead_inv;
        q[sh] = c;
        for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

unsigned carmichael_lambda(unsigned n) {
    unsigned lam = 1;
    for (auto [p, e] : factorize(n)) {
        unsigned pk = 1;
        for (unsigned i = 0; i < e; ++i) pk *= p;
        unsigned l = pk / p * (p - 1);
        if (p == 2 && e >= 3) l /= 2;
        lam = std::lcm(lam, l);
    }
    return lam;
}

IntPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) raise("OutOfRange", "cyclotomic_polynomial: n must be >= 1");
    IntPoly num{1}, den{1};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 0) continue;
        IntPoly f(d + 1);
        f[0] = -1;
        f[d] = 1;
        (mu > 0 ? num : den) = mul(mu > 0 ? num : den, f);
    }
    return div_exact(num, den);
}

namespace detail {

const CycContext& cyc_context(unsigned n) {
    if (n == 0 || n > kMaxConductor)
        raise("OutOfRange", "conductor " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxConductor));
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = build_context(n);
    return *slot;
}

}  // namespace detail

unsigned promote_conductor(unsigned a, unsigned b) {
    if (a == b || b % a == 0) return b;
    if (a % b == 0) return a;
    raise("ConductorMismatch", "conductors " + std::to_string(a) + " and " + std::to_string(b) +
                                   " are not nested",
          {{"left", std::to_string(a)}, {"right", std::to_string(b)}});
}

CycNum::CycNum() : CycNum(Rational(0)) {}
CycNum::CycNum(long v) : CycNum(Rational(v)) {}
CycNum::CycNum(const Integer& v) : CycNum(Rational(v)) {}
CycNum::CycNum(const Rational& v) : CycNum(v, 1) {}

CycNum::CycNum(const Rational& v, unsigned conductor) : ctx_(&detail::cyc_context(conductor)) {
    coords_.assign(ctx_->phi, Rational(0));
    coords_[0] = v;
}

CycNum::CycNum(const detail::CycContext* ctx, std::vector<Rational> coords)
    : ctx_(ctx), coords_(std::move(coords)) {}

CycNum CycNum::zeta(unsigned n, long k) {
    const auto& ctx = detail::cyc_context(n);
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    std::vector<Rational> c(ctx.phi, Rational(0));
    for (auto [i, v] : ctx.powers[r]) c[i] = v;
    return CycNum(&ctx, std::move(c));
}

CycNum CycNum::from_coords(unsigned n, std::vector<Rational> coords) {
    const auto& ctx = detail::cyc_context(n);
    if (coords.size() != ctx.phi)
        raise("OutOfRange", "coordinate vector length " + std::to_string(coords.size()) +
                                " != phi(" + std::to_string(n) + ")");
    for (auto& c : coords) c.canonicalize();
    return CycNum(&ctx, std::move(coords));
}

unsigned CycNum::conductor() const { return ctx_->n; }

bool CycNum::is_zero() const {
    for (const auto& c : coords_)
        if (sgn(c)) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i])) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && coords_[0] == 1; }

Rational CycNum::rational_value() const {
    if (!is_rational()) raise("NotRational", "element is not rational: " + to_string());
    return coords_[0];
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (ctx_ == o.ctx_) {
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    unsigned m = promote_conductor(conductor(), o.conductor());
    CycNum a = embed(*this, m), b = embed(o, m);
    for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return *this = std::move(a);
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a0, const CycNum& b0) {
    if (a0.ctx_ != b0.ctx_) {
        unsigned m = promote_conductor(a0.conductor(), b0.conductor());
        if (a0.is_rational() && a0.conductor() != m) {
            CycNum r = b0;
            for (auto& c : r.coords_) c *= a0.coords_[0];
            return embed(r, m);
        }
        if (b0.is_rational() && b0.conductor() != m) {
            CycNum r = a0;
            for (auto& c : r.coords_) c *= b0.coords_[0];
            return embed(r, m);
        }
        return embed(a0, m) * embed(b0, m);
    }
    const auto* ctx = a0.ctx_;
    unsigned phi = ctx->phi;
    if (b0.is_rational()) {
        CycNum r = a0;
        for (auto& c : r.coords_) c *= b0.coords_[0];
        return r;
    }
    if (a0.is_rational()) {
        CycNum r = b0;
        for (auto& c : r.coords_) c *= a0.coords_[0];
        return r;
    }
    std::vector<Rational> prod(2 * phi - 1);
    Rational t;
    for (unsigned i = 0; i < phi; ++i) {
        if (!sgn(a0.coords_[i])) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (!sgn(b0.coords_[j])) continue;
            mpq_mul(t.get_mpq_t(), a0.coords_[i].get_mpq_t(), b0.coords_[j].get_mpq_t());
            prod[i + j] += t;
        }
    }
    std::vector<Rational> res(prod.begin(), prod.begin() + phi);
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (!sgn(prod[k])) continue;
        for (auto [idx, c] : ctx->powers[k % ctx->n]) res[idx] += prod[k] * c;
    }
    return CycNum(ctx, std::move(res));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

CycNum CycNum::inverse() const {
    if (is_zero()) raise("DivisionByZero", "division by zero");
    if (is_rational()) return CycNum(ctx_, [&] {
        std::vector<Rational> c(ctx_->phi, Rational(0));
        c[0] = 1 / coords_[0];
        return c;
    }());
    // extended Euclid: s*a + t*Phi = 1, track s only
    QPoly r0(ctx_->poly.begin(), ctx_->poly.end()), r1 = coords_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_n is irreducible
    Rational c = 1 / r1[0];
    std::vector<Rational> out(ctx_->phi, Rational(0));
    for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] * c;
    return CycNum(ctx_, std::move(out));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this, acc(Rational(1), conductor());
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

CycNum embed(const CycNum& a, unsigned m) {
    unsigned n = a.conductor();
    if (m == 0 || m % n)
        raise("NotASubfield", "conductor " + std::to_string(n) + " does not divide " +
                                  std::to_string(m),
              {{"from", std::to_string(n)}, {"to", std::to_string(m)}});
    if (m == n) return a;
    const auto& ctx = detail::cyc_context(m);
    unsigned step = m / n;
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (unsigned k = 0; k < a.coords_.size(); ++k) {
        if (!sgn(a.coords_[k])) continue;
        for (auto [idx, c] : ctx.powers[(k * step) % m]) out[idx] += a.coords_[k] * c;
    }
    return CycNum(&ctx, std::move(out));
}

CycNum project(const CycNum& a, unsigned n) {
    unsigned m = a.conductor();
    if (n == m) return a;
    if (n % m == 0) return embed(a, n);
    unsigned l = std::lcm(m, n);
    CycNum target = embed(a, l);
    const auto& small = detail::cyc_context(n);
    unsigned rows = detail::cyc_context(l).phi, cols = small.phi;
    // columns: embedded basis z_n^j; augmented with the target
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1));
    for (unsigned j = 0; j < cols; ++j) {
        CycNum b = embed(CycNum::zeta(n, j), l);
        for (unsigned i = 0; i < rows; ++i) M[i][j] = b.coords_[i];
    }
    for (unsigned i = 0; i < rows; ++i) M[i][cols] = target.coords_[i];
    unsigned r = 0;
    std::vector<unsigned> piv;
    for (unsigned c = 0; c <= cols && r < rows; ++c) {
        unsigned p = r;
        while (p < rows && !sgn(M[p][c])) ++p;
        if (p == rows) continue;
        if (c == cols)
            raise("NotASubfield", "element does not lie in Q(zeta_" + std::to_string(n) + ")",
                  {{"conductor", std::to_string(n)}});
        std::swap(M[p], M[r]);
        Rational inv = 1 / M[r][c];
        for (auto& x : M[r]) x *= inv;
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r || !sgn(M[i][c])) continue;
            Rational f = M[i][c];
            for (unsigned k = c; k <= cols; ++k) M[i][k] -= f * M[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<Rational> out(cols, Rational(0));
    for (unsigned i = 0; i < piv.size(); ++i) out[piv[i]] = M[i][cols];
    return CycNum(&small, std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.ctx_ == b.ctx_) return a.coords_ == b.coords_;
    if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
    unsigned l = std::lcm(a.conductor(), b.conductor());
    return embed(a, l).coords_ == embed(b, l).coords_;
}

std::strong_ordering operator<=>(const CycNum& a, const CycNum& b) {
    if (a.ctx_ != b.ctx_) {
        unsigned l = std::lcm(a.conductor(), b.conductor());
        return embed(a, l) <=> embed(b, l);
    }
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycNum::to_string() const {
    std::string out;
    for (size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (!sgn(c)) continue;
        bool neg = sgn(c) < 0;
        Rational ac = abs(c);
        std::string mag = ac.get_str();
        std::string term;
        if (k == 0)
            term = mag;
        else {
            std::string mono = k == 1 ? "z" : "z^" + std::to_string(k);
            term = ac == 1 ? mono : mag + "*" + mono;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        raise("ParseError", "not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace fano3lab
