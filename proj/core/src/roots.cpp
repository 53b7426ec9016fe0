// Roots of univariate polynomials over Q(zeta_n).
//
// The squarefree monic input is scaled to have coefficients in Z[zeta]. For
// a prime p of maximal multiplicative order mod n, Phi_n splits mod p into r
// factors of degree e. Roots are found in each residue field F_{p^e}, lifted
// by Newton iteration modulo p^N in the Hensel-lifted components, and glued
// by the lifted idempotents. A glued tuple whose symmetric coordinates lie
// under the height bound is a candidate; candidates are verified exactly.
#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

#include "detail_cyc.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

namespace fano3lab {

namespace {

using u64 = std::uint64_t;

// ---- F_p[t] ----------------------------------------------------------------

struct Fp {
    u64 p;

    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 inv(u64 a) const {
        // Fermat; p is prime
        u64 r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly padd(const Fp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly psub(const Fp& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly pmul(const Fp& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
    }
    trim(r);
    return r;
}

void pdivmod(const Fp& F, Poly a, const Poly& b, Poly* q, Poly* r) {
    trim(a);
    size_t db = b.size() - 1;
    u64 li = F.inv(b.back());
    Poly quo(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
        size_t sh = a.size() - b.size();
        u64 c = F.mul(a.back(), li);
        quo[sh] = c;
        for (size_t j = 0; j <= db; ++j) a[sh + j] = F.sub(a[sh + j], F.mul(c, b[j]));
        trim(a);
    }
    if (q) *q = std::move(quo), trim(*q);
    if (r) *r = std::move(a);
}

Poly pmod(const Fp& F, const Poly& a, const Poly& m) {
    Poly r;
    pdivmod(F, a, m, nullptr, &r);
    return r;
}

Poly pmonic(const Fp& F, Poly a) {
    if (a.empty()) return a;
    u64 li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
    return a;
}

Poly pgcd(const Fp& F, Poly a, Poly b) {
    trim(a), trim(b);
    while (!b.empty()) {
        Poly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, a);
}

// s with s*a = 1 mod m (a, m coprime)
Poly pinvmod(const Fp& F, const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = pmod(F, a, m), s0, s1{1};
    while (r1.size() > 1) {
        Poly q, r;
        pdivmod(F, r0, r1, &q, &r);
        Poly s = psub(F, s0, pmul(F, q, s1));
        r0 = std::move(r1), r1 = std::move(r);
        s0 = std::move(s1), s1 = std::move(s);
    }
    if (r1.empty()) raise("Internal", "pinvmod: not invertible");
    u64 c = F.inv(r1[0]);
    for (auto& x : s1) x = F.mul(x, c);
    return pmod(F, s1, m);
}

Poly ppowmod(const Fp& F, Poly base, const Integer& e, const Poly& m) {
    Poly acc{1};
    base = pmod(F, base, m);
    for (size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        acc = pmod(F, pmul(F, acc, acc), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = pmod(F, pmul(F, acc, base), m);
    }
    return acc;
}

// Equal-degree factorization of a squarefree product of degree-e irreducibles.
void edf(const Fp& F, const Poly& h, unsigned e, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (h.size() - 1 == e) {
        out.push_back(h);
        return;
    }
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), F.p, e);
    Integer ex = (q - 1) / 2;
    for (;;) {
        Poly a(h.size() - 1);
        for (auto& c : a) c = rng() % F.p;
        trim(a);
        if (a.empty()) continue;
        Poly w = ppowmod(F, a, ex, h);
        w = psub(F, w, Poly{1});
        Poly g = pgcd(F, h, w);
        if (g.size() > 1 && g.size() < h.size()) {
            Poly rest;
            pdivmod(F, h, g, &rest, nullptr);
            edf(F, g, e, rng, out);
            edf(F, pmonic(F, rest), e, rng, out);
            return;
        }
    }
}

// ---- F_q = F_p[t]/(G) and F_q[X] ------------------------------------------

struct Fq {
    Fp F;
    Poly G;
    unsigned e;

    Poly mul(const Poly& a, const Poly& b) const { return pmod(F, pmul(F, a, b), G); }
    Poly inv(const Poly& a) const { return pinvmod(F, a, G); }
};

using QPoly = std::vector<Poly>;  // coefficients in F_q

void qtrim(QPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

QPoly qsub(const Fq& K, const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = psub(K.F, r[i], b[i]);
    qtrim(r);
    return r;
}

QPoly qmul(const Fq& K, const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Poly> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].empty()) r[i + j] = padd(K.F, r[i + j], pmul(K.F, a[i], b[j]));
    }
    for (auto& c : r) c = pmod(K.F, c, K.G);
    qtrim(r);
    return r;
}

void qdivmod(const Fq& K, QPoly a, const QPoly& b, QPoly* q, QPoly* r) {
    qtrim(a);
    size_t db = b.size() - 1;
    Poly li = K.inv(b.back());
    QPoly quo(a.size() >= b.size() ? a.size() - db : 0);
    while (a.size() >= b.size()) {
        size_t sh = a.size() - b.size();
        Poly c = K.mul(a.back(), li);
        quo[sh] = c;
        for (size_t j = 0; j <= db; ++j) a[sh + j] = psub(K.F, a[sh + j], K.mul(c, b[j]));
        qtrim(a);
    }
    if (q) *q = std::move(quo), qtrim(*q);
    if (r) *r = std::move(a);
}

QPoly qmod(const Fq& K, const QPoly& a, const QPoly& m) {
    QPoly r;
    qdivmod(K, a, m, nullptr, &r);
    return r;
}

QPoly qmonic(const Fq& K, QPoly a) {
    if (a.empty()) return a;
    Poly li = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, li);
    return a;
}

QPoly qgcd(const Fq& K, QPoly a, QPoly b) {
    qtrim(a), qtrim(b);
    while (!b.empty()) {
        QPoly r = qmod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(K, a);
}

QPoly qpowmod(const Fq& K, QPoly base, const Integer& e, const QPoly& m) {
    QPoly acc{Poly{1}};
    base = qmod(K, base, m);
    for (size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        acc = qmod(K, qmul(K, acc, acc), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = qmod(K, qmul(K, acc, base), m);
    }
    return acc;
}

QPoly qderiv(const Fq& K, const QPoly& a) {
    QPoly d;
    for (size_t k = 1; k < a.size(); ++k) {
        Poly c = a[k];
        for (auto& x : c) x = K.F.mul(x, k % K.F.p);
        trim(c);
        d.push_back(c);
    }
    qtrim(d);
    return d;
}

void split_linear(const Fq& K, const QPoly& h, const Integer& q, std::mt19937_64& rng,
                  std::vector<Poly>& roots) {
    if (h.size() <= 1) return;
    if (h.size() == 2) {
        // h = h1 X + h0 (monic)
        Poly r = psub(K.F, Poly{}, K.mul(h[0], K.inv(h[1])));
        roots.push_back(r);
        return;
    }
    Integer ex = (q - 1) / 2;
    for (;;) {
        Poly a(K.e);
        for (auto& c : a) c = rng() % K.F.p;
        trim(a);
        QPoly w = qpowmod(K, QPoly{a, Poly{1}}, ex, h);
        w = qsub(K, w, QPoly{Poly{1}});
        QPoly g = qgcd(K, h, w);
        if (g.size() > 1 && g.size() < h.size()) {
            QPoly rest;
            qdivmod(K, h, g, &rest, nullptr);
            split_linear(K, g, q, rng, roots);
            split_linear(K, qmonic(K, rest), q, rng, roots);
            return;
        }
    }
}

std::vector<Poly> roots_fq(const Fq& K, const QPoly& f, std::mt19937_64& rng) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), K.F.p, K.e);
    QPoly X{Poly{}, Poly{1}};
    QPoly xq = qpowmod(K, X, q, f);
    QPoly h = qgcd(K, f, qsub(K, xq, X));
    std::vector<Poly> roots;
    split_linear(K, h, q, rng, roots);
    return roots;
}

// ---- (Z/M)[t] ---------------------------------------------------------------

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void zreduce(ZPoly& a, const Integer& M) {
    for (auto& c : a) {
        c %= M;
        if (c < 0) c += M;
    }
    ztrim(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& M) {
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zreduce(r, M);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& M) {
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zreduce(r, M);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& M) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    zreduce(r, M);
    return r;
}

// divide by a monic modulus
void zdivmod(ZPoly a, const ZPoly& b, const Integer& M, ZPoly* q, ZPoly* r) {
    zreduce(a, M);
    size_t db = b.size() - 1;
    ZPoly quo(a.size() >= b.size() ? a.size() - db : 0);
    while (a.size() >= b.size()) {
        size_t sh = a.size() - b.size();
        Integer c = a.back();
        quo[sh] = c;
        for (size_t j = 0; j <= db; ++j) mpz_submul(a[sh + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        a.pop_back();
        zreduce(a, M);
    }
    if (q) zreduce(quo, M), *q = std::move(quo);
    if (r) *r = std::move(a);
}

ZPoly zmod(const ZPoly& a, const ZPoly& m, const Integer& M) {
    ZPoly r;
    zdivmod(a, m, M, nullptr, &r);
    return r;
}

ZPoly from_fp(const Poly& a) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
    return r;
}

// Quadratic Hensel lifting of f = g h (mod p) with s g + t h = 1 (mod p) to
// modulus >= target. Returns (g, h, s, t) modulo target.
struct HenselOut {
    ZPoly g, h, s, t;
};

HenselOut hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const Integer& p,
                      const Integer& target) {
    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        ZPoly e = zsub(f, zmul(g, h, m2), m2);
        ZPoly q, r;
        zdivmod(zmul(s, e, m2), h, m2, &q, &r);
        ZPoly g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
        ZPoly h2 = zadd(h, r, m2);
        ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
        ZPoly c, d;
        zdivmod(zmul(s, b, m2), h2, m2, &c, &d);
        ZPoly s2 = zsub(s, d, m2);
        ZPoly t2 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
        g = std::move(g2), h = std::move(h2), s = std::move(s2), t = std::move(t2);
        m = m2;
    }
    for (ZPoly* z : {&g, &h, &s, &t}) zreduce(*z, target);
    // keep g, h monic modulo target (leading coefficient is 1 mod p already)
    return {g, h, s, t};
}

// ---- height bounds ---------------------------------------------------------

Integer ramanujan_trace(unsigned n, unsigned m) {
    unsigned g = std::gcd(m % n, n);
    if (g == 0) g = n;
    unsigned k = n / g;
    // Tr(z^m) = mu(k) * phi(n) / phi(k)
    int mu = 1;
    unsigned kk = k;
    for (unsigned p = 2; p * p <= kk; ++p) {
        if (kk % p) continue;
        kk /= p;
        if (kk % p == 0) return 0;
        mu = -mu;
    }
    if (kk > 1) mu = -mu;
    return Integer(mu) * (euler_phi(n) / euler_phi(k));
}

// max_j sum_k |dual basis coefficient|, an upper bound for coordinate growth
Rational dual_basis_norm(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, Rational> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    unsigned phi = euler_phi(n);
    std::vector<std::vector<Rational>> T(phi, std::vector<Rational>(2 * phi));
    for (unsigned j = 0; j < phi; ++j) {
        for (unsigned k = 0; k < phi; ++k) T[j][k] = ramanujan_trace(n, j + k);
        T[j][phi + j] = 1;
    }
    for (unsigned c = 0; c < phi; ++c) {
        unsigned pr = c;
        while (sgn(T[pr][c]) == 0) ++pr;
        std::swap(T[pr], T[c]);
        Rational inv = 1 / T[c][c];
        for (auto& x : T[c]) x *= inv;
        for (unsigned i = 0; i < phi; ++i) {
            if (i == c || sgn(T[i][c]) == 0) continue;
            Rational f = T[i][c];
            for (unsigned k = 0; k < 2 * phi; ++k) T[i][k] -= f * T[c][k];
        }
    }
    Rational best = 0;
    for (unsigned j = 0; j < phi; ++j) {
        Rational s = 0;
        for (unsigned k = 0; k < phi; ++k) s += abs(T[j][phi + k]);
        if (s > best) best = s;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = best;
    return best;
}

bool is_prime(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned mult_order(u64 p, unsigned n) {
    if (n <= 2) return 1;
    u64 x = p % n;
    unsigned k = 1;
    while (x != 1) x = x * p % n, ++k;
    return k;
}

// ---- per-component lifting -------------------------------------------------

struct Component {
    Fq K;
    ZPoly G;    // lifted factor, monic
    ZPoly eps;  // lifted idempotent in (Z/M)[t]/(Phi)
    std::vector<ZPoly> lifted;  // lifted roots, as elements of (Z/M)[t]/(Phi)
};

ZPoly eval_poly(const std::vector<ZPoly>& coeffs, const ZPoly& x, const ZPoly& G, const Integer& M) {
    ZPoly acc;
    for (size_t k = coeffs.size(); k-- > 0;) acc = zadd(zmod(zmul(acc, x, M), G, M), coeffs[k], M);
    return acc;
}

}  // namespace

std::vector<RootMult> roots_in_field(const UniPoly& f, unsigned conductor) {
    if (f.is_zero()) raise("OutOfRange", "roots of the zero polynomial");
    unsigned n = conductor;
    for (const auto& c : f.coeffs()) n = std::lcm(n, c.conductor());
    std::vector<CycNum> fc;
    for (const auto& c : f.coeffs()) fc.push_back(embed(c, n));
    UniPoly F(fc);
    std::vector<RootMult> out;
    if (F.degree() <= 0) return out;

    UniPoly S = (F / gcd(F, F.derivative())).monic();
    std::vector<CycNum> found;
    int d = S.degree();
    if (d == 1) {
        found.push_back(-S.coeffs()[0]);
    } else {
        const auto& ctx = detail::cyc_context(n);
        unsigned phi = ctx.phi;
        // scale to an integral monic polynomial: g(X) = D^d S(X / D)
        Integer D = 1;
        for (const auto& c : S.coeffs())
            for (const auto& q : c.coords()) D = lcm(D, q.get_den());
        std::vector<std::vector<Integer>> g(d + 1, std::vector<Integer>(phi));
        Integer Dp = 1;
        for (int k = d; k >= 0; --k) {
            for (unsigned j = 0; j < phi; ++j) {
                Rational v = S.coeffs()[k].coords()[j] * Dp;
                g[k][j] = v.get_num();
            }
            Dp *= D;
        }
        Integer R = 0;
        for (int k = 0; k < d; ++k) {
            Integer s = 0;
            for (const auto& v : g[k]) s += abs(v);
            if (s > R) R = s;
        }
        R += 1;
        Rational Bq = Rational(R) * phi * dual_basis_norm(n);
        Integer B = Bq.get_num() / Bq.get_den() + 1;

        unsigned lam = carmichael_lambda(n);
        std::mt19937_64 rng(0x5eed1234u);
        ZPoly Phi(ctx.poly.begin(), ctx.poly.end());
        bool done = false;
        unsigned tried = 0;
        for (u64 p = 3; !done; p += 2) {
            if (!is_prime(p) || n % p == 0) continue;
            if (mult_order(p, n) != lam) continue;
            if (++tried > 400) raise("Internal", "roots_in_field: no suitable prime found");
            Fp Fpp{p};
            Poly phibar(phi + 1);
            for (unsigned i = 0; i <= phi; ++i) {
                Integer v = ctx.poly[i] % Integer(static_cast<unsigned long>(p));
                if (v < 0) v += p;
                phibar[i] = v.get_ui();
            }
            std::vector<Poly> factors;
            if (lam == phi)
                factors.push_back(phibar);
            else
                edf(Fpp, phibar, lam, rng, factors);
            std::vector<Component> comps;
            bool ok = true;
            std::vector<QPoly> gbar_list;
            for (auto& Gp : factors) {
                Fq K{Fpp, Gp, lam};
                QPoly gb(d + 1);
                for (int k = 0; k <= d; ++k) {
                    Poly c(phi);
                    for (unsigned j = 0; j < phi; ++j) {
                        Integer v = g[k][j] % Integer(static_cast<unsigned long>(p));
                        if (v < 0) v += p;
                        c[j] = v.get_ui();
                    }
                    trim(c);
                    gb[k] = pmod(Fpp, c, Gp);
                }
                QPoly gd = qderiv(K, gb);
                if (gd.empty() || qgcd(K, gb, gd).size() != 1) {
                    ok = false;
                    break;
                }
                comps.push_back({K, {}, {}, {}});
                gbar_list.push_back(gb);
            }
            if (!ok) continue;

            // precision p^N > 2 B 2^16
            Integer M = p, bound = 2 * B * 65536;
            while (M <= bound) M *= p;
            Integer Pz(static_cast<unsigned long>(p));

            std::vector<std::vector<Poly>> comp_roots;
            for (size_t i = 0; i < comps.size(); ++i) comp_roots.push_back(roots_fq(comps[i].K, gbar_list[i], rng));
            bool any_empty = std::any_of(comp_roots.begin(), comp_roots.end(), [](auto& v) { return v.empty(); });
            if (any_empty) break;  // no root can exist in this field

            for (size_t i = 0; i < comps.size(); ++i) {
                auto& C = comps[i];
                const Poly& Gp = C.K.G;
                Poly Hp;
                pdivmod(Fpp, phibar, Gp, &Hp, nullptr);
                // s G + t H = 1 mod p
                Poly tp = pinvmod(Fpp, Hp, Gp);
                Poly sp;
                {
                    Poly num = psub(Fpp, Poly{1}, pmul(Fpp, tp, Hp));
                    pdivmod(Fpp, num, Gp, &sp, nullptr);
                }
                HenselOut H = hensel_lift(Phi, from_fp(Gp), from_fp(Hp), from_fp(sp), from_fp(tp), Pz, M);
                C.G = H.g;
                C.eps = zmod(zmul(H.t, H.h, M), Phi, M);

                std::vector<ZPoly> gc(d + 1);
                for (int k = 0; k <= d; ++k) {
                    ZPoly c(g[k].begin(), g[k].end());
                    gc[k] = zmod(c, C.G, M);
                }
                std::vector<ZPoly> gdc(d);
                for (int k = 1; k <= d; ++k) {
                    ZPoly c = gc[k];
                    for (auto& x : c) x *= k;
                    zreduce(c, M);
                    gdc[k - 1] = c;
                }
                for (const Poly& r0 : comp_roots[i]) {
                    ZPoly x = from_fp(r0);
                    Poly dv;
                    {
                        // g'(r0) in F_q
                        QPoly gd = qderiv(C.K, gbar_list[i]);
                        Poly acc;
                        for (size_t k = gd.size(); k-- > 0;) acc = padd(Fpp, C.K.mul(acc, r0), gd[k]);
                        dv = C.K.inv(acc);
                    }
                    ZPoly u = from_fp(dv);
                    Integer prec = p;
                    for (int it = 0; it < 200; ++it) {
                        ZPoly gx = eval_poly(gc, x, C.G, M);
                        if (gx.empty() && prec >= M) break;
                        x = zsub(x, zmod(zmul(u, gx, M), C.G, M), M);
                        ZPoly dx = eval_poly(gdc, x, C.G, M);
                        ZPoly two_minus = zsub(ZPoly{Integer(2)}, zmod(zmul(dx, u, M), C.G, M), M);
                        u = zmod(zmul(u, two_minus, M), C.G, M);
                        prec *= prec;
                    }
                    C.lifted.push_back(zmod(zmul(C.eps, x, M), Phi, M));
                }
            }

            // enumerate tuples
            Integer half = M / 2;
            std::vector<ZPoly> partial(comps.size() + 1);
            partial[0] = ZPoly(phi);
            std::function<void(size_t)> rec = [&](size_t level) {
                if (static_cast<int>(found.size()) == d) return;
                if (level == comps.size()) {
                    ZPoly beta = partial[level];
                    beta.resize(phi);
                    std::vector<Rational> coords(phi);
                    for (unsigned j = 0; j < phi; ++j) {
                        Integer v = beta[j] % M;
                        if (v < 0) v += M;
                        if (v > half) v -= M;
                        if (abs(v) > B) return;
                        coords[j] = Rational(v, D);
                    }
                    CycNum alpha = CycNum::from_coords(n, coords);
                    if (S.eval(alpha).is_zero() &&
                        std::find(found.begin(), found.end(), alpha) == found.end())
                        found.push_back(alpha);
                    return;
                }
                for (const auto& y : comps[level].lifted) {
                    partial[level + 1] = zadd(partial[level], y, M);
                    rec(level + 1);
                }
            };
            rec(0);
            done = true;
        }
    }
    for (const auto& r : found) {
        unsigned m = 0;
        UniPoly cur = F, lin = UniPoly::x_minus(r);
        for (;;) {
            UniPoly q, rem;
            divmod(cur, lin, q, rem);
            if (!rem.is_zero()) break;
            ++m;
            cur = q;
        }
        out.push_back({r, m});
    }
    std::sort(out.begin(), out.end(), [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
    return out;
}

}  // namespace fano3lab
