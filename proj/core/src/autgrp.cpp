#include <fano3lab/autgrp.hpp>
#include <fano3lab/errors.hpp>

#include <deque>
#include <set>

namespace fano3lab {

namespace {

GroupElt2 canonical(const GroupElt2& g) {
    for (const CycNum* e : {&g.a(), &g.b(), &g.c(), &g.d()})
        if (!e->is_zero()) return e->is_one() ? g : g.scaled(e->inverse());
    raise("Singular", "zero matrix");
}

bool elt_less(const GroupElt2& x, const GroupElt2& y) {
    if (auto o = x.a() <=> y.a(); o != 0) return o < 0;
    if (auto o = x.b() <=> y.b(); o != 0) return o < 0;
    if (auto o = x.c() <=> y.c(); o != 0) return o < 0;
    return (x.d() <=> y.d()) < 0;
}

template <class T, class Less>
std::vector<T> bfs_closure(const std::vector<T>& gens, const T& one, std::size_t cap, Less less) {
    std::set<T, Less> seen(less);
    std::vector<T> out;
    std::deque<T> queue;
    auto visit = [&](const T& x) {
        if (!seen.insert(x).second) return;
        out.push_back(x);
        if (out.size() > cap)
            raise("CapExceeded", "closure exceeds " + std::to_string(cap) + " elements",
                  {{"cap", std::to_string(cap)}});
        queue.push_back(x);
    };
    visit(one);
    while (!queue.empty()) {
        T x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) visit(x * g);
    }
    return out;
}

bool proportional(const std::vector<CycNum>& u, const std::vector<CycNum>& v) {
    return rank(Matrix::from_rows({u, v})) <= 1;
}

}  // namespace

ProjMat2::ProjMat2(const GroupElt2& g) : g_(canonical(g)) {}

bool operator<(const ProjMat2& x, const ProjMat2& y) { return elt_less(x.g_, y.g_); }

std::string ProjMat2::to_string() const {
    return "[[" + g_.a().to_string() + ", " + g_.b().to_string() + "], [" + g_.c().to_string() + ", " +
           g_.d().to_string() + "]]";
}

std::vector<ProjMat2> closure(const std::vector<ProjMat2>& gens, std::size_t cap) {
    if (cap < 1) raise("OutOfRange", "closure cap must be positive");
    return bfs_closure(gens, ProjMat2::identity(), cap, std::less<ProjMat2>());
}

std::vector<GroupElt2> closure_linear(const std::vector<GroupElt2>& gens, std::size_t cap) {
    if (cap < 1) raise("OutOfRange", "closure cap must be positive");
    return bfs_closure(gens, GroupElt2::identity(), cap, &elt_less);
}

bool stabilizes_form(const ProjMat2& g, const BinaryForm& phi) { return proj_eq(act(g.elt(), phi), phi); }

bool stabilizes_pointed(const GroupElt2& g, const BinaryForm& phi, const CycNum& c) {
    auto [f, c2] = act_pointed(g, phi, c);
    std::vector<CycNum> u = f.coeffs(), v = phi.coeffs();
    u.push_back(c2);
    v.push_back(c);
    return proportional(u, v);
}

bool on_curve(const ParamCurve& z, const BinaryForm& p) {
    if (p.is_zero()) raise("OutOfRange", "zero vector is not a point");
    const auto& zf = z.forms();
    BinaryForm h;
    bool any = false;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            BinaryForm m = p[j] * zf[i] - p[i] * zf[j];
            if (m.is_zero()) continue;
            h = any ? gcd_forms(h, m) : m.normalized();
            any = true;
        }
    return !any || h.degree() > 0;
}

bool preserves_curve(const ProjMat2& g, const ParamCurve& z) {
    // a quadric through Z but not g.Z meets g.Z in at most 2 deg points
    long samples = 2 * static_cast<long>(z.degree()) + 1;
    for (long t = 0; t < samples; ++t)
        if (!on_curve(z, act(g.elt(), z.at(t, 1)))) return false;
    return true;
}

bool family_preserves(FamilyKind kind, const ParamCurve& z) {
    long nt = 8, ns = static_cast<long>(z.degree()) + 2;
    for (long t = 1; t <= nt; ++t) {
        CycNum tt(t);
        GroupElt2 g = kind == FamilyKind::Torus ? GroupElt2(tt, 0, 0, 1) : GroupElt2(1, tt, 0, 1);
        for (long s = 0; s < ns; ++s) {
            CycNum s0(s), s1(1);
            BinaryForm lhs = act(g, z.at(s0, s1));
            BinaryForm rhs = kind == FamilyKind::Torus ? tt * z.at(tt * s0, s1) : z.at(s0 + tt * s1, s1);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

BinaryForm phi12() {
    std::vector<CycNum> c(13, CycNum(0));
    c[1] = 1;
    c[6] = 11;
    c[11] = -1;
    return BinaryForm(c);
}

std::vector<ProjMat2> octahedral_generators() {
    CycNum i = CycNum::zeta(4);
    return {ProjMat2(i, 0, 0, 1), ProjMat2(1, 1, 1, -1), ProjMat2(0, 1, 1, 0)};
}

std::vector<GroupElt2> icosahedral_generators() {
    CycNum z = CycNum::zeta(5);
    CycNum z2 = z * z, z3 = z2 * z, z4 = z3 * z;
    CycNum r5 = z - z2 - z3 + z4;
    CycNum p = (z - z4) / r5, q = (z2 - z3) / r5;
    return {GroupElt2(z3, 0, 0, z2, true), GroupElt2(p, -q, -q, -p, true)};
}

AutDescriptor special_aut_group(const CurveCase& c) {
    ParamCurve z = build_z(c);
    AutDescriptor d;
    auto element = [&](const std::string& name, const ProjMat2& g) {
        d.evidence.push_back({name, g, preserves_curve(g, z), "sampled membership"});
    };
    auto family = [&](const std::string& name, FamilyKind k) {
        d.evidence.push_back({name, std::nullopt, family_preserves(k, z), "polynomial identity in (t, s)"});
    };
    CycNum i = CycNum::zeta(4);
    switch (c.label) {
        case CurveLabel::MU:
            d.group = "PGL2";
            d.continuous_part = "PGL2; the Borel subgroup B2 preserves Z_MU";
            d.finite_part = "trivial";
            element("diag(2, 1)", ProjMat2(2, 0, 0, 1));
            element("diag(i, 1)", ProjMat2(i, 0, 0, 1));
            element("(1 1; 0 1)", ProjMat2(1, 1, 0, 1));
            family("torus diag(t, 1)", FamilyKind::Torus);
            family("unipotent (1 t; 0 1)", FamilyKind::Unipotent);
            break;
        case CurveLabel::A: {
            d.group = "Ga x| mu4";
            d.continuous_part = "Ga = U2, the unipotent radical of B2";
            d.finite_part = "mu4 generated by tau = diag(i, 1)";
            ProjMat2 tau(i, 0, 0, 1);
            element("tau = diag(i, 1)", tau);
            for (long u : {1, 2, 3}) element("(1 " + std::to_string(u) + "; 0 1)", ProjMat2(1, u, 0, 1));
            family("unipotent (1 t; 0 1)", FamilyKind::Unipotent);
            d.finite_order = closure({tau}, 16).size();
            d.finite_part_verified = d.evidence.front().verified && d.finite_order == 4u;
            break;
        }
        case CurveLabel::M:
            d.group = "Gm x| mu2";
            d.continuous_part = "Gm = T2, the diagonal torus";
            d.finite_part = "mu2 generated by an extra involution";
            for (long t : {2, 3, -1}) element("diag(" + std::to_string(t) + ", 1)", ProjMat2(t, 0, 0, 1));
            family("torus diag(t, 1)", FamilyKind::Torus);
            d.evidence.push_back({"involution", std::nullopt, false, "asserted, not verified"});
            break;
        case CurveLabel::Custom:
            raise("OutOfRange", "special_aut_group needs one of MU, A, M");
    }
    return d;
}

}  // namespace fano3lab
