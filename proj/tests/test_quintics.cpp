#include "support.hpp"

#include <fano3lab/quintics.hpp>

#include <algorithm>

using namespace fano3lab;
using namespace testing;

namespace {

const CurveCase kMU{CurveLabel::MU}, kA{CurveLabel::A}, kM2{CurveLabel::M, 2};

PlaneCurve curve(const std::string& s) { return PlaneCurve::parse(s); }

BinaryForm rand_split_quadratic() {
    for (;;) {
        BinaryForm q = BinaryForm::linear(rand_int(-4, 4), rand_int(-4, 4)) *
                       BinaryForm::linear(rand_int(-4, 4), rand_int(-4, 4));
        if (!q.is_zero()) return q;
    }
}

}  // namespace

TEST_CASE("build_z coefficient forms") {
    ParamCurve za = build_z(kA);
    for (long t = -3; t <= 3; ++t) {
        CycNum T(t);
        BinaryForm expect({T - T.pow(5), 1 - 5 * T.pow(4), -10 * T.pow(3), -10 * T.pow(2), -5 * T, -1, 0});
        CHECK(proj_eq(za.at(T, 1), expect));
    }
    CHECK(proj_eq(za.at(1, 0), form("x^6")));

    ParamCurve zmu = build_z(kMU);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(proj_eq(zmu.at(a, b), BinaryForm::x() * BinaryForm::linear(a, b).pow(5)));
        }

    for (long u : {2L, -3L}) {
        ParamCurve zm = build_z({CurveLabel::M, u});
        BinaryForm phiu = act(GroupElt2(1, u, 0, 1), phi6());
        for (long t = 1; t <= 4; ++t) CHECK(proj_eq(zm.at(t, 1), act(GroupElt2(t, 0, 0, 1), phiu)));
        std::vector<BinaryForm> ends = {zm.at(1, 0).normalized(), zm.at(0, 1).normalized()};
        std::sort(ends.begin(), ends.end(), form_less);
        CHECK(ends[0] == form("x*y^5"));
        CHECK(ends[1] == form("x^6"));
    }
}

TEST_CASE("parameterizations are reduced of degree five") {
    for (const auto& c : {kMU, kA, kM2, CurveCase{CurveLabel::M, Rational(1, 2)}}) {
        ParamCurve z = build_z(c);
        CHECK(curve_degree(z) == 5);
        BinaryForm g = BinaryForm::zero(5);
        for (const auto& f : z.forms())
            if (!f.is_zero()) g = g.is_zero() ? f : gcd_forms(g, f);
        CHECK(g.degree() == 0);
    }
    std::array<BinaryForm, 7> sextic;
    for (unsigned k = 0; k <= 6; ++k) {
        static const long binom[] = {1, 6, 15, 20, 15, 6, 1};
        sextic[k] = BinaryForm::monomial(6, k, binom[k]);
    }
    CHECK(curve_degree(ParamCurve(sextic)) == 6);
    std::array<BinaryForm, 7> padded;
    for (unsigned k = 0; k <= 6; ++k) padded[k] = BinaryForm::linear(1, 1) * sextic[k];
    CHECK(curve_degree(ParamCurve(padded)) == 6);
    std::array<BinaryForm, 7> zero;
    zero.fill(BinaryForm::zero(2));
    CHECK_THROWS_AS(ParamCurve{zero}, Error);
}

TEST_CASE("degenerate M parameters") {
    CHECK_KIND(build_z({CurveLabel::M, 0}), "DegenerateParameter");
    CHECK_KIND(build_z({CurveLabel::M, 1}), "DegenerateParameter");
    CHECK_KIND(build_z({CurveLabel::M, -1}), "DegenerateParameter");
    CHECK_KIND(build_z({CurveLabel::M, CycNum::zeta(4)}), "DegenerateParameter");
    CHECK_KIND(sigma_z({CurveLabel::M, CycNum::zeta(4)}), "DegenerateParameter");
    CHECK_NOTHROW(build_z({CurveLabel::M, Rational(1, 2)}));
    CHECK_NOTHROW(build_z({CurveLabel::M, 2}));
    try {
        check_m_parameter(1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.details().at("factor") == "u^4 - 1");
    }
    try {
        check_m_parameter(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.details().at("factor") == "u");
    }
}

TEST_CASE("orbit boundary of the special curves") {
    ParamCurve za = build_z(kA), zm = build_z(kM2);
    for (long t = -4; t <= 4; ++t) {
        auto p = classify_point(za.at(t, 1));
        REQUIRE(p.has_value());
        CHECK(p->orbit == Orbit::Orb3);
        if (t != 0) {
            auto q = classify_point(zm.at(t, 1));
            REQUIRE(q.has_value());
            CHECK(q->orbit == Orbit::Orb3);
        }
    }
    CHECK(classify_point(za.at(1, 0))->orbit == Orbit::Orb1);
    std::vector<Orbit> ends = {classify_point(zm.at(1, 0))->orbit, classify_point(zm.at(0, 1))->orbit};
    std::sort(ends.begin(), ends.end());
    CHECK(ends == std::vector<Orbit>{Orbit::Orb2, Orbit::Orb1});
}

TEST_CASE("incidence lengths") {
    ParamCurve za = build_z(kA), zmu = build_z(kMU), zm = build_z(kM2);
    CHECK(incidence_length(za, line_from_sigma(form("x^2"))).length == 2);
    CHECK(incidence_length(za, line_from_sigma(form("x*(x+y)"))).length == 1);
    CHECK(incidence_length(zmu, line_from_sigma(form("x*y"))).length == 1);
    CHECK(incidence_length(zmu, line_from_sigma(form("x^2"))).length == 2);
    CHECK(incidence_length(zm, line_from_sigma(form("x^2"))).length == 2);
    CHECK(incidence_length(za, line_from_sigma(form("y^2"))).length == 0);
    for (auto* z : {&za, &zmu, &zm}) CHECK_FALSE(incidence_length(*z, line_from_sigma(form("x^2"))).infinite);
}

TEST_CASE("sigma_z components") {
    for (const auto& c : {kMU, kA, kM2}) {
        SigmaZ s = sigma_z(c);
        CHECK(s.total_degree() == 5);
        CHECK(proj_eq(s.line, curve("c2")));
    }
    SigmaZ mu = sigma_z(kMU);
    REQUIRE(mu.conics.size() == 1);
    CHECK(mu.conics[0].second == 2);
    CHECK(proj_eq(mu.conics[0].first, curve("c1^2 - 4*c0*c2")));

    SigmaZ a = sigma_z(kA);
    REQUIRE(a.conics.size() == 2);
    CHECK(proj_eq(a.conics[0].first, curve("c0*c2 - c1^2/4 + c2^2")));
    CHECK(proj_eq(a.conics[1].first, curve("-c0*c2 + c1^2/4 + c2^2")));
    CHECK(proj_eq(a.conics[0].first, curve("c1^2 - 4*c2^2 - 4*c0*c2")));
    CHECK(proj_eq(a.conics[1].first, curve("c1^2 + 4*c2^2 - 4*c0*c2")));

    SigmaZ m = sigma_z(kM2);
    REQUIRE(m.conics.size() == 2);
    CHECK(proj_eq(m.conics[0].first, curve("c1^2 - 16*c0*c2/3")));
    CHECK(proj_eq(m.conics[1].first, curve("c1^2 - 16*c0*c2/5")));
    for (auto& [q, mult] : m.conics) {
        CHECK(mult == 1);
        CHECK(eval_at(q, PlanePoint(1, 0, 0)).is_zero());
    }
}

TEST_CASE("bisecant") {
    for (const auto& c : {kMU, kA, kM2}) {
        BisecantReport r = bisecant_report(c);
        CHECK(r.length == 2);
        CHECK(proj_eq(r.line.sigma, form("x^2")));
        CHECK(r.unique);
        CHECK(r.samples.size() >= 3);
        for (const auto& s : r.samples) CHECK(s.length.length == 1);
    }
}

TEST_CASE("lines through points of Z lie on sigma_z") {
    for (const auto& c : {kMU, kA, kM2}) {
        ParamCurve z = build_z(c);
        SigmaZ s = sigma_z(c);
        for (long t = 1; t <= 5; ++t) {
            auto p = classify_point(z.at(t, 1));
            REQUIRE(p.has_value());
            for (const auto& l : lines_through_point(*p)) {
                CHECK(incidence_length(z, l).length >= 1);
                PlanePoint q = to_plane_point(l.sigma);
                bool on = eval_at(s.line, q).is_zero();
                for (auto& [conic, m] : s.conics) on = on || eval_at(conic, q).is_zero();
                CHECK(on);
            }
        }
    }
}

TEST_CASE("incidence is equivariant under the preserving subgroups") {
    ParamCurve za = build_z(kA), zm = build_z(kM2), zmu = build_z(kMU);
    for (int k = 0; k < 100; ++k) {
        long t = rand_int(1, 5) * (rand_int(0, 1) ? 1 : -1);
        LineOnY l = line_from_sigma(rand_split_quadratic());
        GroupElt2 u(1, t, 0, 1), d(t, 0, 0, 1), b(t, rand_int(-3, 3), 0, 1);
        CHECK(incidence_length(act(u, za), act(u, l)).length == incidence_length(za, l).length);
        CHECK(incidence_length(act(d, zm), act(d, l)).length == incidence_length(zm, l).length);
        CHECK(incidence_length(act(b, zmu), act(b, l)).length == incidence_length(zmu, l).length);
    }
}
