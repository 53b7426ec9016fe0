#include "support.hpp"

#include <fano3lab/quintics.hpp>

#include <algorithm>
#include <optional>

using namespace fano3lab;
using namespace testing;

namespace {

PlaneCurve curve(const std::string& s) { return PlaneCurve::parse(s); }

const PlanePoint P(1, 0, 0), Pp(0, 0, 1);

// C'(c) = C(M c), so p lies on C iff M^-1 p lies on C'.
PlaneCurve transform(const PlaneCurve& c, const Matrix& m) {
    const auto& vars = PlaneCurve::variables();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly im(vars);
        for (std::size_t j = 0; j < 3; ++j) im = im + m(i, j) * MultiPoly::variable(vars, j);
        images.push_back(im);
    }
    return PlaneCurve(c.form().substitute(images));
}

PlanePoint transform(const PlanePoint& p, const Matrix& minv) {
    std::array<CycNum, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i] = out[i] + minv(i, j) * p[j];
    return PlanePoint(out[0], out[1], out[2]);
}

Matrix rand_invertible3() {
    for (;;) {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = rand_int(-3, 3);
        if (!det(m).is_zero()) return m;
    }
}

unsigned bezout_sum(const PlaneCurve& a, const PlaneCurve& b) {
    CommonPoints cp = common_points(a, b);
    CHECK(cp.complete);
    unsigned s = 0;
    for (const auto& p : cp.points) s += intersection_multiplicity(a, b, p);
    return s;
}

}  // namespace

TEST_CASE("plane points") {
    CHECK(PlanePoint(2, 4, 6) == PlanePoint(1, 2, 3));
    CHECK(PlanePoint(0, 0, 5) == Pp);
    CHECK_THROWS_AS(PlanePoint(0, 0, 0), Error);
    CHECK(to_plane_point(form("x^2")) == P);
    CHECK(to_plane_point(form("3*y^2")) == Pp);
    CHECK(to_quadratic(PlanePoint(1, -2, 1)) == form("x^2 - 2*x*y + y^2"));
}

TEST_CASE("evaluation") {
    PlaneCurve ga = curve("c1^2 - 4*c2^2 - 4*c0*c2");
    CHECK(eval_at(ga, P).is_zero());
    CHECK(eval_at(curve("c2"), P).is_zero());
    CHECK(eval_at(curve("c2"), Pp) == CycNum(1));
    CHECK(eval_at(ga, PlanePoint(1, 1, 1)) == CycNum(-7));
    CHECK_THROWS_AS(curve("c0^2 + c1"), Error);
    CHECK_THROWS_AS(curve("0"), Error);
}

TEST_CASE("tangent lines") {
    CHECK(proj_eq(tangent_line(curve("c1^2 - 4*c2^2 - 4*c0*c2"), P), curve("c2")));
    CHECK(proj_eq(tangent_line(curve("c1^2 - 4*c0*c2"), P), curve("c2")));
    PlaneCurve gm = curve("c1^2 - 16*c0*c2/5");
    PlaneCurve t = tangent_line(gm, Pp);
    CHECK(proj_eq(t, curve("c0")));
    CHECK(eval_at(t, Pp).is_zero());
    CHECK_KIND(tangent_line(curve("c1^2 - c2^2"), P), "SingularPoint");
}

TEST_CASE("intersection multiplicities") {
    SigmaZ a = sigma_z({CurveLabel::A});
    SigmaZ m = sigma_z({CurveLabel::M, 2});
    const PlaneCurve &a1 = a.conics[0].first, &a2 = a.conics[1].first;
    const PlaneCurve &m1 = m.conics[0].first, &m2 = m.conics[1].first;
    CHECK(intersection_multiplicity(a1, a2, P) == 4);
    CHECK(intersection_multiplicity(m1, m2, P) == 2);
    CHECK(intersection_multiplicity(m1, m2, Pp) == 2);
    CHECK(intersection_multiplicity(a.line, a1, P) == 2);
    CHECK(intersection_multiplicity(a1, a2, Pp) == 0);
    CHECK(intersection_multiplicity(curve("c0"), curve("c1"), Pp) == 1);
    CHECK(intersection_multiplicity(curve("c1^2 - c0*c2"), curve("c2^2"), P) == 4);
    CHECK_KIND(intersection_multiplicity(a1, a1, P), "CommonComponent");
    CHECK_KIND(intersection_multiplicity(curve("c0*c1"), curve("c1*c2"), PlanePoint(1, 0, 1)), "CommonComponent");
}

TEST_CASE("common points over the field") {
    SigmaZ a = sigma_z({CurveLabel::A});
    SigmaZ m = sigma_z({CurveLabel::M, 2});
    CommonPoints ca = common_points(a.conics[0].first, a.conics[1].first);
    CHECK(ca.complete);
    CHECK(ca.points == std::vector<PlanePoint>{P});
    CommonPoints cm = common_points(m.conics[0].first, m.conics[1].first);
    CHECK(cm.complete);
    std::vector<PlanePoint> pts = cm.points;
    CHECK(pts.size() == 2);
    CHECK(std::find(pts.begin(), pts.end(), P) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), Pp) != pts.end());
    CommonPoints irr = common_points(curve("c0^2 + c1^2 - 3*c2^2"), curve("c0"), 4);
    CHECK_FALSE(irr.complete);
    CHECK(irr.points.empty());
    CHECK(common_points(curve("c0^2 + c1^2 - 3*c2^2"), curve("c0"), 12).points.size() == 2);
}

TEST_CASE("implicitization") {
    CHECK(proj_eq(implicitize_conic({form("x^2"), form("2*x*y"), form("y^2")}), curve("c1^2 - 4*c0*c2")));
    CHECK(proj_eq(implicitize_conic({form("x^2 - y^2"), form("-2*x*y"), form("-x^2")}),
                  curve("c1^2 - 4*c2^2 - 4*c0*c2")));
    std::array<BinaryForm, 3> prm = {form("-3*x^2"), form("-4*x*y"), form("-y^2")};
    PlaneCurve g = implicitize_conic(prm);
    CHECK(proj_eq(g, curve("c1^2 - 16*c0*c2/3")));
    for (long s = 0; s < 5; ++s) {
        PlanePoint q(prm[0].eval(s, 1), prm[1].eval(s, 1), prm[2].eval(s, 1));
        CHECK(eval_at(g, q).is_zero());
    }
    CHECK_KIND(implicitize_conic({form("x^2"), form("x^2"), form("y^2")}), "NotAConic");
    CHECK_KIND(implicitize_conic({form("x"), form("y"), form("x")}), "NotAConic");
}

TEST_CASE("implicit conics vanish identically on their parameterizations") {
    const std::vector<std::string> st{"x", "y"};
    for (int k = 0; k < 100; ++k) {
        std::array<BinaryForm, 3> prm;
        for (auto& q : prm) q = rand_form(2, 1, 4);
        std::optional<PlaneCurve> g;
        try {
            g = implicitize_conic(prm);
        } catch (const Error& e) {
            CHECK(e.kind() == "NotAConic");
            continue;
        }
        std::vector<MultiPoly> images;
        for (auto& q : prm) images.push_back(to_multipoly(q));
        CHECK(g->form().substitute(images).is_zero());
    }
}

TEST_CASE("conics of sigma_z are tangent to the line at P") {
    for (const auto& c : {CurveCase{CurveLabel::MU}, CurveCase{CurveLabel::A}, CurveCase{CurveLabel::M, 2},
                          CurveCase{CurveLabel::M, Rational(1, 3)}}) {
        SigmaZ s = sigma_z(c);
        for (auto& [q, mult] : s.conics) CHECK(proj_eq(tangent_line(q, P), s.line));
    }
}

TEST_CASE("sigma_x report") {
    SigmaXReport mu = sigma_x_report({CurveLabel::MU});
    REQUIRE(mu.components.size() == 1);
    CHECK(mu.components[0].second == 2);
    CHECK(mu.meetings.empty());
    CHECK(mu.verdict == "non-reduced, underlying smooth rational curve");

    SigmaXReport a = sigma_x_report({CurveLabel::A});
    REQUIRE(a.components.size() == 2);
    REQUIRE(a.meetings.size() == 1);
    CHECK(a.meetings[0].point == P);
    CHECK(a.meetings[0].multiplicity == 4);
    CHECK(a.complete);

    SigmaXReport m = sigma_x_report({CurveLabel::M, 2});
    REQUIRE(m.components.size() == 2);
    REQUIRE(m.meetings.size() == 2);
    for (auto& mt : m.meetings) {
        CHECK(mt.multiplicity == 2);
        CHECK((mt.point == P || mt.point == Pp));
    }
    CHECK_KIND(sigma_x_report({CurveLabel::M, 1}), "DegenerateParameter");
}

TEST_CASE("Bezout sum over the conic pairs") {
    CHECK(bezout_sum(sigma_z({CurveLabel::A}).conics[0].first, sigma_z({CurveLabel::A}).conics[1].first) == 4);
    int cases = 0;
    for (long num = -20; num <= 20 && cases < 100; ++num)
        for (long den = 1; den <= 6 && cases < 100; ++den) {
            Rational u(num, den);
            u.canonicalize();
            if (u.get_den() != den) continue;
            CycNum U(u);
            if (U.is_zero() || U.pow(4).is_one()) continue;
            SigmaZ s = sigma_z({CurveLabel::M, U});
            CHECK_MESSAGE(bezout_sum(s.conics[0].first, s.conics[1].first) == 4, "u = ", U.to_string());
            ++cases;
        }
    CHECK(cases == 100);
}

TEST_CASE("intersection multiplicity is symmetric and coordinate independent") {
    SigmaZ a = sigma_z({CurveLabel::A});
    SigmaZ m = sigma_z({CurveLabel::M, 2});
    struct Item {
        PlaneCurve c1, c2;
        PlanePoint p;
        unsigned expect;
    };
    std::vector<Item> items = {{a.conics[0].first, a.conics[1].first, P, 4},
                               {m.conics[0].first, m.conics[1].first, P, 2},
                               {m.conics[0].first, m.conics[1].first, Pp, 2},
                               {a.line, a.conics[0].first, P, 2}};
    for (int k = 0; k < 100; ++k) {
        const Item& it = items[k % items.size()];
        Matrix mm = rand_invertible3();
        Matrix mi = inverse(mm);
        PlaneCurve t1 = transform(it.c1, mm), t2 = transform(it.c2, mm);
        PlanePoint tp = transform(it.p, mi);
        CHECK(eval_at(t1, tp).is_zero());
        CHECK(intersection_multiplicity(t1, t2, tp) == it.expect);
        CHECK(intersection_multiplicity(t2, t1, tp) == it.expect);
    }
}
