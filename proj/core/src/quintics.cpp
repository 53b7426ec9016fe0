#include <fano3lab/errors.hpp>
#include <fano3lab/quintics.hpp>

#include <functional>

namespace fano3lab {

const char* to_string(CurveLabel l) {
    switch (l) {
        case CurveLabel::MU: return "MU";
        case CurveLabel::A: return "A";
        case CurveLabel::M: return "M";
        case CurveLabel::Custom: return "Custom";
    }
    return "?";
}

void check_m_parameter(const CycNum& u) {
    auto degenerate = [&](const char* factor) {
        raise("DegenerateParameter", std::string("u = ") + u.to_string() + " kills the factor " + factor,
              {{"u", u.to_string()}, {"factor", factor}});
    };
    CycNum u4 = u.pow(4);
    if (u.is_zero()) degenerate("u");
    if (u4.is_one()) degenerate("u^4 - 1");
    if ((CycNum(5) * u4).is_one()) degenerate("5u^4 - 1");
}

namespace {

// t -> family(t) . phi as a homogeneous curve of degree <= 6 in (t0:t1)
std::array<BinaryForm, 7> orbit_forms(const std::function<GroupElt2(const CycNum&)>& family, const BinaryForm& phi) {
    std::vector<CycNum> ts;
    std::array<std::vector<CycNum>, 7> ys;
    for (long t = 1; t <= 7; ++t) {
        ts.push_back(CycNum(t));
        BinaryForm img = act(family(CycNum(t)), phi);
        for (std::size_t k = 0; k < 7; ++k) ys[k].push_back(img[k]);
    }
    std::array<BinaryForm, 7> out;
    for (std::size_t k = 0; k < 7; ++k) out[k] = BinaryForm::homogenize(interpolate(ts, ys[k]), 6);
    return out;
}

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

ParamCurve::ParamCurve(std::array<BinaryForm, 7> forms, CurveLabel label) : forms_(std::move(forms)), label_(label) {
    unsigned d = forms_[0].degree();
    BinaryForm h = BinaryForm::zero(d);
    for (const auto& f : forms_) {
        if (f.degree() != d) raise("OutOfRange", "coefficient forms of a curve must share one degree");
        if (!f.is_zero()) h = h.is_zero() ? f.normalized() : gcd_forms(h, f);
    }
    if (h.is_zero()) raise("OutOfRange", "curve with all coefficient forms zero");
    if (h.degree() > 0)
        for (auto& f : forms_) f = f.is_zero() ? BinaryForm::zero(d - h.degree()) : divide_exact(f, h);
}

BinaryForm ParamCurve::at(const CycNum& t0, const CycNum& t1) const {
    std::vector<CycNum> c;
    for (const auto& f : forms_) c.push_back(f.eval(t0, t1));
    return BinaryForm(c);
}

ParamCurve build_z(const CurveCase& c) {
    switch (c.label) {
        case CurveLabel::MU: {
            std::array<BinaryForm, 7> f;
            for (unsigned k = 0; k <= 5; ++k) f[k] = BinaryForm::monomial(5, k, CycNum(binomial(5, k)));
            f[6] = BinaryForm::zero(5);
            return ParamCurve(f, CurveLabel::MU);
        }
        case CurveLabel::A:
            return ParamCurve(orbit_forms([](const CycNum& t) { return GroupElt2(1, t, 0, 1); }, phi6()),
                              CurveLabel::A);
        case CurveLabel::M: {
            check_m_parameter(c.u);
            BinaryForm phi = act(GroupElt2(1, c.u, 0, 1), phi6());
            return ParamCurve(orbit_forms([](const CycNum& t) { return GroupElt2(t, 0, 0, 1); }, phi), CurveLabel::M);
        }
        case CurveLabel::Custom: break;
    }
    raise("OutOfRange", "build_z needs one of MU, A, M");
}

unsigned curve_degree(const ParamCurve& z) { return z.degree(); }

ParamCurve act(const GroupElt2& g, const ParamCurve& z) {
    Matrix m = act_matrix(g, 6);
    std::array<BinaryForm, 7> out;
    for (std::size_t i = 0; i < 7; ++i) {
        BinaryForm acc = BinaryForm::zero(z.degree());
        for (std::size_t k = 0; k < 7; ++k)
            if (!m(i, k).is_zero()) acc = acc + m(i, k) * z.forms()[k];
        out[i] = acc;
    }
    return ParamCurve(out, z.label());
}

IncidenceLength incidence_length(const ParamCurve& z, const LineOnY& l) {
    const auto& a = l.span[0];
    const auto& b = l.span[1];
    const auto& zf = z.forms();
    auto m2 = [&](std::size_t i, std::size_t j) { return a[i] * b[j] - a[j] * b[i]; };
    BinaryForm h = BinaryForm::zero(z.degree());
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) {
                BinaryForm minor = m2(j, k) * zf[i] - m2(i, k) * zf[j] + m2(i, j) * zf[k];
                if (!minor.is_zero()) h = h.is_zero() ? minor.normalized() : gcd_forms(h, minor);
            }
    IncidenceLength out;
    out.locus = h;
    if (h.is_zero())
        out.infinite = true;
    else
        out.length = h.degree();
    return out;
}

unsigned SigmaZ::total_degree() const {
    unsigned d = line.degree();
    for (const auto& [c, m] : conics) d += c.degree() * m;
    return d;
}

SigmaZ sigma_z(const CurveCase& c) {
    using Q = BinaryForm;
    std::vector<std::pair<std::array<BinaryForm, 3>, unsigned>> params;
    switch (c.label) {
        case CurveLabel::MU:
            params.push_back({{Q({1, 0, 0}), Q({0, 2, 0}), Q({0, 0, 1})}, 2});
            break;
        case CurveLabel::A:
            params.push_back({{Q({1, 0, -1}), Q({0, -2, 0}), Q({-1, 0, 0})}, 1});
            params.push_back({{Q({1, 0, 1}), Q({0, 2, 0}), Q({1, 0, 0})}, 1});
            break;
        case CurveLabel::M: {
            check_m_parameter(c.u);
            CycNum u = c.u, u2 = c.u * c.u;
            params.push_back({{Q({CycNum(1) - u2, 0, 0}), Q({0, CycNum(-2) * u, 0}), Q({0, 0, -1})}, 1});
            params.push_back({{Q({CycNum(1) + u2, 0, 0}), Q({0, CycNum(2) * u, 0}), Q({0, 0, 1})}, 1});
            break;
        }
        case CurveLabel::Custom:
            raise("OutOfRange", "sigma_z needs one of MU, A, M");
    }
    SigmaZ out{PlaneCurve::line(0, 0, 1), {}, {}};
    for (const auto& [p, mult] : params) {
        out.conics.emplace_back(implicitize_conic(p), mult);
        out.conic_params.push_back(p);
    }
    return out;
}

BisecantReport bisecant_report(const CurveCase& c) {
    ParamCurve z = build_z(c);
    SigmaZ sz = sigma_z(c);
    BisecantReport out;
    out.line = line_from_sigma(BinaryForm({1, 0, 0}));
    IncidenceLength il = incidence_length(z, out.line);
    out.length = il.infinite ? 0 : il.length;

    const PlanePoint p(1, 0, 0);
    std::vector<BinaryForm> sigmas;
    const std::array<std::array<long, 2>, 3> svals = {{{1, 1}, {1, 2}, {2, 1}}};
    for (const auto& s : svals) sigmas.push_back(BinaryForm({s[0], s[1], 0}));
    for (const auto& prm : sz.conic_params)
        for (const auto& s : svals) {
            BinaryForm q({prm[0].eval(s[0], s[1]), prm[1].eval(s[0], s[1]), prm[2].eval(s[0], s[1])});
            sigmas.push_back(q);
        }
    for (const auto& q : sigmas) {
        if (to_plane_point(q) == p) continue;
        BisecantSample smp{q.normalized(), incidence_length(z, line_from_sigma_apolar(q))};
        if (smp.length.infinite || smp.length.length >= 2) out.unique = false;
        out.samples.push_back(smp);
    }
    return out;
}

SigmaXReport sigma_x_report(const CurveCase& c, unsigned conductor) {
    if (c.label == CurveLabel::M) check_m_parameter(c.u);
    SigmaZ sz = sigma_z(c);
    SigmaXReport out;
    out.components = sz.conics;
    for (std::size_t i = 0; i < out.components.size(); ++i)
        for (std::size_t j = i + 1; j < out.components.size(); ++j) {
            const PlaneCurve& a = out.components[i].first;
            const PlaneCurve& b = out.components[j].first;
            CommonPoints cp = common_points(a, b, conductor);
            if (!cp.complete) out.complete = false;
            for (const auto& p : cp.points)
                out.meetings.push_back({i, j, p, intersection_multiplicity(a, b, p)});
        }
    switch (c.label) {
        case CurveLabel::MU:
            out.verdict = "non-reduced, underlying smooth rational curve";
            break;
        case CurveLabel::A:
            out.verdict = "two smooth rational curves glued at one point, tangency of multiplicity 4";
            break;
        default:
            out.verdict = "two smooth rational curves glued at two simple tangency points";
    }
    return out;
}

}  // namespace fano3lab
