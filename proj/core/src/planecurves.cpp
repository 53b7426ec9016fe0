#include <fano3lab/errors.hpp>
#include <fano3lab/planecurves.hpp>

#include <algorithm>

namespace fano3lab {

namespace {

// Integral primitive multiple when all coefficients are rational; otherwise
// leading coefficient 1.
MultiPoly tidy(const MultiPoly& f) {
    bool rational = std::all_of(f.terms().begin(), f.terms().end(),
                                [](const auto& t) { return t.second.is_rational(); });
    if (!rational || f.is_zero()) return f.normalized();
    Integer den = 1, num = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational q = c.rational_value();
        den = lcm(den, Integer(q.get_den()));
        num = gcd(num, Integer(q.get_num()));
    }
    Rational s(den, num);
    s.canonicalize();
    if (f.terms().begin()->second.rational_value() < 0) s = -s;
    return CycNum(s) * f;
}

// F(T c) for a 3x3 matrix T
MultiPoly linear_change(const MultiPoly& f, const Matrix& t) {
    const auto& vars = PlaneCurve::variables();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly li(vars);
        for (std::size_t j = 0; j < 3; ++j) li = li + t(i, j) * MultiPoly::variable(vars, j);
        images.push_back(li);
    }
    return f.substitute(images);
}

// k-th pair (a, b) in diagonal order (0,0), (0,1), (1,0), (0,2), ...; c0 += a c2, c1 += b c2
std::array<long, 2> shear_pair(long k) {
    long s = 0;
    while ((s + 1) * (s + 2) / 2 <= k) ++s;
    long a = k - s * (s + 1) / 2;
    return {a, s - a};
}

Matrix shear(long k) {
    auto [a, b] = shear_pair(k);
    Matrix m = Matrix::identity(3);
    m(0, 2) = CycNum(a);
    m(1, 2) = CycNum(b);
    return m;
}

// restriction of f to the line lambda * p + mu * q, as a binary form in (lambda, mu)
BinaryForm restrict_to_line(const MultiPoly& f, const std::array<CycNum, 3>& p, const std::array<CycNum, 3>& q) {
    std::vector<std::string> xy = {"x", "y"};
    MultiPoly x = MultiPoly::variable(xy, 0), y = MultiPoly::variable(xy, 1);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(p[i] * x + q[i] * y);
    MultiPoly r = f.substitute(images);
    if (r.is_zero()) return BinaryForm::zero(static_cast<unsigned>(std::max(f.total_degree(), 0)));
    return to_binary_form(r);
}

// f(1, k, c2) as a polynomial in c2
UniPoly slice(const MultiPoly& f, const CycNum& k) {
    std::vector<CycNum> c(static_cast<std::size_t>(f.total_degree()) + 1, CycNum(0));
    for (const auto& [e, v] : f.terms()) c[e[2]] += v * k.pow(e[1]);
    return UniPoly(c);
}

bool center_off(const MultiPoly& f, unsigned d) { return !f.coeff({0, 0, d}).is_zero(); }

// Res_{c2}(f, g)(1, c1) by interpolation; both have nonzero c2^d coefficients
UniPoly projection_resultant(const MultiPoly& f, unsigned df, const MultiPoly& g, unsigned dg) {
    std::size_t n = static_cast<std::size_t>(df) * dg;
    std::vector<CycNum> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        CycNum kk(static_cast<long>(k));
        xs.push_back(kk);
        ys.push_back(resultant(slice(f, kk), slice(g, kk)));
    }
    return interpolate(xs, ys);
}

constexpr long kMaxShear = 512;

}  // namespace

const std::vector<std::string>& PlaneCurve::variables() {
    static const std::vector<std::string> v = {"c0", "c1", "c2"};
    return v;
}

PlaneCurve::PlaneCurve(MultiPoly form) : form_(form.with_variables(variables())) {
    if (form_.is_zero()) raise("OutOfRange", "plane curve with zero equation");
    if (!form_.is_homogeneous()) raise("ParseError", "plane curve equation is not homogeneous");
    degree_ = static_cast<unsigned>(form_.total_degree());
    if (degree_ == 0) raise("OutOfRange", "plane curve equation is a nonzero constant");
}

PlaneCurve PlaneCurve::parse(const std::string& text, unsigned conductor) {
    return PlaneCurve(parse_polynomial(text, variables(), conductor));
}

PlaneCurve PlaneCurve::line(const CycNum& a, const CycNum& b, const CycNum& c) {
    const auto& v = variables();
    return PlaneCurve(a * MultiPoly::variable(v, 0) + b * MultiPoly::variable(v, 1) + c * MultiPoly::variable(v, 2));
}

bool proj_eq(const PlaneCurve& a, const PlaneCurve& b) { return proj_eq(a.form(), b.form()); }

PlanePoint::PlanePoint(CycNum c0, CycNum c1, CycNum c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {
    auto it = std::find_if(c_.begin(), c_.end(), [](const CycNum& v) { return !v.is_zero(); });
    if (it == c_.end()) raise("OutOfRange", "plane point with all coordinates zero");
    CycNum inv = it->inverse();
    for (auto& v : c_) v = v * inv;
}

std::string PlanePoint::to_string() const {
    return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
}

PlanePoint to_plane_point(const BinaryForm& q) {
    if (q.degree() != 2) raise("OutOfRange", "expected a quadratic form");
    return PlanePoint(q[0], q[1], q[2]);
}

BinaryForm to_quadratic(const PlanePoint& p) { return BinaryForm({p[0], p[1], p[2]}); }

CycNum eval_at(const PlaneCurve& c, const PlanePoint& p) {
    return c.form().eval({p[0], p[1], p[2]});
}

unsigned intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const PlanePoint& p) {
    if (!eval_at(a, p).is_zero() || !eval_at(b, p).is_zero()) return 0;
    // move p to (1:0:0)
    std::size_t lead = 0;
    while (p[lead].is_zero()) ++lead;
    Matrix move(3, 3);
    for (std::size_t i = 0; i < 3; ++i) move(i, 0) = p[i];
    for (std::size_t m = 0, col = 1; m < 3; ++m)
        if (m != lead) move(m, col++) = CycNum(1);
    unsigned da = a.degree(), db = b.degree();
    for (long s = 0; s < kMaxShear; ++s) {
        Matrix t = move * shear(s);
        MultiPoly f = linear_change(a.form(), t), g = linear_change(b.form(), t);
        if (!center_off(f, da) || !center_off(g, db)) continue;
        UniPoly r = projection_resultant(f, da, g, db);
        if (r.is_zero()) raise("CommonComponent", "curves share a component");
        // the line c1 = 0 must meet both curves only at (1:0:0)
        BinaryForm rf = restrict_to_line(f, {1, 0, 0}, {0, 0, 1});
        BinaryForm rg = restrict_to_line(g, {1, 0, 0}, {0, 0, 1});
        if (rf.is_zero() && rg.is_zero()) continue;
        BinaryForm h = gcd_forms(rf, rg);
        if (h.y_order() != h.degree()) continue;
        unsigned k = 0;
        while (r.coeff(k).is_zero()) ++k;
        return k;
    }
    raise("Internal", "no admissible shear found");
}

PlaneCurve tangent_line(const PlaneCurve& c, const PlanePoint& p) {
    if (!eval_at(c, p).is_zero()) raise("OutOfRange", "point is not on the curve");
    std::array<CycNum, 3> grad;
    for (std::size_t i = 0; i < 3; ++i) grad[i] = c.form().derivative(i).eval({p[0], p[1], p[2]});
    if (std::all_of(grad.begin(), grad.end(), [](const CycNum& v) { return v.is_zero(); }))
        raise("SingularPoint", "gradient vanishes at " + p.to_string());
    return PlaneCurve(tidy(PlaneCurve::line(grad[0], grad[1], grad[2]).form()));
}

CommonPoints common_points(const PlaneCurve& a, const PlaneCurve& b, unsigned conductor) {
    unsigned da = a.degree(), db = b.degree();
    for (long s = 0; s < kMaxShear; ++s) {
        Matrix t = shear(s);
        MultiPoly f = linear_change(a.form(), t), g = linear_change(b.form(), t);
        if (!center_off(f, da) || !center_off(g, db)) continue;
        UniPoly r = projection_resultant(f, da, g, db);
        if (r.is_zero()) raise("CommonComponent", "curves share a component");
        CommonPoints out;
        // R(1, c1) -> binary form in (c0, c1): c1^j sits at index j
        std::vector<CycNum> rc(da * db + 1, CycNum(0));
        for (std::size_t j = 0; j < r.coeffs().size(); ++j) rc[j] = r.coeffs()[j];
        auto lf = factor_linear(BinaryForm(rc), conductor);
        if (lf.remainder.degree() > 0) out.complete = false;
        for (const auto& fac : lf.factors) {
            // linear factor u c0 + v c1 vanishes at (v : -u)
            std::array<CycNum, 3> base = {fac.form[1], -fac.form[0], 0};
            BinaryForm h = gcd_forms(restrict_to_line(f, base, {0, 0, 1}), restrict_to_line(g, base, {0, 0, 1}));
            auto pts = factor_linear(h, conductor);
            if (pts.remainder.degree() > 0) out.complete = false;
            for (const auto& pf : pts.factors) {
                CycNum lam = pf.form[1], mu = -pf.form[0];
                std::array<CycNum, 3> c = {lam * base[0], lam * base[1], mu};
                // undo the shear
                auto [sa, sb] = shear_pair(s);
                PlanePoint q(c[0] + CycNum(sa) * c[2], c[1] + CycNum(sb) * c[2], c[2]);
                if (std::find(out.points.begin(), out.points.end(), q) == out.points.end()) out.points.push_back(q);
            }
        }
        return out;
    }
    raise("Internal", "no admissible shear found");
}

PlaneCurve implicitize_conic(const std::array<BinaryForm, 3>& q) {
    for (const auto& f : q)
        if (f.degree() != 2) raise("NotAConic", "conic parameterization needs quadratic forms");
    static const std::array<std::array<int, 2>, 6> mono = {{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    Matrix m(5, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        BinaryForm p = q[mono[j][0]] * q[mono[j][1]];
        for (std::size_t i = 0; i < 5; ++i) m(i, j) = p[i];
    }
    Matrix ker = kernel(m);
    if (ker.rows() != 1)
        raise("NotAConic", "solution space has dimension " + std::to_string(ker.rows()),
              {{"dimension", std::to_string(ker.rows())}});
    const auto& v = PlaneCurve::variables();
    MultiPoly f(v);
    for (std::size_t j = 0; j < 6; ++j) {
        MultiPoly::Exponent e(3, 0);
        ++e[mono[j][0]];
        ++e[mono[j][1]];
        f.add_term(e, ker(0, j));
    }
    return PlaneCurve(tidy(f));
}

}  // namespace fano3lab
