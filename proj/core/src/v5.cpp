#include <fano3lab/errors.hpp>
#include <fano3lab/v5.hpp>

namespace fano3lab {

BinaryForm phi6() { return BinaryForm({0, 1, 0, 0, 0, -1, 0}); }

const char* to_string(Orbit o) {
    switch (o) {
        case Orbit::Orb3: return "Orb3";
        case Orbit::Orb2: return "Orb2";
        case Orbit::Orb1: return "Orb1";
    }
    return "?";
}

namespace {

Matrix rows_of(const std::vector<BinaryForm>& forms) {
    std::vector<std::vector<CycNum>> rows;
    for (const auto& f : forms) rows.push_back(f.coeffs());
    return Matrix::from_rows(rows);
}

CycNum discriminant(const BinaryForm& q) { return q[1] * q[1] - CycNum(4) * q[0] * q[2]; }

// f with f^2 ~ q, for a quadratic of rank 1
BinaryForm square_root_factor(const BinaryForm& q) {
    if (!q[0].is_zero()) return BinaryForm::linear(1, q[1] / (CycNum(2) * q[0]));
    return BinaryForm::y();
}

BinaryForm partner(const BinaryForm& f) { return f[1].is_zero() ? BinaryForm::y() : BinaryForm::x(); }

LineOnY special_line(const BinaryForm& f) {
    LineOnY l;
    l.kind = LineKind::Special;
    l.f = f.normalized();
    l.span = {f.pow(6), f.pow(5) * partner(f)};
    l.sigma = (f * f).normalized();
    return l;
}

LineOnY ordinary_line(const BinaryForm& f, const BinaryForm& g) {
    LineOnY l;
    l.kind = LineKind::Ordinary;
    l.f = f.normalized();
    l.g = g.normalized();
    l.span = {f.pow(5) * g, f * g.pow(5)};
    l.sigma = (f * g).normalized();
    return l;
}

// Lines with sigma point q; factors when they exist, apolar span otherwise.
LineOnY make_line(const BinaryForm& q, unsigned conductor) {
    if (discriminant(q).is_zero()) return special_line(square_root_factor(q));
    auto lf = factor_linear(q, conductor);
    if (lf.factors.size() == 2) return ordinary_line(lf.factors[1].form, lf.factors[0].form);
    return line_from_sigma_apolar(q);
}

void require_quadratic(const BinaryForm& q) {
    if (q.degree() != 2) raise("OutOfRange", "sigma point must be a quadratic form");
    if (q.is_zero()) raise("OutOfRange", "sigma point is the zero form");
}

}  // namespace

LineOnY line_from_sigma_apolar(const BinaryForm& q) {
    require_quadratic(q);
    if (discriminant(q).is_zero()) return special_line(square_root_factor(q));
    // q^perp = c2 dx^2 - c1 dx dy + c0 dy^2, from M_4 to M_2
    Matrix d(3, 5);
    for (unsigned k = 0; k <= 4; ++k) {
        long a = 4 - k, b = k;
        if (a >= 2) d(k, k) += q[2] * CycNum(a * (a - 1));
        if (a >= 1 && b >= 1) d(k - 1, k) -= q[1] * CycNum(a * b);
        if (b >= 2) d(k - 2, k) += q[0] * CycNum(b * (b - 1));
    }
    Matrix ker = kernel(d);
    if (ker.rows() != 2) raise("Internal", "apolar kernel is not two-dimensional");
    LineOnY l;
    l.kind = LineKind::Ordinary;
    Matrix sp = row_space(rows_of({q * BinaryForm(ker.row(0)), q * BinaryForm(ker.row(1))}));
    l.span = {BinaryForm(sp.row(0)), BinaryForm(sp.row(1))};
    l.sigma = q.normalized();
    return l;
}

LineOnY line_from_sigma(const BinaryForm& q, unsigned conductor) {
    require_quadratic(q);
    if (discriminant(q).is_zero()) return special_line(square_root_factor(q));
    auto lf = factor_linear(q, conductor);
    if (lf.factors.size() != 2)
        raise("RootsNotInField", "quadratic " + q.to_string() + " does not split at conductor " +
                                     std::to_string(conductor));
    return ordinary_line(lf.factors[1].form, lf.factors[0].form);
}

std::optional<PointOnY> classify_point(const BinaryForm& phi, unsigned conductor) {
    if (phi.degree() != 6) raise("OutOfRange", "points of Y are sextic forms");
    if (phi.is_zero()) raise("OutOfRange", "zero form is not a point");
    auto lf = factor_linear(phi, conductor);
    if (lf.remainder.degree() > 0)
        raise("RootsNotInField", "form does not split at conductor " + std::to_string(conductor),
              {{"remainder", lf.remainder.to_string()}});
    const auto& fs = lf.factors;
    PointOnY p;
    p.form = phi;
    if (fs.size() == 1) {
        p.orbit = Orbit::Orb1;
        p.f = fs[0].form;
        p.g = BinaryForm::zero(1);
        return p;
    }
    if (fs.size() == 2 && (fs[0].multiplicity == 5 || fs[1].multiplicity == 5)) {
        bool first = fs[0].multiplicity == 5;
        p.orbit = Orbit::Orb2;
        p.f = fs[first ? 0 : 1].form;
        p.g = fs[first ? 1 : 0].form;
        return p;
    }
    if (fs.size() != 6) return std::nullopt;

    for (std::size_t j = 1; j < 6; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const BinaryForm& f = fs[j].form;
            const BinaryForm& g = fs[i].form;
            BinaryForm q = divide_exact(phi, f * g);
            Matrix m = rows_of({f.pow(4), g.pow(4)}).transpose();
            std::vector<CycNum> sol;
            if (!solve(m, q.coeffs(), sol)) continue;
            if (sol[0].is_zero() || sol[1].is_zero()) continue;
            p.orbit = Orbit::Orb3;
            p.f = f;
            p.g = g;
            p.s1 = sol[0];
            p.s2 = -sol[1];
            p.normalized = false;
            // absorb a fourth root of s2/s1 into g when the field has one
            CycNum r = p.s2 / p.s1;
            if (r.is_one()) {
                p.s1 = p.s2 = 1;
                p.normalized = true;
                return p;
            }
            auto roots = roots_in_field(UniPoly({-r, 0, 0, 0, 1}), conductor);
            if (!roots.empty()) {
                p.g = roots.front().root * g;
                p.s1 = p.s2 = 1;
                p.normalized = true;
            }
            return p;
        }
    return std::nullopt;
}

std::vector<LineOnY> lines_through_point(const PointOnY& p, unsigned conductor) {
    std::vector<LineOnY> out;
    switch (p.orbit) {
        case Orbit::Orb1:
            out.push_back(special_line(p.f));
            break;
        case Orbit::Orb2:
            out.push_back(ordinary_line(p.f, p.g));
            out.push_back(special_line(p.f));
            break;
        case Orbit::Orb3: {
            const BinaryForm& f = p.f;
            const BinaryForm& g = p.g;
            out.push_back(ordinary_line(f, g));
            CycNum gamma = 1;
            if (!p.normalized) {
                auto roots = roots_in_field(UniPoly({-(p.s2 / p.s1), 0, 1}), conductor);
                if (roots.empty())
                    raise("RootsNotInField", "s2/s1 has no square root at conductor " + std::to_string(conductor));
                gamma = roots.front().root;
            }
            out.push_back(make_line(f * f - gamma * (g * g), conductor));
            out.push_back(make_line(f * f + gamma * (g * g), conductor));
            break;
        }
    }
    for (const auto& l : out)
        if (!span_contains(l, p.form)) raise("Internal", "line " + l.sigma.to_string() + " misses the point");
    return out;
}

bool span_contains(const LineOnY& l, const BinaryForm& phi) {
    return rank(rows_of({l.span[0], l.span[1], phi})) == 2;
}

LineIntersection line_intersect(const LineOnY& a, const LineOnY& b) {
    Matrix m = rows_of({a.span[0], a.span[1], b.span[0], b.span[1]});
    std::size_t r = rank(m);
    LineIntersection out;
    if (r == 4) return out;
    if (r <= 2) {
        out.kind = IntersectKind::Equal;
        return out;
    }
    out.kind = IntersectKind::Point;
    // a1 u1 + a2 u2 - b1 v1 - b2 v2 = 0
    Matrix ker = kernel(m.transpose());
    auto w = ker.row(0);
    out.point = (w[0] * a.span[0] + w[1] * a.span[1]).normalized();
    return out;
}

bool is_special(const LineOnY& l) { return l.kind == LineKind::Special; }

bool on_tangential_scroll(const PointOnY& p) { return p.orbit != Orbit::Orb3; }

LineOnY act(const GroupElt2& g, const LineOnY& l) {
    LineOnY r;
    r.kind = l.kind;
    if (l.f) r.f = act(g, *l.f).normalized();
    if (l.g) r.g = act(g, *l.g).normalized();
    r.span = {act(g, l.span[0]), act(g, l.span[1])};
    r.sigma = act(g, l.sigma).normalized();
    return r;
}

}  // namespace fano3lab
