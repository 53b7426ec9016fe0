#include <fano3lab/errors.hpp>
#include <fano3lab/linalgeom.hpp>

namespace fano3lab {

namespace {

CycNum pf_rec(const Matrix& m, std::vector<std::size_t>& idx) {
    if (idx.empty()) return 1;
    std::size_t first = idx[0];
    CycNum acc(0);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const CycNum& e = m(first, idx[k]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        CycNum sub = pf_rec(m, rest);
        acc += (k % 2 == 1 ? e : -e) * sub;
    }
    return acc;
}

Matrix combine(const Pencil& p, const CycNum& s, const CycNum& t) { return s * p[0] + t * p[1]; }

std::vector<CycNum> flatten(const Matrix& m) {
    std::vector<CycNum> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

CycNum bilinear(const std::vector<CycNum>& u, const Matrix& m, const std::vector<CycNum>& v) {
    CycNum acc(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        CycNum row(0);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) row += m(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    std::vector<std::vector<CycNum>> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
    return Matrix::from_rows(rows);
}

constexpr long kPencilSamples = 10;

}  // namespace

void require_skew(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) raise("OutOfRange", "skew form must be square of even size");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == -m(j, i))) raise("OutOfRange", "matrix is not antisymmetric");
}

CycNum pfaffian(const Matrix& m) {
    require_skew(m);
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pf_rec(m, idx);
}

PfaffianLineCheck pencil_is_line_on_Y(const Pencil& a2, const std::vector<Matrix>& a) {
    for (const auto& m : a2) require_skew(m);
    std::vector<std::vector<CycNum>> rows;
    for (const auto& m : a) {
        require_skew(m);
        rows.push_back(flatten(m));
    }
    std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(rows));
    for (const auto& m : a2) rows.push_back(flatten(m));
    if (rank(Matrix::from_rows(rows)) != r) raise("NotInA", "pencil is not contained in A");
    // Pf(lambda a1 + mu a2) at lambda = 1 determines the cubic
    std::vector<CycNum> xs, ys;
    for (long k = 0; k <= 3; ++k) {
        xs.push_back(CycNum(k));
        ys.push_back(pfaffian(combine(a2, 1, k)));
    }
    UniPoly p = interpolate(xs, ys);
    std::vector<CycNum> c(4, CycNum(0));
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) c[j] = p.coeffs()[j];
    PfaffianLineCheck out;
    out.cubic = BinaryForm(c);
    out.on_pfaffian = out.cubic.is_zero();
    return out;
}

bool is_isotropic(const Matrix& w, const Matrix& m) {
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = i + 1; j < w.rows(); ++j)
            if (!bilinear(w.row(i), m, w.row(j)).is_zero()) return false;
    return true;
}

W4Result recover_W4(const Pencil& a2) {
    for (const auto& m : a2) require_skew(m);
    std::vector<std::pair<long, Matrix>> kernels;
    for (long t = 0; t < kPencilSamples; ++t) {
        Matrix m = combine(a2, 1, t);
        if (rank(m) == 4) kernels.emplace_back(t, kernel(m));
    }
    if (kernels.size() < 2)
        raise("RankPattern", "fewer than two rank-4 members among the first pencil samples",
              {{"rank4_members", std::to_string(kernels.size())}});
    std::vector<W4Result> found;
    for (std::size_t i = 0; i < kernels.size(); ++i)
        for (std::size_t j = i + 1; j < kernels.size(); ++j) {
            Matrix w = row_space(stack(kernels[i].second, kernels[j].second));
            if (w.rows() != 4) continue;
            if (!is_isotropic(w, a2[0]) || !is_isotropic(w, a2[1])) continue;
            bool seen = false;
            for (const auto& f : found) seen = seen || f.basis == w;
            if (!seen) found.push_back({w, {kernels[i].first, kernels[j].first}, false});
        }
    if (found.empty()) raise("NotIsotropic", "no isotropic four-dimensional kernel span");
    W4Result out = found.front();
    out.ambiguous = found.size() > 1;
    return out;
}

const char* to_string(ConicType t) {
    switch (t) {
        case ConicType::Smooth: return "smooth";
        case ConicType::Reducible: return "reducible";
        case ConicType::NonReduced: return "non-reduced";
    }
    return "?";
}

std::vector<CycNum> restrict_to(const Matrix& m, const Matrix& w) {
    std::vector<CycNum> out;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = i + 1; j < w.rows(); ++j) out.push_back(bilinear(w.row(i), m, w.row(j)));
    return out;
}

PfaffianConic conic_from_line(const Pencil& a2, const Matrix& w4, const std::vector<Matrix>& a) {
    if (w4.rows() != 4 || w4.cols() != 6 || rank(w4) != 4) raise("OutOfRange", "W4 must be a 4 x 6 basis");
    for (const auto& m : a2)
        if (!is_isotropic(w4, m)) raise("NotIsotropic", "W4 is not isotropic for the pencil");
    std::vector<std::vector<CycNum>> rows;
    for (const auto& m : a) {
        require_skew(m);
        rows.push_back(restrict_to(m, w4));
    }
    Matrix r = Matrix::from_rows(rows);
    std::size_t img = rank(r);
    if (img != 3)
        raise("WrongImageDimension", "restriction to W4 has image of dimension " + std::to_string(img),
              {{"dimension", std::to_string(img)}});
    PfaffianConic out;
    out.plane = kernel(r);
    // Pluecker quadric p12 p34 - p13 p24 + p14 p23 in the order 12 13 14 23 24 34
    static const int q[3][3] = {{0, 5, 1}, {1, 4, -1}, {2, 3, 1}};
    const std::vector<std::string> us = {"u0", "u1", "u2"};
    std::vector<MultiPoly> p(6, MultiPoly(us));
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t i = 0; i < 3; ++i) p[k] = p[k] + out.plane(i, k) * MultiPoly::variable(us, i);
    MultiPoly quad(us);
    for (const auto& t : q) quad = quad + CycNum(t[2]) * (p[t[0]] * p[t[1]]);
    out.quadric = quad;
    Matrix sym(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            MultiPoly::Exponent e(3, 0);
            ++e[i];
            ++e[j];
            CycNum c = quad.coeff(e);
            sym(i, j) = i == j ? c : c / CycNum(2);
        }
    out.rank = rank(sym);
    if (out.rank == 0) raise("DegenerateConic", "the plane lies inside Gr(2, W4)");
    out.type = out.rank == 3 ? ConicType::Smooth : out.rank == 2 ? ConicType::Reducible : ConicType::NonReduced;
    return out;
}

PencilDiscriminant pencil_discriminant(const Matrix& q1, const Matrix& q2, unsigned conductor) {
    if (q1.rows() != q1.cols() || q2.rows() != q1.rows() || q2.cols() != q1.cols())
        raise("OutOfRange", "pencil needs two square matrices of one size");
    if (!(q1 == q1.transpose()) || !(q2 == q2.transpose())) raise("OutOfRange", "quadrics must be symmetric");
    std::size_t n = q1.rows();
    std::vector<CycNum> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        CycNum kk(static_cast<long>(k));
        xs.push_back(kk);
        ys.push_back(det(q1 + kk * q2));
    }
    UniPoly p = interpolate(xs, ys);
    if (p.is_zero()) raise("IdenticallyZero", "every member of the pencil is degenerate");
    std::vector<CycNum> c(n + 1, CycNum(0));
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) c[j] = p.coeffs()[j];
    PencilDiscriminant out;
    out.det = BinaryForm(c);
    auto lf = factor_linear(out.det, conductor);
    out.factors = lf.factors;
    out.remainder = lf.remainder;
    for (const auto& f : lf.factors) out.members.push_back({f.form[1], -f.form[0]});
    // squarefree iff the two partial derivatives have no common root
    std::vector<CycNum> dx(n), dy(n);
    for (std::size_t k = 0; k < n; ++k) {
        dx[k] = CycNum(static_cast<long>(n - k)) * c[k];
        dy[k] = CycNum(static_cast<long>(k + 1)) * c[k + 1];
    }
    BinaryForm fx(dx), fy(dy);
    if (fx.is_zero() || fy.is_zero())
        out.squarefree = n == 1;
    else
        out.squarefree = gcd_forms(fx, fy).degree() == 0;
    return out;
}

}  // namespace fano3lab
