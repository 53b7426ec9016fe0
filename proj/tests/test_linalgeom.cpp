#include "pfaffian_instances.hpp"
#include "support.hpp"

#include <fano3lab/linalgeom.hpp>

using namespace fano3lab;
using namespace testing;

namespace {

std::vector<CycNum> wedge(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    std::vector<CycNum> p;
    for (const auto& ij : kPairs) p.push_back(a[ij[0]] * b[ij[1]] - a[ij[1]] * b[ij[0]]);
    return p;
}

CycNum det3(const std::vector<CycNum>& a, const std::vector<CycNum>& b, const std::vector<CycNum>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Lines of W4 with small coordinates whose Pluecker point lies in the conic's plane,
// as points of the plane (normalized).
std::vector<std::vector<CycNum>> sampled_conic_points(const PfaffianConic& c) {
    Matrix ann = kernel(c.plane);
    std::vector<std::vector<CycNum>> grid;
    for (long k = 0; k < 81; ++k) {
        std::vector<CycNum> v;
        for (long t = k, i = 0; i < 4; ++i, t /= 3) v.push_back(t % 3 - 1);
        grid.push_back(v);
    }
    std::vector<std::vector<CycNum>> hits;
    Matrix pt = c.plane.transpose();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            auto p = wedge(grid[i], grid[j]);
            if (std::all_of(p.begin(), p.end(), [](const CycNum& x) { return x.is_zero(); })) continue;
            bool inside = true;
            for (std::size_t r = 0; r < ann.rows() && inside; ++r) {
                CycNum s = 0;
                for (std::size_t k = 0; k < 6; ++k) s += ann(r, k) * p[k];
                inside = s.is_zero();
            }
            if (!inside) continue;
            std::vector<CycNum> u;
            REQUIRE(solve(pt, p, u));
            CHECK(c.quadric.eval(u).is_zero());
            auto lead = std::find_if(u.begin(), u.end(), [](const CycNum& x) { return !x.is_zero(); });
            CycNum inv = lead->inverse();
            for (auto& x : u) x = x * inv;
            if (std::find(hits.begin(), hits.end(), u) == hits.end()) hits.push_back(u);
        }
    return hits;
}

bool collinear(const std::vector<std::vector<CycNum>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (!det3(pts[i], pts[j], pts[k]).is_zero()) return false;
    return true;
}

bool no_three_collinear(const std::vector<std::vector<CycNum>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (det3(pts[i], pts[j], pts[k]).is_zero()) return false;
    return true;
}

bool on_two_lines(const std::vector<std::vector<CycNum>>& pts) {
    if (pts.size() <= 2) return true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<std::vector<CycNum>> rest;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (!det3(pts[i], pts[j], pts[k]).is_zero()) rest.push_back(pts[k]);
            if (collinear(rest)) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("pfaffian examples") {
    Matrix j3(6, 6);
    for (std::size_t k = 0; k < 6; k += 2) {
        j3(k, k + 1) = 1;
        j3(k + 1, k) = -1;
    }
    CHECK(pfaffian(j3) == CycNum(1));
    Matrix m = rand_skew();
    for (std::size_t k = 0; k < 6; ++k) {
        m(0, k) = m(k, 0) = 0;
        m(1, k) = m(k, 1) = 0;
    }
    CHECK(pfaffian(m).is_zero());
    Matrix j1(2, 2);
    j1(0, 1) = 5;
    j1(1, 0) = -5;
    CHECK(pfaffian(j1) == CycNum(5));
    CHECK_KIND(pfaffian(Matrix::identity(6)), "OutOfRange");
    CHECK_KIND(pfaffian(Matrix(3, 3)), "OutOfRange");
}

TEST_CASE("pfaffian squared is the determinant") {
    for (int k = 0; k < 100; ++k) {
        Matrix m = rand_skew(6, 4);
        CycNum p = pfaffian(m);
        CHECK(p * p == det(m));
    }
    for (int k = 0; k < 20; ++k) {
        Matrix m = rand_skew(4, 4);
        CHECK(pfaffian(m) == m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2));
    }
}

TEST_CASE("pfaffian transformation law") {
    for (int k = 0; k < 100; ++k) {
        Matrix m = rand_skew(6, 3);
        Matrix g = rand_invertible(6);
        CHECK(pfaffian(congruent(g, m)) == det(g) * pfaffian(m));
    }
}

TEST_CASE("line checks on the Pfaffian cubic") {
    std::vector<CycNum> zero(6, CycNum(0));
    Pencil block = {with_block(zero), with_block(zero)};
    std::vector<Matrix> a = {block[0], block[1], rand_skew(), rand_skew(), rand_skew()};
    CHECK(pencil_is_line_on_Y(block, a).on_pfaffian);
    CHECK(pencil_is_line_on_Y(block, a).cubic.is_zero());

    Matrix j3(6, 6);
    for (std::size_t k = 0; k < 6; k += 2) {
        j3(k, k + 1) = 1;
        j3(k + 1, k) = -1;
    }
    Pencil bad = {j3, block[0]};
    std::vector<Matrix> abad = {j3, block[0], rand_skew()};
    auto chk = pencil_is_line_on_Y(bad, abad);
    CHECK_FALSE(chk.on_pfaffian);
    CHECK(chk.cubic[0] == CycNum(1));
    Matrix outside(6, 6);
    outside(4, 5) = 1;
    outside(5, 4) = -1;
    CHECK_KIND(pencil_is_line_on_Y({block[0], outside}, a), "NotInA");
}

TEST_CASE("recovering W4") {
    std::vector<CycNum> zero(6, CycNum(0));
    Pencil block;
    for (auto& m : block) do {
            m = with_block(zero);
        } while (rank(m) != 4);
    W4Result r = recover_W4(block);
    Matrix e(4, 6);
    for (std::size_t i = 0; i < 4; ++i) e(i, i) = 1;
    CHECK(r.basis == e);
    CHECK_FALSE(r.ambiguous);
    CHECK(is_isotropic(r.basis, block[0]));

    Matrix r2(6, 6);
    r2(0, 1) = 1;
    r2(1, 0) = -1;
    CHECK_KIND(recover_W4({r2, CycNum(3) * r2}), "RankPattern");

    // a common kernel vector: every member is degenerate but the kernels span only 3 dimensions
    Pencil cone;
    for (auto& m : cone) {
        do {
            m = rand_skew();
            for (std::size_t k = 0; k < 6; ++k) m(0, k) = m(k, 0) = 0;
        } while (rank(m) != 4);
    }
    CHECK_KIND(recover_W4(cone), "NotIsotropic");
}

TEST_CASE("conic type errors") {
    Instance in = hidden_instance(3);
    std::vector<Matrix> padded = {in.a2[0], in.a2[1], in.a[2], in.a[3], in.a2[0] + in.a2[1]};
    CHECK_KIND(conic_from_line(in.a2, in.w4, padded), "WrongImageDimension");
    Matrix u = Matrix::from_rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
    Matrix v = kernel(u);
    // the plane spanned by e12, e13, e14 lies inside Gr(2, W4)
    std::vector<CycNum> zero(6, CycNum(0));
    Pencil plain = {with_block(zero), with_block(zero)};
    std::vector<Matrix> ap = {plain[0], plain[1]};
    for (std::size_t i = 0; i < 3; ++i) ap.push_back(with_block(v.row(i)));
    Matrix e(4, 6);
    for (std::size_t i = 0; i < 4; ++i) e(i, i) = 1;
    CHECK_KIND(conic_from_line(plain, e, ap), "DegenerateConic");
}

TEST_CASE("hidden W4 round trip") {
    for (int k = 0; k < 20; ++k) {
        std::size_t r = 3 - static_cast<std::size_t>(k % 3);
        Instance in = hidden_instance(r);
        INFO("instance ", k);
        auto chk = pencil_is_line_on_Y(in.a2, in.a);
        CHECK(chk.on_pfaffian);
        W4Result w = recover_W4(in.a2);
        CHECK(w.basis == in.w4);
        CHECK_FALSE(w.ambiguous);
        CHECK(recover_W4(in.a2).basis == w.basis);
        PfaffianConic c = conic_from_line(in.a2, w.basis, in.a);
        CHECK(c.rank == r);
        CHECK(c.type == (r == 3 ? ConicType::Smooth : r == 2 ? ConicType::Reducible : ConicType::NonReduced));
        CHECK(c.quadric.is_homogeneous());
        CHECK(c.quadric.total_degree() == 2);
    }
}

TEST_CASE("conic type agrees with sampled rational lines") {
    for (int k = 0; k < 9; ++k) {
        std::size_t r = 3 - static_cast<std::size_t>(k % 3);
        Instance in = hidden_instance(r, false);
        PfaffianConic c = conic_from_line(in.a2, recover_W4(in.a2).basis, in.a);
        REQUIRE(c.rank == r);
        auto pts = sampled_conic_points(c);
        if (r == 3) {
            CHECK(pts.size() >= 1);
            CHECK(no_three_collinear(pts));
        } else if (r == 2) {
            CHECK(pts.size() >= 3);
            CHECK(on_two_lines(pts));
            CHECK_FALSE(collinear(pts));
        } else {
            CHECK(pts.size() >= 2);
            CHECK(collinear(pts));
        }
    }
}

TEST_CASE("pencil discriminants") {
    const long l[6] = {1, 2, 3, 5, 7, 11};
    Matrix q1 = Matrix::identity(6), q2(6, 6);
    for (std::size_t i = 0; i < 6; ++i) q2(i, i) = l[i];
    PencilDiscriminant d = pencil_discriminant(q1, q2);
    BinaryForm expect = BinaryForm::constant(1);
    for (long v : l) expect = expect * BinaryForm::linear(1, v);
    CHECK(d.det == expect);
    CHECK(d.det.degree() == 6);
    CHECK(d.squarefree);
    REQUIRE(d.members.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(d.members[i][1] == CycNum(-1));
        bool found = false;
        for (long v : l) found = found || d.members[i][0] == CycNum(v);
        CHECK(found);
        CHECK(det(d.members[i][0] * q1 + d.members[i][1] * q2).is_zero());
    }
    CHECK(d.remainder.degree() == 0);

    Matrix s(6, 6);
    for (std::size_t i = 0; i < 6; ++i) s(i, i) = static_cast<long>(i + 1);
    s(0, 1) = s(1, 0) = 1;
    PencilDiscriminant same = pencil_discriminant(s, s);
    CHECK(same.det == det(s) * BinaryForm::linear(1, 1).pow(6));
    CHECK_FALSE(same.squarefree);

    PencilDiscriminant z = pencil_discriminant(Matrix(6, 6), s);
    CHECK(z.det == BinaryForm::monomial(6, 6, det(s)));

    Matrix sing = Matrix::identity(6);
    sing(5, 5) = 0;
    CHECK_KIND(pencil_discriminant(sing, sing), "IdenticallyZero");
    Matrix nonsym = Matrix::identity(6);
    nonsym(0, 1) = 1;
    CHECK_KIND(pencil_discriminant(nonsym, q1), "OutOfRange");
}

TEST_CASE("discriminants of random pencils have degree six") {
    for (int k = 0; k < 100; ++k) {
        Matrix a(6, 6), b(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i; j < 6; ++j) {
                a(i, j) = a(j, i) = rand_int(-2, 2);
                b(i, j) = b(j, i) = rand_int(-2, 2);
            }
        try {
            PencilDiscriminant d = pencil_discriminant(a, b);
            CHECK(d.det.degree() == 6);
            CHECK(d.det.eval(1, 0) == det(a));
            CHECK(d.det.eval(0, 1) == det(b));
            for (const auto& m : d.members) CHECK(det(m[0] * a + m[1] * b).is_zero());
        } catch (const Error& e) {
            CHECK(e.kind() == "IdenticallyZero");
        }
    }
}
