#include "support.hpp"

#include <fano3lab/fanodb.hpp>

#include <json.hpp>

#include <set>

using namespace fano3lab;
using namespace testing;

TEST_CASE("family lookup") {
    const FanoFamily& v22 = lookup_family(1, 12);
    CHECK(v22.degree == 22);
    CHECK(v22.h12 == 0);
    CHECK(v22.m0 == 1);
    const FanoFamily& y5 = lookup_family(2, 5);
    CHECK(y5.h12 == 0);
    CHECK(y5.m0 == 1);
    CHECK(y5.description.find("Gr(2,5)") != std::string::npos);
    CHECK_KIND(lookup_family(1, 11), "NoSuchFamily");
    CHECK_KIND(lookup_family(1, 13), "NoSuchFamily");
    CHECK_KIND(lookup_family(5, 1), "NoSuchFamily");
    CHECK(lookup_family(2, 1).m0 == 3);
    CHECK(lookup_family(1, 2).m0 == 3);
    CHECK(lookup_family(1, 2).h12 == 52);
    const FanoFamily& g3 = lookup_family(1, 3);
    REQUIRE(g3.variants.size() == 2);
    CHECK(g3.variants[0].m0 == 1);
    CHECK(g3.variants[1].m0 == 2);
    CHECK(lookup_family(1, 6).variants.size() == 2);
}

TEST_CASE("table consistency") {
    const auto& fams = fano_families();
    CHECK(fams.size() == 17);
    std::set<std::pair<int, int>> keys;
    for (const auto& f : fams) {
        CHECK(keys.insert({f.index, f.key()}).second);
        if (f.index == 1) {
            REQUIRE(f.genus.has_value());
            CHECK(f.degree == 2 * *f.genus - 2);
        } else {
            CHECK_FALSE(f.genus.has_value());
        }
        const FanoFamily& back = lookup_family(f.index, f.key());
        CHECK(back.degree == f.degree);
        CHECK(back.description == f.description);
    }
    const std::vector<int> h12 = {52, 30, 20, 14, 10, 7, 5, 3, 2, 0};
    const std::vector<int> genera = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    for (std::size_t i = 0; i < genera.size(); ++i) CHECK(lookup_family(1, genera[i]).h12 == h12[i]);
    CHECK(lookup_family(2, 3).h12 == 5);
    CHECK(lookup_family(2, 4).h12 == 2);
    CHECK(lookup_family(2, 2).h12 == 10);
    CHECK(lookup_family(2, 1).h12 == 21);
}

TEST_CASE("double covers") {
    const auto& dc = double_covers();
    REQUIRE(dc.size() == 4);
    CHECK(dc[0].index == 2);
    CHECK(dc[0].key == 1);
    CHECK(dc[0].target == "P(1,1,1,2)");
    CHECK(dc[0].branch_multiple == 6);
    CHECK(dc[3].target == "Q");
    CHECK(dc[3].branch_multiple == 4);
}

TEST_CASE("embedded database") {
    auto j = nlohmann::json::parse(fanodb_json());
    CHECK(j.at("version") == 1);
    CHECK(j.at("families").size() == fano_families().size());
}

TEST_CASE("genus from the anticanonical degree") {
    CHECK(genus_from_K3(-22).genus == 12);
    CHECK(genus_from_K3(-22).anticanonical_dim == 13);
    CHECK(genus_from_K3(-4).genus == 3);
    CHECK(genus_from_K3(-2).genus == 2);
    CHECK_KIND(genus_from_K3(-3), "NotEven");
    CHECK_KIND(genus_from_K3(0), "OutOfRange");
    CHECK_KIND(genus_from_K3(4), "OutOfRange");
    for (const auto& f : fano_families())
        if (f.genus) CHECK(genus_from_K3(-f.degree).genus == *f.genus);
}

TEST_CASE("index two partners") {
    CHECK(index2_partner(12).degree == 5);
    CHECK(index2_partner(12).hilbert.description == "P^2");
    CHECK(index2_partner(10).degree == 4);
    CHECK(index2_partner(10).hilbert.type == "abelian");
    PartnerInfo p8 = index2_partner(8);
    CHECK(p8.degree == 3);
    CHECK(p8.hilbert.type == "general type");
    CHECK(p8.hilbert.K2 == 45);
    CHECK_KIND(index2_partner(9), "OutOfCorrespondence");
    CHECK_KIND(index2_partner(6), "OutOfCorrespondence");
    CHECK_KIND(index2_partner(14), "OutOfCorrespondence");
}

TEST_CASE("Hilbert scheme verdicts") {
    HilbertVerdict c3 = hilbert_verdict(2, 3);
    CHECK(c3.scheme == "lines");
    CHECK(c3.type == "general type");
    CHECK(c3.irregularity == 5);
    CHECK(c3.geometric_genus == 10);
    CHECK(c3.K2 == 45);
    HilbertVerdict g9 = hilbert_verdict(1, 9);
    CHECK(g9.scheme == "conics");
    CHECK(g9.type == "ruled");
    CHECK(g9.description.find("genus 3") != std::string::npos);
    CHECK(g9.description.find("simple rank 2") != std::string::npos);
    CHECK(hilbert_verdict(1, 7).type == "symmetric square");
    CHECK(hilbert_verdict(1, 8).K2 == 45);
    CHECK(hilbert_verdict(1, 12).description == "P^2");
    try {
        hilbert_verdict(1, 6);
        FAIL("expected NotCovered");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotCovered");
        CHECK(e.details().at("caveat") == "may be singular and even reducible");
    }
    CHECK_KIND(hilbert_verdict(2, 2), "NotCovered");
    CHECK_KIND(hilbert_verdict(1, 11), "NoSuchFamily");
}

TEST_CASE("automorphism verdicts") {
    AutVerdict y5 = aut_verdict(2, 5);
    CHECK_FALSE(y5.finite);
    CHECK(y5.groups == std::vector<std::string>{"PGL2"});
    CHECK(aut_verdict(4, 1).groups == std::vector<std::string>{"PGL4"});
    CHECK(aut_verdict(3, 2).groups == std::vector<std::string>{"PSO5"});
    AutVerdict v22 = aut_verdict(1, 12);
    CHECK(v22.finite);
    REQUIRE(v22.special_members.size() == 3);
    CHECK(v22.special_members[0].group == "PGL2");
    CHECK(v22.special_members[1].group == "Ga x| mu4");
    CHECK(v22.special_members[2].group == "Gm x| mu2");
    AutVerdict g10 = aut_verdict(1, 10);
    CHECK(g10.finite);
    CHECK(g10.h12 == 2);
    int infinite = 0;
    for (const auto& f : fano_families()) {
        AutVerdict v = aut_verdict(f.index, f.key());
        if (!v.finite) {
            ++infinite;
            CHECK(v.h12 == 0);
        }
        if (!v.special_members.empty()) CHECK(v.h12 == 0);
    }
    CHECK(infinite == 3);
}

TEST_CASE("normal bundle Euler characteristic") {
    CHECK(chi_normal_bundle(1, CurveKind::Line, 0).chi == 1);
    CHECK(chi_normal_bundle(1, CurveKind::ReducibleConic, 0).chi == 2);
    CHECK(chi_normal_bundle(1, CurveKind::NonReducedConic, 0).chi == 2);
    CHECK_FALSE(chi_normal_bundle(1, CurveKind::NonReducedConic, 0).h0_lower.has_value());
    CHECK(chi_normal_bundle(1, CurveKind::ReducibleConic, 3).derivation == "(1 + 1) + (1 + 1) - 2 = 2");
    CHECK(chi_normal_bundle(1, CurveKind::NonReducedConic, 3).derivation == "1 - 2 + 3 = 2");
    for (int a = 0; a <= 5; ++a) {
        ChiResult l1 = chi_normal_bundle(1, CurveKind::Line, a);
        CHECK(l1.chi == 1);
        CHECK(l1.h0_lower == a + 1);
        CHECK(l1.splitting == std::array<int, 2>{a, -1 - a});
        CHECK(chi_normal_bundle(1, CurveKind::SmoothConic, a).chi == 2);
        CHECK(chi_normal_bundle(2, CurveKind::Line, a).chi == 2);
        CHECK(chi_normal_bundle(2, CurveKind::SmoothConic, a).chi == 4);
        CHECK(chi_normal_bundle(1, CurveKind::ReducibleConic, a).chi == 2);
        CHECK(chi_normal_bundle(1, CurveKind::NonReducedConic, a).chi == 2);
    }
    CHECK_KIND(chi_normal_bundle(3, CurveKind::Line, 0), "UnsupportedCombination");
    CHECK_KIND(chi_normal_bundle(2, CurveKind::ReducibleConic, 0), "UnsupportedCombination");
    CHECK_KIND(chi_normal_bundle(1, CurveKind::Line, -1), "OutOfRange");
    CHECK(parse_curve_kind("non-reduced-conic") == CurveKind::NonReducedConic);
    CHECK_KIND(parse_curve_kind("cubic"), "ParseError");
}

TEST_CASE("Mukai numerology") {
    MukaiRecord m10 = mukai_numerology(10);
    CHECK(m10.rank == 2);
    CHECK(m10.c2 == 6);
    CHECK(m10.h0 == 7);
    CHECK(m10.grassmannian == std::array<int, 2>{2, 7});
    MukaiRecord m8 = mukai_numerology(8);
    CHECK(m8.grassmannian == std::array<int, 2>{2, 6});
    CHECK(m8.note.find("codimension 5") != std::string::npos);
    CHECK(mukai_numerology(6).discriminant == -16);
    CHECK(mukai_numerology(12).discriminant == -64);
    CHECK_KIND(mukai_numerology(7), "OutOfRange");
    CHECK_KIND(mukai_numerology(4), "OutOfRange");
}

TEST_CASE("Fermat quartic cones") {
    FermatConeReport r = fermat_cones(40);
    CHECK(r.cones.size() == 40);
    CHECK(r.all_verified);
    CHECK(r.aut_order == 30720);
    std::set<std::pair<int, int>> pairs;
    for (const auto& c : r.cones) {
        CHECK(c.i < c.j);
        pairs.insert({c.i, c.j});
        CHECK(c.omega.pow(4) == CycNum(-1));
        CHECK(c.vertex_on_x);
        CHECK(c.cone_identity);
        CycNum f = 0;
        for (const auto& v : c.vertex) f = f + v.pow(4);
        CHECK(f.is_zero());
        CHECK(c.vertex[c.i] == CycNum(1));
        CHECK(c.vertex[c.j] == c.omega);
    }
    CHECK(pairs.size() == 10);
    CHECK(fermat_cones(8).cones.size() == 40);
    CHECK_KIND(fermat_cones(20), "ConductorTooSmall");
    CHECK_KIND(fermat_cones(4), "ConductorTooSmall");
    CycNum z8 = CycNum::zeta(8);
    CHECK(CycNum(1) + z8.pow(4) == CycNum(0));
}
