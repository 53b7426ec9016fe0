#include <fano3lab/errors.hpp>
#include <fano3lab/fanodb.hpp>
#include <fano3lab/polynomial.hpp>

#include <json.hpp>

#include <algorithm>

namespace fano3lab {

namespace detail {
extern const char* const kFanoDbJson;
}

namespace {

using nlohmann::json;

struct Db {
    std::vector<FanoFamily> families;
    std::vector<DoubleCoverDatum> covers;
    json raw;
};

const Db& db() {
    static const Db d = [] {
        Db out;
        out.raw = json::parse(detail::kFanoDbJson);
        for (const auto& f : out.raw.at("families")) {
            FanoFamily fam;
            fam.index = f.at("index");
            fam.degree = f.at("degree");
            fam.h12 = f.at("h12");
            if (f.contains("genus")) fam.genus = f.at("genus").get<int>();
            if (f.contains("variants")) {
                for (const auto& v : f.at("variants"))
                    fam.variants.push_back({v.at("tag"), v.at("m0"), v.at("description")});
                fam.m0 = fam.variants.front().m0;
                fam.description = fam.variants.front().description;
            } else {
                fam.m0 = f.at("m0");
                fam.description = f.at("description");
            }
            out.families.push_back(fam);
        }
        for (const auto& c : out.raw.at("double_covers"))
            out.covers.push_back({c.at("index"), c.at("key"), c.at("target"), c.at("branch")});
        return out;
    }();
    return d;
}

bool matches(const json& row, int index, int key) { return row.at("index") == index && row.at("key") == key; }

}  // namespace

const char* fanodb_json() { return detail::kFanoDbJson; }
const std::vector<FanoFamily>& fano_families() { return db().families; }
const std::vector<DoubleCoverDatum>& double_covers() { return db().covers; }

const FanoFamily& lookup_family(int index, int key) {
    for (const auto& f : fano_families())
        if (f.index == index && f.key() == key) return f;
    raise("NoSuchFamily",
          "no family with index " + std::to_string(index) + (index == 1 ? " and genus " : " and degree ") +
              std::to_string(key),
          {{"index", std::to_string(index)}, {"key", std::to_string(key)}});
}

GenusInfo genus_from_K3(long k3) {
    if (k3 % 2 != 0) raise("NotEven", "-K^3 must be even", {{"K3", std::to_string(k3)}});
    if (k3 > -2) raise("OutOfRange", "-K^3 must be at least 2", {{"K3", std::to_string(k3)}});
    int g = static_cast<int>(-k3 / 2 + 1);
    return {g, g + 1};
}

HilbertVerdict hilbert_verdict(int index, int key) {
    lookup_family(index, key);
    for (const auto& h : db().raw.at("hilbert"))
        if (matches(h, index, key)) {
            HilbertVerdict v;
            v.scheme = h.at("scheme");
            v.type = h.at("type");
            v.description = h.at("description");
            if (h.contains("irregularity")) v.irregularity = h.at("irregularity").get<int>();
            if (h.contains("geometric_genus")) v.geometric_genus = h.at("geometric_genus").get<int>();
            if (h.contains("K2")) v.K2 = h.at("K2").get<int>();
            return v;
        }
    std::string caveat = "outside the range of the explicit description";
    for (const auto& c : db().raw.at("hilbert_not_covered"))
        if (c.at("index") == index && key <= c.at("max_key").get<int>()) caveat = c.at("caveat");
    raise("NotCovered", "Hilbert scheme not covered: " + caveat,
          {{"index", std::to_string(index)}, {"key", std::to_string(key)}, {"caveat", caveat}});
}

PartnerInfo index2_partner(int g) {
    if (g != 8 && g != 10 && g != 12)
        raise("OutOfCorrespondence", "genus must be 8, 10 or 12", {{"genus", std::to_string(g)}});
    int d = g / 2 - 1;
    return {d, hilbert_verdict(2, d)};
}

AutVerdict aut_verdict(int index, int key) {
    const FanoFamily& fam = lookup_family(index, key);
    AutVerdict v;
    v.h12 = fam.h12;
    for (const auto& r : db().raw.at("infinite_aut"))
        if (matches(r, index, key)) {
            v.finite = false;
            v.groups.push_back(r.at("group"));
        }
    for (const auto& r : db().raw.at("special_members"))
        if (matches(r, index, key)) v.special_members.push_back({r.at("member"), r.at("group")});
    return v;
}

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::Line: return "line";
        case CurveKind::SmoothConic: return "smooth-conic";
        case CurveKind::ReducibleConic: return "reducible-conic";
        case CurveKind::NonReducedConic: return "non-reduced-conic";
    }
    return "?";
}

CurveKind parse_curve_kind(const std::string& s) {
    for (auto k : {CurveKind::Line, CurveKind::SmoothConic, CurveKind::ReducibleConic, CurveKind::NonReducedConic})
        if (s == to_string(k)) return k;
    raise("ParseError", "unknown curve kind '" + s + "'");
}

ChiResult chi_normal_bundle(int index, CurveKind kind, int a) {
    auto unsupported = [&] {
        raise("UnsupportedCombination",
              std::string("no normal bundle data for ") + to_string(kind) + " at index " + std::to_string(index),
              {{"index", std::to_string(index)}, {"kind", to_string(kind)}});
    };
    if (index != 1 && index != 2) unsupported();
    ChiResult r;
    if (kind == CurveKind::ReducibleConic || kind == CurveKind::NonReducedConic) {
        if (index != 1) unsupported();
        r.chi = 2;
        r.derivation = kind == CurveKind::ReducibleConic ? "(1 + 1) + (1 + 1) - 2 = 2" : "1 - 2 + 3 = 2";
        return r;
    }
    if (a < 0) raise("OutOfRange", "splitting parameter must be nonnegative", {{"a", std::to_string(a)}});
    std::array<int, 2> s{};
    if (kind == CurveKind::Line)
        s = index == 1 ? std::array<int, 2>{a, -1 - a} : std::array<int, 2>{a, -a};
    else
        s = index == 1 ? std::array<int, 2>{a, -a} : std::array<int, 2>{1 + a, 1 - a};
    r.splitting = s;
    r.chi = s[0] + s[1] + 2;
    r.h0_lower = std::max(0, s[0] + 1) + std::max(0, s[1] + 1);
    r.derivation = "O(" + std::to_string(s[0]) + ") + O(" + std::to_string(s[1]) + ")";
    return r;
}

MukaiRecord mukai_numerology(int g) {
    if (g < 6 || g > 12 || g % 2 != 0)
        raise("OutOfRange", "Mukai bundles need even genus between 6 and 12", {{"genus", std::to_string(g)}});
    MukaiRecord m;
    m.c2 = 1 + g / 2;
    m.h0 = 2 + g / 2;
    m.grassmannian = {2, g / 2 + 2};
    m.discriminant = -8 * (g - 4);
    switch (g) {
        case 6: m.note = "closed embedding or double cover onto a linear section of Gr(2,5)"; break;
        case 8: m.note = "transverse linear section of codimension 5"; break;
        case 10: m.note = "transverse linear section of codimension 2 of G2/P in Gr(2,7)"; break;
        case 12: m.note = "closed embedding into Gr(2,8)"; break;
    }
    return m;
}

FermatConeReport fermat_cones(unsigned conductor) {
    if (conductor % 8 != 0)
        raise("ConductorTooSmall", "fourth roots of -1 need 8 | conductor",
              {{"conductor", std::to_string(conductor)}});
    const std::vector<std::string> xs = {"x0", "x1", "x2", "x3", "x4"};
    MultiPoly fermat = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4 + x4^4", xs, conductor);
    // lambda, mu and the three free coordinates of a point of the plane
    const std::vector<std::string> vs = {"l", "m", "a", "b", "c"};
    auto var = [&](std::size_t k) { return MultiPoly::variable(vs, k); };
    FermatConeReport rep;
    rep.all_verified = true;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (long k : {1, 3, 5, 7}) {
                ConeRecord r;
                r.i = i;
                r.j = j;
                r.omega = CycNum::zeta(8, k);
                r.vertex.fill(CycNum(0));
                r.vertex[i] = 1;
                r.vertex[j] = r.omega;
                r.vertex_on_x = fermat.eval({r.vertex.begin(), r.vertex.end()}).is_zero();
                std::vector<MultiPoly> images, plane;
                std::size_t free = 2;
                for (int t = 0; t < 5; ++t) {
                    MultiPoly q = (t == i || t == j) ? MultiPoly(vs) : var(free++);
                    plane.push_back(q);
                    images.push_back(r.vertex[t] * var(0) + var(1) * q);
                }
                MultiPoly lhs = fermat.substitute(images);
                MultiPoly rhs = var(1).pow(4) * fermat.substitute(plane);
                // F(P) = 0 removes the lambda^4 term
                r.cone_identity = lhs == rhs;
                rep.all_verified = rep.all_verified && r.vertex_on_x && r.cone_identity;
                rep.cones.push_back(r);
            }
    rep.aut_order = 4L * 4 * 4 * 4 * 120;
    return rep;
}

}  // namespace fano3lab
