#include "cli.hpp"

#include "serialize.hpp"

#include <fano3lab/errors.hpp>
#include <fano3lab/fanodb.hpp>
#include <fano3lab/quintics.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <set>

namespace fano3lab::cli {

namespace {

using Values = std::map<std::string, std::vector<std::string>>;

struct Context {
    Values values;
    std::set<std::string> multi;  // options that may repeat
    unsigned conductor = kDefaultConductor;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    const std::string& get(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end() || it->second.empty()) raise("UsageError", "missing --" + k, {{"option", k}});
        return it->second.front();
    }
    std::vector<std::string> all(const std::string& k) const {
        auto it = values.find(k);
        return it == values.end() ? std::vector<std::string>{} : it->second;
    }
};

using Handler = std::function<Json(const Context&)>;

struct Verb {
    std::string name;
    std::string help;
    // (name, help, required, repeatable)
    std::vector<std::tuple<std::string, std::string, bool, bool>> options;
    Handler handler;
};

[[noreturn]] void usage(const std::string& msg) { raise("UsageError", msg); }

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        usage("--" + what + " expects an integer, got '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& what) { return static_cast<int>(parse_long(s, what)); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

BinaryForm form_arg(const Context& c, const std::string& k, int degree = -1) {
    return parse_binary_form(c.get(k), degree, c.conductor);
}

PlanePoint point_arg(const Context& c, const std::string& k) {
    auto parts = split(c.get(k), ',');
    if (parts.size() != 3) usage("--" + k + " expects three comma-separated coordinates");
    return PlanePoint(parse_scalar(parts[0], c.conductor), parse_scalar(parts[1], c.conductor),
                      parse_scalar(parts[2], c.conductor));
}

Matrix parse_matrix(const std::string& text, unsigned conductor, const std::string& what) {
    std::vector<std::vector<CycNum>> rows;
    for (const auto& r : split(text, ';')) {
        std::vector<CycNum> row;
        for (const auto& e : split(r, ',')) row.push_back(parse_scalar(e, conductor));
        if (!rows.empty() && row.size() != rows.front().size()) usage("--" + what + ": rows of unequal length");
        rows.push_back(row);
    }
    return Matrix::from_rows(rows);
}

Matrix matrix_arg(const Context& c, const std::string& k) { return parse_matrix(c.get(k), c.conductor, k); }

GroupElt2 elt_from(const std::string& text, unsigned conductor, bool det1, const std::string& what) {
    auto parts = split(text, ',');
    if (parts.size() != 4) usage("--" + what + " expects four comma-separated entries a,b,c,d");
    std::array<CycNum, 4> e;
    for (std::size_t i = 0; i < 4; ++i) e[i] = parse_scalar(parts[i], conductor);
    if ((e[0] * e[3] - e[1] * e[2]).is_zero()) raise("Singular", "--" + what + " is not invertible");
    return GroupElt2(e[0], e[1], e[2], e[3], det1);
}

CurveCase case_arg(const Context& c) {
    const std::string& k = c.get("case");
    if (k == "mu") return {CurveLabel::MU};
    if (k == "a") return {CurveLabel::A};
    if (k == "m") {
        if (!c.has("u")) usage("--case m needs --u");
        return {CurveLabel::M, parse_scalar(c.get("u"), c.conductor)};
    }
    usage("--case must be one of mu, a, m");
}

// Line attached to a quadratic; falls back to the apolar span when it does not split.
LineOnY line_arg(const Context& c, const std::string& k) {
    BinaryForm q = form_arg(c, k, 2);
    try {
        return line_from_sigma(q, c.conductor);
    } catch (const Error& e) {
        if (e.kind() != "RootsNotInField") throw;
        return line_from_sigma_apolar(q);
    }
}

Json proj_json(const ProjMat2& g) {
    const GroupElt2& e = g.elt();
    return Json::array({to_json(e.a()), to_json(e.b()), to_json(e.c()), to_json(e.d())});
}

Json family_json(const FanoFamily& f) {
    Json j = {{"index", f.index}, {"degree", f.degree}, {"h12", f.h12}, {"m0", f.m0}, {"description", f.description}};
    if (f.genus) j["genus"] = *f.genus;
    if (!f.variants.empty()) {
        Json vs = Json::array();
        for (const auto& v : f.variants) vs.push_back({{"tag", v.tag}, {"m0", v.m0}, {"description", v.description}});
        j["variants"] = vs;
    }
    return j;
}

Json hilbert_json(const HilbertVerdict& h) {
    Json j = {{"scheme", h.scheme}, {"type", h.type}, {"description", h.description}};
    if (h.irregularity) j["irregularity"] = *h.irregularity;
    if (h.geometric_genus) j["geometric_genus"] = *h.geometric_genus;
    if (h.K2) j["K2"] = *h.K2;
    return j;
}

// Family key from --genus (index 1) or --degree (other indices).
int family_key(const Context& c, int index) {
    if (index == 1) {
        if (!c.has("genus")) usage("index 1 families are keyed by --genus");
        return parse_int(c.get("genus"), "genus");
    }
    if (!c.has("degree")) usage("families of index " + std::to_string(index) + " are keyed by --degree");
    return parse_int(c.get("degree"), "degree");
}

std::vector<Matrix> space_arg(const Context& c, const Pencil& fallback) {
    std::vector<Matrix> a;
    for (const auto& s : c.all("space")) a.push_back(parse_matrix(s, c.conductor, "space"));
    if (a.empty()) a = {fallback[0], fallback[1]};
    return a;
}

Pencil pencil_arg(const Context& c) { return {matrix_arg(c, "a1"), matrix_arg(c, "a2")}; }

Json sigma_z_json(const SigmaZ& s) {
    Json conics = Json::array();
    for (std::size_t i = 0; i < s.conics.size(); ++i) {
        Json prm = Json::array();
        for (const auto& f : s.conic_params[i]) prm.push_back(to_json(f, "s1", "s2"));
        conics.push_back({{"curve", to_json(s.conics[i].first)},
                          {"multiplicity", s.conics[i].second},
                          {"parameterization", prm}});
    }
    return {{"line", to_json(s.line)}, {"conics", conics}, {"total_degree", s.total_degree()}};
}

Json incidence_json(const IncidenceLength& il) {
    Json j = {{"infinite", il.infinite}, {"locus", to_json(il.locus, "t0", "t1")}};
    if (!il.infinite) j["length"] = il.length;
    return j;
}

std::vector<ProjMat2> group_elements(const Context& c, const std::string& group, std::size_t cap) {
    if (group == "oct") return closure(octahedral_generators(), cap);
    if (group == "icos") {
        std::vector<ProjMat2> gens;
        for (const auto& g : icosahedral_generators()) gens.emplace_back(g);
        return closure(gens, cap);
    }
    if (group == "custom") {
        std::vector<ProjMat2> gens;
        for (const auto& s : c.all("gen")) gens.emplace_back(elt_from(s, c.conductor, false, "gen"));
        if (gens.empty()) usage("--group custom needs at least one --gen");
        return closure(gens, cap);
    }
    usage("--group must be one of oct, icos, custom");
}

const std::vector<Verb>& verb_table() {
    static const std::vector<Verb> table = {
        {"classify-point", "orbit of a sextic form on Y", {{"point", "sextic binary form", true, false}},
         [](const Context& c) {
             BinaryForm phi = form_arg(c, "point", 6);
             auto p = classify_point(phi, c.conductor);
             if (!p) return Json{{"on_y", false}, {"form", to_json(phi)}};
             Json j = to_json(*p);
             j["on_y"] = true;
             j["on_tangential_scroll"] = on_tangential_scroll(*p);
             return j;
         }},
        {"lines-through", "lines of Y through a point", {{"point", "sextic binary form", true, false}},
         [](const Context& c) {
             BinaryForm phi = form_arg(c, "point", 6);
             auto p = classify_point(phi, c.conductor);
             if (!p) raise("NotOnY", "the form is not a point of Y");
             Json lines = Json::array();
             for (const auto& l : lines_through_point(*p, c.conductor)) lines.push_back(to_json(l));
             return Json{{"point", to_json(*p)}, {"lines", lines}};
         }},
        {"line-intersect",
         "intersection of two lines given by their quadratic forms",
         {{"line1", "quadratic form", true, false}, {"line2", "quadratic form", true, false}},
         [](const Context& c) {
             LineIntersection r = line_intersect(line_arg(c, "line1"), line_arg(c, "line2"));
             const char* kind = r.kind == IntersectKind::Empty ? "empty" : r.kind == IntersectKind::Point ? "point" : "equal";
             Json j = {{"kind", kind}};
             if (r.point) j["point"] = to_json(*r.point);
             return j;
         }},
        {"sigma-z",
         "the plane quintic of lines meeting a special quintic curve",
         {{"case", "mu | a | m", true, false}, {"u", "parameter for case m", false, false}},
         [](const Context& c) { return sigma_z_json(sigma_z(case_arg(c))); }},
        {"sigma-x",
         "conic components of the line scheme of a special genus 12 threefold",
         {{"case", "mu | a | m", true, false}, {"u", "parameter for case m", false, false}},
         [](const Context& c) {
             SigmaXReport r = sigma_x_report(case_arg(c), c.conductor);
             Json comps = Json::array(), pts = Json::array(), mults = Json::array();
             for (const auto& [q, m] : r.components) comps.push_back({{"curve", to_json(q)}, {"multiplicity", m}});
             std::vector<PlanePoint> seen;
             for (const auto& mt : r.meetings) {
                 if (std::find(seen.begin(), seen.end(), mt.point) == seen.end()) {
                     seen.push_back(mt.point);
                     pts.push_back(to_json(mt.point));
                 }
                 mults.push_back({{"components", {mt.first, mt.second}},
                                  {"point", to_json(mt.point)},
                                  {"multiplicity", mt.multiplicity}});
             }
             return Json{{"components", comps},
                         {"common_points", pts},
                         {"multiplicities", mults},
                         {"complete", r.complete},
                         {"verdict", r.verdict}};
         }},
        {"incidence",
         "scheme length of a special quintic meeting a line",
         {{"case", "mu | a | m", true, false},
          {"u", "parameter for case m", false, false},
          {"line", "quadratic form of the line", true, false}},
         [](const Context& c) {
             LineOnY l = line_arg(c, "line");
             Json j = incidence_json(incidence_length(build_z(case_arg(c)), l));
             j["line"] = to_json(l);
             return j;
         }},
        {"bisecant",
         "the distinguished bisecant line and sampled competitors",
         {{"case", "mu | a | m", true, false}, {"u", "parameter for case m", false, false}},
         [](const Context& c) {
             BisecantReport r = bisecant_report(case_arg(c));
             Json samples = Json::array();
             for (const auto& s : r.samples)
                 samples.push_back({{"sigma", to_json(s.sigma)}, {"incidence", incidence_json(s.length)}});
             return Json{{"line", to_json(r.line)}, {"length", r.length}, {"samples", samples}, {"unique", r.unique}};
         }},
        {"imult",
         "local intersection number of two plane curves",
         {{"c1", "ternary form in c0, c1, c2", true, false},
          {"c2", "ternary form in c0, c1, c2", true, false},
          {"at", "point a,b,c", true, false}},
         [](const Context& c) {
             PlaneCurve a = PlaneCurve::parse(c.get("c1"), c.conductor);
             PlaneCurve b = PlaneCurve::parse(c.get("c2"), c.conductor);
             PlanePoint p = point_arg(c, "at");
             return Json{{"point", to_json(p)},
                         {"multiplicity", intersection_multiplicity(a, b, p)},
                         {"on_c1", eval_at(a, p).is_zero()},
                         {"on_c2", eval_at(b, p).is_zero()}};
         }},
        {"closure",
         "finite subgroup of PGL2 generated by matrices",
         {{"group", "oct | icos | custom", true, false},
          {"gen", "generator a,b,c,d (custom)", false, true},
          {"cap", "maximal order (default 1000)", false, false},
          {"form", "binary form to test for stabilization", false, false}},
         [](const Context& c) {
             std::size_t cap = c.has("cap") ? static_cast<std::size_t>(parse_long(c.get("cap"), "cap")) : 1000;
             const std::string& group = c.get("group");
             auto elems = group_elements(c, group, cap);
             Json list = Json::array();
             for (const auto& g : elems) list.push_back(proj_json(g));
             Json j = {{"group", group}, {"order", elems.size()}, {"elements", list}};
             std::optional<BinaryForm> phi;
             if (c.has("form")) phi = form_arg(c, "form");
             else if (group == "oct") phi = phi6();
             if (phi) {
                 bool all = std::all_of(elems.begin(), elems.end(), [&](const ProjMat2& g) { return stabilizes_form(g, *phi); });
                 j["stabilizes"] = {{"form", to_json(*phi)}, {"all", all}};
             }
             if (group == "icos") {
                 auto lifts = closure_linear(icosahedral_generators(), 2 * cap);
                 bool all = std::all_of(lifts.begin(), lifts.end(),
                                        [](const GroupElt2& g) { return stabilizes_pointed(g, phi12(), 1); });
                 j["lift_order"] = lifts.size();
                 j["pointed"] = {{"form", to_json(phi12())}, {"constant", to_json(CycNum(1))}, {"all", all}};
             }
             return j;
         }},
        {"stabilizer-check",
         "does each matrix fix the form (or the pointed form)?",
         {{"form", "binary form", true, false},
          {"g", "matrix a,b,c,d", false, true},
          {"group", "oct | icos instead of --g", false, false},
          {"pointed", "constant c of the pointed form (f, c); needs det 1", false, false}},
         [](const Context& c) {
             BinaryForm phi = form_arg(c, "form");
             Json checks = Json::array();
             bool all = true;
             if (c.has("pointed")) {
                 CycNum k = parse_scalar(c.get("pointed"), c.conductor);
                 std::vector<GroupElt2> gs;
                 for (const auto& s : c.all("g")) gs.push_back(elt_from(s, c.conductor, true, "g"));
                 if (c.has("group")) {
                     if (c.get("group") != "icos") usage("pointed checks support --group icos only");
                     gs = closure_linear(icosahedral_generators(), 240);
                 }
                 if (gs.empty()) usage("give --g or --group");
                 for (const auto& g : gs) {
                     bool ok = stabilizes_pointed(g, phi, k);
                     all = all && ok;
                     checks.push_back({{"element", to_json(g)}, {"stabilizes", ok}});
                 }
             } else {
                 std::vector<ProjMat2> gs;
                 for (const auto& s : c.all("g")) gs.emplace_back(elt_from(s, c.conductor, false, "g"));
                 if (c.has("group")) gs = group_elements(c, c.get("group"), 1000);
                 if (gs.empty()) usage("give --g or --group");
                 for (const auto& g : gs) {
                     bool ok = stabilizes_form(g, phi);
                     all = all && ok;
                     checks.push_back({{"element", proj_json(g)}, {"stabilizes", ok}});
                 }
             }
             return Json{{"form", to_json(phi)}, {"checks", checks}, {"all", all}};
         }},
        {"aut",
         "automorphism data of a special genus 12 threefold",
         {{"case", "mu | a | m", true, false}, {"u", "parameter for case m", false, false}},
         [](const Context& c) {
             AutDescriptor d = special_aut_group(case_arg(c));
             Json ev = Json::array();
             for (const auto& e : d.evidence) {
                 Json j = {{"name", e.name}, {"verified", e.verified}, {"note", e.note}};
                 if (e.element) j["element"] = proj_json(*e.element);
                 ev.push_back(j);
             }
             Json j = {{"group", d.group},
                       {"continuous_part", d.continuous_part},
                       {"finite_part", d.finite_part},
                       {"finite_part_verified", d.finite_part_verified},
                       {"evidence", ev}};
             if (d.finite_order) j["finite_order"] = *d.finite_order;
             return j;
         }},
        {"chi-normal",
         "Euler characteristic of the normal bundle of a line or conic",
         {{"index", "Fano index", true, false},
          {"kind", "line | smooth-conic | reducible-conic | non-reduced-conic", true, false},
          {"a", "splitting parameter (default 0)", false, false}},
         [](const Context& c) {
             int a = c.has("a") ? parse_int(c.get("a"), "a") : 0;
             CurveKind kind;
             try {
                 kind = parse_curve_kind(c.get("kind"));
             } catch (const Error&) {
                 usage("unknown --kind '" + c.get("kind") + "'");
             }
             ChiResult r = chi_normal_bundle(parse_int(c.get("index"), "index"), kind, a);
             Json j = {{"chi", r.chi}, {"derivation", r.derivation}};
             if (r.h0_lower) j["h0_lower"] = *r.h0_lower;
             if (r.splitting) j["splitting"] = *r.splitting;
             return j;
         }},
        {"mukai",
         "numerical data of the Mukai bundle",
         {{"genus", "even genus 6..12", true, false}},
         [](const Context& c) {
             MukaiRecord m = mukai_numerology(parse_int(c.get("genus"), "genus"));
             return Json{{"rank", m.rank},
                         {"c1", m.c1},
                         {"c2", std::to_string(m.c2) + "L"},
                         {"c2_coefficient", m.c2},
                         {"h0", m.h0},
                         {"grassmannian", "Gr(" + std::to_string(m.grassmannian[0]) + "," +
                                              std::to_string(m.grassmannian[1]) + ")"},
                         {"discriminant_coefficient", m.discriminant},
                         {"note", m.note}};
         }},
        {"fermat-cones", "cones in hyperplane sections of the Fermat quartic threefold", {},
         [](const Context& c) {
             FermatConeReport r = fermat_cones(c.conductor);
             Json cones = Json::array();
             for (const auto& k : r.cones) {
                 Json v = Json::array();
                 for (const auto& x : k.vertex) v.push_back(to_json(x));
                 cones.push_back({{"i", k.i},
                                  {"j", k.j},
                                  {"omega", to_json(k.omega)},
                                  {"vertex", v},
                                  {"vertex_on_x", k.vertex_on_x},
                                  {"cone_identity", k.cone_identity}});
             }
             return Json{{"count", r.cones.size()}, {"all_verified", r.all_verified}, {"aut_order", r.aut_order},
                         {"cones", cones}};
         }},
        {"pfaffian", "Pfaffian of a skew matrix (rows ';', entries ',')", {{"matrix", "skew matrix", true, false}},
         [](const Context& c) {
             Matrix m = matrix_arg(c, "matrix");
             CycNum p = pfaffian(m);
             CycNum d = det(m);
             return Json{{"pfaffian", to_json(p)}, {"det", to_json(d)}, {"square_equals_det", p * p == d}};
         }},
        {"pf-line-check",
         "is the pencil <a1, a2> a line on the Pfaffian cubic?",
         {{"a1", "skew 6x6", true, false}, {"a2", "skew 6x6", true, false}, {"space", "basis element of A", false, true}},
         [](const Context& c) {
             Pencil p = pencil_arg(c);
             PfaffianLineCheck r = pencil_is_line_on_Y(p, space_arg(c, p));
             return Json{{"on_pfaffian", r.on_pfaffian}, {"cubic", to_json(r.cubic, "l", "m")}};
         }},
        {"pf-recover-w4",
         "the isotropic 4-space of a pencil of degenerate skew forms",
         {{"a1", "skew 6x6", true, false}, {"a2", "skew 6x6", true, false}},
         [](const Context& c) {
             W4Result r = recover_W4(pencil_arg(c));
             return Json{{"basis", to_json(r.basis)}, {"parameters", r.parameters}, {"ambiguous", r.ambiguous}};
         }},
        {"pf-conic",
         "conic attached to a line on a Pfaffian cubic threefold",
         {{"a1", "skew 6x6", true, false},
          {"a2", "skew 6x6", true, false},
          {"space", "basis element of A (five in total)", true, true},
          {"w4", "4x6 basis; recovered when absent", false, false}},
         [](const Context& c) {
             Pencil p = pencil_arg(c);
             Matrix w4 = c.has("w4") ? matrix_arg(c, "w4") : recover_W4(p).basis;
             PfaffianConic r = conic_from_line(p, w4, space_arg(c, p));
             return Json{{"w4", to_json(w4)},
                         {"quadric", to_json(r.quadric)},
                         {"plane", to_json(r.plane)},
                         {"rank", r.rank},
                         {"type", to_string(r.type)}};
         }},
        {"pencil-disc",
         "degenerate members of a pencil of quadrics",
         {{"q1", "symmetric matrix", true, false}, {"q2", "symmetric matrix", true, false}},
         [](const Context& c) {
             PencilDiscriminant d = pencil_discriminant(matrix_arg(c, "q1"), matrix_arg(c, "q2"), c.conductor);
             Json members = Json::array(), factors = Json::array();
             for (const auto& m : d.members) members.push_back({to_json(m[0]), to_json(m[1])});
             for (const auto& f : d.factors)
                 factors.push_back({{"form", to_json(f.form, "l", "m")}, {"multiplicity", f.multiplicity}});
             return Json{{"det", to_json(d.det, "l", "m")},
                         {"factors", factors},
                         {"members", members},
                         {"remainder", to_json(d.remainder, "l", "m")},
                         {"squarefree", d.squarefree}};
         }},
    };
    return table;
}

const std::vector<Verb>& fano_table() {
    static const std::vector<Verb> table = {
        {"lookup", "table row of a family", {{"index", "", true, false}, {"genus", "", false, false}, {"degree", "", false, false}},
         [](const Context& c) {
             int index = parse_int(c.get("index"), "index");
             return family_json(lookup_family(index, family_key(c, index)));
         }},
        {"list", "all families", {},
         [](const Context&) {
             Json fams = Json::array();
             for (const auto& f : fano_families()) fams.push_back(family_json(f));
             Json covers = Json::array();
             for (const auto& d : double_covers())
                 covers.push_back({{"index", d.index}, {"key", d.key}, {"target", d.target},
                                   {"branch", std::to_string(d.branch_multiple) + "H'"}});
             return Json{{"families", fams}, {"double_covers", covers}};
         }},
        {"partner", "index 2 partner of an index 1 family", {{"genus", "8, 10 or 12", true, false}},
         [](const Context& c) {
             PartnerInfo p = index2_partner(parse_int(c.get("genus"), "genus"));
             return Json{{"index", 2}, {"degree", p.degree}, {"hilbert", hilbert_json(p.hilbert)}};
         }},
        {"hilbert", "Hilbert scheme of lines (index 2) or conics (index 1)",
         {{"index", "", true, false}, {"genus", "", false, false}, {"degree", "", false, false}},
         [](const Context& c) {
             int index = parse_int(c.get("index"), "index");
             return hilbert_json(hilbert_verdict(index, family_key(c, index)));
         }},
        {"aut", "automorphism verdict", {{"index", "", true, false}, {"genus", "", false, false}, {"degree", "", false, false}},
         [](const Context& c) {
             int index = parse_int(c.get("index"), "index");
             AutVerdict v = aut_verdict(index, family_key(c, index));
             Json sm = Json::array();
             for (const auto& s : v.special_members) sm.push_back({{"member", s.member}, {"group", s.group}});
             return Json{{"finite", v.finite}, {"groups", v.groups}, {"special_members", sm}, {"h12", v.h12}};
         }},
        {"genus", "genus from the anticanonical degree", {{"k3", "K^3 (negative, even)", true, false}},
         [](const Context& c) {
             GenusInfo g = genus_from_K3(parse_long(c.get("k3"), "k3"));
             return Json{{"genus", g.genus}, {"anticanonical_dim", g.anticanonical_dim}};
         }},
    };
    return table;
}

void add_options(CLI::App* sub, const Verb& v) {
    for (const auto& [name, help, required, repeat] : v.options) {
        CLI::Option* o = sub->add_option("--" + name, help);
        if (required) o->required();
        if (repeat) o->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->expected(1);
        else o->multi_option_policy(CLI::MultiOptionPolicy::Throw)->expected(1);
        o->allow_extra_args(false);
    }
}

Context collect(const CLI::App* sub, const Verb& v) {
    Context c;
    for (const auto& [name, help, required, repeat] : v.options) {
        const CLI::Option* o = sub->get_option("--" + name);
        if (o->count() == 0) continue;
        c.values[name] = o->results();
        if (repeat) c.multi.insert(name);
    }
    return c;
}

Json inputs_json(const Context& c, const std::string& format) {
    Json j = Json::object();
    for (const auto& [k, v] : c.values) {
        if (c.multi.count(k)) j[k] = v;
        else j[k] = v.front();
    }
    j["conductor"] = c.conductor;
    j["format"] = format;
    return j;
}

unsigned conductor_from(const std::string& text, const std::string& source) {
    long n = 0;
    try {
        std::size_t pos = 0;
        n = std::stol(text, &pos);
        if (pos != text.size()) n = 0;
    } catch (const std::exception&) {
        n = 0;
    }
    if (n < 1 || n > static_cast<long>(kMaxConductor))
        raise("UsageError", source + " must be an integer in 1.." + std::to_string(kMaxConductor) + ", got '" + text + "'");
    return static_cast<unsigned>(n);
}

int emit(std::ostream& out, const std::string& format, const Json& doc) {
    if (format == "text") {
        out << "verb: " << doc.value("verb", "") << "\n";
        if (doc.contains("error")) {
            const Json& e = doc.at("error");
            out << "error: " << e.at("kind").get<std::string>() << ": " << e.at("message").get<std::string>() << "\n";
            for (const auto& [k, v] : e.at("details").items()) out << "  " << k << ": " << v.get<std::string>() << "\n";
        } else {
            out << to_text(doc.at("result"));
        }
    } else {
        out << doc.dump(2) << "\n";
    }
    return 0;
}

bool is_usage_kind(const std::string& kind) { return kind == "UsageError" || kind == "ParseError"; }

}  // namespace

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& verb : verb_table()) v.push_back(verb.name);
        v.insert(v.begin() + 11, "fano");
        return v;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on Fano threefolds of Picard rank one", "fano3lab"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string conductor_text, format = "json";
    app.add_option("--conductor", conductor_text, "cyclotomic conductor (default 40 or $FANO3LAB_CONDUCTOR)");
    app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const auto& v : verb_table()) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_options(sub, v);
        subs.emplace_back(sub, &v);
    }
    CLI::App* fano = app.add_subcommand("fano", "classification database");
    fano->require_subcommand(1, 1);
    fano->fallthrough();
    for (const auto& v : fano_table()) {
        CLI::App* sub = fano->add_subcommand(v.name, v.help);
        add_options(sub, v);
        subs.emplace_back(sub, &v);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    std::string verb;
    Context ctx;
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        err << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        for (const auto& [sub, v] : subs)
            if (sub->parsed()) verb = (sub->get_parent() == fano ? "fano " : "") + v->name;
        Json doc = {{"verb", verb}, {"inputs", Json::object()},
                    {"error", {{"kind", "UsageError"}, {"message", e.what()}, {"details", Json::object()}}}};
        emit(out, format, doc);
        err << e.what() << "\n";
        return kUsageError;
    }

    const Verb* selected = nullptr;
    for (const auto& [sub, v] : subs)
        if (sub->parsed()) {
            selected = v;
            verb = (sub->get_parent() == fano ? "fano " : "") + v->name;
            ctx = collect(sub, *v);
        }

    Json doc = {{"verb", verb}};
    try {
        if (!conductor_text.empty()) {
            ctx.conductor = conductor_from(conductor_text, "--conductor");
        } else if (const char* env = std::getenv("FANO3LAB_CONDUCTOR"); env && *env) {
            ctx.conductor = conductor_from(env, "FANO3LAB_CONDUCTOR");
        }
        doc["inputs"] = inputs_json(ctx, format);
        doc["result"] = selected->handler(ctx);
    } catch (const Error& e) {
        if (!doc.contains("inputs")) doc["inputs"] = inputs_json(ctx, format);
        Json details = Json::object();
        for (const auto& [k, v] : e.details()) details[k] = v;
        doc.erase("result");
        doc["error"] = {{"kind", e.kind()}, {"message", e.what()}, {"details", details}};
        emit(out, format, doc);
        return is_usage_kind(e.kind()) ? kUsageError : kDomainError;
    }
    emit(out, format, doc);
    return kOk;
}

}  // namespace fano3lab::cli
