#include "serialize.hpp"

#include <sstream>

namespace fano3lab::cli {

Json to_json(const CycNum& c) {
    Json coords = Json::array();
    for (const auto& q : c.coords()) coords.push_back({q.get_num().get_str(), q.get_den().get_str()});
    return {{"conductor", c.conductor()}, {"coords", coords}};
}

CycNum scalar_from_json(const Json& j) {
    std::vector<Rational> coords;
    for (const auto& q : j.at("coords")) {
        Rational r(Integer(q.at(0).get<std::string>()), Integer(q.at(1).get<std::string>()));
        r.canonicalize();
        coords.push_back(r);
    }
    return CycNum::from_coords(j.at("conductor").get<unsigned>(), coords);
}

Json to_json(const BinaryForm& f, const std::string& x, const std::string& y) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return {{"degree", f.degree()}, {"coeffs", coeffs}, {"text", f.to_string(x, y)}};
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", to_json(c)}});
    return {{"variables", p.variables()}, {"degree", p.total_degree()}, {"terms", terms}, {"text", p.to_string()}};
}

Json to_json(const PlaneCurve& c) { return to_json(c.form()); }

Json to_json(const PlanePoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords()) coords.push_back(to_json(c));
    return {{"coords", coords}, {"text", p.to_string()}};
}

Json to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_json(m(i, j)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const GroupElt2& g) {
    return {{"a", to_json(g.a())}, {"b", to_json(g.b())}, {"c", to_json(g.c())}, {"d", to_json(g.d())},
            {"det_normalized", g.det_normalized()}};
}

Json to_json(const PointOnY& p) {
    Json w = {{"f", to_json(p.f)}};
    if (p.orbit != Orbit::Orb1) w["g"] = to_json(p.g);
    if (p.orbit == Orbit::Orb3) {
        w["s1"] = to_json(p.s1);
        w["s2"] = to_json(p.s2);
        w["normalized"] = p.normalized;
    }
    return {{"form", to_json(p.form)}, {"orbit", to_string(p.orbit)}, {"witness", w}};
}

Json to_json(const LineOnY& l) {
    Json j = {{"kind", l.kind == LineKind::Special ? "special" : "ordinary"},
              {"sigma", to_json(l.sigma)},
              {"span", {to_json(l.span[0]), to_json(l.span[1])}}};
    if (l.f) j["f"] = to_json(*l.f);
    if (l.g) j["g"] = to_json(*l.g);
    return j;
}

namespace {

bool is_scalar(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("conductor") && j.contains("coords"); }

void render(const Json& j, const std::string& indent, std::ostringstream& out);

std::string inline_value(const Json& j) {
    if (is_scalar(j)) return scalar_from_json(j).to_string();
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.contains("text") && j.at("text").is_string()) return j.at("text").get<std::string>();
    return j.dump();
}

bool is_leaf(const Json& j) {
    if (j.is_primitive() || is_scalar(j)) return true;
    if (j.is_object() && j.contains("text")) return true;
    if (j.is_array())
        for (const auto& e : j)
            if (!e.is_primitive() && !is_scalar(e)) return false;
    return j.is_array();
}

std::string leaf_text(const Json& j) {
    if (!j.is_array()) return inline_value(j);
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_value(j[i]);
    return s + "]";
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_leaf(v)) {
                out << indent << k << ": " << leaf_text(v) << "\n";
            } else {
                out << indent << k << ":\n";
                render(v, indent + "  ", out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_leaf(v)) {
                out << indent << "- " << leaf_text(v) << "\n";
            } else {
                out << indent << "-\n";
                render(v, indent + "  ", out);
            }
        }
    } else {
        out << indent << leaf_text(j) << "\n";
    }
}

}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream out;
    render(j, "", out);
    return out.str();
}

}  // namespace fano3lab::cli
