#pragma once

#include <fano3lab/polynomial.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fano3lab {

// Curve in P(M_2) = P^2 with coordinates (c0:c1:c2) of q = c0 x^2 + c1 xy + c2 y^2.
class PlaneCurve {
public:
    static const std::vector<std::string>& variables();

    explicit PlaneCurve(MultiPoly form);
    static PlaneCurve parse(const std::string& text, unsigned conductor = kDefaultConductor);
    // a c0 + b c1 + c c2
    static PlaneCurve line(const CycNum& a, const CycNum& b, const CycNum& c);

    const MultiPoly& form() const { return form_; }
    unsigned degree() const { return degree_; }
    std::string to_string() const { return form_.to_string(); }

private:
    MultiPoly form_;
    unsigned degree_;
};

bool proj_eq(const PlaneCurve& a, const PlaneCurve& b);

class PlanePoint {
public:
    PlanePoint(CycNum c0, CycNum c1, CycNum c2);  // normalized on construction
    const std::array<CycNum, 3>& coords() const { return c_; }
    const CycNum& operator[](std::size_t i) const { return c_[i]; }
    friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.c_ == b.c_; }
    std::string to_string() const;

private:
    std::array<CycNum, 3> c_;
};

// Point of Sigma(Y) attached to a quadratic binary form and back.
PlanePoint to_plane_point(const BinaryForm& q);
BinaryForm to_quadratic(const PlanePoint& p);

CycNum eval_at(const PlaneCurve& c, const PlanePoint& p);
unsigned intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const PlanePoint& p);
PlaneCurve tangent_line(const PlaneCurve& c, const PlanePoint& p);

struct CommonPoints {
    std::vector<PlanePoint> points;
    bool complete = true;  // false when some common point is not defined over the field
};
CommonPoints common_points(const PlaneCurve& a, const PlaneCurve& b, unsigned conductor = kDefaultConductor);

// Ternary quadratic vanishing on s -> (q0(s) : q1(s) : q2(s)); raises NotAConic.
PlaneCurve implicitize_conic(const std::array<BinaryForm, 3>& param);

}  // namespace fano3lab
