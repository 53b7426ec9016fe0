#pragma once

#include <fano3lab/planecurves.hpp>
#include <fano3lab/v5.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fano3lab {

enum class CurveLabel { MU, A, M, Custom };
const char* to_string(CurveLabel l);

struct CurveCase {
    CurveLabel label = CurveLabel::MU;
    CycNum u = 0;  // M only
};

// Raises DegenerateParameter unless u (u^4 - 1)(5u^4 - 1) != 0.
void check_m_parameter(const CycNum& u);

// Rational curve (t0:t1) -> P(M_6); coefficient k multiplies x^(6-k) y^k.
class ParamCurve {
public:
    // Removes the common factor of the forms; raises when they are all zero.
    explicit ParamCurve(std::array<BinaryForm, 7> forms, CurveLabel label = CurveLabel::Custom);

    const std::array<BinaryForm, 7>& forms() const { return forms_; }
    CurveLabel label() const { return label_; }
    unsigned degree() const { return forms_[0].degree(); }
    BinaryForm at(const CycNum& t0, const CycNum& t1) const;

private:
    std::array<BinaryForm, 7> forms_;
    CurveLabel label_;
};

ParamCurve build_z(const CurveCase& c);
unsigned curve_degree(const ParamCurve& z);
// Image of the curve under g, as a parameterized curve.
ParamCurve act(const GroupElt2& g, const ParamCurve& z);

struct IncidenceLength {
    bool infinite = false;
    unsigned length = 0;
    BinaryForm locus;  // gcd of the minors on the parameter line
};
IncidenceLength incidence_length(const ParamCurve& z, const LineOnY& l);

struct SigmaZ {
    PlaneCurve line;
    std::vector<std::pair<PlaneCurve, unsigned>> conics;
    // parameterizations (s1, s2) -> (c0 : c1 : c2) of the conics
    std::vector<std::array<BinaryForm, 3>> conic_params;
    unsigned total_degree() const;
};
SigmaZ sigma_z(const CurveCase& c);

struct BisecantSample {
    BinaryForm sigma;
    IncidenceLength length;
};
struct BisecantReport {
    LineOnY line;
    unsigned length = 0;
    std::vector<BisecantSample> samples;
    bool unique = true;  // every sample has length < 2
};
BisecantReport bisecant_report(const CurveCase& c);

struct ConicMeeting {
    std::size_t first = 0, second = 0;  // indices into components
    PlanePoint point{1, 0, 0};
    unsigned multiplicity = 0;
};
// Sigma_Z with the line removed: the conic components, their common points
// over the field and the local intersection numbers there.
struct SigmaXReport {
    std::vector<std::pair<PlaneCurve, unsigned>> components;
    std::vector<ConicMeeting> meetings;
    bool complete = true;
    std::string verdict;
};
SigmaXReport sigma_x_report(const CurveCase& c, unsigned conductor = kDefaultConductor);

}  // namespace fano3lab
