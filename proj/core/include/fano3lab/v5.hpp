#pragma once

#include <fano3lab/polynomial.hpp>

#include <array>
#include <optional>
#include <vector>

namespace fano3lab {

// xy(x^4 - y^4)
BinaryForm phi6();

enum class Orbit { Orb3, Orb2, Orb1 };
const char* to_string(Orbit o);

// Point of Y inside P(M_6) together with the orbit data that places it there.
//   Orb3: form ~ f g (s1 f^4 - s2 g^4)
//   Orb2: form ~ f^5 g
//   Orb1: form ~ f^6   (g left as the zero form)
struct PointOnY {
    BinaryForm form;
    Orbit orbit = Orbit::Orb3;
    BinaryForm f, g;
    CycNum s1 = 1, s2 = 1;
    // Orb3 only: s1 = s2 = 1 after absorbing fourth roots into g
    bool normalized = true;
};

enum class LineKind { Ordinary, Special };

struct LineOnY {
    LineKind kind = LineKind::Ordinary;
    // linear factors of the sigma point, when they lie in the field
    std::optional<BinaryForm> f, g;
    std::array<BinaryForm, 2> span;
    BinaryForm sigma;  // normalized quadratic
};

// Returns nullopt when the form is not on Y. Raises RootsNotInField when the
// form does not split over Q(zeta_conductor).
std::optional<PointOnY> classify_point(const BinaryForm& phi, unsigned conductor = kDefaultConductor);

// Line attached to a point of Sigma(Y) = P(M_2). Raises RootsNotInField when a
// rank-2 quadratic does not split.
LineOnY line_from_sigma(const BinaryForm& q, unsigned conductor = kDefaultConductor);
// Same, but never factors: the span is q * ker(q^perp(d) : M_4 -> M_2).
LineOnY line_from_sigma_apolar(const BinaryForm& q);

std::vector<LineOnY> lines_through_point(const PointOnY& p, unsigned conductor = kDefaultConductor);

enum class IntersectKind { Empty, Point, Equal };
struct LineIntersection {
    IntersectKind kind = IntersectKind::Empty;
    std::optional<BinaryForm> point;  // normalized, for kind == Point
};
LineIntersection line_intersect(const LineOnY& a, const LineOnY& b);

bool is_special(const LineOnY& l);
bool on_tangential_scroll(const PointOnY& p);

// Does the degree-6 form lie in the span of the line?
bool span_contains(const LineOnY& l, const BinaryForm& phi);
// Induced action on lines: g . L_q = L_{g.q}; the span is transformed as well.
LineOnY act(const GroupElt2& g, const LineOnY& l);

}  // namespace fano3lab
