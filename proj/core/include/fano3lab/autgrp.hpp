#pragma once

#include <fano3lab/quintics.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fano3lab {

// Element of PGL2 stored with its first nonzero entry (row-major a, b, c, d) equal to 1.
class ProjMat2 {
public:
    explicit ProjMat2(const GroupElt2& g);
    ProjMat2(CycNum a, CycNum b, CycNum c, CycNum d) : ProjMat2(GroupElt2(a, b, c, d)) {}
    static ProjMat2 identity() { return ProjMat2(GroupElt2::identity()); }

    const GroupElt2& elt() const { return g_; }
    ProjMat2 inverse() const { return ProjMat2(g_.inverse()); }
    friend ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) { return ProjMat2(x.g_ * y.g_); }
    friend bool operator==(const ProjMat2& x, const ProjMat2& y) { return x.g_ == y.g_; }
    friend bool operator<(const ProjMat2& x, const ProjMat2& y);
    std::string to_string() const;

private:
    GroupElt2 g_;
};

// Breadth-first closure; raises CapExceeded when more than cap elements appear.
std::vector<ProjMat2> closure(const std::vector<ProjMat2>& gens, std::size_t cap);
// Closure inside GL2 itself (no projective identification), for det-1 lifts.
std::vector<GroupElt2> closure_linear(const std::vector<GroupElt2>& gens, std::size_t cap);

bool stabilizes_form(const ProjMat2& g, const BinaryForm& phi);
// g must be det-normalized; compares (g.phi, c) with (phi, c) projectively.
bool stabilizes_pointed(const GroupElt2& g, const BinaryForm& phi, const CycNum& c);

// Sampled membership of g.Z(t) in Z for 2 deg + 1 parameters.
bool preserves_curve(const ProjMat2& g, const ParamCurve& z);
// Is the point on the image of z?
bool on_curve(const ParamCurve& z, const BinaryForm& point);

enum class FamilyKind { Torus, Unipotent };
// Polynomial identity in (t, s): g_t . Z(s) = lambda(t) Z(rho_t(s)) with
// torus g_t = diag(t, 1), rho_t(s) = (t s0 : s1), lambda = t, and unipotent
// g_t = (1 t; 0 1), rho_t(s) = (s0 + t s1 : s1), lambda = 1.
bool family_preserves(FamilyKind kind, const ParamCurve& z);

BinaryForm phi12();
std::vector<ProjMat2> octahedral_generators();
// det-1 lifts S, T over Q(zeta_5)
std::vector<GroupElt2> icosahedral_generators();

struct GeneratorEvidence {
    std::string name;
    std::optional<ProjMat2> element;  // absent for families
    bool verified = false;
    std::string note;
};
struct AutDescriptor {
    std::string group;
    std::string continuous_part;
    std::string finite_part;
    std::optional<std::size_t> finite_order;  // from a closure computation
    bool finite_part_verified = false;
    std::vector<GeneratorEvidence> evidence;
};
AutDescriptor special_aut_group(const CurveCase& c);

}  // namespace fano3lab
