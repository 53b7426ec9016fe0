#pragma once

#include <fano3lab/cyclotomic.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fano3lab {

struct FamilyVariant {
    std::string tag;
    int m0 = 1;
    std::string description;
};

// Smooth Fano threefold family with Picard rank 1.
struct FanoFamily {
    int index = 1;
    int degree = 1;                // H^3
    std::optional<int> genus;      // index 1 only
    int h12 = 0;
    int m0 = 1;                    // first variant when there are several
    std::string description;
    std::vector<FamilyVariant> variants;
    int key() const { return genus ? *genus : degree; }
};

struct DoubleCoverDatum {
    int index = 1;
    int key = 1;
    std::string target;
    int branch_multiple = 1;  // B = branch_multiple * H'
};

const std::vector<FanoFamily>& fano_families();
const std::vector<DoubleCoverDatum>& double_covers();
// key is the genus for index 1 and the degree otherwise; raises NoSuchFamily
const FanoFamily& lookup_family(int index, int key);
// The embedded database text.
const char* fanodb_json();

struct GenusInfo {
    int genus = 0;
    int anticanonical_dim = 0;  // dim |-K| = g + 1
};
GenusInfo genus_from_K3(long k3);

struct HilbertVerdict {
    std::string scheme;  // lines | conics
    std::string type;
    std::optional<int> irregularity, geometric_genus, K2;
    std::string description;
};
// Raises NotCovered carrying a caveat for small degree or genus.
HilbertVerdict hilbert_verdict(int index, int key);

struct PartnerInfo {
    int degree = 0;
    HilbertVerdict hilbert;
};
PartnerInfo index2_partner(int genus);

struct SpecialMember {
    std::string member;
    std::string group;
};
struct AutVerdict {
    bool finite = true;  // for the general member
    std::vector<std::string> groups;
    std::vector<SpecialMember> special_members;
    int h12 = 0;
};
AutVerdict aut_verdict(int index, int key);

enum class CurveKind { Line, SmoothConic, ReducibleConic, NonReducedConic };
const char* to_string(CurveKind k);
CurveKind parse_curve_kind(const std::string& s);

struct ChiResult {
    int chi = 0;
    std::optional<int> h0_lower;                  // absent for degenerate conics
    std::optional<std::array<int, 2>> splitting;  // degrees of the two summands
    std::string derivation;
};
ChiResult chi_normal_bundle(int index, CurveKind kind, int a);

struct MukaiRecord {
    int rank = 2;
    std::string c1 = "H";
    int c2 = 0;  // coefficient of L
    int h0 = 0;
    std::array<int, 2> grassmannian{2, 0};
    int discriminant = 0;  // coefficient of L in the Bogomolov discriminant
    std::string note;
};
MukaiRecord mukai_numerology(int genus);

struct ConeRecord {
    int i = 0, j = 0;  // support of the vertex, i < j
    CycNum omega;      // omega^4 = -1
    std::array<CycNum, 5> vertex;
    bool vertex_on_x = false;
    bool cone_identity = false;
};
struct FermatConeReport {
    std::vector<ConeRecord> cones;
    bool all_verified = false;
    long aut_order = 0;  // |mu_4^4 x| S_5|
};
// Raises ConductorTooSmall unless 8 divides the conductor.
FermatConeReport fermat_cones(unsigned conductor = 40);

}  // namespace fano3lab
