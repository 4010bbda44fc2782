#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cherbolic/isometry.hpp"
#include "cherbolic/words.hpp"

namespace cherbolic {

/// Triangle group generated by three order-p complex reflections whose polar
/// vectors are the standard basis; the symmetric (sporadic) normalization
/// additionally carries the cyclic symmetry J with R_{i+1} = J R_i J^-1.
struct TriangleGroup {
    GroupKind kind = GroupKind::Sporadic;
    int p = 3;
    Complex tau;          // sporadic: tr(R1 J)
    Complex rho, sigma;   // thompson parameters (tau doubles as the third)
    HermitianForm form;
    std::array<Isometry, 3> r;
    std::array<Isometry, 3> r_inv;
    std::optional<Isometry> j, j_inv;

    const Vec3& polar(int i) const; // i in 1..3
    Isometry identity() const { return {Mat3::identity(), form}; }
};

/// Symmetric normalization: H built from alpha = 2 - u^3 - conj(u)^3 and
/// beta = (conj(u)^2 - u) tau with u = e^{2 pi i / 3p}; J the cyclic
/// permutation; R1 the unit-determinant upper-triangular lift.
/// Throws WrongSignature unless the form has signature (2,1).
TriangleGroup sporadic_group(int p, Complex tau, double tol = kAlgTol);

/// Non-equilateral normalization with parameters (rho, sigma, tau).
TriangleGroup thompson_group(int p, Complex rho, Complex sigma, Complex tau,
                             double tol = kAlgTol);

/// Left-to-right product of generator matrices. Throws MacroUnavailable when
/// the word uses J against a Thompson group.
Isometry eval_word(const TriangleGroup& g, const Word& w);
Isometry eval_word(const TriangleGroup& g, const std::string& text);

/// Braid relation of length n: the two alternating products of n factors
/// agree projectively.
bool braid_holds(const TriangleGroup& g, const Word& a, const Word& b, int n,
                 double tol = kAlgTol);

struct RelatorVerdict {
    std::string name;
    std::string word;
    std::string formula;
    bool removed = false;
    long exponent = 0;
    bool power_is_identity = false;
    std::optional<int> measured_order;
    bool order_matches = false;
    bool pass = false;
};

struct BraidVerdict {
    std::string name;
    int length = 0;
    bool holds = false;
};

struct EqualityVerdict {
    std::string name;
    bool holds = false;
};

struct PresentationReport {
    std::vector<RelatorVerdict> relators;
    std::vector<BraidVerdict> braids;
    std::vector<EqualityVerdict> equalities;
    bool pass = false;
};

/// Checks every clause at the given p: relator^exponent must be projectively
/// the identity and the measured projective order of the base word must equal
/// the evaluated exponent exactly; infinite exponents are removed and
/// reported. Throws NonIntegerExponent.
PresentationReport verify_presentation(const TriangleGroup& g, const Presentation& pres,
                                       int p, double tol = kAlgTol,
                                       int max_order = kMaxOrder);

/// Lifts of the triangle vertices, v_i = n_{i+1} box n_{i+2}.
std::array<ProjectivePoint, 3> triangle_vertices(const TriangleGroup& g);

// ---- catalog ----

enum class Family { Tau1, Tau2, Tau3, Tau4, S2, E2, H1, H2 };

struct FamilyInfo {
    Family family;
    std::string id;   // "tau1", ..., "s2", "e2", "h1", "h2"
    GroupKind kind;
    Complex tau;
    Complex rho, sigma; // thompson only
    std::vector<int> lattice_p;
    bool has_presentation = false;
    bool has_negative_p = false; // conjugate-parameter rows listed in the source table
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_by_id(const std::string& id); // throws NonCatalogParameter
bool family_has_p(const FamilyInfo& info, int p);

TriangleGroup build_group(const FamilyInfo& info, int p, double tol = kAlgTol);
/// "sporadic:tau1:p3" or "thompson:S2:p5" (family ids case-insensitive).
TriangleGroup build_group_by_id(const std::string& group_id, double tol = kAlgTol);

/// Displayed presentation of the ambient lattice; exponents symbolic in p.
/// Throws NonCatalogParameter for families without one.
const Presentation& ambient_presentation(Family f);

} // namespace cherbolic
