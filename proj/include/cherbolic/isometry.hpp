#pragma once

#include <optional>
#include <vector>

#include "cherbolic/plane.hpp"

namespace cherbolic {

/// Holomorphic isometry: unit-determinant matrix preserving the form.
struct Isometry {
    Mat3 m;
    HermitianForm form;
};

/// Validates det = 1 and conj(M)^t H M = H within tolerance.
Isometry make_isometry(const Mat3& m, const HermitianForm& form, double tol = kAlgTol);

Isometry operator*(const Isometry& a, const Isometry& b);
Isometry inverse_isometry(const Isometry& a);
Isometry power(const Isometry& a, long n);

enum class IsometryClass {
    RegularElliptic,
    ComplexReflection,
    ElliptoParabolic,
    UnipotentParabolic,
    Loxodromic,
    Identity,
};

const char* to_string(IsometryClass c);

struct Classification {
    IsometryClass tag;
    /// ComplexReflection only: fixes a point (true) or a geodesic (false).
    bool reflection_in_point = false;
};

/// Eigenstructure decision procedure. Unit-modulus or diagonalizability tests
/// that land inside the tolerance band raise UnresolvedBorderline instead of
/// guessing; the ellipto-parabolic boundary cases must not be mislabeled.
Classification classify_isometry(const Isometry& iso, double tol = kAlgTol);

/// Rotation by phi = 2pi/p about the complex geodesic polar to n, as the
/// unit-determinant lift: z -> u^-1 z + (u^2 - u^-1) <z,n>/<n,n> n with
/// u = e^{i phi/3}. Eigenvalues {u^2, u^-1, u^-1}. Throws NonPositivePolar.
Isometry complex_reflection(const Vec3& n, int p, const HermitianForm& form);

/// Equality in the projective group: a b^-1 = lambda I with lambda a cube
/// root of unity (the only scalars of determinant 1).
bool proj_equal(const Isometry& a, const Isometry& b, double tol = kAlgTol);

bool is_proj_identity(const Mat3& m, double tol = kAlgTol);

/// Least n <= max_order with m^n projectively the identity, by repeated
/// multiplication. nullopt signals no finite order within the bound.
std::optional<int> projective_order(const Isometry& m, int max_order = kMaxOrder,
                                    double tol = kAlgTol);

/// Independent route: eigenvalue-argument rationality via continued-fraction
/// convergents (denominators up to 3*max_order), verified by binary powering.
std::optional<int> projective_order_by_eigenvalues(const Isometry& m,
                                                   int max_order = kMaxOrder,
                                                   double tol = kAlgTol);

/// Eigenvectors of a non-identity isometry as classified projective points.
/// Throws IdentityElement.
std::vector<ProjectivePoint> fixed_points(const Isometry& m, double tol = kAlgTol);

/// Restriction of an isometry stabilizing the chart geodesic to the frame
/// (basis_pos, basis_neg); acts on the disk coordinate as a Moebius map.
/// Throws DoesNotStabilize if the polar is not projectively fixed.
Mat2 restrict_to_chart(const Isometry& iso, const DiskChart& chart, double tol = kAlgTol);

Complex moebius_apply(const Mat2& m, Complex z);

/// Projective order of the restricted disk action (powering + eigenvalue
/// cross-check; the two routes must agree).
std::optional<int> disk_order(const Mat2& m, int max_order = kMaxOrder, double tol = kAlgTol);

/// Interior fixed point of an elliptic disk action (the eigenvector with
/// coordinate inside the unit disk). nullopt when there is none.
std::optional<Complex> disk_fixed_point(const Mat2& m, double tol = kAlgTol);

} // namespace cherbolic
