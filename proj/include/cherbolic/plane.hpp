#pragma once

#include <optional>
#include <vector>

#include "cherbolic/linalg.hpp"

namespace cherbolic {

enum class PointClass { Negative, Null, Positive };

const char* to_string(PointClass c);

/// Sign class of <z,z> with the relative zero band. Throws ZeroVector.
PointClass classify_vector(const Vec3& z, const HermitianForm& form,
                           double zero_rel = kZeroRel);

/// Point of the projective plane with a remembered lift and sign class.
struct ProjectivePoint {
    Vec3 lift;
    PointClass cls;
};

ProjectivePoint make_point(const Vec3& lift, const HermitianForm& form,
                           double zero_rel = kZeroRel);

/// Lifts proportional by a nonzero complex scalar within tolerance.
bool proj_point_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                      double tol = kAlgTol);
bool lifts_proportional(const Vec3& a, const Vec3& b, double tol = kAlgTol);

/// Complex geodesic given by a positive polar vector.
struct ComplexGeodesic {
    Vec3 polar;
};

ComplexGeodesic make_geodesic(const Vec3& polar, const HermitianForm& form,
                              double zero_rel = kZeroRel);

struct GeodesicRelation {
    enum class Kind { Intersecting, Asymptotic, Ultraparallel };
    Kind kind;
    /// Intersection point lift / common boundary point / perpendicular polar.
    Vec3 witness;
};

const char* to_string(GeodesicRelation::Kind k);

/// Mutual position of two complex geodesics, decided by the class of the
/// box product of their polars. Throws SameGeodesic for proportional polars.
GeodesicRelation geodesic_relation(const ComplexGeodesic& a, const ComplexGeodesic& b,
                                   const HermitianForm& form, double zero_rel = kZeroRel);

/// cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>); both points must be Negative.
double bergman_distance(const ProjectivePoint& z, const ProjectivePoint& w,
                        const HermitianForm& form);

/// Orthonormal frame of the polar complement: <n,n> = -1 for basis_neg,
/// +1 for basis_pos, mutually orthogonal. Identifies the geodesic with the
/// unit disk of curvature -1.
struct DiskChart {
    ComplexGeodesic geodesic;
    Vec3 basis_neg;
    Vec3 basis_pos;
    HermitianForm form;
};

/// Deterministic chart: the restricted form on the projections of the first
/// two standard basis vectors not parallel to the polar is diagonalized by its
/// 2x2 spectral decomposition; phases fixed so the first significant component
/// of each basis vector is real positive. Throws DegenerateForm unless the
/// complement has signature (1,1).
DiskChart disk_chart(const ComplexGeodesic& geodesic, const HermitianForm& form,
                     double zero_rel = kZeroRel);

/// Chart variant seeded from rotated combinations of the basis vectors;
/// used to confirm chart independence of downstream verdicts.
DiskChart disk_chart_alternative(const ComplexGeodesic& geodesic, const HermitianForm& form,
                                 double zero_rel = kZeroRel);

/// Disk coordinate of a point on the geodesic: write lift = a*basis_pos +
/// b*basis_neg and return a/b. Interior points map inside the unit disk,
/// Null points onto the circle (modulus clamped to 1 within the zero band).
/// Throws NotOnGeodesic.
Complex chart_map(const DiskChart& chart, const ProjectivePoint& z, double tol = kAlgTol);

/// Lift the disk coordinate back to a projective point on the geodesic.
ProjectivePoint chart_unmap(const DiskChart& chart, Complex zeta);

/// Poincare distance at curvature -1: 2 artanh |(u-v)/(1-u conj(v))|.
double disk_distance(Complex u, Complex v);

/// Angle opposite side c from the hyperbolic cosine rule,
/// gamma = arccos((cosh a cosh b - cosh c)/(sinh a sinh b)).
/// Throws DegenerateTriangle / NotATriangle.
double triangle_angle(double a, double b, double c, double tol = kAngleTol);

/// Geodesic through two points of the unit disk: a circular arc orthogonal to
/// the unit circle, or a diameter when the points are collinear with 0.
struct DiskArc {
    bool is_diameter = false;
    Complex center;   // arc case
    double radius = 0.0;
    Complex dir;      // diameter case, unit direction
    Complex p0, p1;   // endpoints
};

DiskArc make_disk_arc(Complex u, Complex v, double collinear_tol = 1e-10);

/// Unit tangent at `at` (= p0 or p1) pointing along the arc toward the other
/// endpoint.
Complex arc_tangent(const DiskArc& arc, Complex at);

/// Interior angle at the shared endpoint between two arcs, in [0, pi].
double angle_between(const DiskArc& a, const DiskArc& b, Complex vertex);

/// Point at parameter t in [0,1] along the arc from p0 to p1.
Complex arc_point(const DiskArc& arc, double t);

/// Signed side of the full geodesic containing the arc: 0 on the curve,
/// +-1 for the two components of the complement.
int side_of(const DiskArc& arc, Complex z, double tol = 1e-12);

/// True if z lies on the arc's geodesic between the endpoints (within tol).
bool on_arc_between(const DiskArc& arc, Complex z, double tol = 1e-8);

} // namespace cherbolic
