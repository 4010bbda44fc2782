#include "cherbolic/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cherbolic {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_pi(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}
} // namespace

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Negative: return "negative";
        case PointClass::Null: return "null";
        case PointClass::Positive: return "positive";
    }
    return "?";
}

const char* to_string(GeodesicRelation::Kind k) {
    switch (k) {
        case GeodesicRelation::Kind::Intersecting: return "intersecting";
        case GeodesicRelation::Kind::Asymptotic: return "asymptotic";
        case GeodesicRelation::Kind::Ultraparallel: return "ultraparallel";
    }
    return "?";
}

PointClass classify_vector(const Vec3& z, const HermitianForm& form, double zero_rel) {
    if (!is_finite(z)) fail("ZeroVector", "non-finite vector");
    double n = norm(z);
    if (n < 1e-140) fail("ZeroVector", "cannot classify the zero vector");
    double s = herm_inner(z, z, form).real();
    double scale = frobenius_norm(form.matrix) * n * n;
    double zthr = zero_rel * std::max(scale, 1e-300);
    if (s > zthr) return PointClass::Positive;
    if (s < -zthr) return PointClass::Negative;
    return PointClass::Null;
}

ProjectivePoint make_point(const Vec3& lift, const HermitianForm& form, double zero_rel) {
    return {lift, classify_vector(lift, form, zero_rel)};
}

bool lifts_proportional(const Vec3& a, const Vec3& b, double tol) {
    double scale = norm(a) * norm(b);
    if (scale < 1e-280) return false;
    return norm(cross(a, b)) <= tol * scale;
}

bool proj_point_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
    return lifts_proportional(a.lift, b.lift, tol);
}

ComplexGeodesic make_geodesic(const Vec3& polar, const HermitianForm& form, double zero_rel) {
    if (classify_vector(polar, form, zero_rel) != PointClass::Positive)
        fail("NonPositivePolar", "polar vector of a complex geodesic must be positive");
    return {polar};
}

GeodesicRelation geodesic_relation(const ComplexGeodesic& a, const ComplexGeodesic& b,
                                   const HermitianForm& form, double zero_rel) {
    if (lifts_proportional(a.polar, b.polar))
        fail("SameGeodesic", "polar vectors are proportional");
    Vec3 z = box_product(a.polar, b.polar, form);
    switch (classify_vector(z, form, zero_rel)) {
        case PointClass::Negative:
            return {GeodesicRelation::Kind::Intersecting, z};
        case PointClass::Null:
            return {GeodesicRelation::Kind::Asymptotic, z};
        case PointClass::Positive:
            return {GeodesicRelation::Kind::Ultraparallel, z};
    }
    fail("SameGeodesic", "unreachable");
}

double bergman_distance(const ProjectivePoint& z, const ProjectivePoint& w,
                        const HermitianForm& form) {
    if (z.cls != PointClass::Negative || w.cls != PointClass::Negative)
        fail("NotInteriorPoint", "bergman distance requires two interior points");
    Complex zw = herm_inner(z.lift, w.lift, form);
    double numer = std::norm(zw);
    double denom = herm_inner(z.lift, z.lift, form).real() *
                   herm_inner(w.lift, w.lift, form).real();
    double ratio = numer / denom;
    if (ratio < 1.0) ratio = 1.0;
    return 2.0 * std::acosh(std::sqrt(ratio));
}

namespace {

struct Eigen2 {
    double lam_pos, lam_neg;
    Complex cp1, cp2; // eigenvector of lam_pos in the w1,w2 frame
    Complex cn1, cn2;
};

// spectral decomposition of the hermitian 2x2 [[alpha, gamma], [conj(gamma), delta]]
Eigen2 hermitian_eigen2(double alpha, Complex gamma, double delta) {
    Eigen2 r{};
    double tr = alpha + delta;
    double disc = std::sqrt(std::max((alpha - delta) * (alpha - delta) / 4.0 + std::norm(gamma), 0.0));
    r.lam_pos = tr / 2.0 + disc;
    r.lam_neg = tr / 2.0 - disc;
    if (std::abs(gamma) < 1e-15 * (std::abs(alpha) + std::abs(delta) + 1e-300)) {
        if (alpha >= delta) {
            r.cp1 = 1.0; r.cp2 = 0.0; r.cn1 = 0.0; r.cn2 = 1.0;
        } else {
            r.cp1 = 0.0; r.cp2 = 1.0; r.cn1 = 1.0; r.cn2 = 0.0;
        }
        return r;
    }
    // (A - lam I) v = 0 with rows (alpha-lam, gamma), (conj(gamma), delta-lam)
    r.cp1 = gamma; r.cp2 = r.lam_pos - alpha;
    r.cn1 = gamma; r.cn2 = r.lam_neg - alpha;
    return r;
}

DiskChart chart_from_seeds(const ComplexGeodesic& geodesic, const HermitianForm& form,
                           const Vec3& s1, const Vec3& s2, double zero_rel) {
    const Vec3& n = geodesic.polar;
    Complex nn = herm_inner(n, n, form);
    Vec3 w1 = s1 - (herm_inner(s1, n, form) / nn) * n;
    Vec3 w2 = s2 - (herm_inner(s2, n, form) / nn) * n;

    double a11 = herm_inner(w1, w1, form).real();
    double a22 = herm_inner(w2, w2, form).real();
    Complex a12 = herm_inner(w2, w1, form); // coefficient of c1 conj(c2)... hermitian pair
    Eigen2 eg = hermitian_eigen2(a11, a12, a22);

    double top = std::max(std::abs(eg.lam_pos), std::abs(eg.lam_neg));
    double zthr = zero_rel * std::max(top, 1e-300);
    if (!(eg.lam_pos > zthr) || !(eg.lam_neg < -zthr))
        fail("DegenerateForm", "polar complement is not of signature (1,1)");

    Vec3 vpos = eg.cp1 * w1 + eg.cp2 * w2;
    Vec3 vneg = eg.cn1 * w1 + eg.cn2 * w2;
    double npos = std::sqrt(herm_inner(vpos, vpos, form).real());
    double nneg = std::sqrt(-herm_inner(vneg, vneg, form).real());
    if (!(npos > 0.0) || !(nneg > 0.0))
        fail("DegenerateForm", "failed to normalize chart basis");
    vpos = Complex(1.0 / npos) * vpos;
    vneg = Complex(1.0 / nneg) * vneg;

    auto fix_phase = [](Vec3 v) {
        for (int i = 0; i < 3; ++i) {
            if (std::abs(v[i]) > 1e-9) {
                Complex ph = std::conj(v[i]) / std::abs(v[i]);
                return ph * v;
            }
        }
        return v;
    };
    vpos = fix_phase(vpos);
    vneg = fix_phase(vneg);

    return DiskChart{geodesic, vneg, vpos, form};
}

} // namespace

DiskChart disk_chart(const ComplexGeodesic& geodesic, const HermitianForm& form,
                     double zero_rel) {
    const Vec3 basis[3] = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    Vec3 seeds[2];
    int found = 0;
    for (int k = 0; k < 3 && found < 2; ++k) {
        if (norm(cross(basis[k], geodesic.polar)) <= 1e-12 * norm(geodesic.polar)) continue;
        seeds[found++] = basis[k];
    }
    if (found < 2) fail("DegenerateForm", "could not seed a chart basis");
    return chart_from_seeds(geodesic, form, seeds[0], seeds[1], zero_rel);
}

DiskChart disk_chart_alternative(const ComplexGeodesic& geodesic, const HermitianForm& form,
                                 double zero_rel) {
    DiskChart base = disk_chart(geodesic, form, zero_rel);
    // different seeds spanning the same complement
    Vec3 s1 = base.basis_pos + Complex(0.0, 1.0) * base.basis_neg;
    Vec3 s2 = Complex(0.6, 0.3) * base.basis_pos - base.basis_neg;
    return chart_from_seeds(geodesic, form, s1, s2, zero_rel);
}

Complex chart_map(const DiskChart& chart, const ProjectivePoint& z, double tol) {
    double scale = norm(z.lift) * norm(chart.geodesic.polar) *
                   frobenius_norm(chart.form.matrix);
    if (std::abs(herm_inner(z.lift, chart.geodesic.polar, chart.form)) > 1e2 * tol * scale)
        fail("NotOnGeodesic", "point does not lie on the chart geodesic");
    if (z.cls == PointClass::Positive)
        fail("NotOnGeodesic", "positive points have no disk coordinate");
    Complex a = herm_inner(z.lift, chart.basis_pos, chart.form);
    Complex b = -herm_inner(z.lift, chart.basis_neg, chart.form);
    if (std::abs(b) < 1e-140) fail("NotOnGeodesic", "degenerate chart coordinate");
    Complex zeta = a / b;
    double mod = std::abs(zeta);
    if (z.cls == PointClass::Null)
        return zeta / mod; // clamp boundary points exactly onto the circle
    if (mod >= 1.0)
        fail("NotOnGeodesic", "interior point mapped outside the disk");
    return zeta;
}

ProjectivePoint chart_unmap(const DiskChart& chart, Complex zeta) {
    Vec3 lift = zeta * chart.basis_pos + chart.basis_neg;
    return make_point(lift, chart.form);
}

double disk_distance(Complex u, Complex v) {
    double t = std::abs(u - v) / std::abs(1.0 - u * std::conj(v));
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::atanh(t);
}

double triangle_angle(double a, double b, double c, double tol) {
    if (!(a > 1e-9) || !(b > 1e-9))
        fail("DegenerateTriangle", "adjacent sides must have positive length");
    double cosg = (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
    if (cosg > 1.0 + tol || cosg < -1.0 - tol)
        fail("NotATriangle", "side lengths violate the triangle inequality");
    cosg = std::clamp(cosg, -1.0, 1.0);
    return std::acos(cosg);
}

DiskArc make_disk_arc(Complex u, Complex v, double collinear_tol) {
    if (std::abs(u - v) < 1e-14)
        fail("DegenerateTriangle", "cannot span a geodesic by a single point");
    DiskArc arc;
    arc.p0 = u;
    arc.p1 = v;
    double cr = u.real() * v.imag() - u.imag() * v.real(); // Im(conj(u) v)
    if (std::abs(cr) <= collinear_tol) {
        arc.is_diameter = true;
        arc.dir = (v - u) / std::abs(v - u);
        return arc;
    }
    // solve 2 Re(conj(c) u) = |u|^2 + 1, 2 Re(conj(c) v) = |v|^2 + 1
    double b1 = (std::norm(u) + 1.0) / 2.0;
    double b2 = (std::norm(v) + 1.0) / 2.0;
    double cx = (b1 * v.imag() - b2 * u.imag()) / cr;
    double cy = (b2 * u.real() - b1 * v.real()) / cr;
    arc.center = Complex(cx, cy);
    arc.radius = std::sqrt(std::max(std::norm(arc.center) - 1.0, 0.0));
    return arc;
}

Complex arc_tangent(const DiskArc& arc, Complex at) {
    Complex other = (std::abs(at - arc.p0) <= std::abs(at - arc.p1)) ? arc.p1 : arc.p0;
    if (arc.is_diameter) {
        Complex t = other - at;
        return t / std::abs(t);
    }
    double a_at = std::arg(at - arc.center);
    double a_ot = std::arg(other - arc.center);
    Complex t = Complex(0, 1) * (at - arc.center);
    if (wrap_pi(a_ot - a_at) < 0.0) t = -t;
    return t / std::abs(t);
}

double angle_between(const DiskArc& a, const DiskArc& b, Complex vertex) {
    Complex t1 = arc_tangent(a, vertex);
    Complex t2 = arc_tangent(b, vertex);
    double c = std::clamp((std::conj(t1) * t2).real(), -1.0, 1.0);
    return std::acos(c);
}

Complex arc_point(const DiskArc& arc, double t) {
    if (arc.is_diameter) return arc.p0 + t * (arc.p1 - arc.p0);
    double a0 = std::arg(arc.p0 - arc.center);
    double sweep = wrap_pi(std::arg(arc.p1 - arc.center) - a0);
    double r0 = std::abs(arc.p0 - arc.center);
    double r1 = std::abs(arc.p1 - arc.center);
    double r = r0 + t * (r1 - r0); // both equal the radius up to rounding
    return arc.center + std::polar(r, a0 + t * sweep);
}

int side_of(const DiskArc& arc, Complex z, double tol) {
    double s;
    if (arc.is_diameter)
        s = (std::conj(arc.dir) * (z - arc.p0)).imag();
    else
        s = std::abs(z - arc.center) - arc.radius;
    if (s > tol) return 1;
    if (s < -tol) return -1;
    return 0;
}

bool on_arc_between(const DiskArc& arc, Complex z, double tol) {
    if (arc.is_diameter) {
        Complex rel = std::conj(arc.dir) * (z - arc.p0);
        if (std::abs(rel.imag()) > tol) return false;
        double len = std::abs(arc.p1 - arc.p0);
        return rel.real() >= -tol && rel.real() <= len + tol;
    }
    if (std::abs(std::abs(z - arc.center) - arc.radius) > tol) return false;
    double a0 = std::arg(arc.p0 - arc.center);
    double sweep = wrap_pi(std::arg(arc.p1 - arc.center) - a0);
    double dz = wrap_pi(std::arg(z - arc.center) - a0);
    if (sweep >= 0.0) return dz >= -tol && dz <= sweep + tol;
    return dz <= tol && dz >= sweep - tol;
}

} // namespace cherbolic
