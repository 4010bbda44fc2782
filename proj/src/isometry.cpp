#include "cherbolic/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cherbolic {

namespace {
constexpr double kPi = 3.14159265358979323846;

// thresholds of the classification bands (relative)
constexpr double kUnitLo = 1e-8;  // below: treated as unit modulus
constexpr double kUnitHi = 1e-7;  // above: loxodromic; in between: borderline
constexpr double kRankLo = 1e-9;  // below: singular direction
constexpr double kRankHi = 1e-6;

bool scalar_is_cube_root(Complex lambda, double tol) {
    for (int k = 0; k < 3; ++k) {
        Complex w = std::polar(1.0, 2.0 * kPi * k / 3.0);
        if (std::abs(lambda - w) <= 1e3 * tol) return true;
    }
    return false;
}
} // namespace

const char* to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::RegularElliptic: return "regular-elliptic";
        case IsometryClass::ComplexReflection: return "complex-reflection";
        case IsometryClass::ElliptoParabolic: return "ellipto-parabolic";
        case IsometryClass::UnipotentParabolic: return "unipotent-parabolic";
        case IsometryClass::Loxodromic: return "loxodromic";
        case IsometryClass::Identity: return "identity";
    }
    return "?";
}

Isometry make_isometry(const Mat3& m, const HermitianForm& form, double tol) {
    if (!is_finite(m)) fail("InvalidIsometry", "non-finite matrix");
    if (std::abs(det(m) - 1.0) > 1e2 * tol)
        fail("InvalidIsometry", "determinant is not 1");
    Mat3 g = conj_transpose(m) * form.matrix * m;
    double scale = std::max(frobenius_norm(form.matrix), 1e-300);
    if (max_abs_diff(g, form.matrix) > 1e2 * tol * scale)
        fail("InvalidIsometry", "matrix does not preserve the form");
    return {m, form};
}

Isometry operator*(const Isometry& a, const Isometry& b) {
    return {a.m * b.m, a.form};
}

Isometry inverse_isometry(const Isometry& a) {
    return {adjugate(a.m), a.form}; // adjugate = inverse at det 1
}

Isometry power(const Isometry& a, long n) {
    if (n < 0) return power(inverse_isometry(a), -n);
    Isometry acc{Mat3::identity(), a.form};
    Mat3 base = a.m;
    long k = n;
    while (k > 0) {
        if (k & 1) acc.m = acc.m * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Isometry complex_reflection(const Vec3& n, int p, const HermitianForm& form) {
    if (p < 2) fail("NonPositivePolar", "reflection order must be at least 2");
    if (classify_vector(n, form) != PointClass::Positive)
        fail("NonPositivePolar", "mirror polar vector must be positive");
    double phi = 2.0 * kPi / p;
    Complex u = std::polar(1.0, phi / 3.0);
    Complex ubar = std::conj(u);
    Complex coef = u * u - ubar;
    Complex nn = herm_inner(n, n, form);
    Mat3 m;
    const Vec3 basis[3] = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    for (int j = 0; j < 3; ++j) {
        Vec3 col = ubar * basis[j] + (coef * herm_inner(basis[j], n, form) / nn) * n;
        for (int i = 0; i < 3; ++i) m(i, j) = col[i];
    }
    return make_isometry(m, form);
}

bool is_proj_identity(const Mat3& m, double tol) {
    if (!is_scalar(m, tol)) return false;
    return scalar_is_cube_root(trace(m) / 3.0, tol);
}

bool proj_equal(const Isometry& a, const Isometry& b, double tol) {
    return is_proj_identity(a.m * adjugate(b.m), tol);
}

Classification classify_isometry(const Isometry& iso, double tol) {
    auto roots = eigenvalues3(iso.m);
    double dev = 0.0;
    for (auto r : roots) dev = std::max(dev, std::abs(std::abs(r) - 1.0));
    if (dev >= kUnitHi) return {IsometryClass::Loxodromic};
    if (dev > kUnitLo)
        fail("UnresolvedBorderline", "eigenvalue modulus inside the tolerance band");

    if (is_proj_identity(iso.m, tol)) return {IsometryClass::Identity};

    // cluster the unit eigenvalues
    double cl_lo = 1e-7, cl_hi = 1e-6;
    int pair_i = -1, pair_j = -1;
    int close_pairs = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double d = std::abs(roots[i] - roots[j]);
            if (d < cl_lo) {
                ++close_pairs;
                pair_i = i;
                pair_j = j;
            } else if (d < cl_hi) {
                fail("UnresolvedBorderline", "eigenvalue separation inside the tolerance band");
            }
        }

    if (close_pairs == 0) {
        // distinct unit eigenvalues: semisimple; the fixed point class decides
        auto pairs = eigen3(iso.m);
        bool has_negative = false;
        for (const auto& ep : pairs)
            if (classify_vector(ep.vector, iso.form) == PointClass::Negative) has_negative = true;
        if (!has_negative)
            fail("UnresolvedBorderline", "elliptic eigenvalues without an interior fixed point");
        return {IsometryClass::RegularElliptic};
    }

    if (close_pairs == 3) {
        // single eigenvalue; non-scalar, hence a unipotent-type parabolic
        return {IsometryClass::UnipotentParabolic};
    }

    // one repeated eigenvalue: reflection if diagonalizable, parabolic if not
    Complex lambda = (roots[pair_i] + roots[pair_j]) * 0.5;
    Mat3 b = iso.m - lambda * Mat3::identity();
    auto sv = singular_values(b);
    double top = std::max(sv[0], 1e-300);
    double mid = sv[1] / top;
    if (mid < kRankLo) {
        // two-dimensional eigenspace: a complex reflection (in a line or point)
        Complex simple = roots[0 + 1 + 2 - pair_i - pair_j];
        Mat3 bs = iso.m - simple * Mat3::identity();
        auto kb = kernel_basis(bs, 1);
        bool in_point = classify_vector(kb[0], iso.form) == PointClass::Negative;
        return {IsometryClass::ComplexReflection, in_point};
    }
    if (mid > kRankHi) return {IsometryClass::ElliptoParabolic};
    fail("UnresolvedBorderline", "diagonalizability test inside the tolerance band");
}

std::optional<int> projective_order(const Isometry& m, int max_order, double tol) {
    Mat3 acc = m.m;
    for (int n = 1; n <= max_order; ++n) {
        if (is_proj_identity(acc, tol)) return n;
        acc = acc * m.m;
    }
    return std::nullopt;
}

namespace {

// best rational approximation p/q of x with q <= qmax, by continued fractions
std::optional<std::pair<long, long>> rational_approx(double x, long qmax, double eps) {
    double v = x;
    long p0 = 1, q0 = 0, p1 = 0, q1 = 1; // convergents p/q
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e15) break;
        long a = static_cast<long>(fl);
        if (q0 != 0 && a > (qmax - q1) / q0) break;
        long p2 = a * p0 + p1;
        long q2 = a * q0 + q1;
        if (q2 > qmax) break;
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        if (std::abs(x - double(p0) / double(q0)) < eps) return std::make_pair(p0, q0);
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q0 > 0 && std::abs(x - double(p0) / double(q0)) < eps) return std::make_pair(p0, q0);
    return std::nullopt;
}

} // namespace

std::optional<int> projective_order_by_eigenvalues(const Isometry& m, int max_order,
                                                   double tol) {
    auto roots = eigenvalues3(m.m);
    for (auto r : roots)
        if (std::abs(std::abs(r) - 1.0) > kUnitLo) return std::nullopt;
    long qmax = 3L * max_order;
    long n = 1;
    for (int i = 1; i < 3; ++i) {
        Complex ratio = roots[i] / roots[0];
        double theta = std::arg(ratio) / (2.0 * kPi);
        if (theta < 0) theta += 1.0;
        if (theta > 1.0 - 1e-13) theta = 0.0;
        if (theta == 0.0) continue;
        auto pq = rational_approx(theta, qmax, 1e-7);
        if (!pq) return std::nullopt;
        n = std::lcm(n, pq->second);
        if (n > qmax) return std::nullopt;
    }
    // candidate from eigenvalue arguments; the true order is its smallest
    // divisor that already powers to a scalar (and must exist: verify)
    std::vector<long> divisors;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());
    for (long d : divisors) {
        if (d > max_order) break;
        if (is_proj_identity(power(m, d).m, tol)) return static_cast<int>(d);
    }
    return std::nullopt;
}

std::vector<ProjectivePoint> fixed_points(const Isometry& m, double tol) {
    if (is_proj_identity(m.m, tol))
        fail("IdentityElement", "the identity fixes every point");
    auto pairs = eigen3(m.m);
    std::vector<ProjectivePoint> out;
    for (const auto& ep : pairs) {
        bool dup = false;
        for (const auto& q : out)
            if (lifts_proportional(q.lift, ep.vector, 1e-7)) dup = true;
        if (!dup) out.push_back(make_point(ep.vector, m.form));
    }
    return out;
}

Mat2 restrict_to_chart(const Isometry& iso, const DiskChart& chart, double tol) {
    const Vec3& n = chart.geodesic.polar;
    Vec3 gn = iso.m * n;
    if (!lifts_proportional(gn, n, 1e2 * tol))
        fail("DoesNotStabilize", "isometry does not fix the chart polar");
    Vec3 gp = iso.m * chart.basis_pos;
    Vec3 gq = iso.m * chart.basis_neg;
    Mat2 a;
    a.a = herm_inner(gp, chart.basis_pos, chart.form);
    a.c = -herm_inner(gp, chart.basis_neg, chart.form);
    a.b = herm_inner(gq, chart.basis_pos, chart.form);
    a.d = -herm_inner(gq, chart.basis_neg, chart.form);
    return a;
}

Complex moebius_apply(const Mat2& m, Complex z) {
    return (m.a * z + m.b) / (m.c * z + m.d);
}

std::optional<int> disk_order(const Mat2& m, int max_order, double tol) {
    Mat2 acc = m;
    std::optional<int> by_power;
    for (int n = 1; n <= max_order; ++n) {
        if (is_scalar(acc, tol)) {
            by_power = n;
            break;
        }
        acc = acc * m;
    }
    // eigenvalue-argument cross-check
    auto ev = eigenvalues2(m);
    std::optional<int> by_eigen;
    double mod_dev = std::max(std::abs(std::abs(ev[0]) - std::abs(ev[1])), 0.0);
    double scale = std::max(std::abs(ev[0]), std::abs(ev[1]));
    if (mod_dev <= 1e-8 * scale && scale > 0.0) {
        Complex ratio = ev[0] / ev[1];
        if (std::abs(std::abs(ratio) - 1.0) <= 1e-8) {
            double theta = std::arg(ratio) / (2.0 * kPi);
            if (theta < 0) theta += 1.0;
            if (theta > 1.0 - 1e-12) theta = 0.0;
            if (theta == 0.0) {
                by_eigen = is_scalar(m, 1e-6) ? std::optional<int>(1) : std::nullopt;
            } else if (auto pq = rational_approx(theta, 3L * max_order, 1e-7)) {
                if (pq->second <= max_order) by_eigen = static_cast<int>(pq->second);
            }
        }
    }
    if (by_power && by_eigen && *by_power != *by_eigen)
        fail("UnresolvedBorderline", "disk order routes disagree");
    return by_power;
}

std::optional<Complex> disk_fixed_point(const Mat2& m, double tol) {
    auto ev = eigenvalues2(m);
    for (Complex lambda : ev) {
        // eigenvector of [[a-l, b], [c, d-l]]
        Complex v0, v1;
        if (std::abs(m.b) + std::abs(m.a - lambda) >= std::abs(m.d - lambda) + std::abs(m.c)) {
            v0 = -m.b;
            v1 = m.a - lambda;
        } else {
            v0 = m.d - lambda;
            v1 = -m.c;
        }
        if (std::abs(v1) < 1e-14 * (std::abs(v0) + 1e-300)) continue; // point at infinity
        Complex zeta = v0 / v1;
        if (std::abs(zeta) < 1.0 - tol) return zeta;
    }
    return std::nullopt;
}

} // namespace cherbolic
