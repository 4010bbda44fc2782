#include "cherbolic/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cherbolic {

Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(Complex s, const Vec3& v) {
    return {s * v[0], s * v[1], s * v[2]};
}

Vec3 operator-(const Vec3& v) {
    return {-v[0], -v[1], -v[2]};
}

Vec3 conj(const Vec3& v) {
    return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])};
}

Complex dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Complex edot(const Vec3& a, const Vec3& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

bool is_finite(const Vec3& v) {
    for (const auto& z : v.e)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Mat3 Mat3::identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

Mat3 Mat3::diag(Complex a, Complex b, Complex c) {
    Mat3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

Mat3 operator*(Complex s, const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = s * m(i, j);
    return r;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}

Mat3 conj_transpose(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

Complex det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Complex trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

Mat3 adjugate(const Mat3& m) {
    Mat3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

Mat3 inverse(const Mat3& m) {
    Complex d = det(m);
    if (std::abs(d) < 1e-300) fail("SingularMatrix", "matrix is not invertible");
    return (1.0 / d) * adjugate(m);
}

double frobenius_norm(const Mat3& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

bool is_finite(const Mat3& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    return true;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(a(i, j) - b(i, j)));
    return s;
}

HermitianForm make_form(const Mat3& m, double tol, double zero_rel) {
    HermitianForm f;
    f.matrix = m;
    f.signature = form_signature(m, tol, zero_rel);
    return f;
}

Complex herm_inner(const Vec3& z, const Vec3& w, const HermitianForm& form) {
    Vec3 hz = form.matrix * z;
    return std::conj(w[0]) * hz[0] + std::conj(w[1]) * hz[1] + std::conj(w[2]) * hz[2];
}

Vec3 box_product(const Vec3& a, const Vec3& b, const HermitianForm& form) {
    // conj(a)^t H and conj(b)^t H as column vectors, then the plain cross product.
    Vec3 ra, rb;
    const Mat3& h = form.matrix;
    for (int j = 0; j < 3; ++j) {
        ra[j] = std::conj(a[0]) * h(0, j) + std::conj(a[1]) * h(1, j) + std::conj(a[2]) * h(2, j);
        rb[j] = std::conj(b[0]) * h(0, j) + std::conj(b[1]) * h(1, j) + std::conj(b[2]) * h(2, j);
    }
    return cross(ra, rb);
}

namespace {

// Roots of lambda^3 + a2 lambda^2 + a1 lambda + a0 via Cardano, then Newton
// polish; clustered roots are recomputed from the derivative so that exact
// double/triple roots come out to machine precision instead of sqrt(eps).
std::array<Complex, 3> cubic_roots(Complex a2, Complex a1, Complex a0) {
    const Complex third = 1.0 / 3.0;
    Complex shift = a2 * third;
    Complex p = a1 - a2 * a2 * third;
    Complex q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 * third + a0;

    std::array<Complex, 3> t;
    double scale = std::max({std::abs(p), std::abs(q), 1e-300});
    if (std::abs(p) < 1e-14 * scale && std::abs(q) < 1e-14 * scale * scale) {
        t = {0.0, 0.0, 0.0};
    } else {
        Complex disc = q * q * 0.25 + p * p * p / 27.0;
        Complex s = std::sqrt(disc);
        Complex cand1 = -q * 0.5 + s;
        Complex cand2 = -q * 0.5 - s;
        Complex w3 = (std::abs(cand1) >= std::abs(cand2)) ? cand1 : cand2;
        const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
        if (std::abs(w3) < 1e-280) {
            Complex r = std::pow(-q, third);
            t = {r, omega * r, omega * omega * r};
        } else {
            Complex w = std::pow(std::abs(w3), 1.0 / 3.0) *
                        std::exp(Complex(0.0, std::arg(w3) / 3.0));
            for (int k = 0; k < 3; ++k) {
                Complex wk = w * std::pow(omega, k);
                t[k] = wk - p / (3.0 * wk);
            }
        }
    }

    std::array<Complex, 3> r;
    for (int k = 0; k < 3; ++k) r[k] = t[k] - shift;

    auto f = [&](Complex x) { return ((x + a2) * x + a1) * x + a0; };
    auto fp = [&](Complex x) { return (3.0 * x + 2.0 * a2) * x + a1; };
    for (auto& x : r) {
        for (int it = 0; it < 3; ++it) {
            Complex d = fp(x);
            if (std::abs(d) < 1e-200) break;
            x -= f(x) / d;
        }
    }

    // Cluster refinement. Root scale for absolute comparisons.
    double rs = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), 1.0});
    const double cluster = 1e-5 * rs;
    auto close = [&](Complex x, Complex y) { return std::abs(x - y) <= cluster; };

    if (close(r[0], r[1]) && close(r[1], r[2]) && close(r[0], r[2])) {
        Complex triple = -a2 * third;
        return {triple, triple, triple};
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (!close(r[i], r[j])) continue;
            // double root is a simple root of the derivative
            Complex db = 2.0 * a2 / 3.0, dc = a1 / 3.0; // lambda^2 + db lambda + dc
            Complex sq = std::sqrt(db * db * 0.25 - dc);
            Complex y1 = -db * 0.5 + sq, y2 = -db * 0.5 - sq;
            Complex mean = (r[i] + r[j]) * 0.5;
            Complex dbl = (std::abs(y1 - mean) <= std::abs(y2 - mean)) ? y1 : y2;
            Complex simple = -a2 - 2.0 * dbl;
            return {dbl, dbl, simple};
        }
    }
    return r;
}

int rank_deficiency(const Mat3& m, double rel_threshold) {
    auto sv = singular_values(m);
    double top = std::max(sv[0], 1e-300);
    int deficiency = 0;
    for (double s : sv)
        if (s <= rel_threshold * top) ++deficiency;
    return deficiency;
}

Vec3 normalize_with_phase(Vec3 v) {
    double n = norm(v);
    if (n < 1e-300) fail("ConvergenceFailure", "zero eigenvector candidate");
    v = (1.0 / n) * v;
    // fix the phase: first component of significant magnitude made real positive
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i]) > 1e-7) {
            Complex ph = std::conj(v[i]) / std::abs(v[i]);
            return ph * v;
        }
    }
    return v;
}

} // namespace

std::array<Complex, 3> eigenvalues3(const Mat3& m) {
    Complex tr = trace(m);
    Complex c1 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                 m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Complex d = det(m);
    return cubic_roots(-tr, c1, -d);
}

std::array<double, 3> hermitian_eigenvalues(const Mat3& m) {
    auto r = eigenvalues3(m);
    std::array<double, 3> out{r[0].real(), r[1].real(), r[2].real()};
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

std::array<double, 3> singular_values(const Mat3& m) {
    Mat3 g = conj_transpose(m) * m;
    auto ev = hermitian_eigenvalues(g);
    std::array<double, 3> s;
    for (int i = 0; i < 3; ++i) s[i] = std::sqrt(std::max(ev[i], 0.0));
    return s;
}

std::array<Vec3, 3> kernel_basis(const Mat3& m, int deficiency) {
    std::array<Vec3, 3> out{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    if (deficiency >= 3) return out;
    if (deficiency == 1) {
        // kernel = cross of the two most independent rows
        Vec3 best;
        double bn = -1.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                Vec3 c = cross(m.row(i), m.row(j));
                if (norm(c) > bn) {
                    bn = norm(c);
                    best = c;
                }
            }
        }
        out[0] = normalize_with_phase(best);
        return out;
    }
    if (deficiency == 2) {
        // all rows proportional: kernel is the bilinear orthogonal of the top row
        int ri = 0;
        double rn = -1.0;
        for (int i = 0; i < 3; ++i) {
            if (norm(m.row(i)) > rn) {
                rn = norm(m.row(i));
                ri = i;
            }
        }
        Vec3 r = m.row(ri);
        Vec3 cands[3] = {Vec3(0.0, r[2], -r[1]), Vec3(-r[2], 0.0, r[0]), Vec3(r[1], -r[0], 0.0)};
        std::sort(cands, cands + 3, [](const Vec3& a, const Vec3& b) { return norm(a) > norm(b); });
        Vec3 v1 = cands[0];
        Vec3 v2 = cands[1] - (edot(v1, cands[1]) / edot(v1, v1)) * v1;
        out[0] = normalize_with_phase(v1);
        out[1] = normalize_with_phase(v2);
        return out;
    }
    fail("ConvergenceFailure", "kernel requested for a full-rank matrix");
}

Signature form_signature(const Mat3& m, double tol, double zero_rel) {
    double scale = std::max(frobenius_norm(m), 1e-300);
    if (max_abs_diff(m, conj_transpose(m)) > tol * scale)
        fail("NotHermitian", "matrix is not hermitian within tolerance");
    auto ev = hermitian_eigenvalues(m);
    double top = std::max({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2]), 1e-300});
    double zthr = zero_rel * top;
    Signature sig;
    for (double v : ev) {
        if (v > zthr)
            ++sig.n_plus;
        else if (v < -zthr)
            ++sig.n_minus;
        else
            ++sig.n_zero;
    }
    return sig;
}

std::array<EigenPair, 3> eigen3(const Mat3& m, double tol) {
    if (!is_finite(m)) fail("ConvergenceFailure", "non-finite matrix");
    auto roots = eigenvalues3(m);
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    double mscale = std::max(frobenius_norm(m), 1e-300);
    const double cluster =
        1e-5 * std::max({std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2]), 1.0});
    const double rank_rel = 1e-7;

    std::array<EigenPair, 3> out;
    int i = 0;
    while (i < 3) {
        int j = i;
        while (j + 1 < 3 && std::abs(roots[j + 1] - roots[i]) <= cluster) ++j;
        int mult = j - i + 1;
        Complex lambda = roots[i];
        Mat3 b = m - lambda * Mat3::identity();
        int def = rank_deficiency(b, rank_rel);
        if (def < 1) def = 1; // an eigenvalue always has at least one eigenvector
        if (def > mult) def = mult;
        auto kb = kernel_basis(b, def);
        for (int k = 0; k < mult; ++k) {
            out[i + k].value = roots[i + k];
            out[i + k].vector = kb[std::min(k, def - 1)];
        }
        i = j + 1;
    }

    for (auto& ep : out) {
        Vec3 resid = m * ep.vector - ep.value * ep.vector;
        if (norm(resid) > tol * mscale * norm(ep.vector))
            fail("ConvergenceFailure", "eigenpair residual above tolerance");
    }
    return out;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Complex det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

std::array<Complex, 2> eigenvalues2(const Mat2& m) {
    Complex tr = m.a + m.d;
    Complex sq = std::sqrt(tr * tr * 0.25 - det(m));
    return {tr * 0.5 + sq, tr * 0.5 - sq};
}

bool is_scalar(const Mat2& m, double tol) {
    double scale = std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
    if (scale < 1e-300) return false;
    double off = std::max(std::abs(m.b), std::abs(m.c));
    return off <= tol * scale && std::abs(m.a - m.d) <= tol * scale;
}

bool is_scalar(const Mat3& m, double tol) {
    double scale = std::max(frobenius_norm(m), 1e-300);
    Complex lambda = trace(m) / 3.0;
    return max_abs_diff(m, Mat3::diag(lambda, lambda, lambda)) <= tol * scale;
}

} // namespace cherbolic
