#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "cherbolic/errors.hpp"
#include "cherbolic/tolerances.hpp"

namespace cherbolic {

using Complex = std::complex<double>;

/// Column vector in C^3.
struct Vec3 {
    std::array<Complex, 3> e{};

    Vec3() = default;
    Vec3(Complex a, Complex b, Complex c) : e{a, b, c} {}

    Complex& operator[](std::size_t i) { return e[i]; }
    const Complex& operator[](std::size_t i) const { return e[i]; }
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(Complex s, const Vec3& v);
Vec3 operator-(const Vec3& v);

Vec3 conj(const Vec3& v);
/// Bilinear dot product (no conjugation).
Complex dot(const Vec3& a, const Vec3& b);
/// Euclidean inner product, conjugate-linear in the first slot.
Complex edot(const Vec3& a, const Vec3& b);
/// Bilinear cross product, right-handed convention.
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
bool is_finite(const Vec3& v);

/// 3x3 complex matrix, row major.
struct Mat3 {
    std::array<std::array<Complex, 3>, 3> e{};

    static Mat3 identity();
    static Mat3 diag(Complex a, Complex b, Complex c);

    Complex& operator()(std::size_t i, std::size_t j) { return e[i][j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }

    Vec3 row(std::size_t i) const { return Vec3(e[i][0], e[i][1], e[i][2]); }
    Vec3 col(std::size_t j) const { return Vec3(e[0][j], e[1][j], e[2][j]); }
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(Complex s, const Mat3& m);
Vec3 operator*(const Mat3& m, const Vec3& v);

Mat3 conj_transpose(const Mat3& m);
Complex det(const Mat3& m);
Complex trace(const Mat3& m);
/// Adjugate; equals the inverse when det = 1.
Mat3 adjugate(const Mat3& m);
Mat3 inverse(const Mat3& m);
double frobenius_norm(const Mat3& m);
bool is_finite(const Mat3& m);
/// max_ij |a_ij - b_ij|
double max_abs_diff(const Mat3& a, const Mat3& b);

struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Hermitian form on C^3 with cached signature. Group builders require (2,1,0).
struct HermitianForm {
    Mat3 matrix;
    Signature signature;
};

/// Validates hermitian symmetry (throws NotHermitian) and caches the signature.
HermitianForm make_form(const Mat3& m, double tol = kAlgTol, double zero_rel = kZeroRel);

/// <z,w> = conj(w)^t H z; linear in z, conjugate-linear in w.
Complex herm_inner(const Vec3& z, const Vec3& w, const HermitianForm& form);

/// Hermitian cross product: cross of the two H-dual row vectors.
/// Orthogonal to both arguments; the zero vector is a legal output.
Vec3 box_product(const Vec3& a, const Vec3& b, const HermitianForm& form);

/// Eigenvalue sign counts of a Hermitian matrix. Zero band is
/// zero_rel * (largest eigenvalue magnitude). Throws NotHermitian.
Signature form_signature(const Mat3& m, double tol = kAlgTol, double zero_rel = kZeroRel);

struct EigenPair {
    Complex value;
    Vec3 vector; // unit euclidean norm, first significant entry real positive
};

/// All three eigenpairs of a general complex 3x3 matrix. Closed-form cubic with
/// cluster-aware refinement: a detected double root is recomputed as the simple
/// root of the derivative, the triple root as -tr/3. For a defective repeated
/// eigenvalue the same eigenvector is reported for each copy.
/// Throws ConvergenceFailure if a residual cannot be certified.
std::array<EigenPair, 3> eigen3(const Mat3& m, double tol = 1e-8);

/// Roots of the characteristic polynomial only (cluster-refined, unordered).
std::array<Complex, 3> eigenvalues3(const Mat3& m);

/// Real eigenvalues of a Hermitian matrix, descending.
std::array<double, 3> hermitian_eigenvalues(const Mat3& m);

/// Singular values, descending (euclidean).
std::array<double, 3> singular_values(const Mat3& m);

/// Orthonormal (euclidean) basis of the kernel of a rank-deficient matrix,
/// sized by the declared rank deficiency.
/// rank 2 -> one vector, rank 1 -> two vectors, rank 0 -> three.
std::array<Vec3, 3> kernel_basis(const Mat3& m, int deficiency);

/// 2x2 complex matrix for restrictions of isometries to a complex geodesic.
struct Mat2 {
    Complex a, b, c, d; // row major [[a,b],[c,d]]

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Complex det(const Mat2& m);
std::array<Complex, 2> eigenvalues2(const Mat2& m);
/// m proportional to the identity within tol (relative).
bool is_scalar(const Mat2& m, double tol = kAlgTol);
bool is_scalar(const Mat3& m, double tol = kAlgTol);

} // namespace cherbolic
