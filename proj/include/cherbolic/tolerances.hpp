#pragma once

namespace cherbolic {

// Default tolerances. Algebraic identities hold to ~1e-13 in practice; the
// 1e-9 default leaves headroom for words of ~40 letters. Zero decisions are
// relative: a quantity is "zero" below zero_rel times its natural scale.
struct Tolerances {
    double alg = 1e-9;       // relative, algebraic identities / projective matching
    double angle = 1e-6;     // absolute, angles and distances
    double zero_rel = 1e-8;  // relative zero-threshold for sign/class decisions
    double chart = 1e-8;     // chart/metric agreement
    int max_order = 2000;    // powering bound for order detection
};

inline constexpr double kAlgTol = 1e-9;
inline constexpr double kAngleTol = 1e-6;
inline constexpr double kZeroRel = 1e-8;
inline constexpr double kChartTol = 1e-8;
inline constexpr int kMaxOrder = 2000;

} // namespace cherbolic
