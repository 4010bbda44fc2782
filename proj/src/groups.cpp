#include "cherbolic/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace cherbolic {

namespace {
constexpr double kPi = 3.14159265358979323846;

const Vec3 kBasis[3] = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};

HermitianForm signature_checked_form(const Mat3& h, double tol) {
    Signature sig = form_signature(h, 1e3 * tol);
    if (!(sig == Signature{2, 1, 0}))
        fail("WrongSignature", "the form does not have signature (2,1)");
    HermitianForm f;
    f.matrix = h;
    f.signature = sig;
    return f;
}
} // namespace

const Vec3& TriangleGroup::polar(int i) const { return kBasis[i - 1]; }

TriangleGroup sporadic_group(int p, Complex tau, double tol) {
    if (p < 2) fail("NonCatalogParameter", "reflection order must be at least 2");
    TriangleGroup g;
    g.kind = GroupKind::Sporadic;
    g.p = p;
    g.tau = tau;

    Complex u = std::polar(1.0, 2.0 * kPi / (3.0 * p));
    Complex ub = std::conj(u);
    double alpha = 2.0 - 2.0 * std::cos(2.0 * kPi / p);
    Complex beta = (ub * ub - u) * tau;

    Mat3 h;
    h(0, 0) = h(1, 1) = h(2, 2) = alpha;
    h(0, 1) = beta; h(1, 2) = beta; h(2, 0) = beta;
    h(0, 2) = std::conj(beta); h(1, 0) = std::conj(beta); h(2, 1) = std::conj(beta);
    g.form = signature_checked_form(h, tol);

    Mat3 jm;
    jm(0, 2) = 1.0; jm(1, 0) = 1.0; jm(2, 1) = 1.0;
    Mat3 r1;
    r1(0, 0) = u * u; r1(0, 1) = tau; r1(0, 2) = -u * std::conj(tau);
    r1(1, 1) = ub; r1(2, 2) = ub;

    Isometry j = make_isometry(jm, g.form, tol);
    Isometry r1i = make_isometry(r1, g.form, tol);
    Isometry jinv = inverse_isometry(j);
    Isometry r2i = j * r1i * jinv;
    Isometry r3i = j * r2i * jinv;

    g.r = {r1i, r2i, r3i};
    g.r_inv = {inverse_isometry(r1i), inverse_isometry(r2i), inverse_isometry(r3i)};
    g.j = j;
    g.j_inv = jinv;
    return g;
}

TriangleGroup thompson_group(int p, Complex rho, Complex sigma, Complex tau, double tol) {
    if (p < 2) fail("NonCatalogParameter", "reflection order must be at least 2");
    TriangleGroup g;
    g.kind = GroupKind::Thompson;
    g.p = p;
    g.tau = tau;
    g.rho = rho;
    g.sigma = sigma;

    Complex u = std::polar(1.0, 2.0 * kPi / (3.0 * p));
    Complex ub = std::conj(u);
    double alpha = 2.0 - 2.0 * std::cos(2.0 * kPi / p);
    Complex coef = ub * ub - u;
    Complex b1 = coef * rho, b2 = coef * sigma, b3 = coef * tau;

    Mat3 h;
    h(0, 0) = h(1, 1) = h(2, 2) = alpha;
    h(0, 1) = b1; h(0, 2) = std::conj(b3);
    h(1, 0) = std::conj(b1); h(1, 2) = b2;
    h(2, 0) = b3; h(2, 1) = std::conj(b2);
    g.form = signature_checked_form(h, tol);

    Mat3 r1, r2, r3;
    r1(0, 0) = u * u; r1(0, 1) = rho; r1(0, 2) = -u * std::conj(tau);
    r1(1, 1) = ub; r1(2, 2) = ub;
    r2(0, 0) = ub; r2(1, 0) = -u * std::conj(rho); r2(1, 1) = u * u;
    r2(1, 2) = sigma; r2(2, 2) = ub;
    r3(0, 0) = ub; r3(1, 1) = ub; r3(2, 0) = tau;
    r3(2, 1) = -u * std::conj(sigma); r3(2, 2) = u * u;

    g.r = {make_isometry(r1, g.form, tol), make_isometry(r2, g.form, tol),
           make_isometry(r3, g.form, tol)};
    g.r_inv = {inverse_isometry(g.r[0]), inverse_isometry(g.r[1]), inverse_isometry(g.r[2])};
    return g;
}

Isometry eval_word(const TriangleGroup& g, const Word& w) {
    Mat3 acc = Mat3::identity();
    for (const Letter& l : w.letters) {
        const Mat3* m = nullptr;
        if (l.g == Gen::J) {
            if (!g.j) fail("MacroUnavailable", "J is unavailable for this group");
            m = l.inv ? &g.j_inv->m : &g.j->m;
        } else {
            int i = static_cast<int>(l.g);
            m = l.inv ? &g.r_inv[i].m : &g.r[i].m;
        }
        acc = acc * (*m);
    }
    return {acc, g.form};
}

Isometry eval_word(const TriangleGroup& g, const std::string& text) {
    return eval_word(g, parse_word(text, g.kind));
}

bool braid_holds(const TriangleGroup& g, const Word& a, const Word& b, int n, double tol) {
    if (n < 2) fail("SyntaxError", "braid length must be at least 2");
    Isometry ma = eval_word(g, a);
    Isometry mb = eval_word(g, b);
    Mat3 x = Mat3::identity(), y = Mat3::identity();
    for (int i = 0; i < n; ++i) {
        x = x * ((i % 2 == 0) ? ma.m : mb.m);
        y = y * ((i % 2 == 0) ? mb.m : ma.m);
    }
    return is_proj_identity(x * adjugate(y), tol);
}

PresentationReport verify_presentation(const TriangleGroup& g, const Presentation& pres,
                                       int p, double tol, int max_order) {
    PresentationReport rep;
    rep.pass = true;
    for (const Relator& rel : pres.relators) {
        RelatorVerdict v;
        v.name = rel.name;
        v.word = to_string(rel.base);
        v.formula = to_string(rel.exponent);
        ExponentValue ev = eval_exponent(rel.exponent, p);
        if (ev.infinite) {
            v.removed = true;
            v.pass = true;
            rep.relators.push_back(v);
            continue;
        }
        v.exponent = ev.value;
        Isometry base = eval_word(g, rel.base);
        v.power_is_identity = is_proj_identity(power(base, ev.value).m, tol);
        v.measured_order = projective_order(base, max_order, tol);
        v.order_matches = v.measured_order && *v.measured_order == ev.value;
        v.pass = v.power_is_identity && v.order_matches;
        rep.pass = rep.pass && v.pass;
        rep.relators.push_back(v);
    }
    for (const BraidClause& bc : pres.braids) {
        BraidVerdict v{bc.name, bc.length, braid_holds(g, bc.a, bc.b, bc.length, tol)};
        rep.pass = rep.pass && v.holds;
        rep.braids.push_back(v);
    }
    for (const EqualityClause& eq : pres.equalities) {
        EqualityVerdict v{eq.name, proj_equal(eval_word(g, eq.lhs), eval_word(g, eq.rhs), tol)};
        rep.pass = rep.pass && v.holds;
        rep.equalities.push_back(v);
    }
    return rep;
}

std::array<ProjectivePoint, 3> triangle_vertices(const TriangleGroup& g) {
    auto vertex = [&](int i) {
        Vec3 v = box_product(kBasis[(i + 1) % 3], kBasis[(i + 2) % 3], g.form);
        return make_point(v, g.form);
    };
    return {vertex(0), vertex(1), vertex(2)};
}

namespace {

std::vector<FamilyInfo> build_family_catalog() {
    const double s5 = std::sqrt(5.0);
    std::vector<FamilyInfo> v;

    FamilyInfo tau1{Family::Tau1, "tau1", GroupKind::Sporadic,
                    Complex(-1.0, std::sqrt(2.0)), {}, {}, {3, 4, 6}, true, false};
    FamilyInfo tau2{Family::Tau2, "tau2", GroupKind::Sporadic,
                    Complex(-0.5, -std::sqrt(7.0) / 2.0), {}, {}, {3, 4, 5, 6, 8, 12},
                    true, false};
    FamilyInfo tau3{Family::Tau3, "tau3", GroupKind::Sporadic,
                    std::polar(1.0, -kPi / 9.0) *
                        (-std::polar(1.0, -2.0 * kPi / 3.0) - (1.0 - s5) / 2.0),
                    {}, {}, {2, 3, 4}, false, false};
    FamilyInfo tau4{Family::Tau4, "tau4", GroupKind::Sporadic,
                    Complex((1.0 + s5) / 2.0, 0.0), {}, {}, {3, 4, 5, 10}, true, false};

    Complex phi((1.0 + s5) / 2.0, 0.0);
    FamilyInfo s2{Family::S2, "s2", GroupKind::Thompson, Complex(1.0, 0.0),
                  Complex(1.0, 0.0) + phi * std::polar(1.0, 2.0 * kPi / 3.0),
                  Complex(1.0, 0.0), {3, 4, 5}, true, false};
    FamilyInfo e2{Family::E2, "e2", GroupKind::Thompson, Complex(std::sqrt(2.0), 0.0),
                  Complex(std::sqrt(2.0), 0.0), std::polar(1.0, -2.0 * kPi / 3.0),
                  {3, 4, 6, 12}, true, false};
    FamilyInfo h1{Family::H1, "h1", GroupKind::Thompson, std::polar(1.0, -4.0 * kPi / 7.0),
                  Complex(-0.5, std::sqrt(7.0) / 2.0), std::polar(1.0, -4.0 * kPi / 7.0),
                  {2}, false, true};
    FamilyInfo h2{Family::H2, "h2", GroupKind::Thompson, std::polar(1.0, 4.0 * kPi / 5.0),
                  Complex(-1.0, 0.0) - std::polar(1.0, -2.0 * kPi / 5.0),
                  std::polar(1.0, 4.0 * kPi / 5.0), {2, 3, 5, 10}, false, true};

    v = {tau1, tau2, tau3, tau4, s2, e2, h1, h2};
    return v;
}

Word w_sp(const std::string& s) { return parse_word(s, GroupKind::Sporadic); }
Word w_th(const std::string& s) { return parse_word(s, GroupKind::Thompson); }

Presentation tau1_presentation() {
    Presentation p;
    p.generator_names = {"R1", "R2", "R3", "J"};
    p.relators = {
        {"R1^p", w_sp("1"), ExponentFormula::rational(1, 0, 1)},
        {"J^3", w_sp("J"), ExponentFormula::constant(3)},
        {"(R1 J)^8", w_sp("1 J"), ExponentFormula::constant(8)},
        {"(R1 R2)^|3p/(p-3)|", w_sp("1 2"), ExponentFormula::rational(3, 1, -3)},
        {"(R1 R2 R3 R2')^|4p/(p-4)|", w_sp("1 2 3 2'"), ExponentFormula::rational(4, 1, -4)},
    };
    p.braids = {
        {"br3(1, 2 3 2 3' 2')", w_sp("1"), w_sp("2 3 2 3' 2'"), 3},
        {"br6(1, 2)", w_sp("1"), w_sp("2"), 6},
        {"br4(1, 2 3 2')", w_sp("1"), w_sp("2 3 2'"), 4},
        {"br3(1, 3' 2' 3 2 3)", w_sp("1"), w_sp("3' 2' 3 2 3"), 3},
    };
    p.equalities = {
        {"R3 = J R2 J'", w_sp("3"), w_sp("J 2 J'")},
        {"R3 = J' R1 J", w_sp("3"), w_sp("J' 1 J")},
    };
    return p;
}

Presentation tau2_presentation() {
    Presentation p;
    p.generator_names = {"R1", "R2", "R3", "J"};
    p.relators = {
        {"R1^p", w_sp("1"), ExponentFormula::rational(1, 0, 1)},
        {"J^3", w_sp("J"), ExponentFormula::constant(3)},
        {"(R1 J)^7", w_sp("1 J"), ExponentFormula::constant(7)},
        {"(R1 R2)^|4p/(p-4)|", w_sp("1 2"), ExponentFormula::rational(4, 1, -4)},
        {"(R1 R2 R3 R2')^|6p/(p-6)|", w_sp("1 2 3 2'"), ExponentFormula::rational(6, 1, -6)},
    };
    p.braids = {
        {"br4(1, 2)", w_sp("1"), w_sp("2"), 4},
        {"br3(1, 2 3 2')", w_sp("1"), w_sp("2 3 2'"), 3},
    };
    p.equalities = {
        {"R3 = J R2 J'", w_sp("3"), w_sp("J 2 J'")},
        {"R3 = J' R1 J", w_sp("3"), w_sp("J' 1 J")},
    };
    return p;
}

Presentation tau4_presentation() {
    Presentation p;
    p.generator_names = {"R1", "R2", "R3", "J"};
    p.relators = {
        {"R1^p", w_sp("1"), ExponentFormula::rational(1, 0, 1)},
        {"J^3", w_sp("J"), ExponentFormula::constant(3)},
        {"(R1 J)^5", w_sp("1 J"), ExponentFormula::constant(5)},
        {"(R1 R2)^|10p/(3p-10)|", w_sp("1 2"), ExponentFormula::rational(10, 3, -10)},
        {"(R1 R2 R3 R2')^|6p/(p-6)|", w_sp("1 2 3 2'"), ExponentFormula::rational(6, 1, -6)},
    };
    p.braids = {
        {"br5(1, 2)", w_sp("1"), w_sp("2"), 5},
        {"br3(1, 2 3 2')", w_sp("1"), w_sp("2 3 2'"), 3},
    };
    p.equalities = {
        {"R3 = J R2 J'", w_sp("3"), w_sp("J 2 J'")},
        {"R3 = J' R1 J", w_sp("3"), w_sp("J' 1 J")},
    };
    return p;
}

Presentation s2_presentation() {
    Presentation p;
    p.generator_names = {"R1", "R2", "R3"};
    p.relators = {
        {"R1^p", w_th("1"), ExponentFormula::rational(1, 0, 1)},
        {"R2^p", w_th("2"), ExponentFormula::rational(1, 0, 1)},
        {"R3^p", w_th("3"), ExponentFormula::rational(1, 0, 1)},
        {"(R1 R2 R3)^5", w_th("Q"), ExponentFormula::constant(5)},
        {"(R1 R2)^|4p/(p-4)|", w_th("1 2"), ExponentFormula::rational(4, 1, -4)},
        {"(R1 R2 R3 R2')^|10p/(3p-10)|", w_th("1 2 3 2'"), ExponentFormula::rational(10, 3, -10)},
    };
    p.braids = {
        {"br3(1, 3)", w_th("1"), w_th("3"), 3},
        {"br3(2, 3)", w_th("2"), w_th("3"), 3},
        {"br4(1, 2)", w_th("1"), w_th("2"), 4},
        {"br5(1, 2 3 2')", w_th("1"), w_th("2 3 2'"), 5},
    };
    return p;
}

Presentation e2_presentation() {
    Presentation p;
    p.generator_names = {"R1", "R2", "R3"};
    p.relators = {
        {"R1^p", w_th("1"), ExponentFormula::rational(1, 0, 1)},
        {"R2^p", w_th("2"), ExponentFormula::rational(1, 0, 1)},
        {"R3^p", w_th("3"), ExponentFormula::rational(1, 0, 1)},
        {"(R1 R2 R3)^6", w_th("Q"), ExponentFormula::constant(6)},
        {"(R1 R3)^|4p/(p-4)|", w_th("1 3"), ExponentFormula::rational(4, 1, -4)},
        {"(R1 R2)^|4p/(p-4)|", w_th("1 2"), ExponentFormula::rational(4, 1, -4)},
        {"(R1 R2 R3 R2')^|4p/(p-4)|", w_th("1 2 3 2'"), ExponentFormula::rational(4, 1, -4)},
        {"(R3 R1 R2 R1')^|3p/(p-3)|", w_th("3 1 2 1'"), ExponentFormula::rational(3, 1, -3)},
    };
    p.braids = {
        {"br3(2, 3)", w_th("2"), w_th("3"), 3},
        {"br4(3, 1)", w_th("3"), w_th("1"), 4},
        {"br4(1, 2)", w_th("1"), w_th("2"), 4},
        {"br4(1, 2 3 2')", w_th("1"), w_th("2 3 2'"), 4},
        {"br6(3, 1 2 1')", w_th("3"), w_th("1 2 1'"), 6},
    };
    return p;
}

} // namespace

const std::vector<FamilyInfo>& family_catalog() {
    static const std::vector<FamilyInfo> catalog = build_family_catalog();
    return catalog;
}

const FamilyInfo& family_by_id(const std::string& id) {
    std::string lower;
    for (char c : id) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& f : family_catalog())
        if (f.id == lower) return f;
    fail("NonCatalogParameter", "unknown group family '" + id + "'");
}

bool family_has_p(const FamilyInfo& info, int p) {
    return std::find(info.lattice_p.begin(), info.lattice_p.end(), p) != info.lattice_p.end();
}

TriangleGroup build_group(const FamilyInfo& info, int p, double tol) {
    if (info.kind == GroupKind::Sporadic) return sporadic_group(p, info.tau, tol);
    return thompson_group(p, info.rho, info.sigma, info.tau, tol);
}

TriangleGroup build_group_by_id(const std::string& group_id, double tol) {
    auto bad = [&]() {
        fail("NonCatalogParameter",
             "group id must look like 'sporadic:tau1:p3', got '" + group_id + "'");
    };
    auto c1 = group_id.find(':');
    if (c1 == std::string::npos) bad();
    auto c2 = group_id.find(':', c1 + 1);
    if (c2 == std::string::npos) bad();
    std::string kind = group_id.substr(0, c1);
    std::string fam = group_id.substr(c1 + 1, c2 - c1 - 1);
    std::string ps = group_id.substr(c2 + 1);
    if (ps.empty() || ps[0] != 'p') bad();
    int p = std::atoi(ps.c_str() + 1);
    if (p < 2) bad();
    const FamilyInfo& info = family_by_id(fam);
    if ((kind == "sporadic") != (info.kind == GroupKind::Sporadic))
        fail("NonCatalogParameter", "family '" + fam + "' is not of kind '" + kind + "'");
    return build_group(info, p, tol);
}

const Presentation& ambient_presentation(Family f) {
    static const Presentation tau1 = tau1_presentation();
    static const Presentation tau2 = tau2_presentation();
    static const Presentation tau4 = tau4_presentation();
    static const Presentation s2 = s2_presentation();
    static const Presentation e2 = e2_presentation();
    switch (f) {
        case Family::Tau1: return tau1;
        case Family::Tau2: return tau2;
        case Family::Tau4: return tau4;
        case Family::S2: return s2;
        case Family::E2: return e2;
        default: break;
    }
    fail("NonCatalogParameter", "no displayed presentation for this family");
}

} // namespace cherbolic
