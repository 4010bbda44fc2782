#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cherbolic/errors.hpp"

namespace cherbolic {

enum class GroupKind { Sporadic, Thompson };

enum class Gen : std::uint8_t { R1 = 0, R2 = 1, R3 = 2, J = 3 };

struct Letter {
    Gen g;
    bool inv = false;
    bool operator==(const Letter&) const = default;
};

/// Signed generator sequence; empty means the identity.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    bool operator==(const Word&) const = default;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, long n);
std::string to_string(const Word& w);

/// Tokens 1 2 3 J P Q, each optionally suffixed by ' or ^k (k any integer);
/// parenthesized subwords take the same suffixes; whitespace optional.
/// P expands to 1J and Q to 123 before suffixes apply. P and J are illegal
/// for Thompson groups. Throws SyntaxError (with position) / MacroUnavailable.
Word parse_word(const std::string& text, GroupKind kind);

/// p-dependent relator exponent: a constant or |a p / (b p + c)|.
struct ExponentFormula {
    enum class Kind { Constant, RationalAbs };
    Kind kind = Kind::Constant;
    long n = 1;          // Constant
    long a = 1, b = 0, c = 1; // RationalAbs

    static ExponentFormula constant(long n) { return {Kind::Constant, n, 0, 0, 1}; }
    static ExponentFormula rational(long a, long b, long c) {
        return {Kind::RationalAbs, 0, a, b, c};
    }
};

struct ExponentValue {
    bool infinite = false;
    long value = 0; // meaningful when finite
};

/// Evaluation at an integer p. A vanishing denominator yields Infinite;
/// a non-integer quotient throws NonIntegerExponent.
ExponentValue eval_exponent(const ExponentFormula& f, int p);
std::string to_string(const ExponentFormula& f);

struct Relator {
    std::string name;
    Word base;
    ExponentFormula exponent;
};

struct BraidClause {
    std::string name;
    Word a;
    Word b;
    int length = 2;
};

/// Two words required to agree projectively (e.g. conjugation relations).
struct EqualityClause {
    std::string name;
    Word lhs;
    Word rhs;
};

/// Relator list with braid clauses; relators whose exponent evaluates to
/// Infinite are removed ("relations involving infinite exponents shall be
/// removed") and reported as such.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Relator> relators;
    std::vector<BraidClause> braids;
    std::vector<EqualityClause> equalities;
};

} // namespace cherbolic
