#include "cherbolic/words.hpp"

#include <cctype>
#include <cstdlib>

namespace cherbolic {

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word inverse(const Word& w) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->g, !it->inv});
    return r;
}

Word power(const Word& w, long n) {
    if (n < 0) return power(inverse(w), -n);
    Word r;
    r.letters.reserve(w.letters.size() * static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) r = r * w;
    return r;
}

std::string to_string(const Word& w) {
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        switch (l.g) {
            case Gen::R1: s += '1'; break;
            case Gen::R2: s += '2'; break;
            case Gen::R3: s += '3'; break;
            case Gen::J: s += 'J'; break;
        }
        if (l.inv) s += '\'';
    }
    return s;
}

namespace {

struct Parser {
    const std::string& text;
    GroupKind kind;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail("SyntaxError", what + " at position " + std::to_string(pos));
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) error("expected an integer exponent");
        return std::strtol(text.substr(start, pos - start).c_str(), nullptr, 10);
    }

    Word parse_atom() {
        skip_ws();
        if (pos >= text.size()) error("expected a token");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Word inner = parse_sequence();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') error("missing ')'");
            ++pos;
            return inner;
        }
        ++pos;
        Word w;
        switch (c) {
            case '1': w.letters = {{Gen::R1, false}}; break;
            case '2': w.letters = {{Gen::R2, false}}; break;
            case '3': w.letters = {{Gen::R3, false}}; break;
            case 'J':
                if (kind == GroupKind::Thompson)
                    fail("MacroUnavailable", "J is not a generator of a Thompson group");
                w.letters = {{Gen::J, false}};
                break;
            case 'P':
                if (kind == GroupKind::Thompson)
                    fail("MacroUnavailable", "P = 1J is unavailable for Thompson groups");
                w.letters = {{Gen::R1, false}, {Gen::J, false}};
                break;
            case 'Q':
                w.letters = {{Gen::R1, false}, {Gen::R2, false}, {Gen::R3, false}};
                break;
            default:
                --pos;
                error(std::string("unexpected character '") + c + "'");
        }
        return w;
    }

    Word parse_item() {
        Word w = parse_atom();
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == '\'') {
                ++pos;
                w = inverse(w);
            } else if (pos < text.size() && text[pos] == '^') {
                ++pos;
                w = power(w, parse_int());
            } else {
                break;
            }
        }
        return w;
    }

    Word parse_sequence() {
        Word w;
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] == ')') return w;
            w = w * parse_item();
        }
    }
};

} // namespace

Word parse_word(const std::string& text, GroupKind kind) {
    Parser p{text, kind};
    Word w = p.parse_sequence();
    if (!p.at_end()) p.error("trailing input");
    return w;
}

ExponentValue eval_exponent(const ExponentFormula& f, int p) {
    if (f.kind == ExponentFormula::Kind::Constant) {
        if (f.n <= 0) fail("NonIntegerExponent", "constant exponent must be positive");
        return {false, f.n};
    }
    long num = f.a * p;
    long den = f.b * p + f.c;
    if (den == 0) return {true, 0};
    if (num % den != 0)
        fail("NonIntegerExponent",
             to_string(f) + " is not an integer at p = " + std::to_string(p));
    long v = std::labs(num / den);
    if (v == 0) fail("NonIntegerExponent", to_string(f) + " vanishes at p = " + std::to_string(p));
    return {false, v};
}

std::string to_string(const ExponentFormula& f) {
    if (f.kind == ExponentFormula::Kind::Constant) return std::to_string(f.n);
    auto term = [](long coef, const std::string& var) -> std::string {
        if (coef == 0) return "";
        if (coef == 1) return var;
        if (coef == -1) return "-" + var;
        return std::to_string(coef) + var;
    };
    std::string num = term(f.a, "p");
    std::string den;
    if (f.b == 0) {
        den = std::to_string(f.c);
    } else {
        den = term(f.b, "p");
        if (f.c > 0) den += "+" + std::to_string(f.c);
        if (f.c < 0) den += std::to_string(f.c);
    }
    if (den == "1") return num;
    return "|" + num + "/(" + den + ")|";
}

} // namespace cherbolic
