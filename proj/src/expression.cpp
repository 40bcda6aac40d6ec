#include "symchar/expression.hpp"

#include "symchar/char_bases.hpp"
#include "symchar/classical.hpp"
#include "symchar/partition.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace symchar {

namespace {

void checkDegree(int needed, const EvalOptions& opts) {
    if (needed > opts.maxDegree)
        throw std::invalid_argument("materialized degree " + std::to_string(needed) +
                                    " exceeds the --max-degree limit of " +
                                    std::to_string(opts.maxDegree));
}

// max over terms of |la| + la_1: the padding a single term can force
int paddedBound(const SymFunc& f) {
    int b = 0;
    for (const auto& [la, c] : f.terms()) b = std::max(b, la.size() + la.first());
    return b;
}

int conversionBound(const SymFunc& f, BasisTag target) {
    if (f.basis() == target) return 0;
    bool charInvolved = is_character(f.basis()) || is_character(target);
    if (!charInvolved) return f.maxIndexSize();
    // HTilde->STilde pads to twice the degree; STilde->anything pads to
    // |la|+la_1 per term; conversions into STilde route through HTilde
    if (target == BasisTag::STilde) return 2 * f.maxIndexSize();
    if (f.basis() == BasisTag::STilde) return std::max(paddedBound(f), 2 * f.maxIndexSize());
    return f.maxIndexSize();
}

// A parsed value: either a bare rational (no basis committed yet) or a
// symmetric function.
struct Value {
    bool isScalar = true;
    Rational scalar{0};
    SymFunc fn;

    static Value ofScalar(Rational r) {
        Value v;
        v.isScalar = true;
        v.scalar = std::move(r);
        return v;
    }
    static Value ofFn(SymFunc f) {
        Value v;
        v.isScalar = false;
        v.fn = std::move(f);
        return v;
    }
};

Value negate(Value v) {
    if (v.isScalar) return Value::ofScalar(-v.scalar);
    return Value::ofFn(v.fn.scaled(Rational(-1)));
}

Value addValues(Value a, Value b, bool subtract, const EvalOptions& opts) {
    if (subtract) b = negate(std::move(b));
    if (a.isScalar && b.isScalar) return Value::ofScalar(a.scalar + b.scalar);
    if (a.isScalar) std::swap(a, b);
    SymFunc rhs = b.isScalar ? SymFunc::constant(a.fn.basis(), b.scalar) : std::move(b.fn);
    if (rhs.basis() != a.fn.basis() && !rhs.isZero()) {
        checkDegree(conversionBound(rhs, a.fn.basis()), opts);
        rhs = convert_char_basis(rhs, a.fn.basis());
    }
    a.fn += rhs;
    return a;
}

Value mulValues(Value a, Value b, const EvalOptions& opts) {
    if (a.isScalar && b.isScalar) return Value::ofScalar(a.scalar * b.scalar);
    if (a.isScalar) return Value::ofFn(b.fn.scaled(a.scalar));
    if (b.isScalar) return Value::ofFn(a.fn.scaled(b.scalar));
    BasisTag ba = a.fn.basis(), bb = b.fn.basis();
    if (ba == bb && is_character(ba)) {
        if (ba == BasisTag::STilde)
            checkDegree(paddedBound(a.fn) + paddedBound(b.fn), opts);
        else
            checkDegree(a.fn.maxIndexSize() + b.fn.maxIndexSize(), opts);
        return Value::ofFn(character_product(a.fn, b.fn));
    }
    int sum = a.fn.maxIndexSize() + b.fn.maxIndexSize();
    if (is_character(ba) || is_character(bb))
        checkDegree(2 * sum, opts);  // conversions around the product may pad
    else
        checkDegree(sum, opts);
    return Value::ofFn(ring_product(a.fn, b.fn));
}

Value kronValues(Value a, Value b, const EvalOptions& opts) {
    // promote scalars: a constant is the degree-0 element of the other basis
    if (a.isScalar && b.isScalar) return Value::ofScalar(a.scalar * b.scalar);
    if (a.isScalar) a = Value::ofFn(SymFunc::constant(b.fn.basis(), a.scalar));
    if (b.isScalar) b = Value::ofFn(SymFunc::constant(a.fn.basis(), b.scalar));
    BasisTag ba = a.fn.basis(), bb = b.fn.basis();
    if (is_classical(ba) && is_classical(bb)) {
        checkDegree(std::max(a.fn.maxIndexSize(), b.fn.maxIndexSize()), opts);
        return Value::ofFn(kronecker_product(a.fn, b.fn));
    }
    int bound = std::max(a.fn.maxIndexSize(), b.fn.maxIndexSize());
    checkDegree(2 * bound, opts);
    SymFunc pa = convert_char_basis(a.fn, BasisTag::Power);
    SymFunc pb = convert_char_basis(b.fn, BasisTag::Power);
    return Value::ofFn(convert_char_basis(kronecker_product(pa, pb), ba));
}

class Parser {
public:
    Parser(const std::string& text, const EvalOptions& opts) : text_(text), opts_(opts) {}

    Value run() {
        Value v = parseExpr();
        skipSpace();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& text_;
    const EvalOptions& opts_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skipSpace();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    // peeks a lowercase word without consuming it
    std::string peekWord() {
        skipSpace();
        std::size_t p = pos_;
        std::string w;
        while (p < text_.size() && std::islower(static_cast<unsigned char>(text_[p])))
            w += text_[p++];
        return w;
    }

    Value parseExpr() {
        Value v = parseTerm();
        for (;;) {
            skipSpace();
            if (consume('+'))
                v = addValues(std::move(v), parseTerm(), false, opts_);
            else if (consume('-'))
                v = addValues(std::move(v), parseTerm(), true, opts_);
            else
                return v;
        }
    }

    Value parseTerm() {
        Value v = parseFactor();
        for (;;) {
            skipSpace();
            if (consume('*')) {
                v = mulValues(std::move(v), parseFactor(), opts_);
            } else if (peekWord() == "kron") {
                pos_ += 4;
                v = kronValues(std::move(v), parseFactor(), opts_);
            } else {
                return v;
            }
        }
    }

    Value parseFactor() {
        skipSpace();
        if (consume('-')) return negate(parseFactor());
        return parsePrimary();
    }

    Value parsePrimary() {
        skipSpace();
        if (consume('(')) {
            Value v = parseExpr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parseRational();
        if (std::islower(static_cast<unsigned char>(c))) return parseAtom();
        fail(pos_ == text_.size() ? "unexpected end of input" : "unexpected character");
    }

    long long parseInt() {
        skipSpace();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000000000000LL) fail("number too large");
            ++pos_;
        }
        return v;
    }

    Value parseRational() {
        long long num = parseInt();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t denPos = pos_;
            long long den = parseInt();
            if (den == 0) throw ParseError("zero denominator", denPos);
            return Value::ofScalar(Rational(num, den));
        }
        return Value::ofScalar(Rational(num));
    }

    Value parseAtom() {
        std::size_t start = pos_;
        std::string word = peekWord();
        auto tag = basis_from_code(word);
        if (!tag) {
            pos_ = start;
            fail("unknown basis '" + word + "'");
        }
        pos_ += word.size();
        skipSpace();
        if (!consume('[')) fail("expected '[' after basis name");
        std::vector<int> parts;
        skipSpace();
        if (peek() != ']') {
            for (;;) {
                std::size_t partPos = pos_;
                long long p = parseInt();
                if (p <= 0 || p > 1000000) throw ParseError("invalid partition part", partPos);
                parts.push_back(static_cast<int>(p));
                skipSpace();
                if (consume(',')) continue;
                break;
            }
        }
        if (!consume(']')) fail("expected ']'");
        Partition index;
        try {
            index = Partition(parts);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
        checkDegree(index.size(), opts_);
        return Value::ofFn(SymFunc::basisElement(*tag, std::move(index)));
    }
};

}  // namespace

SymFunc parse_expression(const std::string& text, const EvalOptions& opts) {
    Parser parser(text, opts);
    Value v = parser.run();
    if (!v.isScalar) return v.fn;
    // a bare rational is a constant; Power is as good a home as any
    return SymFunc::constant(BasisTag::Power, v.scalar);
}

void check_conversion_degree(const SymFunc& f, BasisTag target, const EvalOptions& opts) {
    checkDegree(conversionBound(f, target), opts);
}

std::string render_expression(const SymFunc& f) { return f.toString(); }

std::string render_lines(const SymFunc& f) {
    std::string out;
    std::string code(basis_code(f.basis()));
    for (const auto& [idx, c] : f.terms())
        out += code + idx.toString() + " : " + c.toString() + "\n";
    return out;
}

}  // namespace symchar
