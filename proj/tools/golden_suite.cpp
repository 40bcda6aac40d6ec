#include "golden_suite.hpp"

#include "symchar/char_bases.hpp"
#include "symchar/classical.hpp"
#include "symchar/combinatorics.hpp"
#include "symchar/cycle_polynomial.hpp"
#include "symchar/expression.hpp"
#include "symchar/tableaux.hpp"

#include <cstdint>
#include <functional>
#include <utility>

namespace symchar::golden {

namespace {

struct Outcome {
    std::string actual;
    std::string expected;
};

using Body = std::function<Outcome(bool perturb)>;

SymFunc parse(const std::string& s) { return parse_expression(s); }

SymFunc conv(const std::string& s, BasisTag t) { return convert_char_basis(parse(s), t); }

Outcome cmp(SymFunc actual, const SymFunc& expected, bool perturb) {
    if (perturb) actual.add(Partition(), Rational(1));
    return {actual.toString(), expected.toString()};
}

Outcome cmpRational(Rational actual, const Rational& expected, bool perturb) {
    if (perturb) actual += Rational(1);
    return {actual.toString(), expected.toString()};
}

Outcome cmpCount(std::int64_t actual, std::int64_t expected, bool perturb) {
    if (perturb) actual += 1;
    return {std::to_string(actual), std::to_string(expected)};
}

Outcome cmpPoly(CyclePolynomial actual, const CyclePolynomial& expected, bool perturb) {
    if (perturb) actual += CyclePolynomial::constant(Rational(1));
    return {actual.toString(), expected.toString()};
}

const std::vector<std::pair<std::string, Body>>& cases() {
    static const std::vector<std::pair<std::string, Body>> list = {
        {"h31-ht",
         [](bool p) {
             return cmp(conv("h[3,1]", BasisTag::HTilde),
                        parse("ht[3,1] + ht[2,1] + ht[1,1,1] + 3*ht[1,1] + ht[1]"), p);
         }},
        {"h21-st",
         [](bool p) {
             return cmp(conv("h[2,1]", BasisTag::STilde),
                        parse("4*st[] + 7*st[1] + 3*st[1,1] + 4*st[2] + st[2,1] + st[3]"), p);
         }},
        {"h21-tableaux",
         [](bool p) {
             return cmp(h_to_stilde_tableaux(Partition({2, 1})),
                        parse("4*st[] + 7*st[1] + 3*st[1,1] + 4*st[2] + st[2,1] + st[3]"), p);
         }},
        {"h21-tableaux-count",
         [](bool p) { return cmpCount(tableaux_count(Partition({2, 1})), 20, p); }},
        {"h1111-st",
         [](bool p) {
             return cmp(conv("h[1,1,1,1]", BasisTag::STilde),
                        parse("15*st[] + 37*st[1] + 31*st[1,1] + 10*st[1,1,1] + st[1,1,1,1] + "
                              "31*st[2] + 20*st[2,1] + 3*st[2,1,1] + 2*st[2,2] + 10*st[3] + "
                              "3*st[3,1] + st[4]"),
                        p);
         }},
        {"h1111-tableaux-s3",
         [](bool p) {
             return cmpCount(
                 h_to_stilde_tableaux(Partition({1, 1, 1, 1})).coefficient(Partition({3})).toInt64(),
                 10, p);
         }},
        {"h22-ht",
         [](bool p) {
             return cmp(conv("h[2,2]", BasisTag::HTilde),
                        parse("ht[1] + 3*ht[1,1] + ht[1,1,1] + ht[2] + 2*ht[2,1] + ht[2,2]"), p);
         }},
        {"ht22-st",
         [](bool p) {
             return cmp(conv("ht[2,2]", BasisTag::STilde),
                        parse("st[] + 2*st[1] + st[1,1] + 3*st[2] + 2*st[2,1] + st[2,2] + "
                              "2*st[3] + st[3,1] + st[4]"),
                        p);
         }},
        {"h22-st",
         [](bool p) {
             return cmp(conv("h[2,2]", BasisTag::STilde),
                        parse("9*st[] + 17*st[1] + 9*st[1,1] + st[1,1,1] + 14*st[2] + "
                              "6*st[2,1] + st[2,2] + 5*st[3] + st[3,1] + st[4]"),
                        p);
         }},
        {"h422-s",
         [](bool p) {
             return cmp(conv("h[4,2,2]", BasisTag::Schur),
                        parse("s[4,2,2] + s[4,3,1] + s[4,4] + 2*s[5,2,1] + 2*s[5,3] + "
                              "s[6,1,1] + 3*s[6,2] + 2*s[7,1] + s[8]"),
                        p);
         }},
        {"st2-squared",
         [](bool p) {
             return cmp(parse("st[2]*st[2]"),
                        parse("st[] + st[1] + st[1,1] + st[1,1,1] + 2*st[2] + 2*st[2,1] + "
                              "st[2,2] + st[3] + st[3,1] + st[4]"),
                        p);
         }},
        {"s62-kron",
         [](bool p) {
             return cmp(parse("s[6,2] kron s[6,2]"),
                        parse("s[4,2,2] + s[4,3,1] + s[4,4] + s[5,1,1,1] + 2*s[5,2,1] + "
                              "s[5,3] + s[6,1,1] + 2*s[6,2] + s[7,1] + s[8]"),
                        p);
         }},
        {"ht21-squared",
         [](bool p) {
             return cmp(parse("ht[2,1]*ht[2,1]"),
                        parse("ht[1,1,1] + 4*ht[1,1,1,1] + ht[1,1,1,1,1] + ht[2,1] + "
                              "ht[2,1,1] + 2*ht[2,1,1,1] + ht[2,2,1] + ht[2,2,1,1]"),
                        p);
         }},
        {"h521-kron",
         [](bool p) {
             return cmp(parse("h[5,2,1] kron h[5,2,1]"),
                        parse("h[5,1,1,1] + 4*h[4,1,1,1,1] + h[3,1,1,1,1,1] + h[5,2,1] + "
                              "h[4,2,1,1] + 2*h[3,2,1,1,1] + h[3,2,2,1] + h[2,2,2,1,1]"),
                        p);
         }},
        {"eval-ht31",
         [](bool p) {
             return cmpRational(
                 eval_at_permutation_roots(parse("ht[3,1]"), Partition({3, 3, 2, 2, 1})),
                 Rational(2), p);
         }},
        {"eval-st31",
         [](bool p) {
             return cmpRational(
                 eval_at_permutation_roots(parse("st[3,1]"), Partition({3, 3, 2, 2, 1})),
                 Rational(-1), p);
         }},
        {"scalar-h731",
         [](bool p) {
             return cmpRational(scalar_product(parse("h[7,3,1]"), parse("p[3,3,2,2,1]")),
                                Rational(2), p);
         }},
        {"scalar-s731",
         [](bool p) {
             return cmpRational(scalar_product(parse("s[7,3,1]"), parse("p[3,3,2,2,1]")),
                                Rational(-1), p);
         }},
        {"frob-st32",
         [](bool p) {
             return cmp(convert(frobenius_image(parse("st[3,2]"), 8), BasisTag::Schur),
                        parse("s[3,3,2]"), p);
         }},
        {"frob-ht32",
         [](bool p) {
             return cmp(convert(frobenius_image(parse("ht[3,2]"), 6), BasisTag::Complete),
                        parse("h[3,2,1]"), p);
         }},
        {"s3-power",
         [](bool p) {
             return cmp(conv("s[3]", BasisTag::Power),
                        parse("1/6*p[1,1,1] + 1/2*p[2,1] + 1/3*p[3]"), p);
         }},
        {"charpoly-3",
         [](bool p) {
             CyclePolynomial expected = falling_factorial_poly(1, 3).scaled(Rational(1, 6));
             expected -= falling_factorial_poly(1, 2).scaled(Rational(1, 2));
             expected += CyclePolynomial::variable(1) * CyclePolynomial::variable(2);
             expected -= CyclePolynomial::variable(2);
             expected += CyclePolynomial::variable(3);
             return cmpPoly(character_polynomial(Partition({3})), expected, p);
         }},
        {"stpower-3",
         [](bool p) {
             return cmp(stilde_power_expansion(Partition({3})),
                        parse("1/6*p[1,1,1] + 1/2*p[2,1] + 1/3*p[3] - 3/2*p[1,1] - "
                              "1/2*p[2] + p[1]"),
                        p);
         }},
        {"recoversf-x2",
         [](bool p) {
             return cmp(from_cycle_polynomial(CyclePolynomial::variable(2)),
                        parse("1/2*p[2] - 1/2*p[1]"), p);
         }},
        {"recoversf-x3",
         [](bool p) {
             return cmp(from_cycle_polynomial(CyclePolynomial::variable(3)),
                        parse("1/3*p[3] - 1/3*p[1]"), p);
         }},
        {"st1-ht",
         [](bool p) { return cmp(conv("st[1]", BasisTag::HTilde), parse("ht[1] - ht[]"), p); }},
        {"st2-ht",
         [](bool p) { return cmp(conv("st[2]", BasisTag::HTilde), parse("ht[2] - ht[1]"), p); }},
    };
    return list;
}

}  // namespace

std::vector<std::string> case_names() {
    std::vector<std::string> names;
    for (const auto& [name, body] : cases()) names.push_back(name);
    return names;
}

std::vector<CaseResult> run(const std::string& filter, bool perturb) {
    std::vector<CaseResult> results;
    for (const auto& [name, body] : cases()) {
        if (!filter.empty() && name != filter) continue;
        CaseResult r;
        r.name = name;
        try {
            Outcome o = body(perturb);
            r.passed = o.actual == o.expected;
            if (!r.passed)
                r.detail = "expected: " + o.expected + "\n  actual:   " + o.actual;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace symchar::golden
