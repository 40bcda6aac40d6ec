#include "symchar/cycle_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchar {

void CyclePolynomial::trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

CyclePolynomial CyclePolynomial::constant(Rational c) {
    CyclePolynomial p;
    p.add({}, c);
    return p;
}

CyclePolynomial CyclePolynomial::variable(int varIndex) {
    if (varIndex < 1)
        throw std::invalid_argument("CyclePolynomial: variable index must be >= 1");
    Exponents e(static_cast<size_t>(varIndex), 0);
    e.back() = 1;
    return monomial(std::move(e), Rational(1));
}

CyclePolynomial CyclePolynomial::monomial(Exponents e, Rational c) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("CyclePolynomial: negative exponent");
    CyclePolynomial p;
    p.add(std::move(e), c);
    return p;
}

Rational CyclePolynomial::coefficient(const Exponents& e) const {
    Exponents t = e;
    trim(t);
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CyclePolynomial::add(Exponents e, const Rational& c) {
    if (c.isZero()) return;
    trim(e);
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CyclePolynomial& CyclePolynomial::operator+=(const CyclePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

CyclePolynomial& CyclePolynomial::operator-=(const CyclePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

CyclePolynomial operator*(const CyclePolynomial& a, const CyclePolynomial& b) {
    CyclePolynomial r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            CyclePolynomial::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add(std::move(e), ca * cb);
        }
    }
    return r;
}

CyclePolynomial CyclePolynomial::scaled(const Rational& c) const {
    CyclePolynomial r;
    if (c.isZero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

Rational CyclePolynomial::evaluate(const std::vector<std::int64_t>& m) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rational x(i < m.size() ? m[i] : 0);
            for (int j = 0; j < e[i]; ++j) term *= x;
        }
        total += term;
    }
    return total;
}

std::string CyclePolynomial::toString() const {
    if (terms_.empty()) return "0";
    // (degree desc, exponents lex desc), exponents padded implicitly by
    // comparing positionally with missing entries as 0
    std::vector<const TermMap::value_type*> ord;
    ord.reserve(terms_.size());
    for (const auto& kv : terms_) ord.push_back(&kv);
    auto deg = [](const Exponents& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    std::sort(ord.begin(), ord.end(), [&](const auto* a, const auto* b) {
        int da = deg(a->first), db = deg(b->first);
        if (da != db) return da > db;
        size_t n = std::max(a->first.size(), b->first.size());
        for (size_t i = 0; i < n; ++i) {
            int xa = i < a->first.size() ? a->first[i] : 0;
            int xb = i < b->first.size() ? b->first[i] : 0;
            if (xa != xb) return xa > xb;
        }
        return false;
    });
    std::string s;
    for (const auto* kv : ord) {
        const auto& [e, c] = *kv;
        Rational abs = c < Rational(0) ? -c : c;
        if (s.empty())
            s += c < Rational(0) ? "-" : "";
        else
            s += c < Rational(0) ? " - " : " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += abs.toString();
        else if (abs == Rational(1))
            s += mono;
        else
            s += abs.toString() + "*" + mono;
    }
    return s;
}

CyclePolynomial falling_factorial_poly(int varIndex, int k) {
    if (varIndex < 1)
        throw std::invalid_argument("falling_factorial_poly: variable index must be >= 1");
    if (k < 0) throw std::invalid_argument("falling_factorial_poly: k must be >= 0");
    CyclePolynomial r = CyclePolynomial::constant(Rational(1));
    CyclePolynomial x = CyclePolynomial::variable(varIndex);
    for (int j = 0; j < k; ++j)
        r = r * (x - CyclePolynomial::constant(Rational(j)));
    return r;
}

}  // namespace symchar
