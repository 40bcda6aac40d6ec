#include "symchar/sym_func.hpp"

#include <stdexcept>

namespace symchar {

bool is_classical(BasisTag b) {
    return b != BasisTag::HTilde && b != BasisTag::STilde;
}

bool is_character(BasisTag b) { return !is_classical(b); }

std::string_view basis_code(BasisTag b) {
    switch (b) {
        case BasisTag::Power: return "p";
        case BasisTag::Complete: return "h";
        case BasisTag::Elementary: return "e";
        case BasisTag::Schur: return "s";
        case BasisTag::Monomial: return "m";
        case BasisTag::HTilde: return "ht";
        case BasisTag::STilde: return "st";
    }
    throw std::logic_error("basis_code: bad tag");
}

std::optional<BasisTag> basis_from_code(std::string_view code) {
    if (code == "p") return BasisTag::Power;
    if (code == "h") return BasisTag::Complete;
    if (code == "e") return BasisTag::Elementary;
    if (code == "s") return BasisTag::Schur;
    if (code == "m") return BasisTag::Monomial;
    if (code == "ht") return BasisTag::HTilde;
    if (code == "st") return BasisTag::STilde;
    return std::nullopt;
}

SymFunc SymFunc::basisElement(BasisTag b, Partition index, Rational coeff) {
    SymFunc f(b);
    f.add(index, coeff);
    return f;
}

SymFunc SymFunc::constant(BasisTag b, Rational c) {
    return basisElement(b, Partition(), std::move(c));
}

Rational SymFunc::coefficient(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::maxIndexSize() const {
    int m = 0;
    for (const auto& [idx, c] : terms_) m = std::max(m, idx.size());
    return m;
}

SymFunc SymFunc::indexSizePart(int d) const {
    SymFunc f(basis_);
    for (const auto& [idx, c] : terms_)
        if (idx.size() == d) f.terms_.emplace(idx, c);
    return f;
}

void SymFunc::add(const Partition& index, const Rational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_ && !o.isZero() && !isZero())
        throw std::invalid_argument("SymFunc: basis mismatch in addition");
    if (isZero()) basis_ = o.basis_;
    for (const auto& [idx, c] : o.terms_) add(idx, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_ && !o.isZero() && !isZero())
        throw std::invalid_argument("SymFunc: basis mismatch in subtraction");
    if (isZero()) basis_ = o.basis_;
    for (const auto& [idx, c] : o.terms_) add(idx, -c);
    return *this;
}

SymFunc SymFunc::scaled(const Rational& c) const {
    SymFunc f(basis_);
    if (c.isZero()) return f;
    for (const auto& [idx, coeff] : terms_) f.terms_.emplace(idx, coeff * c);
    return f;
}

std::string SymFunc::toString() const {
    if (terms_.empty()) return "0";
    std::string s;
    std::string code(basis_code(basis_));
    for (const auto& [idx, c] : terms_) {
        Rational abs = c < Rational(0) ? -c : c;
        if (s.empty())
            s += c < Rational(0) ? "-" : "";
        else
            s += c < Rational(0) ? " - " : " + ";
        std::string atom = code + idx.toString();
        if (abs == Rational(1))
            s += atom;
        else
            s += abs.toString() + "*" + atom;
    }
    return s;
}

}  // namespace symchar
