#pragma once

// Sparse symmetric functions: a basis tag plus a partition-indexed map of
// exact rational coefficients (zero coefficients never stored).
//
// Bases:
//   Power / Complete / Elementary / Schur / Monomial  - classical, graded
//   HTilde - induced trivial character basis (inhomogeneous)
//   STilde - irreducible character basis (inhomogeneous)
// The empty-partition element is the unit 1 in every basis.

#include "symchar/partition.hpp"
#include "symchar/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace symchar {

enum class BasisTag { Power, Complete, Elementary, Schur, Monomial, HTilde, STilde };

bool is_classical(BasisTag b);
bool is_character(BasisTag b);

// short codes "p h e s m ht st"
std::string_view basis_code(BasisTag b);
std::optional<BasisTag> basis_from_code(std::string_view code);

class SymFunc {
public:
    using TermMap = std::map<Partition, Rational>;

    SymFunc() = default;
    explicit SymFunc(BasisTag b) : basis_(b) {}

    static SymFunc zero(BasisTag b) { return SymFunc(b); }
    static SymFunc basisElement(BasisTag b, Partition index,
                                Rational coeff = Rational(1));
    static SymFunc constant(BasisTag b, Rational c);

    BasisTag basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    int termCount() const { return static_cast<int>(terms_.size()); }
    Rational coefficient(const Partition& index) const;

    // largest |index| with nonzero coefficient; 0 when zero or constant
    int maxIndexSize() const;
    // restrict to terms with |index| == d
    SymFunc indexSizePart(int d) const;

    void add(const Partition& index, const Rational& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const Rational& c) const;

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    // "h[3,1] + 2*h[2]" style, terms by (size, lex) order
    std::string toString() const;

private:
    BasisTag basis_ = BasisTag::Power;
    TermMap terms_;
};

}  // namespace symchar
