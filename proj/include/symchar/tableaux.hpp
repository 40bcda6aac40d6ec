#pragma once

// Independent tableau-enumeration route from the complete homogeneous basis
// to the irreducible character basis.
//
// h_mu expands over column-strict tableaux whose cells hold multisets of
// labels (ordered by minimum, then lexicographically): the cells partition
// the multiset {1^m1, 2^m2, ...} of mu, the first row starts with |mu| blank
// cells (blanks compare below every block), rows weakly increase, columns
// strictly increase. Each tableau contributes st_rho where rho is the shape
// of the rows after the first. This is the direct combinatorial definition;
// the algebraic pipeline (h -> HTilde -> STilde) must agree with it, which
// the tests exploit as a cross-check.

#include "symchar/partition.hpp"
#include "symchar/sym_func.hpp"

#include <cstdint>

namespace symchar {

SymFunc h_to_stilde_tableaux(const Partition& mu);

// total number of tableaux above (the sum of all coefficients)
std::int64_t tableaux_count(const Partition& mu);

}  // namespace symchar
