#pragma once

// Conversions and products for the classical bases (p, h, e, s, m).
//
// The power basis is the conversion hub; the exceptions are h->s / e->s
// (Kostka numbers directly) and s->h / s->e (Jacobi-Trudi determinants
// directly), which stay integral throughout.

#include "symchar/char_table.hpp"
#include "symchar/partition.hpp"
#include "symchar/rational.hpp"
#include "symchar/sym_func.hpp"

#include <cstdint>
#include <vector>

namespace symchar {

// classical-basis conversion; rejects character bases (see char_bases.hpp)
SymFunc convert(const SymFunc& f, BasisTag target);

SymFunc to_power(const SymFunc& f);
SymFunc from_power(const SymFunc& f, BasisTag target);

// product in the ring of symmetric functions; result in f's basis
SymFunc outer_product(const SymFunc& f, const SymFunc& g);

// Hall inner product: <p_lambda, p_mu> = delta z_lambda
Rational scalar_product(const SymFunc& f, const SymFunc& g);

// internal (Kronecker) product, degreewise: p_lambda * p_mu = delta z p;
// result in f's basis
SymFunc kronecker_product(const SymFunc& f, const SymFunc& g);

// det[ h_{alpha_i - i + j} ] (h_0 = 1, h_{<0} = 0) expanded in COMPLETE
SymFunc jacobi_trudi_complete(const std::vector<int>& alpha);

// The same determinant straightened: 0 or +-s_beta for a partition beta.
// Entries of alpha may be any integers.
SymFunc schur_of_composition(const std::vector<int>& alpha);

// dominance order: every prefix sum of la is >= the one of mu
bool dominates(const Partition& la, const Partition& mu);

// (n - |la|, la_1, la_2, ...); requires n - |la| >= la_1
Partition pad_partition(const Partition& la, int n);
bool paddable(const Partition& la, int n);

// Kronecker product expansion of the two padded Schur functions
// s_(n-|la|, la) * s_(n-|mu|, mu), in SCHUR
SymFunc padded_schur_kronecker(const Partition& la, const Partition& mu, int n);

// coefficient of s_(n-|nu|, nu) in the above (0 when nu cannot be padded)
std::int64_t padded_kronecker_coefficient(const Partition& la, const Partition& mu,
                                          const Partition& nu, int n);

// stable (reduced) Kronecker coefficient, computed at the stabilization bound
// n = |la|+la_1+|mu|+mu_1 (raised if needed so nu can be padded)
std::int64_t reduced_kronecker(const Partition& la, const Partition& mu,
                               const Partition& nu);

}  // namespace symchar
