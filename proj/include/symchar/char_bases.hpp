#pragma once

// The two character bases of symmetric functions and their calculus.
//
// HTilde (induced trivial character basis): defined by
//   h_lambda = sum over multiset partitions pi of {1^l1, 2^l2, ...}
//              of ht_{m_tilde(pi)},
// inverted triangularly. STilde (irreducible character basis): related to
// HTilde by padded Kostka numbers at a stable padding size, inverted via
// Jacobi-Trudi on the padded two-part shape. Evaluations substitute the
// eigenvalues of permutation matrices; everything stays in exact arithmetic
// via the divisor sums p_k -> sum_{d|k} d m_d.

#include "symchar/cycle_polynomial.hpp"
#include "symchar/multiset.hpp"
#include "symchar/partition.hpp"
#include "symchar/rational.hpp"
#include "symchar/sym_func.hpp"

#include <cstdint>
#include <vector>

namespace symchar {

SymFunc h_to_htilde(const SymFunc& f);       // Complete -> HTilde
SymFunc htilde_to_h(const SymFunc& f);       // HTilde -> Complete
SymFunc htilde_to_stilde(const SymFunc& f);  // HTilde -> STilde
SymFunc stilde_to_htilde(const SymFunc& f);  // STilde -> HTilde

// conversion between any two of the seven bases
SymFunc convert_char_basis(const SymFunc& f, BasisTag target);

// Evaluation data for the eigenvalues of a permutation matrix of cycle type
// mu: m_d = multiplicity of d-cycles, p_k evaluates to sum_{d|k} d m_d.
struct EvalContext {
    Partition mu;
    std::vector<std::int64_t> multiplicity;  // index d-1 holds m_d

    explicit EvalContext(Partition m);
    std::int64_t powerSum(int k) const;
};

Rational eval_at_permutation_roots(const SymFunc& f, const Partition& mu);

// substitute p_k -> sum_{d|k} d x_d
CyclePolynomial to_cycle_polynomial(const SymFunc& f);
// substitute x_k -> (1/k) sum_{d|k} mobius(k/d) p_d; result in Power
SymFunc from_cycle_polynomial(const CyclePolynomial& q);

// Character polynomial q_lambda: expand s_lambda in powers, substitute
// p_i -> i x_i - 1, expand, then x_k^g -> falling factorial (x_k)_g.
// q_lambda(m_1(mu), m_2(mu), ...) equals chi^{(n-|lambda|, lambda)}(mu).
CyclePolynomial character_polynomial(const Partition& la);

// st_lambda expanded in the power basis through falling factorials of the
// cycle-count symmetric functions (1/i) sum_{d|i} mobius(i/d) p_d
SymFunc stilde_power_expansion(const Partition& la);

// phi_n(f) = sum_{mu |- n} f[Xi_mu] p_mu / z_mu, in Power; n >= 1
SymFunc frobenius_image(const SymFunc& f, int n);

// Disjoint multiset-partition representatives realizing a given
// block-multiplicity partition; the product below is independent of the
// choice (property-tested).
enum class HtRepresentative { Singletons, Graded, Pairs };
MultisetPartition ht_representative(const Partition& la, HtRepresentative scheme,
                                    int labelOffset);

// ht_la * ht_mu = sum over joins tau of representatives of ht_{m_tilde(tau)}
SymFunc htilde_product(const SymFunc& f, const SymFunc& g,
                       HtRepresentative scheme = HtRepresentative::Singletons);

// st_la * st_mu = sum_nu (reduced Kronecker coefficient) st_nu, computed from
// one padded Schur Kronecker product per term pair
SymFunc stilde_product(const SymFunc& f, const SymFunc& g);

// product in the ring of symmetric functions for any of the seven bases;
// result in f's basis
SymFunc ring_product(const SymFunc& f, const SymFunc& g);

// pointwise (tensor) product of class functions; STilde when both inputs are
// STilde, HTilde otherwise
SymFunc character_product(const SymFunc& f, const SymFunc& g);

}  // namespace symchar
