#include "symchar/char_bases.hpp"

#include "symchar/char_table.hpp"
#include "symchar/classical.hpp"
#include "symchar/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace symchar {

namespace {

// ht_la for a single index, expanded in Complete. Triangular: every multiset
// partition other than the all-singletons one has fewer blocks than |la|, so
// the recursion strictly decreases the index size.
const SymFunc& htildeBasisInH(const Partition& la) {
    static std::map<Partition, SymFunc> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(la);
        if (it != memo.end()) return it->second;
    }
    SymFunc f = SymFunc::basisElement(BasisTag::Complete, la);
    Multiset content = multiset_of_partition(la);
    for (const MultisetPartition& pi : multiset_partitions(content)) {
        Partition idx = m_tilde(pi);
        if (idx == la) continue;  // the all-singletons partition
        f -= htildeBasisInH(idx);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return memo.emplace(la, std::move(f)).first->second;
}

SymFunc powerFallingFactorial(const SymFunc& y, int k) {
    // y (y - 1) ... (y - k + 1) in the Power basis
    SymFunc acc = SymFunc::constant(BasisTag::Power, Rational(1));
    for (int j = 0; j < k; ++j) {
        SymFunc factor = y;
        factor += SymFunc::constant(BasisTag::Power, Rational(-j));
        acc = outer_product(acc, factor);
    }
    return acc;
}

// (1/i) sum_{d|i} mobius(i/d) p_d: the class function counting i-cycles,
// up to the falling-factorial correction handled by the caller
SymFunc cycleCounter(int i) {
    SymFunc y(BasisTag::Power);
    for (std::int64_t d : divisors(i)) {
        int mu = mobius(i / d);
        if (mu == 0) continue;
        y.add(Partition({static_cast<int>(d)}), Rational(mu, i));
    }
    return y;
}

}  // namespace

SymFunc h_to_htilde(const SymFunc& f) {
    if (f.basis() != BasisTag::Complete)
        throw std::invalid_argument("h_to_htilde: input must be in the Complete basis");
    SymFunc out(BasisTag::HTilde);
    for (const auto& [la, c] : f.terms()) {
        Multiset content = multiset_of_partition(la);
        for (const MultisetPartition& pi : multiset_partitions(content))
            out.add(m_tilde(pi), c);
    }
    return out;
}

SymFunc htilde_to_h(const SymFunc& f) {
    if (f.basis() != BasisTag::HTilde)
        throw std::invalid_argument("htilde_to_h: input must be in the HTilde basis");
    SymFunc out(BasisTag::Complete);
    for (const auto& [la, c] : f.terms()) out += htildeBasisInH(la).scaled(c);
    return out;
}

SymFunc htilde_to_stilde(const SymFunc& f) {
    if (f.basis() != BasisTag::HTilde)
        throw std::invalid_argument("htilde_to_stilde: input must be in the HTilde basis");
    SymFunc out(BasisTag::STilde);
    int n = 2 * f.maxIndexSize();
    if (n < 1) n = 1;
    for (const auto& [mu, c] : f.terms()) {
        Partition paddedMu = pad_partition(mu, n);
        for (int k = 0; k <= mu.size(); ++k) {
            for (const Partition& la : partitions_of(k)) {
                Partition paddedLa = pad_partition(la, n);
                if (!dominates(paddedLa, paddedMu)) continue;
                std::int64_t kk = kostka(paddedLa, paddedMu);
                if (kk != 0) out.add(la, c * Rational(kk));
            }
        }
    }
    return out;
}

SymFunc stilde_to_htilde(const SymFunc& f) {
    if (f.basis() != BasisTag::STilde)
        throw std::invalid_argument("stilde_to_htilde: input must be in the STilde basis");
    SymFunc out(BasisTag::HTilde);
    for (const auto& [la, c] : f.terms()) {
        // Inverse of the padded Kostka system. The expansion reaches every mu
        // with |mu| <= |la|, so n must make all of those paddable at once:
        // n = 2|la| (>= |la| + la_1 and >= |mu| + mu_1 for all such mu).
        int n = 2 * la.size();
        // s_{(n-|la|, la)} via Jacobi-Trudi. At this n the largest part of
        // every resulting index is its padding part (lower-row entries never
        // exceed n - |la|), so stripping it recovers the unpadded index.
        std::vector<int> alpha;
        alpha.push_back(n - la.size());
        for (int i = 0; i < la.length(); ++i) alpha.push_back(la.part(i));
        SymFunc jt = jacobi_trudi_complete(alpha);
        for (const auto& [nu, w] : jt.terms()) {
            std::vector<int> tail;
            for (int i = 1; i < nu.length(); ++i) tail.push_back(nu.part(i));
            out.add(Partition(tail), c * w);
        }
    }
    return out;
}

SymFunc convert_char_basis(const SymFunc& f, BasisTag target) {
    if (f.basis() == target) return f;
    switch (f.basis()) {
        case BasisTag::HTilde:
            if (target == BasisTag::STilde) return htilde_to_stilde(f);
            return convert(htilde_to_h(f), target);
        case BasisTag::STilde: {
            SymFunc ht = stilde_to_htilde(f);
            if (target == BasisTag::HTilde) return ht;
            return convert(htilde_to_h(ht), target);
        }
        default: {
            if (is_classical(target)) return convert(f, target);
            SymFunc ht = h_to_htilde(convert(f, BasisTag::Complete));
            if (target == BasisTag::HTilde) return ht;
            return htilde_to_stilde(ht);
        }
    }
}

EvalContext::EvalContext(Partition m) : mu(std::move(m)) {
    int maxPart = mu.empty() ? 0 : mu.first();
    multiplicity.assign(static_cast<std::size_t>(maxPart), 0);
    for (int i = 0; i < mu.length(); ++i) multiplicity[mu.part(i) - 1] += 1;
}

std::int64_t EvalContext::powerSum(int k) const {
    if (k < 1) throw std::invalid_argument("EvalContext::powerSum: k must be positive");
    std::int64_t total = 0;
    for (std::int64_t d : divisors(k)) {
        if (d <= static_cast<std::int64_t>(multiplicity.size()))
            total += d * multiplicity[d - 1];
    }
    return total;
}

Rational eval_at_permutation_roots(const SymFunc& f, const Partition& mu) {
    SymFunc g = convert_char_basis(f, BasisTag::Power);
    EvalContext ctx(mu);
    Rational total(0);
    for (const auto& [ga, c] : g.terms()) {
        Rational prod = c;
        for (int i = 0; i < ga.length(); ++i) prod = prod * Rational(ctx.powerSum(ga.part(i)));
        total = total + prod;
    }
    return total;
}

CyclePolynomial to_cycle_polynomial(const SymFunc& f) {
    SymFunc g = convert_char_basis(f, BasisTag::Power);
    CyclePolynomial out;
    for (const auto& [ga, c] : g.terms()) {
        CyclePolynomial prod = CyclePolynomial::constant(c);
        for (int i = 0; i < ga.length(); ++i) {
            int k = ga.part(i);
            CyclePolynomial factor;
            for (std::int64_t d : divisors(k))
                factor += CyclePolynomial::variable(static_cast<int>(d)).scaled(Rational(d));
            prod = prod * factor;
        }
        out += prod;
    }
    return out;
}

SymFunc from_cycle_polynomial(const CyclePolynomial& q) {
    SymFunc out(BasisTag::Power);
    for (const auto& [expo, c] : q.terms()) {
        SymFunc prod = SymFunc::constant(BasisTag::Power, c);
        for (std::size_t v = 0; v < expo.size(); ++v) {
            SymFunc xv = cycleCounter(static_cast<int>(v) + 1);
            for (int rep = 0; rep < expo[v]; ++rep) prod = outer_product(prod, xv);
        }
        out += prod;
    }
    return out;
}

CyclePolynomial character_polynomial(const Partition& la) {
    SymFunc sp = to_power(SymFunc::basisElement(BasisTag::Schur, la));
    // substitute p_i -> i x_i - 1 and expand
    CyclePolynomial raw;
    for (const auto& [ga, c] : sp.terms()) {
        CyclePolynomial prod = CyclePolynomial::constant(c);
        for (int i = 0; i < ga.length(); ++i) {
            int k = ga.part(i);
            CyclePolynomial factor = CyclePolynomial::variable(k).scaled(Rational(k));
            factor += CyclePolynomial::constant(Rational(-1));
            prod = prod * factor;
        }
        raw += prod;
    }
    // reinterpret each monomial prod x_k^{g_k} as prod (x_k)_{g_k}
    CyclePolynomial out;
    for (const auto& [expo, c] : raw.terms()) {
        CyclePolynomial term = CyclePolynomial::constant(c);
        for (std::size_t v = 0; v < expo.size(); ++v) {
            if (expo[v] > 0)
                term = term * falling_factorial_poly(static_cast<int>(v) + 1, expo[v]);
        }
        out += term;
    }
    return out;
}

SymFunc stilde_power_expansion(const Partition& la) {
    int n = la.size();
    SymFunc out(BasisTag::Power);
    for (const Partition& ga : partitions_of(n)) {
        std::int64_t ch = chi(la, ga);
        if (ch == 0) continue;
        SymFunc prod = SymFunc::constant(BasisTag::Power, Rational(ch, z_of(ga)));
        for (const auto& [i, r] : ga.multiplicities()) {
            // bold p_{i^r} = sum_k (-1)^{r-k} i^k C(r,k) (y_i)_k with
            // y_i = (1/i) sum_{d|i} mobius(i/d) p_d
            SymFunc yi = cycleCounter(i);
            SymFunc boldp(BasisTag::Power);
            Integer ipow = 1;
            for (int k = 0; k <= r; ++k) {
                Rational coeff = Rational(ipow * binomial(r, k));
                if ((r - k) % 2 == 1) coeff = -coeff;
                boldp += powerFallingFactorial(yi, k).scaled(coeff);
                ipow *= i;
            }
            prod = outer_product(prod, boldp);
        }
        out += prod;
    }
    return out;
}

SymFunc frobenius_image(const SymFunc& f, int n) {
    if (n < 1) throw std::invalid_argument("frobenius_image: n must be positive");
    SymFunc g = convert_char_basis(f, BasisTag::Power);
    SymFunc out(BasisTag::Power);
    for (const Partition& mu : partitions_of(n)) {
        EvalContext ctx(mu);
        Rational total(0);
        for (const auto& [ga, c] : g.terms()) {
            Rational prod = c;
            for (int i = 0; i < ga.length(); ++i)
                prod = prod * Rational(ctx.powerSum(ga.part(i)));
            total = total + prod;
        }
        if (!total.isZero()) out.add(mu, total / Rational(z_of(mu)));
    }
    return out;
}

MultisetPartition ht_representative(const Partition& la, HtRepresentative scheme,
                                    int labelOffset) {
    std::vector<Multiset> blocks;
    for (int i = 0; i < la.length(); ++i) {
        int label = labelOffset + i + 1;
        std::vector<int> cell;
        switch (scheme) {
            case HtRepresentative::Singletons:
                cell = {label};
                break;
            case HtRepresentative::Graded:
                cell.assign(static_cast<std::size_t>(i) + 1, label);
                break;
            case HtRepresentative::Pairs:
                cell = {labelOffset + 2 * i + 1, labelOffset + 2 * i + 2};
                break;
        }
        for (int rep = 0; rep < la.part(i); ++rep) blocks.push_back(Multiset(cell));
    }
    return MultisetPartition(blocks);
}

SymFunc htilde_product(const SymFunc& f, const SymFunc& g, HtRepresentative scheme) {
    if (f.basis() != BasisTag::HTilde || g.basis() != BasisTag::HTilde)
        throw std::invalid_argument("htilde_product: both inputs must be in the HTilde basis");
    SymFunc out(BasisTag::HTilde);
    for (const auto& [la, cf] : f.terms()) {
        MultisetPartition pi = ht_representative(la, scheme, 0);
        Multiset sup = pi.support();
        int offset = 0;
        for (int v : sup.elems()) offset = std::max(offset, v);
        for (const auto& [mu, cg] : g.terms()) {
            MultisetPartition theta = ht_representative(mu, scheme, offset);
            Rational c = cf * cg;
            for (const MultisetPartition& tau : join(pi, theta)) out.add(m_tilde(tau), c);
        }
    }
    return out;
}

SymFunc stilde_product(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != BasisTag::STilde || g.basis() != BasisTag::STilde)
        throw std::invalid_argument("stilde_product: both inputs must be in the STilde basis");
    SymFunc out(BasisTag::STilde);
    for (const auto& [la, cf] : f.terms()) {
        for (const auto& [mu, cg] : g.terms()) {
            int n = la.size() + la.first() + mu.size() + mu.first();
            if (n < 1) n = 1;
            SymFunc prod = padded_schur_kronecker(la, mu, n);
            Rational c = cf * cg;
            for (const auto& [nu, w] : prod.terms()) {
                std::vector<int> tail;
                for (int i = 1; i < nu.length(); ++i) tail.push_back(nu.part(i));
                out.add(Partition(tail), c * w);
            }
        }
    }
    return out;
}

SymFunc ring_product(const SymFunc& f, const SymFunc& g) {
    if (is_classical(f.basis()) && is_classical(g.basis())) return outer_product(f, g);
    SymFunc a = convert_char_basis(f, BasisTag::Power);
    SymFunc b = convert_char_basis(g, BasisTag::Power);
    return convert_char_basis(outer_product(a, b), f.basis());
}

SymFunc character_product(const SymFunc& f, const SymFunc& g) {
    if (f.basis() == BasisTag::STilde && g.basis() == BasisTag::STilde)
        return stilde_product(f, g);
    SymFunc a = convert_char_basis(f, BasisTag::HTilde);
    SymFunc b = convert_char_basis(g, BasisTag::HTilde);
    return htilde_product(a, b);
}

}  // namespace symchar
