#include "symchar/classical.hpp"

#include "symchar/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace symchar {

namespace {

Partition appendPart(const Partition& idx, int part) {
    std::vector<int> parts = idx.parts();
    parts.push_back(part);
    return Partition::fromUnsorted(std::move(parts));
}

Partition concatParts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::fromUnsorted(std::move(parts));
}

// product of two expansions in a multiplicative basis (indices concatenate)
SymFunc concatProduct(const SymFunc& f, const SymFunc& g) {
    SymFunc r(f.basis());
    for (const auto& [ia, ca] : f.terms())
        for (const auto& [ib, cb] : g.terms())
            r.add(concatParts(ia, ib), ca * cb);
    return r;
}

// h_n (sign = +1) or e_n (sign by length) in the power basis
SymFunc completeInPower(int n) {
    static std::mutex m;
    static std::map<int, SymFunc> memo;
    std::lock_guard<std::mutex> lk(m);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    SymFunc f(BasisTag::Power);
    for (const Partition& g : partitions_of(n))
        f.add(g, Rational(Integer(1), Integer(z_of(g))));
    memo.emplace(n, f);
    return f;
}

SymFunc elementaryInPower(int n) {
    static std::mutex m;
    static std::map<int, SymFunc> memo;
    std::lock_guard<std::mutex> lk(m);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    SymFunc f(BasisTag::Power);
    for (const Partition& g : partitions_of(n)) {
        Integer num((n - g.length()) % 2 == 0 ? 1 : -1);
        f.add(g, Rational(num, Integer(z_of(g))));
    }
    memo.emplace(n, f);
    return f;
}

// Newton recursions: p_n expanded in h or e.
//   p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}
//   p_n = (-1)^{n-1} n e_n + sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i}
SymFunc powerInComplete(int n);
SymFunc powerInElementary(int n);

SymFunc powerInComplete(int n) {
    static std::mutex m;
    static std::map<int, SymFunc> memo;
    {
        std::lock_guard<std::mutex> lk(m);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    SymFunc f = SymFunc::basisElement(BasisTag::Complete, Partition({n}), Rational(n));
    for (int i = 1; i < n; ++i) {
        SymFunc tail = powerInComplete(n - i);  // recurse before locking
        for (const auto& [idx, c] : tail.terms())
            f.add(appendPart(idx, i), -c);
    }
    std::lock_guard<std::mutex> lk(m);
    memo.emplace(n, f);
    return f;
}

SymFunc powerInElementary(int n) {
    static std::mutex m;
    static std::map<int, SymFunc> memo;
    {
        std::lock_guard<std::mutex> lk(m);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    SymFunc f = SymFunc::basisElement(BasisTag::Elementary, Partition({n}),
                                      Rational(n % 2 == 1 ? n : -n));
    for (int i = 1; i < n; ++i) {
        SymFunc tail = powerInElementary(n - i);
        Rational sign(i % 2 == 1 ? 1 : -1);
        for (const auto& [idx, c] : tail.terms())
            f.add(appendPart(idx, i), sign * c);
    }
    std::lock_guard<std::mutex> lk(m);
    memo.emplace(n, f);
    return f;
}

}  // namespace

bool dominates(const Partition& la, const Partition& mu) {
    int a = 0, b = 0;
    int n = std::max(la.length(), mu.length());
    for (int i = 0; i < n; ++i) {
        a += i < la.length() ? la.part(i) : 0;
        b += i < mu.length() ? mu.part(i) : 0;
        if (a < b) return false;
    }
    return true;
}

namespace {

// h_mu (or e_mu) -> Schur via Kostka numbers
SymFunc completeToSchur(const SymFunc& f, bool elementary) {
    SymFunc r(BasisTag::Schur);
    for (const auto& [mu, c] : f.terms()) {
        for (const Partition& la : partitions_of(mu.size())) {
            Partition key = elementary ? la.conjugate() : la;
            if (!dominates(key, mu)) continue;
            std::int64_t k = kostka(key, mu);
            if (k != 0) r.add(la, c * Rational(k));
        }
    }
    return r;
}

// det[ b_{alpha_i - i + j} ] over the basis `b` (Complete or Elementary),
// cofactor expansion along rows with memoization on the remaining column set
SymFunc jacobiTrudiDet(const std::vector<int>& alpha, BasisTag basis) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) return SymFunc::constant(basis, Rational(1));
    if (n > 20) throw std::invalid_argument("jacobi_trudi: matrix too large");
    std::vector<SymFunc> memo(static_cast<size_t>(1) << n);
    std::vector<bool> have(static_cast<size_t>(1) << n, false);

    auto rec = [&](auto&& self, unsigned mask) -> const SymFunc& {
        if (have[mask]) return memo[mask];
        SymFunc acc(basis);
        int row = n - __builtin_popcount(mask);
        if (mask == 0) {
            acc = SymFunc::constant(basis, Rational(1));
        } else {
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                int entry = alpha[static_cast<size_t>(row)] - row + j;
                if (entry >= 0) {
                    const SymFunc& sub = self(self, mask & ~(1u << j));
                    Rational sign(pos % 2 == 0 ? 1 : -1);
                    for (const auto& [idx, c] : sub.terms())
                        acc.add(entry > 0 ? appendPart(idx, entry) : idx, sign * c);
                }
                ++pos;
            }
        }
        memo[mask] = std::move(acc);
        have[mask] = true;
        return memo[mask];
    };
    return rec(rec, (1u << n) - 1u);
}

// Schur -> h or e via Jacobi-Trudi (dual form uses the conjugate shape)
SymFunc schurToMultiplicative(const SymFunc& f, BasisTag target) {
    SymFunc r(target);
    for (const auto& [la, c] : f.terms()) {
        const Partition shape = target == BasisTag::Elementary ? la.conjugate() : la;
        r += jacobiTrudiDet(shape.parts(), target).scaled(c);
    }
    return r;
}

// solve A x = b over the rationals (A square, nonsingular)
std::vector<Rational> solveLinear(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].isZero()) ++piv;
        if (piv == n) throw std::logic_error("solveLinear: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rational inv = Rational(1) / A[col][col];
        for (size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col].isZero()) continue;
            Rational factor = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] -= factor * A[col][j];
            b[i] -= factor * b[col];
        }
    }
    return b;
}

// coefficient of m_alpha in p_beta, via p -> s -> m
Rational powerMonomialEntry(const Partition& alpha, const Partition& beta) {
    Rational r(0);
    for (const Partition& la : partitions_of(alpha.size())) {
        if (!dominates(la, alpha)) continue;
        std::int64_t k = kostka(la, alpha);
        if (k != 0) r += Rational(chi(la, beta)) * Rational(k);
    }
    return r;
}

SymFunc monomialToPower(const SymFunc& f) {
    SymFunc r(BasisTag::Power);
    // group by degree, solve T x = c per degree
    std::map<int, SymFunc> byDeg;
    for (const auto& [idx, c] : f.terms()) byDeg[idx.size()].add(idx, c);
    for (const auto& [d, part] : byDeg) {
        std::vector<Partition> basis = partitions_of(d);
        const size_t n = basis.size();
        std::vector<std::vector<Rational>> T(n, std::vector<Rational>(n));
        std::vector<Rational> c(n);
        for (size_t a = 0; a < n; ++a) {
            c[a] = part.coefficient(basis[a]);
            for (size_t b = 0; b < n; ++b)
                T[a][b] = powerMonomialEntry(basis[a], basis[b]);
        }
        std::vector<Rational> x = solveLinear(std::move(T), std::move(c));
        for (size_t b = 0; b < n; ++b) r.add(basis[b], x[b]);
    }
    return r;
}

SymFunc schurToMonomial(const SymFunc& f) {
    SymFunc r(BasisTag::Monomial);
    for (const auto& [la, c] : f.terms()) {
        for (const Partition& mu : partitions_of(la.size())) {
            if (!dominates(la, mu)) continue;
            std::int64_t k = kostka(la, mu);
            if (k != 0) r.add(mu, c * Rational(k));
        }
    }
    return r;
}

void requireClassical(const SymFunc& f, const char* where) {
    if (!is_classical(f.basis()))
        throw std::invalid_argument(std::string(where) +
                                    ": character bases are handled by the "
                                    "character-basis layer");
}

}  // namespace

SymFunc to_power(const SymFunc& f) {
    requireClassical(f, "to_power");
    switch (f.basis()) {
        case BasisTag::Power:
            return f;
        case BasisTag::Complete:
        case BasisTag::Elementary: {
            const bool elem = f.basis() == BasisTag::Elementary;
            SymFunc r(BasisTag::Power);
            for (const auto& [idx, c] : f.terms()) {
                SymFunc prod = SymFunc::constant(BasisTag::Power, Rational(1));
                for (int p : idx.parts())
                    prod = concatProduct(prod, elem ? elementaryInPower(p)
                                                    : completeInPower(p));
                r += prod.scaled(c);
            }
            return r;
        }
        case BasisTag::Schur: {
            SymFunc r(BasisTag::Power);
            for (const auto& [la, c] : f.terms())
                for (const Partition& g : partitions_of(la.size())) {
                    std::int64_t x = chi(la, g);
                    if (x != 0)
                        r.add(g, c * Rational(Integer(x), Integer(z_of(g))));
                }
            return r;
        }
        case BasisTag::Monomial:
            return monomialToPower(f);
        default:
            throw std::logic_error("to_power: unreachable");
    }
}

SymFunc from_power(const SymFunc& f, BasisTag target) {
    if (f.basis() != BasisTag::Power)
        throw std::invalid_argument("from_power: input must be in the power basis");
    switch (target) {
        case BasisTag::Power:
            return f;
        case BasisTag::Complete:
        case BasisTag::Elementary: {
            const bool elem = target == BasisTag::Elementary;
            SymFunc r(target);
            for (const auto& [idx, c] : f.terms()) {
                SymFunc prod = SymFunc::constant(target, Rational(1));
                for (int p : idx.parts())
                    prod = concatProduct(prod, elem ? powerInElementary(p)
                                                    : powerInComplete(p));
                r += prod.scaled(c);
            }
            return r;
        }
        case BasisTag::Schur: {
            SymFunc r(BasisTag::Schur);
            for (const auto& [g, c] : f.terms())
                for (const Partition& la : partitions_of(g.size())) {
                    std::int64_t x = chi(la, g);
                    if (x != 0) r.add(la, c * Rational(x));
                }
            return r;
        }
        case BasisTag::Monomial:
            return schurToMonomial(from_power(f, BasisTag::Schur));
        default:
            throw std::invalid_argument("from_power: classical targets only");
    }
}

SymFunc convert(const SymFunc& f, BasisTag target) {
    requireClassical(f, "convert");
    if (!is_classical(target))
        throw std::invalid_argument("convert: character targets are handled by "
                                    "the character-basis layer");
    if (f.basis() == target) return f;
    if (f.basis() == BasisTag::Complete && target == BasisTag::Schur)
        return completeToSchur(f, false);
    if (f.basis() == BasisTag::Elementary && target == BasisTag::Schur)
        return completeToSchur(f, true);
    if (f.basis() == BasisTag::Schur &&
        (target == BasisTag::Complete || target == BasisTag::Elementary))
        return schurToMultiplicative(f, target);
    return from_power(to_power(f), target);
}

SymFunc outer_product(const SymFunc& f, const SymFunc& g) {
    requireClassical(f, "outer_product");
    requireClassical(g, "outer_product");
    const BasisTag b = f.basis();
    if (b == g.basis() &&
        (b == BasisTag::Power || b == BasisTag::Complete || b == BasisTag::Elementary))
        return concatProduct(f, g);
    SymFunc prod = concatProduct(to_power(f), to_power(g));
    return from_power(prod, b);
}

Rational scalar_product(const SymFunc& f, const SymFunc& g) {
    requireClassical(f, "scalar_product");
    requireClassical(g, "scalar_product");
    SymFunc a = to_power(f), b = to_power(g);
    const auto& small = a.termCount() <= b.termCount() ? a : b;
    const auto& large = a.termCount() <= b.termCount() ? b : a;
    Rational r(0);
    for (const auto& [idx, c] : small.terms()) {
        Rational d = large.coefficient(idx);
        if (!d.isZero()) r += c * d * Rational(z_of(idx));
    }
    return r;
}

SymFunc kronecker_product(const SymFunc& f, const SymFunc& g) {
    requireClassical(f, "kronecker_product");
    requireClassical(g, "kronecker_product");
    SymFunc a = to_power(f), b = to_power(g);
    SymFunc prod(BasisTag::Power);
    for (const auto& [idx, c] : a.terms()) {
        Rational d = b.coefficient(idx);
        if (!d.isZero()) prod.add(idx, c * d * Rational(z_of(idx)));
    }
    return from_power(prod, f.basis());
}

SymFunc jacobi_trudi_complete(const std::vector<int>& alpha) {
    return jacobiTrudiDet(alpha, BasisTag::Complete);
}

SymFunc schur_of_composition(const std::vector<int>& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<int> beta(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) beta[static_cast<size_t>(i)] = alpha[static_cast<size_t>(i)] - (i + 1);
    // duplicate beta values: two equal rows, determinant vanishes
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (beta[static_cast<size_t>(i)] == beta[static_cast<size_t>(j)])
                return SymFunc(BasisTag::Schur);
            if (beta[static_cast<size_t>(i)] < beta[static_cast<size_t>(j)]) ++inversions;
        }
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        int p = beta[static_cast<size_t>(i)] + (i + 1);
        if (p < 0) return SymFunc(BasisTag::Schur);  // a row of the matrix is zero
        if (p > 0) parts.push_back(p);
    }
    // trailing zero parts are fine; interior zeros cannot happen (sorted)
    return SymFunc::basisElement(BasisTag::Schur, Partition(std::move(parts)),
                                 Rational(inversions % 2 == 0 ? 1 : -1));
}

Partition pad_partition(const Partition& la, int n) {
    if (!paddable(la, n)) throw std::invalid_argument("pad_partition: n too small");
    if (n == la.size()) return Partition();  // only reachable for la empty, n == 0
    std::vector<int> parts;
    parts.push_back(n - la.size());
    parts.insert(parts.end(), la.parts().begin(), la.parts().end());
    return Partition(std::move(parts));
}

bool paddable(const Partition& la, int n) {
    return n - la.size() >= la.first() && n >= la.size();
}

SymFunc padded_schur_kronecker(const Partition& la, const Partition& mu, int n) {
    if (!paddable(la, n) || !paddable(mu, n))
        throw std::invalid_argument("padded_schur_kronecker: n too small to pad");
    SymFunc a = SymFunc::basisElement(BasisTag::Schur, pad_partition(la, n));
    SymFunc b = SymFunc::basisElement(BasisTag::Schur, pad_partition(mu, n));
    return kronecker_product(a, b);
}

std::int64_t padded_kronecker_coefficient(const Partition& la, const Partition& mu,
                                          const Partition& nu, int n) {
    if (!paddable(nu, n)) return 0;
    SymFunc prod = padded_schur_kronecker(la, mu, n);
    return prod.coefficient(pad_partition(nu, n)).toInt64();
}

std::int64_t reduced_kronecker(const Partition& la, const Partition& mu,
                               const Partition& nu) {
    int n = la.size() + la.first() + mu.size() + mu.first();
    n = std::max({n, nu.size() + nu.first(), 1});
    return padded_kronecker_coefficient(la, mu, nu, n);
}

}  // namespace symchar
