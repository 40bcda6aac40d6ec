#include "symchar/multiset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace symchar {

Multiset::Multiset(std::vector<int> elems) : elems_(std::move(elems)) {
    for (int e : elems_)
        if (e <= 0) throw std::invalid_argument("Multiset: labels must be positive");
    std::sort(elems_.begin(), elems_.end());
}

std::string Multiset::toString() const {
    std::string s = "{";
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems_[i]);
    }
    return s + "}";
}

namespace {

bool blockLess(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

MultisetPartition::MultisetPartition(std::vector<Multiset> blocks)
    : blocks_(std::move(blocks)) {
    for (const Multiset& b : blocks_)
        if (b.empty())
            throw std::invalid_argument("MultisetPartition: blocks must be nonempty");
    std::sort(blocks_.begin(), blocks_.end(), blockLess);
}

Multiset MultisetPartition::support() const {
    std::vector<int> all;
    for (const Multiset& b : blocks_)
        all.insert(all.end(), b.elems().begin(), b.elems().end());
    return Multiset(std::move(all));
}

std::string MultisetPartition::toString() const {
    std::string s = "{";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ",";
        s += blocks_[i].toString();
    }
    return s + "}";
}

namespace {

// Distinct labels with multiplicities; the working representation during
// enumeration.
using Counts = std::vector<std::pair<int, int>>;

Counts toCounts(const Multiset& s) {
    Counts c;
    for (int e : s.elems()) {
        if (!c.empty() && c.back().first == e)
            ++c.back().second;
        else
            c.emplace_back(e, 1);
    }
    return c;
}

Multiset countsToMultiset(const Counts& c) {
    std::vector<int> v;
    for (auto [label, mult] : c)
        for (int i = 0; i < mult; ++i) v.push_back(label);
    return Multiset(std::move(v));
}

int totalCount(const Counts& c) {
    int t = 0;
    for (auto [label, mult] : c) t += mult;
    return t;
}

// Enumerate blocks as a nondecreasing chain in (size, lex) order; each
// multiset partition is produced by exactly one chain, so no dedup pass is
// needed. `pick` walks sub-multisets of `rest` that can serve as the next
// block (must be >= prev in the block order).
void chains(const Counts& rest, const Multiset& prev, bool havePrev,
            std::vector<Multiset>& acc, std::vector<MultisetPartition>& out);

void pick(const Counts& rest, size_t idx, Counts& chosen, const Multiset& prev,
          bool havePrev, std::vector<Multiset>& acc,
          std::vector<MultisetPartition>& out) {
    if (idx == rest.size()) {
        if (totalCount(chosen) == 0) return;
        Multiset block = countsToMultiset(chosen);
        if (havePrev && blockLess(block, prev)) return;
        Counts remaining;
        for (size_t i = 0; i < rest.size(); ++i) {
            int left = rest[i].second - (i < chosen.size() ? chosen[i].second : 0);
            if (left > 0) remaining.emplace_back(rest[i].first, left);
        }
        acc.push_back(block);
        chains(remaining, block, true, acc, out);
        acc.pop_back();
        return;
    }
    for (int take = 0; take <= rest[idx].second; ++take) {
        chosen.emplace_back(rest[idx].first, take);
        pick(rest, idx + 1, chosen, prev, havePrev, acc, out);
        chosen.pop_back();
    }
}

void chains(const Counts& rest, const Multiset& prev, bool havePrev,
            std::vector<Multiset>& acc, std::vector<MultisetPartition>& out) {
    if (rest.empty()) {
        out.emplace_back(acc);
        return;
    }
    Counts chosen;
    pick(rest, 0, chosen, prev, havePrev, acc, out);
}

}  // namespace

std::vector<MultisetPartition> multiset_partitions(const Multiset& s) {
    std::vector<MultisetPartition> out;
    std::vector<Multiset> acc;
    chains(toCounts(s), Multiset(), false, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

Partition m_tilde(const MultisetPartition& pi) {
    std::map<Multiset, int> mult;
    for (const Multiset& b : pi.blocks()) ++mult[b];
    std::vector<int> parts;
    parts.reserve(mult.size());
    for (const auto& [block, m] : mult) parts.push_back(m);
    return Partition::fromUnsorted(std::move(parts));
}

std::vector<MultisetPartition> join(const MultisetPartition& pi,
                                    const MultisetPartition& theta) {
    {
        Multiset supPi = pi.support();
        Multiset supTheta = theta.support();
        std::set<int> a(supPi.elems().begin(), supPi.elems().end());
        for (int e : supTheta.elems())
            if (a.count(e))
                throw std::invalid_argument("join: label sets must be disjoint");
    }
    const auto& pb = pi.blocks();
    const auto& tb = theta.blocks();
    const int np = static_cast<int>(pb.size());
    const int nt = static_cast<int>(tb.size());

    std::set<MultisetPartition> results;

    // choose r blocks of pi (indices asc), r blocks of theta, and a bijection
    std::vector<int> pidx, tidx;
    auto emit = [&](const std::vector<int>& pSel, const std::vector<int>& tPerm) {
        std::vector<Multiset> blocks;
        std::vector<bool> usedP(pb.size(), false), usedT(tb.size(), false);
        for (size_t i = 0; i < pSel.size(); ++i) {
            usedP[static_cast<size_t>(pSel[i])] = true;
            usedT[static_cast<size_t>(tPerm[i])] = true;
            std::vector<int> merged = pb[static_cast<size_t>(pSel[i])].elems();
            const auto& te = tb[static_cast<size_t>(tPerm[i])].elems();
            merged.insert(merged.end(), te.begin(), te.end());
            blocks.emplace_back(std::move(merged));
        }
        for (size_t i = 0; i < pb.size(); ++i)
            if (!usedP[i]) blocks.push_back(pb[i]);
        for (size_t i = 0; i < tb.size(); ++i)
            if (!usedT[i]) blocks.push_back(tb[i]);
        results.insert(MultisetPartition(std::move(blocks)));
    };

    auto chooseT = [&](auto&& self, const std::vector<int>& pSel,
                       std::vector<int>& perm, std::vector<bool>& used) -> void {
        if (perm.size() == pSel.size()) {
            emit(pSel, perm);
            return;
        }
        for (int j = 0; j < nt; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            used[static_cast<size_t>(j)] = true;
            perm.push_back(j);
            self(self, pSel, perm, used);
            perm.pop_back();
            used[static_cast<size_t>(j)] = false;
        }
    };

    auto chooseP = [&](auto&& self, int start, std::vector<int>& sel, int r) -> void {
        if (static_cast<int>(sel.size()) == r) {
            std::vector<int> perm;
            std::vector<bool> used(tb.size(), false);
            chooseT(chooseT, sel, perm, used);
            return;
        }
        for (int i = start; i < np; ++i) {
            sel.push_back(i);
            self(self, i + 1, sel, r);
            sel.pop_back();
        }
    };

    for (int r = 0; r <= std::min(np, nt); ++r) {
        std::vector<int> sel;
        chooseP(chooseP, 0, sel, r);
    }
    return std::vector<MultisetPartition>(results.begin(), results.end());
}

Multiset multiset_of_partition(const Partition& lambda) {
    std::vector<int> elems;
    for (int i = 0; i < lambda.length(); ++i)
        for (int c = 0; c < lambda.part(i); ++c) elems.push_back(i + 1);
    return Multiset(std::move(elems));
}

}  // namespace symchar
