#pragma once

// Multisets of positive integer labels and partitions of a multiset into
// nonempty multiset blocks.
//
// Orders used throughout:
//  - Multiset: lexicographic on the ascending element list (equivalently:
//    by minimum element, then lexicographic).
//  - MultisetPartition canonical form: blocks sorted by (size, then the
//    multiset order above); equal blocks are adjacent. Equality compares
//    blocks with multiplicity.

#include "symchar/partition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace symchar {

class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<int> elems);  // sorts ascending

    const std::vector<int>& elems() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
        return a.elems_ <=> b.elems_;
    }

    std::string toString() const;  // "{1,1,2}"

private:
    std::vector<int> elems_;
};

class MultisetPartition {
public:
    MultisetPartition() = default;
    explicit MultisetPartition(std::vector<Multiset> blocks);  // canonicalizes

    const std::vector<Multiset>& blocks() const { return blocks_; }
    int blockCount() const { return static_cast<int>(blocks_.size()); }
    Multiset support() const;  // union of all blocks

    friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;
    friend std::strong_ordering operator<=>(const MultisetPartition& a,
                                            const MultisetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

    std::string toString() const;  // "{{1},{1,2}}"

private:
    std::vector<Multiset> blocks_;
};

// All partitions of the multiset s into nonempty blocks, each exactly once,
// in canonical form. multiset_partitions({}) == { empty partition }.
std::vector<MultisetPartition> multiset_partitions(const Multiset& s);

// Block-multiplicity partition: the multiplicities of the distinct blocks of
// pi, sorted decreasingly. m_tilde({{1},{1},{2}}) == [2,1].
Partition m_tilde(const MultisetPartition& pi);

// All ways to merge pi with theta: pick r >= 0 blocks from each side and a
// pairing between them, union each pair, keep the unmerged blocks. Requires
// disjoint label sets. Returns distinct results, sorted.
std::vector<MultisetPartition> join(const MultisetPartition& pi,
                                    const MultisetPartition& theta);

// The multiset {1^{lambda_1}, 2^{lambda_2}, ...} whose label multiplicities
// are the parts of lambda.
Multiset multiset_of_partition(const Partition& lambda);

}  // namespace symchar
