#pragma once

// Memoized symmetric group character values and Kostka numbers.
//
// chi(lambda, mu): irreducible character value chi^lambda(mu), computed by
// the Murnaghan-Nakayama rule (border strips removed for the largest part of
// mu first). kostka(shape, content): number of semistandard tableaux, by
// backtracking over row fillings.
//
// Both caches are process-wide, guarded by a mutex (concurrent lookups are
// safe; duplicate inserts are idempotent), and can be exported/merged for
// persistence.

#include "symchar/partition.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace symchar {

std::int64_t chi(const Partition& lambda, const Partition& mu);

// content as partition: memoized (Kostka numbers are invariant under
// permuting the content, so the sorted form indexes the cache)
std::int64_t kostka(const Partition& shape, const Partition& content);

// content as arbitrary weak composition: direct enumeration, no cache
std::int64_t kostka(const Partition& shape, const Composition& content);

using TableKey = std::pair<Partition, Partition>;
using TableMap = std::map<TableKey, std::int64_t>;

// snapshots / bulk-merge of the memo tables (for the persisted table cache)
TableMap chi_table_snapshot();
TableMap kostka_table_snapshot();
void chi_table_merge(const TableMap& entries);
void kostka_table_merge(const TableMap& entries);

}  // namespace symchar
