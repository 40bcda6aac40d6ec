#include "symchar/tableaux.hpp"

#include "symchar/char_table.hpp"
#include "symchar/classical.hpp"
#include "symchar/combinatorics.hpp"
#include "symchar/multiset.hpp"

#include <functional>
#include <vector>

namespace symchar {

// The enumeration factors: choose a multiset partition pi of the label
// multiset, send some blocks to the tail of the first row (one weakly
// increasing arrangement each, and never constrained from below since the
// rows after the first are at most |mu| columns wide while the blank prefix
// is |mu| cells long), and fill the remaining blocks into the rows after the
// first column-strictly. Only the relative order of the distinct blocks
// matters there, so that count is a Kostka number with content given by the
// block multiplicities.
SymFunc h_to_stilde_tableaux(const Partition& mu) {
    SymFunc out(BasisTag::STilde);
    Multiset content = multiset_of_partition(mu);
    for (const MultisetPartition& pi : multiset_partitions(content)) {
        const std::vector<Multiset>& blocks = pi.blocks();
        std::vector<int> counts;  // multiplicities of the distinct blocks
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i > 0 && blocks[i] == blocks[i - 1])
                counts.back() += 1;
            else
                counts.push_back(1);
        }
        std::vector<int> upper(counts.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == counts.size()) {
                int f = 0;
                for (int u : upper) f += u;
                if (f == 0) {
                    out.add(Partition(), Rational(1));
                    return;
                }
                Partition cont = Partition::fromUnsorted(upper);
                for (const Partition& rho : partitions_of(f)) {
                    if (!dominates(rho, cont)) continue;
                    std::int64_t k = kostka(rho, cont);
                    if (k != 0) out.add(rho, Rational(k));
                }
                return;
            }
            for (int u = 0; u <= counts[i]; ++u) {
                upper[i] = u;
                rec(i + 1);
            }
            upper[i] = 0;
        };
        rec(0);
    }
    return out;
}

std::int64_t tableaux_count(const Partition& mu) {
    Rational total(0);
    SymFunc f = h_to_stilde_tableaux(mu);
    for (const auto& [rho, c] : f.terms()) total = total + c;
    return total.toInt64();
}

}  // namespace symchar
