#include "symchar/char_table.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace symchar {

namespace {

std::mutex chiMutex;
TableMap chiMemo;
std::mutex kostkaMutex;
TableMap kostkaMemo;

// chi^lambda(mu) on beta-numbers: removing a border strip of length r is
// subtracting r from one first-column hook length so the results stay
// distinct; the sign is (-1)^(number of hook lengths jumped over).
std::int64_t chiRec(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return 1;  // mu empty too (sizes agree)
    if (mu.empty()) return 0;      // unreachable when sizes agree
    {
        std::lock_guard<std::mutex> lk(chiMutex);
        auto it = chiMemo.find({lambda, mu});
        if (it != chiMemo.end()) return it->second;
    }
    const int r = mu.part(0);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition muRest(std::move(rest));

    const int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<size_t>(i)] = lambda.part(i) + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int nb = b - r;
        if (nb < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            int o = beta[static_cast<size_t>(j)];
            if (o == nb) { clash = true; break; }
            if (o > nb && o < b) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        // back to partition: lambda_i = beta_i - (len - 1 - i), drop zeros
        std::vector<int> parts;
        int m = static_cast<int>(nbeta.size());
        for (int j = 0; j < m; ++j) {
            int p = nbeta[static_cast<size_t>(j)] - (m - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        std::int64_t sub = chiRec(Partition(std::move(parts)), muRest);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    {
        std::lock_guard<std::mutex> lk(chiMutex);
        chiMemo.emplace(TableKey{lambda, mu}, total);
    }
    return total;
}

// semistandard fillings of `shape` with content counts `c` (1-based labels):
// rows weakly increase, columns strictly increase
std::int64_t countSSYT(const Partition& shape, std::vector<int> c) {
    int total = 0;
    for (int x : c) {
        if (x < 0) throw std::invalid_argument("kostka: negative content entry");
        total += x;
    }
    if (total != shape.size()) return 0;
    if (shape.empty()) return 1;

    const int rows = shape.length();
    const int labels = static_cast<int>(c.size());
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), 0);

    std::int64_t count = 0;
    auto rec = [&](auto&& self, int r, int col) -> void {
        if (r == rows) { ++count; return; }
        int width = shape.part(r);
        if (col == width) { self(self, r + 1, 0); return; }
        int lo = 1;
        if (col > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(col - 1)]);
        if (r > 0) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(col)] + 1);
        for (int v = lo; v <= labels; ++v) {
            if (c[static_cast<size_t>(v - 1)] == 0) continue;
            --c[static_cast<size_t>(v - 1)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(col)] = v;
            self(self, r, col + 1);
            ++c[static_cast<size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

std::int64_t chi(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("chi: |lambda| != |mu|");
    return chiRec(lambda, mu);
}

std::int64_t kostka(const Partition& shape, const Partition& content) {
    {
        std::lock_guard<std::mutex> lk(kostkaMutex);
        auto it = kostkaMemo.find({shape, content});
        if (it != kostkaMemo.end()) return it->second;
    }
    std::vector<int> c = content.parts();
    std::int64_t k = countSSYT(shape, std::move(c));
    {
        std::lock_guard<std::mutex> lk(kostkaMutex);
        kostkaMemo.emplace(TableKey{shape, content}, k);
    }
    return k;
}

std::int64_t kostka(const Partition& shape, const Composition& content) {
    return countSSYT(shape, content.parts());
}

TableMap chi_table_snapshot() {
    std::lock_guard<std::mutex> lk(chiMutex);
    return chiMemo;
}

TableMap kostka_table_snapshot() {
    std::lock_guard<std::mutex> lk(kostkaMutex);
    return kostkaMemo;
}

void chi_table_merge(const TableMap& entries) {
    std::lock_guard<std::mutex> lk(chiMutex);
    for (const auto& [k, v] : entries) chiMemo.insert_or_assign(k, v);
}

void kostka_table_merge(const TableMap& entries) {
    std::lock_guard<std::mutex> lk(kostkaMutex);
    for (const auto& [k, v] : entries) kostkaMemo.insert_or_assign(k, v);
}

}  // namespace symchar
