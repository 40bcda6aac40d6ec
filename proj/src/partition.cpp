#include "symchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::fromUnsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(static_cast<size_t>(parts_[0]));
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    }
    return Partition(std::move(c));
}

std::string Partition::toString() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Composition::Composition(std::vector<int> parts, bool strict)
    : parts_(std::move(parts)), strict_(strict) {
    int lo = strict ? 1 : 0;
    for (int p : parts_)
        if (p < lo) throw std::invalid_argument("Composition: part out of range");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

}  // namespace symchar
