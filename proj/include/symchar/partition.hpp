#pragma once

// Integer partitions and compositions.
//
// Partition: weakly decreasing positive parts. Total order: by size
// (sum of parts), then lexicographic on the part lists; this is also the
// order used for deterministic term output.

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace symchar {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts descending and drops zeros; negative parts rejected.
    static Partition fromUnsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    // multiplicity of each distinct part value
    std::map<int, int> multiplicities() const;
    Partition conjugate() const;

    // (size, lex) total order
    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        return a.parts_ <=> b.parts_;
    }

    std::string toString() const;  // "[3,1]"

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Weak (parts >= 0) or strict (parts >= 1) compositions; order matters.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts, bool strict = false);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool strict() const { return strict_; }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
    bool strict_ = false;
};

}  // namespace symchar
