#include "bkp/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace bkp {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("partition parts must be strictly decreasing");
    }
}

int StrictPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering StrictPartition::operator<=>(const StrictPartition& o) const {
    // Decreasing lexicographic: larger first part comes earlier.
    size_t n = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        if (parts_[i] != o.parts_[i])
            return parts_[i] > o.parts_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return parts_.size() <=> o.parts_.size();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // remaining - p must be representable with distinct parts < p
        if (remaining - p > p * (p - 1) / 2) continue;
        prefix.push_back(p);
        enumerate_rec(remaining - p, p - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int weight) {
    if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    enumerate_rec(weight, weight, prefix, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict_upto(int max_weight) {
    std::vector<StrictPartition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto level = enumerate_strict(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace bkp
