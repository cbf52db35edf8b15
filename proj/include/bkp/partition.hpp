#ifndef BKP_PARTITION_HPP
#define BKP_PARTITION_HPP

#include <compare>
#include <vector>

namespace bkp {

// Partition with strictly decreasing positive parts. The empty partition is a
// valid value with size 0 and length 0.
class StrictPartition {
  public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const StrictPartition&) const = default;
    // Orders by decreasing lexicographic on parts: (5) < (4,1) < (3,2).
    std::strong_ordering operator<=>(const StrictPartition& o) const;

  private:
    std::vector<int> parts_;
};

// All strict partitions of `weight` in decreasing lexicographic order.
std::vector<StrictPartition> enumerate_strict(int weight);

// Concatenation of enumerate_strict(w) for w = 0..max_weight.
std::vector<StrictPartition> enumerate_strict_upto(int max_weight);

}  // namespace bkp

#endif
