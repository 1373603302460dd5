#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coinv::symfunc {

/// An integer partition: weakly decreasing positive parts. The empty
/// sequence is the empty partition.
class Partition {
 public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition row(int m);     // (m), or empty for m = 0
    static Partition column(int m);  // (1^m)

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // number of boxes
    bool empty() const { return parts_.empty(); }

    // part(i) is 0 beyond the last row, so callers can index freely.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    bool contains(const Partition& nu) const;

    /// All sub-partitions nu with nu_i <= lambda_i.
    std::vector<Partition> subpartitions() const;

    std::string to_string() const;  // "(2,1)", "()" for empty

    friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
    std::vector<int> parts_;
};

}  // namespace coinv::symfunc
