#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sodlab {

class Partition;

/* Finite integer sequence of fixed rank, any sign and any order. */
class IntegerWeight {
public:
    IntegerWeight() = default;
    explicit IntegerWeight(std::vector<int> entries) : entries_(std::move(entries)) {}
    IntegerWeight(std::initializer_list<int> entries) : entries_(entries) {}

    static IntegerWeight zero(int rank);
    /* pads with zeros; throws if the partition is longer than rank */
    static IntegerWeight from_partition(const Partition& p, int rank);
    static IntegerWeight parse_csv(std::string_view text);

    int rank() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }

    bool is_dominant() const;
    bool is_zero() const;
    long total() const;

    IntegerWeight concat(const IntegerWeight& other) const;
    IntegerWeight plus(int c) const;
    /* throws unless dominant with nonnegative entries */
    Partition to_partition() const;

    std::string str() const;
    std::string csv() const;

    auto operator<=>(const IntegerWeight&) const = default;
    bool operator==(const IntegerWeight&) const = default;

private:
    std::vector<int> entries_;
};

} // namespace sodlab
