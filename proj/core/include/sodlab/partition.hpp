#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sodlab {

/* Weakly decreasing sequence of nonnegative integers, trailing zeros stripped.
 * The zero partition is the empty sequence and prints as (0). */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /* "2,1" or "(2,1)"; "0" and "" give the zero partition */
    static Partition parse_csv(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool is_zero() const { return parts_.empty(); }
    /* 0-based; zero past the end */
    int operator[](int k) const;
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    std::vector<int> padded(int length) const;

    std::string str() const;
    std::string csv() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/* B(height, width): partitions with at most `height` parts, each at most `width`. */
struct Box {
    int height = 0;
    int width = 0;

    bool empty() const { return height < 0 || width < 0; }
    bool contains(const Partition& p) const;
    std::uint64_t cardinality() const;
    std::string str() const;
    bool operator==(const Box&) const = default;
};

std::uint64_t binomial(int n, int k);

/* Ascending lexicographic order of the height-padded tuples. */
std::vector<Partition> box_enumerate(const Box& box);

/* All partitions of `total`, optionally with at most maxLength parts,
 * in descending lexicographic order. */
std::vector<Partition> partitions_of(int total, int maxLength = -1);

Partition transpose(const Partition& p);

/* (nu_1+i, ..., nu_length+i) with nu padded to `length`. */
Partition shift(const Partition& nu, int i, int length);

/* lambda^(i) for lambda in B(boxHeight, .), 1 <= i <= lambda_1. */
Partition lambda_superscript(const Partition& lambda, int i, int boxHeight);

/* lambda_{k+1} <= nu_k <= lambda_k for 1 <= k <= boxHeight-1. */
bool interleaves(const Partition& nu, const Partition& lambda, int boxHeight);

struct InductionBlock {
    enum class Kind { Psi, DetTwist };
    Kind kind = Kind::Psi;
    int twist = 0;    // i for Psi_i blocks, k-d+r for the det block
    Box source;       // the box before shifting
    std::vector<Partition> members;
};

struct InductionBlocks {
    int n = 0, d = 0, k = 0, r = 0;
    /* Psi_0, Psi_1, ..., then the det-twisted block last */
    std::vector<InductionBlock> blocks;
    bool disjoint = true;
    bool covering = true;
    /* the displayed union bound n-d+r-1 differs from k - max(0, d-r+1) */
    bool displayedBoundDiffers = false;
    std::vector<std::string> problems;

    bool ok() const { return disjoint && covering && problems.empty(); }
};

InductionBlocks induction_blocks(int n, int d, int k, int r);

} // namespace sodlab
