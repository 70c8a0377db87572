#pragma once

#include "sodlab/bigint.hpp"
#include "sodlab/character.hpp"
#include "sodlab/partition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sodlab {

/* X = Hom(k^m, k^n) with the tautological map; E has rank r = n - m. */
struct LocalSetup {
    int n = 0;
    int m = 0;
    int d = 0;

    int r() const { return n - m; }
    /* throws std::invalid_argument unless 0 <= m <= n and 0 <= d <= n */
    void validate() const;
    std::string str() const;
};

struct SodComponent {
    int i = 0;
    Partition lambda;
    std::vector<int> aSequence;
    /* aSequence padded to length r with a sentinel above every entry */
    std::vector<int> orderKey;
    std::string target;
    std::string kernel;

    /* "(i,(lambda))" */
    std::string label() const;
};

std::vector<int> a_sequence(int i, const Partition& lambda, int r);
/* inverse of a_sequence: i = r - length(a) is not determined by a alone,
 * so the caller passes i */
Partition lambda_from_a_sequence(int i, const std::vector<int>& a);

SodComponent make_component(int i, const Partition& lambda, int r, int d);
std::strong_ordering order_compare(const SodComponent& a, const SodComponent& b);
std::vector<SodComponent> enumerate_components(int r, int d);

/* Psi_{a_1} o ... o Psi_{a_s} o (tensor det^detTwist), read left to right. */
struct FunctorWord {
    std::vector<int> psiTwists;
    int detTwist = 0;

    std::string str() const;
    bool operator==(const FunctorWord&) const = default;
};

struct TraceLeaf {
    int level = 0;              // the d'' with the leaf on Grass(E; d'')
    Box box;                    // B(n - d'', d'' - r)
    FunctorWord word;
    int i = 0;                  // r - length(word.psiTwists)
    Partition lambda;           // recovered from the a-sequence
    std::vector<Partition> generators;  // box members, in box order
    std::vector<Partition> images;      // matching leading weights in B(n-d, d)
};

struct TraceNode {
    int level = 0;
    int width = 0;
    int height = 0;
    bool leaf = false;
    int leafIndex = -1;
    /* Psi-twist of the edge into this node, -1 for the det block / root */
    int edgeTwist = -1;
    std::vector<TraceNode> children;
};

struct GenerationTrace {
    LocalSetup setup;
    TraceNode root;
    std::vector<TraceLeaf> leaves;  // depth first, construction order
    bool leavesMatchComponents = false;
    bool orderMatches = false;
    bool imagesPartitionBox = false;
    std::vector<std::string> problems;

    bool ok() const { return leavesMatchComponents && orderMatches && imagesPartitionBox && problems.empty(); }
};

GenerationTrace generation_trace(const LocalSetup& setup);

/* Square matrix over GL(W)-characters: column = generator image (block order),
 * row = Kapranov basis element S^beta(R^v), beta in the same order. */
struct UnitriangularityCertificate {
    LocalSetup setup;
    std::vector<Partition> order;
    std::vector<std::vector<WeightExpansion>> matrix;  // matrix[row][col]
    bool unitriangular = false;
    std::vector<std::string> problems;
};

UnitriangularityCertificate k0_unitriangularity(const LocalSetup& setup);

} // namespace sodlab
