#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sodlab {

struct VirtualDims {
    long grass = 0;       // Grass(E; d+)
    long dualGrass = 0;   // Grass(E^v[1]; d-)
    long incidence = 0;
    /* incidence value with the factor r dropped, as displayed in print */
    long printedIncidence = 0;
};

VirtualDims virtual_dimensions(long dimX, long r, long dPlus, long dMinus);

struct TableRow {
    long copies = 1;
    std::string target;
    std::vector<int> indexRange;
    std::optional<long> virtualDim;
};

struct DecompositionTable {
    std::vector<TableRow> rows;
    std::string orderNote;
    std::optional<long> sourceVirtualDim;

    long component_count() const;
};

/* Brill-Noether number g - (r+1)(g-d+r) of G^r_d */
long brill_noether(long g, long d, long r);

DecompositionTable curves_table(int g, int d, int r);
DecompositionTable blowup_table(int r);
DecompositionTable reducible_table(int r);

} // namespace sodlab
