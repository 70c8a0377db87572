#include "sodlab/apps.hpp"

#include "sodlab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace sodlab {

VirtualDims virtual_dimensions(long dimX, long r, long dPlus, long dMinus)
{
    if (dPlus < 0 || dMinus < 0)
        throw std::invalid_argument("virtual_dimensions needs d+, d- >= 0");
    VirtualDims v;
    v.grass = dimX + dPlus * (r - dPlus);
    v.dualGrass = dimX - dMinus * (r + dMinus);
    const long tail = dPlus * dMinus - dPlus * dPlus - dMinus * dMinus;
    v.incidence = dimX + r * (dPlus - dMinus) + tail;
    v.printedIncidence = dimX + (dPlus - dMinus) + tail;
    return v;
}

long DecompositionTable::component_count() const
{
    long total = 0;
    for (const TableRow& row : rows)
        total += row.copies;
    return total;
}

long brill_noether(long g, long d, long r)
{
    return g - (r + 1) * (g - d + r);
}

DecompositionTable curves_table(int g, int d, int r)
{
    if (g < 1)
        throw std::invalid_argument("curves_table needs g >= 1");
    if (d < g - 1)
        throw std::invalid_argument("curves_table needs d >= g - 1");
    if (r < -1)
        throw std::invalid_argument("curves_table needs r >= -1");
    const int e = 1 - g + d;
    const int dd = 2 * g - 2 - d;
    DecompositionTable t;
    for (int i = 0; i <= std::min(e, r + 1); ++i) {
        TableRow row;
        row.copies = static_cast<long>(binomial(e, i));
        row.target = "G^" + std::to_string(r - i) + "_" + std::to_string(dd) + "(C)";
        row.indexRange = {i};
        row.virtualDim = brill_noether(g, dd, r - i);
        t.rows.push_back(std::move(row));
    }
    t.sourceVirtualDim = g + static_cast<long>(r + 1) * (d - g - r);
    t.orderNote = "D(G^" + std::to_string(r) + "_" + std::to_string(d) + "(C)) = < binom(" + std::to_string(e) +
                  ",i) copies of D(G^{r-i}_" + std::to_string(dd) + "(C)) >, 0 <= i <= " +
                  std::to_string(std::min(e, r + 1)) + ", ordered as in the Grassmannian-bundle decomposition";
    return t;
}

DecompositionTable blowup_table(int r)
{
    if (r < 1)
        throw std::invalid_argument("blowup_table needs r >= 1");
    DecompositionTable t;
    for (int j = 1; j <= r; ++j) {
        TableRow row;
        row.copies = static_cast<long>(binomial(r, j));
        row.target = "X~_" + std::to_string(j);
        row.indexRange = {j};
        t.rows.push_back(std::move(row));
    }
    t.rows.push_back(TableRow{1, "X", {0}, std::nullopt});
    t.orderNote = "components (j,lambda), lambda in B(j,r-j), precede D(X)_0; "
                  "Map(D(X~_j)_(j,lambda), D(X~_k)_(k,mu)) = 0 when (r-k,mu) < (r-j,lambda)";
    return t;
}

DecompositionTable reducible_table(int r)
{
    if (r < 1)
        throw std::invalid_argument("reducible_table needs r >= 1");
    DecompositionTable t;
    for (int j = -r; j <= -1; ++j)
        t.rows.push_back(TableRow{1, "Tot_Z(L_Z[-1])", {j}, std::nullopt});
    t.rows.push_back(TableRow{1, "X", {0}, std::nullopt});
    t.orderNote = "< D(Tot_Z(L_Z[-1]))_-r, ..., D(Tot_Z(L_Z[-1]))_-1, D(X)_0 >";
    return t;
}

} // namespace sodlab
