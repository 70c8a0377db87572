#pragma once

// Brute-force reference implementations used only by the tests.

#include "sodlab/sodlab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using sodlab::BigInt;
using sodlab::LaurentCharacter;
using sodlab::Partition;

/* s_lambda(x_1..x_n) as the generating function of semistandard tableaux */
inline LaurentCharacter ssyt_schur(const Partition& lambda, int n)
{
    LaurentCharacter out(n);
    if (lambda.length() > n)
        return out;
    std::vector<std::pair<int, int>> cells;
    for (int row = 0; row < lambda.length(); ++row)
        for (int col = 0; col < lambda[row]; ++col)
            cells.emplace_back(row, col);
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.length()));
    for (int row = 0; row < lambda.length(); ++row)
        fill[static_cast<std::size_t>(row)].assign(static_cast<std::size_t>(lambda[row]), 0);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);

    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == cells.size()) {
            out += LaurentCharacter::monomial(n, exps);
            return;
        }
        auto [row, col] = cells[k];
        int lo = 1;
        if (col > 0)
            lo = std::max(lo, fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
        if (row > 0)
            lo = std::max(lo, fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            ++exps[static_cast<std::size_t>(v - 1)];
            place(k + 1);
            --exps[static_cast<std::size_t>(v - 1)];
        }
    };
    place(0);
    return out;
}

/* e_k of the given items by explicit subset enumeration */
inline LaurentCharacter subset_elementary(const std::vector<LaurentCharacter>& items, int k, int nVars)
{
    LaurentCharacter out(nVars);
    const int N = static_cast<int>(items.size());
    if (k > N)
        return out;
    std::vector<bool> pick(static_cast<std::size_t>(N), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        LaurentCharacter term = LaurentCharacter::constant(nVars, 1);
        for (int i = 0; i < N; ++i)
            if (pick[static_cast<std::size_t>(i)])
                term = term * items[static_cast<std::size_t>(i)];
        out += term;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/* h_k of the given items by multiset enumeration */
inline LaurentCharacter multiset_complete(const std::vector<LaurentCharacter>& items, int k, int nVars)
{
    LaurentCharacter out(nVars);
    std::function<void(std::size_t, int, LaurentCharacter)> rec = [&](std::size_t start, int left,
                                                                       LaurentCharacter acc) {
        if (left == 0) {
            out += acc;
            return;
        }
        for (std::size_t i = start; i < items.size(); ++i)
            rec(i, left - 1, acc * items[i]);
    };
    rec(0, k, LaurentCharacter::constant(nVars, 1));
    return out;
}

/* the products x_i y_j in nx + ny variables */
inline std::vector<LaurentCharacter> bilinear_items(int nx, int ny)
{
    std::vector<LaurentCharacter> items;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            items.push_back(LaurentCharacter::variable(nx + ny, i) * LaurentCharacter::variable(nx + ny, nx + j));
    return items;
}

/* all partitions of size <= maxSize with at most maxLength parts */
inline std::vector<Partition> partitions_up_to(int maxSize, int maxLength)
{
    std::vector<Partition> out;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int left, int cap) {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == maxLength)
            return;
        for (int v = std::min(left, cap); v >= 1; --v) {
            parts.push_back(v);
            rec(parts, left - v, v);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    rec(parts, maxSize, maxSize);
    return out;
}

inline int inversions(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inv;
    return inv;
}

} // namespace oracle
