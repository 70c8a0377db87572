#pragma once

#include "sodlab/bigint.hpp"
#include "sodlab/character.hpp"
#include "sodlab/weight.hpp"

#include <string>

namespace sodlab {

/* Result of pushing a line-bundle weight along a complete flag bundle:
 * zero, or S^dominant placed in cohomological degree `shift`. */
struct BottOutcome {
    bool vanishing = true;
    IntegerWeight dominant;
    int shift = 0;

    static BottOutcome vanish() { return {}; }
    static BottOutcome nonvanishing(IntegerWeight dominant, int shift)
    {
        return BottOutcome{false, std::move(dominant), shift};
    }

    std::string str() const;
    bool operator==(const BottOutcome&) const = default;
};

/* Dot-action straightening with rho = (n-1, ..., 1, 0). */
BottOutcome straighten(const IntegerWeight& lambda);

/* Pushforward of S^alpha(Q) (x) S^beta(R) from Grass(E; rank alpha). */
BottOutcome grassmannian_pushforward(const IntegerWeight& alpha, const IntegerWeight& beta);

/* sum_w sgn(w) x^{w(lambda+rho)} divided by the Vandermonde alternant. */
LaurentCharacter alternant_oracle(const IntegerWeight& lambda);

/* straighten((0, ..., 0, t)) in rank N+1. */
BottOutcome serre_window(int N, int t);

/* dimension of the irreducible GL representation with this dominant weight */
BigInt weyl_dimension(const IntegerWeight& dominant);

/* 0, or (-1)^shift times the character of the dominant weight. */
LaurentCharacter bott_euler_character(const BottOutcome& outcome, int rank);

} // namespace sodlab
