#pragma once

#include "sodlab/bigint.hpp"
#include "sodlab/partition.hpp"
#include "sodlab/weight.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sodlab {

constexpr int kMaxVariables = 16;

using Exponent = std::array<std::int16_t, kMaxVariables>;

/* Exact multivariate Laurent polynomial with big-integer coefficients.
 * Zero coefficients are never stored. */
class LaurentCharacter {
public:
    explicit LaurentCharacter(int variableCount = 0);

    static LaurentCharacter constant(int variableCount, const BigInt& c);
    static LaurentCharacter monomial(int variableCount, const std::vector<int>& exponents,
                                     const BigInt& c = 1);
    static LaurentCharacter variable(int variableCount, int index);

    int variable_count() const { return nvars_; }
    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coefficient(const std::vector<int>& exponents) const;
    std::vector<int> exponent_vector(const Exponent& e) const;

    void add_term(const Exponent& e, const BigInt& c);

    LaurentCharacter& operator+=(const LaurentCharacter& o);
    LaurentCharacter& operator-=(const LaurentCharacter& o);
    LaurentCharacter& operator*=(const BigInt& c);
    LaurentCharacter operator-() const;
    friend LaurentCharacter operator+(LaurentCharacter a, const LaurentCharacter& b) { return a += b; }
    friend LaurentCharacter operator-(LaurentCharacter a, const LaurentCharacter& b) { return a -= b; }
    friend LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b);
    friend LaurentCharacter operator*(LaurentCharacter a, const BigInt& c) { return a *= c; }
    bool operator==(const LaurentCharacter& o) const;

    /* multiply by x^shift */
    LaurentCharacter times_monomial(const std::vector<int>& shift) const;
    /* place these variables at [offset, offset + variable_count()) of a larger ring */
    LaurentCharacter embed(int totalVariables, int offset) const;
    LaurentCharacter swap_variables(int i, int j) const;
    bool is_symmetric() const;
    /* exact quotient; throws std::domain_error when the division is not exact */
    LaurentCharacter divide_exact(const LaurentCharacter& divisor) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_same_ring(const LaurentCharacter& o) const;

    int nvars_;
    std::map<Exponent, BigInt> terms_;
};

/* Integer combination of Schur symbols indexed by partitions. */
struct SchurExpansion {
    std::map<Partition, BigInt> terms;

    void add(const Partition& p, const BigInt& c);
    bool is_zero() const { return terms.empty(); }
    BigInt coefficient(const Partition& p) const;
    std::string str() const;
    bool operator==(const SchurExpansion&) const = default;
};

/* Integer combination of irreducible GL characters indexed by dominant
 * weights of a fixed rank (entries may be negative). */
struct WeightExpansion {
    int rank = 0;
    std::map<IntegerWeight, BigInt> terms;

    void add(const IntegerWeight& w, const BigInt& c);
    bool is_zero() const { return terms.empty(); }
    std::string str() const;
    bool operator==(const WeightExpansion&) const = default;
};

LaurentCharacter complete_homogeneous(int k, int nVars);
LaurentCharacter elementary(int k, int nVars);
/* e_k and h_k evaluated on an arbitrary list of ring elements */
LaurentCharacter elementary_of(const std::vector<LaurentCharacter>& items, int k, int nVars);
LaurentCharacter complete_of(const std::vector<LaurentCharacter>& items, int k, int nVars);

/* Coefficient of x^mu in s_lambda for the listed dominant mu (Kostka numbers),
 * computed from the Jacobi-Trudi determinant in the h's. Cached. */
const std::map<Exponent, BigInt>& schur_dominant_part(const Partition& lambda, int nVars);

/* s_lambda(x_1..x_n). Zero when length(lambda) > nVars. */
LaurentCharacter schur_polynomial(const Partition& lambda, int nVars);
/* Character of the irreducible GL_n representation with dominant weight w. */
LaurentCharacter schur_character(const IntegerWeight& dominant);

SchurExpansion littlewood_richardson(const Partition& lambda, const Partition& mu, int maxLength);
/* product of irreducible GL_rank characters, det-normalized before LR */
WeightExpansion multiply_weights(const IntegerWeight& a, const IntegerWeight& b);

/* (mu^t, mu) with |mu| = ell; mu in descending lexicographic order */
std::vector<std::pair<Partition, Partition>> cauchy_exterior(int ell);
/* (mu, mu) with |mu| = k */
std::vector<std::pair<Partition, Partition>> cauchy_symmetric(int k);

/* Throws std::invalid_argument on non-symmetric or non-polynomial input. */
SchurExpansion schur_decompose(const LaurentCharacter& p);
/* Laurent version: dominant weights of rank variable_count(). */
WeightExpansion weight_decompose(const LaurentCharacter& p);

LaurentCharacter evaluate(const SchurExpansion& e, int nVars);
LaurentCharacter evaluate(const WeightExpansion& e);

/* (-a_k, ..., -a_1); throws on non-dominant input */
IntegerWeight dual_weight(const IntegerWeight& a);

} // namespace sodlab
