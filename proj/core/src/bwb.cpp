#include "sodlab/bwb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sodlab {

std::string BottOutcome::str() const
{
    if (vanishing)
        return "Vanishing";
    return "NonVanishing dominant=" + dominant.str() + " shift=" + std::to_string(shift);
}

BottOutcome straighten(const IntegerWeight& lambda)
{
    const int n = lambda.rank();
    std::vector<int> mu(lambda.entries());
    for (int k = 0; k < n; ++k)
        mu[static_cast<std::size_t>(k)] += n - 1 - k;

    // insertion sort into strictly decreasing order, counting inversions
    int inversions = 0;
    for (int a = 1; a < n; ++a) {
        int v = mu[static_cast<std::size_t>(a)];
        int b = a;
        while (b > 0 && mu[static_cast<std::size_t>(b - 1)] <= v) {
            if (mu[static_cast<std::size_t>(b - 1)] == v)
                return BottOutcome::vanish();
            mu[static_cast<std::size_t>(b)] = mu[static_cast<std::size_t>(b - 1)];
            --b;
            ++inversions;
        }
        mu[static_cast<std::size_t>(b)] = v;
    }
    for (int k = 0; k < n; ++k)
        mu[static_cast<std::size_t>(k)] -= n - 1 - k;
    return BottOutcome::nonvanishing(IntegerWeight(mu), inversions);
}

BottOutcome grassmannian_pushforward(const IntegerWeight& alpha, const IntegerWeight& beta)
{
    if (!alpha.is_dominant())
        throw std::invalid_argument("grassmannian_pushforward: alpha " + alpha.str() + " is not weakly decreasing");
    if (!beta.is_dominant())
        throw std::invalid_argument("grassmannian_pushforward: beta " + beta.str() + " is not weakly decreasing");
    return straighten(alpha.concat(beta));
}

LaurentCharacter alternant_oracle(const IntegerWeight& lambda)
{
    const int n = lambda.rank();
    if (n > 6)
        throw std::invalid_argument("alternant_oracle supports rank <= 6");
    if (n == 0)
        return LaurentCharacter::constant(0, 1);

    std::vector<int> mu(lambda.entries());
    for (int k = 0; k < n; ++k)
        mu[static_cast<std::size_t>(k)] += n - 1 - k;

    LaurentCharacter alt(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inv;
        // x_{perm(k)} carries mu_k
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            e[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = mu[static_cast<std::size_t>(k)];
        alt += LaurentCharacter::monomial(n, e, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // divide by x_i - x_j for i < j, one linear factor at a time
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LaurentCharacter factor = LaurentCharacter::variable(n, i) - LaurentCharacter::variable(n, j);
            alt = alt.divide_exact(factor);
        }
    }
    return alt;
}

BottOutcome serre_window(int N, int t)
{
    if (N < 0)
        throw std::invalid_argument("serre_window needs N >= 0");
    std::vector<int> w(static_cast<std::size_t>(N + 1), 0);
    w.back() = t;
    return straighten(IntegerWeight(w));
}

BigInt weyl_dimension(const IntegerWeight& dominant)
{
    if (!dominant.is_dominant())
        throw std::invalid_argument("weyl_dimension needs a dominant weight, got " + dominant.str());
    const int n = dominant.rank();
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= dominant[i] - dominant[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

LaurentCharacter bott_euler_character(const BottOutcome& outcome, int rank)
{
    if (outcome.vanishing)
        return LaurentCharacter(rank);
    LaurentCharacter s = schur_character(outcome.dominant);
    if (outcome.shift % 2)
        s = -s;
    return s;
}

} // namespace sodlab
