#include "sodlab/character.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sodlab {

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (std::int16_t v : e) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

Exponent make_exponent(const std::vector<int>& v)
{
    if (v.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("too many variables");
    Exponent e{};
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] > 30000 || v[k] < -30000)
            throw std::overflow_error("exponent out of range");
        e[k] = static_cast<std::int16_t>(v[k]);
    }
    return e;
}

Exponent add_exponents(const Exponent& a, const Exponent& b, int n)
{
    Exponent e{};
    for (int k = 0; k < n; ++k)
        e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(a[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(k)]);
    return e;
}

bool exponent_dominant(const Exponent& e, int n)
{
    for (int k = 1; k < n; ++k)
        if (e[static_cast<std::size_t>(k - 1)] < e[static_cast<std::size_t>(k)])
            return false;
    return true;
}

std::vector<int> exponent_to_vector(const Exponent& e, int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        v[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
    return v;
}

void check_vars(int n)
{
    if (n < 0 || n > kMaxVariables)
        throw std::invalid_argument("variable count " + std::to_string(n) + " outside [0," +
                                    std::to_string(kMaxVariables) + "]");
}

} // namespace

LaurentCharacter::LaurentCharacter(int variableCount) : nvars_(variableCount)
{
    check_vars(variableCount);
}

LaurentCharacter LaurentCharacter::constant(int variableCount, const BigInt& c)
{
    LaurentCharacter p(variableCount);
    p.add_term(Exponent{}, c);
    return p;
}

LaurentCharacter LaurentCharacter::monomial(int variableCount, const std::vector<int>& exponents, const BigInt& c)
{
    if (static_cast<int>(exponents.size()) != variableCount)
        throw std::invalid_argument("exponent vector length does not match variable count");
    LaurentCharacter p(variableCount);
    p.add_term(make_exponent(exponents), c);
    return p;
}

LaurentCharacter LaurentCharacter::variable(int variableCount, int index)
{
    std::vector<int> e(static_cast<std::size_t>(variableCount), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(variableCount, e);
}

BigInt LaurentCharacter::coefficient(const std::vector<int>& exponents) const
{
    auto it = terms_.find(make_exponent(exponents));
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<int> LaurentCharacter::exponent_vector(const Exponent& e) const
{
    return exponent_to_vector(e, nvars_);
}

void LaurentCharacter::add_term(const Exponent& e, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentCharacter::check_same_ring(const LaurentCharacter& o) const
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("characters live in rings with different variable counts");
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o)
{
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o)
{
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentCharacter& LaurentCharacter::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentCharacter LaurentCharacter::operator-() const
{
    LaurentCharacter out = *this;
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b)
{
    a.check_same_ring(b);
    LaurentCharacter out(a.nvars_);
    if (a.is_zero() || b.is_zero())
        return out;
    std::unordered_map<Exponent, BigInt, ExponentHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 16));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            acc[add_exponents(ea, eb, a.nvars_)] += ca * cb;
    for (auto& [e, c] : acc)
        if (c != 0)
            out.terms_.emplace(e, std::move(c));
    return out;
}

bool LaurentCharacter::operator==(const LaurentCharacter& o) const
{
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

LaurentCharacter LaurentCharacter::times_monomial(const std::vector<int>& shift) const
{
    if (static_cast<int>(shift.size()) != nvars_)
        throw std::invalid_argument("shift length does not match variable count");
    Exponent s = make_exponent(shift);
    LaurentCharacter out(nvars_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(add_exponents(e, s, nvars_), c);
    return out;
}

LaurentCharacter LaurentCharacter::embed(int totalVariables, int offset) const
{
    if (offset < 0 || offset + nvars_ > totalVariables)
        throw std::invalid_argument("embedding does not fit");
    LaurentCharacter out(totalVariables);
    for (const auto& [e, c] : terms_) {
        Exponent f{};
        for (int k = 0; k < nvars_; ++k)
            f[static_cast<std::size_t>(offset + k)] = e[static_cast<std::size_t>(k)];
        out.terms_.emplace(f, c);
    }
    return out;
}

LaurentCharacter LaurentCharacter::swap_variables(int i, int j) const
{
    if (i < 0 || j < 0 || i >= nvars_ || j >= nvars_)
        throw std::out_of_range("variable index");
    LaurentCharacter out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
        out.terms_.emplace(f, c);
    }
    return out;
}

bool LaurentCharacter::is_symmetric() const
{
    for (int i = 0; i + 1 < nvars_; ++i)
        if (!(swap_variables(i, i + 1) == *this))
            return false;
    return true;
}

LaurentCharacter LaurentCharacter::divide_exact(const LaurentCharacter& divisor) const
{
    check_same_ring(divisor);
    if (divisor.is_zero())
        throw std::domain_error("division by zero character");
    LaurentCharacter quotient(nvars_);
    if (is_zero())
        return quotient;

    // every quotient exponent lies in [min(this) - max(div), max(this) - min(div)]
    std::vector<int> lo(static_cast<std::size_t>(nvars_)), hi(static_cast<std::size_t>(nvars_));
    for (int k = 0; k < nvars_; ++k) {
        int amin = 1 << 20, amax = -(1 << 20), dmin = 1 << 20, dmax = -(1 << 20);
        for (const auto& [e, c] : terms_) {
            amin = std::min<int>(amin, e[static_cast<std::size_t>(k)]);
            amax = std::max<int>(amax, e[static_cast<std::size_t>(k)]);
        }
        for (const auto& [e, c] : divisor.terms_) {
            dmin = std::min<int>(dmin, e[static_cast<std::size_t>(k)]);
            dmax = std::max<int>(dmax, e[static_cast<std::size_t>(k)]);
        }
        lo[static_cast<std::size_t>(k)] = amin - dmax;
        hi[static_cast<std::size_t>(k)] = amax - dmin;
    }

    const auto& [lead, leadCoeff] = *divisor.terms_.rbegin();
    LaurentCharacter rem = *this;
    while (!rem.is_zero()) {
        const auto [e, c] = *rem.terms_.rbegin();
        if (c % leadCoeff != 0)
            throw std::domain_error("inexact division (coefficient)");
        BigInt qc = c / leadCoeff;
        Exponent qe{};
        for (int k = 0; k < nvars_; ++k) {
            int v = e[static_cast<std::size_t>(k)] - lead[static_cast<std::size_t>(k)];
            if (v < lo[static_cast<std::size_t>(k)] || v > hi[static_cast<std::size_t>(k)])
                throw std::domain_error("inexact division (exponent)");
            qe[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(v);
        }
        quotient.add_term(qe, qc);
        for (const auto& [de, dc] : divisor.terms_)
            rem.add_term(add_exponents(qe, de, nvars_), -qc * dc);
    }
    return quotient;
}

std::string LaurentCharacter::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool firstTerm = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (firstTerm)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        firstTerm = false;
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            int p = e[static_cast<std::size_t>(k)];
            if (p == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += k < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(k)]
                                                        : "x" + std::to_string(k + 1);
            if (p != 1)
                mono += "^" + std::to_string(p);
        }
        if (mono.empty())
            s += mag.str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s;
}

void SchurExpansion::add(const Partition& p, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

BigInt SchurExpansion::coefficient(const Partition& p) const
{
    auto it = terms.find(p);
    return it == terms.end() ? BigInt(0) : it->second;
}

std::string SchurExpansion::str() const
{
    if (terms.empty())
        return "0";
    std::string s;
    bool firstTerm = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [p, c] = *it;
        if (!firstTerm)
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        firstTerm = false;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag != 1)
            s += mag.str() + "*";
        s += "s" + p.str();
    }
    return s;
}

void WeightExpansion::add(const IntegerWeight& w, const BigInt& c)
{
    if (w.rank() != rank)
        throw std::invalid_argument("weight rank does not match expansion rank");
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

std::string WeightExpansion::str() const
{
    if (terms.empty())
        return "0";
    std::string s;
    bool firstTerm = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [w, c] = *it;
        if (!firstTerm)
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        firstTerm = false;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag != 1)
            s += mag.str() + "*";
        s += "S" + w.str();
    }
    return s;
}

namespace {

void compositions(int remaining, int pos, int n, std::vector<int>& cur, LaurentCharacter& out)
{
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out += LaurentCharacter::monomial(n, cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        compositions(remaining - v, pos + 1, n, cur, out);
    }
}

} // namespace

LaurentCharacter complete_homogeneous(int k, int nVars)
{
    check_vars(nVars);
    LaurentCharacter out(nVars);
    if (k < 0)
        return out;
    if (nVars == 0)
        return k == 0 ? LaurentCharacter::constant(0, 1) : out;
    std::vector<int> cur(static_cast<std::size_t>(nVars), 0);
    compositions(k, 0, nVars, cur, out);
    return out;
}

LaurentCharacter elementary(int k, int nVars)
{
    check_vars(nVars);
    LaurentCharacter out(nVars);
    if (k < 0 || k > nVars)
        return out;
    std::vector<int> mask(static_cast<std::size_t>(nVars), 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    do {
        out += LaurentCharacter::monomial(nVars, mask);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

LaurentCharacter elementary_of(const std::vector<LaurentCharacter>& items, int k, int nVars)
{
    if (k < 0)
        return LaurentCharacter(nVars);
    std::vector<LaurentCharacter> e(static_cast<std::size_t>(k + 1), LaurentCharacter(nVars));
    e[0] = LaurentCharacter::constant(nVars, 1);
    for (const LaurentCharacter& v : items)
        for (int j = k; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * v;
    return e[static_cast<std::size_t>(k)];
}

LaurentCharacter complete_of(const std::vector<LaurentCharacter>& items, int k, int nVars)
{
    if (k < 0)
        return LaurentCharacter(nVars);
    std::vector<LaurentCharacter> h(static_cast<std::size_t>(k + 1), LaurentCharacter(nVars));
    h[0] = LaurentCharacter::constant(nVars, 1);
    for (const LaurentCharacter& v : items)
        for (int j = 1; j <= k; ++j)
            h[static_cast<std::size_t>(j)] += h[static_cast<std::size_t>(j - 1)] * v; // ascending j: powers of v
    return h[static_cast<std::size_t>(k)];
}

namespace {

/* Number of nonnegative integer matrices with the given row and column sums:
 * the coefficient of x^cols in h_{rows_1} ... h_{rows_l}. */
class TableCounter {
public:
    explicit TableCounter(std::vector<int> rows) : rows_(std::move(rows)) {}

    BigInt count(std::vector<int> cols)
    {
        long rs = std::accumulate(rows_.begin(), rows_.end(), 0L);
        long cs = std::accumulate(cols.begin(), cols.end(), 0L);
        if (rs != cs)
            return 0;
        return rec(0, cols);
    }

private:
    BigInt rec(std::size_t row, std::vector<int>& cols)
    {
        if (row + 1 == rows_.size())
            return 1; // last row is forced once totals agree
        if (row == rows_.size())
            return 1;
        auto key = std::make_pair(row, cols);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        BigInt total = 0;
        distribute(row, 0, rows_[row], cols, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    void distribute(std::size_t row, std::size_t col, int left, std::vector<int>& cols, BigInt& total)
    {
        if (col + 1 == cols.size()) {
            if (left <= cols[col]) {
                cols[col] -= left;
                total += rec(row + 1, cols);
                cols[col] += left;
            }
            return;
        }
        int cap = std::min(left, cols[col]);
        for (int v = 0; v <= cap; ++v) {
            cols[col] -= v;
            distribute(row, col + 1, left - v, cols, total);
            cols[col] += v;
        }
    }

    std::vector<int> rows_;
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

int permutation_sign(const std::vector<int>& p)
{
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b])
                ++inv;
    return inv % 2 ? -1 : 1;
}

std::map<Exponent, BigInt> compute_dominant_part(const Partition& lambda, int n)
{
    std::map<Exponent, BigInt> out;
    const int l = lambda.length();
    if (l > n)
        return out;
    if (l == 0) {
        out.emplace(Exponent{}, 1);
        return out;
    }
    // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded over permutations.
    struct Product {
        int sign;
        std::vector<int> rows;
    };
    std::vector<Product> products;
    std::vector<int> sigma(static_cast<std::size_t>(l));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> rows;
        bool zero = false;
        for (int i = 0; i < l; ++i) {
            int a = lambda[i] - i + sigma[static_cast<std::size_t>(i)];
            if (a < 0) {
                zero = true;
                break;
            }
            if (a > 0)
                rows.push_back(a);
        }
        if (!zero)
            products.push_back({permutation_sign(sigma), std::move(rows)});
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<TableCounter> counters;
    counters.reserve(products.size());
    for (const Product& pr : products)
        counters.emplace_back(pr.rows);

    for (const Partition& mu : partitions_of(lambda.size(), n)) {
        std::vector<int> cols = mu.padded(n);
        BigInt coeff = 0;
        for (std::size_t t = 0; t < products.size(); ++t) {
            if (products[t].rows.empty()) {
                coeff += products[t].sign * BigInt(mu.is_zero() ? 1 : 0);
                continue;
            }
            coeff += products[t].sign * counters[t].count(cols);
        }
        if (coeff != 0)
            out.emplace(make_exponent(cols), coeff);
    }
    return out;
}

std::mutex g_schur_mutex;
std::map<std::pair<Partition, int>, std::map<Exponent, BigInt>> g_dominant_cache;
std::map<std::pair<Partition, int>, LaurentCharacter> g_full_cache;

const LaurentCharacter& schur_full_cached(const Partition& lambda, int n)
{
    auto key = std::make_pair(lambda, n);
    {
        std::lock_guard<std::mutex> lock(g_schur_mutex);
        auto it = g_full_cache.find(key);
        if (it != g_full_cache.end())
            return it->second;
    }
    const auto& dom = schur_dominant_part(lambda, n);
    LaurentCharacter out(n);
    for (const auto& [e, c] : dom) {
        std::vector<int> v = exponent_to_vector(e, n);
        std::sort(v.begin(), v.end());
        do {
            out.add_term(make_exponent(v), c);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    return g_full_cache.emplace(key, std::move(out)).first->second;
}

void check_polynomial(const LaurentCharacter& p)
{
    for (const auto& [e, c] : p.terms())
        for (int k = 0; k < p.variable_count(); ++k)
            if (e[static_cast<std::size_t>(k)] < 0)
                throw std::invalid_argument("expected a polynomial, found a negative exponent");
}

/* Peel the dominant part of a symmetric polynomial into Schur symbols. */
void peel(std::map<Exponent, BigInt> dom, int n, const std::function<void(const Exponent&, const BigInt&)>& emit)
{
    std::size_t guard = 0;
    const std::size_t limit = 1000000;
    while (!dom.empty()) {
        if (++guard > limit)
            throw std::logic_error("Schur peeling did not terminate");
        const auto [e, c] = *dom.rbegin();
        Partition lam(exponent_to_vector(e, n));
        emit(e, c);
        for (const auto& [f, k] : schur_dominant_part(lam, n)) {
            auto [it, inserted] = dom.try_emplace(f, -c * k);
            if (!inserted) {
                it->second -= c * k;
                if (it->second == 0)
                    dom.erase(it);
            }
        }
    }
}

} // namespace

const std::map<Exponent, BigInt>& schur_dominant_part(const Partition& lambda, int nVars)
{
    check_vars(nVars);
    auto key = std::make_pair(lambda, nVars);
    {
        std::lock_guard<std::mutex> lock(g_schur_mutex);
        auto it = g_dominant_cache.find(key);
        if (it != g_dominant_cache.end())
            return it->second;
    }
    std::map<Exponent, BigInt> computed = compute_dominant_part(lambda, nVars);
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    return g_dominant_cache.emplace(key, std::move(computed)).first->second;
}

LaurentCharacter schur_polynomial(const Partition& lambda, int nVars)
{
    check_vars(nVars);
    if (lambda.length() > nVars)
        return LaurentCharacter(nVars);
    return schur_full_cached(lambda, nVars);
}

LaurentCharacter schur_character(const IntegerWeight& dominant)
{
    if (!dominant.is_dominant())
        throw std::invalid_argument("schur_character needs a dominant weight, got " + dominant.str());
    const int n = dominant.rank();
    if (n == 0)
        return LaurentCharacter::constant(0, 1);
    const int c = dominant[n - 1];
    Partition p = dominant.plus(-c).to_partition();
    LaurentCharacter s = schur_polynomial(p, n);
    if (c == 0)
        return s;
    return s.times_monomial(std::vector<int>(static_cast<std::size_t>(n), c));
}

SchurExpansion littlewood_richardson(const Partition& lambda, const Partition& mu, int maxLength)
{
    SchurExpansion out;
    if (maxLength < 0 || lambda.length() > maxLength || mu.length() > maxLength)
        return out;
    if (maxLength == 0) {
        out.add(Partition{}, 1);
        return out;
    }
    const int n = maxLength;
    // dominant part of s_lambda * s_mu in n variables
    const LaurentCharacter& sl = schur_full_cached(lambda, n);
    const auto& dmu = schur_dominant_part(mu, n);
    std::map<Exponent, BigInt> dom;
    for (const Partition& nu : partitions_of(lambda.size() + mu.size(), n)) {
        std::vector<int> target = nu.padded(n);
        BigInt coeff = 0;
        std::vector<int> rest(static_cast<std::size_t>(n));
        for (const auto& [a, ca] : sl.terms()) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                rest[static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)];
                ok = rest[static_cast<std::size_t>(k)] >= 0;
            }
            if (!ok)
                continue;
            std::sort(rest.begin(), rest.end(), std::greater<int>());
            auto it = dmu.find(make_exponent(rest));
            if (it != dmu.end())
                coeff += ca * it->second;
        }
        if (coeff != 0)
            dom.emplace(make_exponent(target), coeff);
    }
    peel(std::move(dom), n, [&](const Exponent& e, const BigInt& c) {
        out.add(Partition(exponent_to_vector(e, n)), c);
    });
    return out;
}

WeightExpansion multiply_weights(const IntegerWeight& a, const IntegerWeight& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("multiply_weights: rank mismatch");
    if (!a.is_dominant() || !b.is_dominant())
        throw std::invalid_argument("multiply_weights: weights must be dominant");
    WeightExpansion out;
    out.rank = a.rank();
    const int n = a.rank();
    if (n == 0) {
        out.add(IntegerWeight{}, 1);
        return out;
    }
    const int ca = a[n - 1], cb = b[n - 1];
    SchurExpansion lr = littlewood_richardson(a.plus(-ca).to_partition(), b.plus(-cb).to_partition(), n);
    for (const auto& [nu, c] : lr.terms)
        out.add(IntegerWeight::from_partition(nu, n).plus(ca + cb), c);
    return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_exterior(int ell)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& mu : partitions_of(ell))
        out.emplace_back(transpose(mu), mu);
    return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_symmetric(int k)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& mu : partitions_of(k))
        out.emplace_back(mu, mu);
    return out;
}

WeightExpansion weight_decompose(const LaurentCharacter& p)
{
    const int n = p.variable_count();
    WeightExpansion out;
    out.rank = n;
    if (p.is_zero())
        return out;
    if (n == 0) {
        out.add(IntegerWeight{}, p.terms().begin()->second);
        return out;
    }
    if (!p.is_symmetric())
        throw std::invalid_argument("character is not symmetric");
    int lowest = 1 << 20;
    for (const auto& [e, c] : p.terms())
        for (int k = 0; k < n; ++k)
            lowest = std::min<int>(lowest, e[static_cast<std::size_t>(k)]);
    std::map<Exponent, BigInt> dom;
    for (const auto& [e, c] : p.terms()) {
        if (!exponent_dominant(e, n))
            continue;
        Exponent f = e;
        for (int k = 0; k < n; ++k)
            f[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(f[static_cast<std::size_t>(k)] - lowest);
        dom.emplace(f, c);
    }
    peel(std::move(dom), n, [&](const Exponent& e, const BigInt& c) {
        out.add(IntegerWeight(exponent_to_vector(e, n)).plus(lowest), c);
    });
    return out;
}

SchurExpansion schur_decompose(const LaurentCharacter& p)
{
    check_polynomial(p);
    SchurExpansion out;
    for (const auto& [w, c] : weight_decompose(p).terms)
        out.add(w.to_partition(), c);
    return out;
}

LaurentCharacter evaluate(const SchurExpansion& e, int nVars)
{
    LaurentCharacter out(nVars);
    for (const auto& [p, c] : e.terms) {
        if (p.length() > nVars)
            continue;
        out += schur_polynomial(p, nVars) * c;
    }
    return out;
}

LaurentCharacter evaluate(const WeightExpansion& e)
{
    LaurentCharacter out(e.rank);
    for (const auto& [w, c] : e.terms)
        out += schur_character(w) * c;
    return out;
}

IntegerWeight dual_weight(const IntegerWeight& a)
{
    if (!a.is_dominant())
        throw std::invalid_argument("dual_weight needs a weakly decreasing weight, got " + a.str());
    std::vector<int> out(a.entries().rbegin(), a.entries().rend());
    for (int& v : out)
        v = -v;
    return IntegerWeight(out);
}

} // namespace sodlab
