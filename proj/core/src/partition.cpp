#include "sodlab/partition.hpp"

#include "sodlab/weight.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sodlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (k && parts_[k - 1] < parts_[k])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse_csv(std::string_view text)
{
    IntegerWeight w = IntegerWeight::parse_csv(text);
    return Partition(w.entries());
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

int Partition::operator[](int k) const
{
    if (k < 0)
        throw std::out_of_range("negative partition index");
    return k < length() ? parts_[static_cast<std::size_t>(k)] : 0;
}

std::vector<int> Partition::padded(int len) const
{
    if (len < length())
        throw std::invalid_argument("cannot pad " + str() + " to length " + std::to_string(len));
    std::vector<int> out = parts_;
    out.resize(static_cast<std::size_t>(len), 0);
    return out;
}

std::string Partition::str() const
{
    return "(" + csv() + ")";
}

std::string Partition::csv() const
{
    if (parts_.empty())
        return "0";
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(parts_[k]);
    }
    return s;
}

bool Box::contains(const Partition& p) const
{
    if (empty())
        return false;
    return p.length() <= height && p.first() <= width;
}

std::uint64_t Box::cardinality() const
{
    if (empty())
        return 0;
    return binomial(height + width, height);
}

std::string Box::str() const
{
    return "B(" + std::to_string(height) + "," + std::to_string(width) + ")";
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j)
        r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    return r;
}

namespace {

void enumerate_rec(int pos, int height, int cap, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (pos == height) {
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        cur[static_cast<std::size_t>(pos)] = v;
        enumerate_rec(pos + 1, height, v, cur, out);
    }
}

void partitions_rec(int remaining, int cap, int slots, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0)
        return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(remaining - v, v, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> box_enumerate(const Box& box)
{
    std::vector<Partition> out;
    if (box.empty())
        return out;
    if (box.height == 0 || box.width == 0) {
        out.emplace_back();
        return out;
    }
    out.reserve(box.cardinality());
    std::vector<int> cur(static_cast<std::size_t>(box.height), 0);
    enumerate_rec(0, box.height, box.width, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int total, int maxLength)
{
    std::vector<Partition> out;
    if (total < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(total, total, maxLength < 0 ? total : maxLength, cur, out);
    return out;
}

Partition transpose(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(out);
}

Partition shift(const Partition& nu, int i, int length)
{
    if (i < 0)
        throw std::invalid_argument("shift by a negative amount");
    std::vector<int> parts = nu.padded(length);
    for (int& v : parts)
        v += i;
    return Partition(parts);
}

Partition lambda_superscript(const Partition& lambda, int i, int boxHeight)
{
    if (lambda.length() > boxHeight)
        throw std::invalid_argument(lambda.str() + " has more than " + std::to_string(boxHeight) + " parts");
    if (i < 1 || i > lambda.first())
        throw std::invalid_argument("i=" + std::to_string(i) + " outside [1, lambda_1] for " + lambda.str());
    std::vector<int> lam = lambda.padded(boxHeight);
    lam.push_back(0); // lambda_{boxHeight+1}
    int j = -1;
    for (int t = 1; t <= boxHeight; ++t) {
        if (lam[static_cast<std::size_t>(t - 1)] >= i && i >= lam[static_cast<std::size_t>(t)] + 1) {
            j = t;
            break;
        }
    }
    if (j < 0)
        throw std::logic_error("no index j for lambda^(i)");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(boxHeight + 1));
    for (int t = 1; t <= j; ++t)
        out.push_back(lam[static_cast<std::size_t>(t - 1)]);
    out.push_back(i);
    for (int t = j + 1; t <= boxHeight; ++t)
        out.push_back(lam[static_cast<std::size_t>(t - 1)] + 1);
    return Partition(out);
}

bool interleaves(const Partition& nu, const Partition& lambda, int boxHeight)
{
    if (lambda.length() > boxHeight || nu.length() > std::max(boxHeight - 1, 0))
        return false;
    for (int k = 0; k < boxHeight - 1; ++k)
        if (nu[k] < lambda[k + 1] || nu[k] > lambda[k])
            return false;
    return true;
}

InductionBlocks induction_blocks(int n, int d, int k, int r)
{
    if (d < 0 || d > n || k < 0)
        throw std::invalid_argument("induction_blocks needs 0 <= d <= n and k >= 0");
    InductionBlocks res;
    res.n = n;
    res.d = d;
    res.k = k;
    res.r = r;
    const int h = n - d;
    const int lower = std::max(0, d - r + 1);
    const int top = k - lower;
    res.displayedBoundDiffers = (n - d + r - 1) != top;

    for (int i = 0; i <= top; ++i) {
        InductionBlock b;
        b.kind = InductionBlock::Kind::Psi;
        b.twist = i;
        b.source = Box{h - 1, k - i};
        for (const Partition& nu : box_enumerate(b.source))
            b.members.push_back(shift(nu, i, h));
        res.blocks.push_back(std::move(b));
    }
    if (d >= r) {
        InductionBlock b;
        b.kind = InductionBlock::Kind::DetTwist;
        b.twist = k - d + r;
        b.source = Box{h, d - r};
        if (b.twist < 0) {
            res.problems.push_back("det block twist " + std::to_string(b.twist) + " is negative");
        } else {
            for (const Partition& nu : box_enumerate(b.source))
                b.members.push_back(shift(nu, b.twist, h));
        }
        res.blocks.push_back(std::move(b));
    }

    std::set<Partition> seen;
    const Box whole{h, k};
    for (const InductionBlock& b : res.blocks) {
        for (const Partition& p : b.members) {
            if (!seen.insert(p).second) {
                res.disjoint = false;
                res.problems.push_back("overlap at " + p.str());
            }
            if (!whole.contains(p)) {
                res.covering = false;
                res.problems.push_back(p.str() + " lies outside " + whole.str());
            }
        }
    }
    for (const Partition& p : box_enumerate(whole)) {
        if (!seen.count(p)) {
            res.covering = false;
            res.problems.push_back("gap at " + p.str());
        }
    }
    return res;
}

} // namespace sodlab
