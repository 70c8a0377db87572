#include "sodlab/weight.hpp"

#include "sodlab/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sodlab {

IntegerWeight IntegerWeight::zero(int rank)
{
    if (rank < 0)
        throw std::invalid_argument("negative rank");
    return IntegerWeight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

IntegerWeight IntegerWeight::from_partition(const Partition& p, int rank)
{
    return IntegerWeight(p.padded(rank));
}

IntegerWeight IntegerWeight::parse_csv(std::string_view text)
{
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    std::vector<int> out;
    if (text.empty())
        return IntegerWeight(out);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        if (!item.empty() && item.front() == '+')
            item.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("cannot parse integer '" + std::string(item) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return IntegerWeight(out);
}

bool IntegerWeight::is_dominant() const
{
    for (std::size_t k = 1; k < entries_.size(); ++k)
        if (entries_[k - 1] < entries_[k])
            return false;
    return true;
}

bool IntegerWeight::is_zero() const
{
    for (int e : entries_)
        if (e != 0)
            return false;
    return true;
}

long IntegerWeight::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

IntegerWeight IntegerWeight::concat(const IntegerWeight& other) const
{
    std::vector<int> out = entries_;
    out.insert(out.end(), other.entries_.begin(), other.entries_.end());
    return IntegerWeight(out);
}

IntegerWeight IntegerWeight::plus(int c) const
{
    std::vector<int> out = entries_;
    for (int& e : out)
        e += c;
    return IntegerWeight(out);
}

Partition IntegerWeight::to_partition() const
{
    return Partition(entries_);
}

std::string IntegerWeight::str() const
{
    return "(" + csv() + ")";
}

std::string IntegerWeight::csv() const
{
    std::string s;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(entries_[k]);
    }
    return s;
}

} // namespace sodlab
