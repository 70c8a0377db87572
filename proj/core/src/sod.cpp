#include "sodlab/sod.hpp"

#include "sodlab/kverify.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>

namespace sodlab {

void LocalSetup::validate() const
{
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("local setup needs 0 <= m <= n, got " + str());
    if (d < 0 || d > n)
        throw std::invalid_argument("local setup needs 0 <= d <= n, got " + str());
    if (n > 8)
        throw std::invalid_argument("local setup supports n <= 8");
}

std::string LocalSetup::str() const
{
    return "(n,m,d)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d) + ")";
}

std::string SodComponent::label() const
{
    return "(" + std::to_string(i) + "," + lambda.str() + ")";
}

std::vector<int> a_sequence(int i, const Partition& lambda, int r)
{
    if (i < 0 || i > r)
        throw std::invalid_argument("a_sequence needs 0 <= i <= r");
    if (!Box{r - i, i}.contains(lambda))
        throw std::invalid_argument(lambda.str() + " is not in " + Box{r - i, i}.str());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(r - i));
    int prev = i;
    for (int k = 0; k < r - i; ++k) {
        out.push_back(prev - lambda[k]);
        prev = lambda[k];
    }
    return out;
}

Partition lambda_from_a_sequence(int i, const std::vector<int>& a)
{
    std::vector<int> parts;
    int prev = i;
    for (int v : a) {
        if (v < 0)
            throw std::invalid_argument("a-sequence has a negative entry");
        prev -= v;
        if (prev < 0)
            throw std::invalid_argument("a-sequence sums past i");
        parts.push_back(prev);
    }
    return Partition(parts);
}

SodComponent make_component(int i, const Partition& lambda, int r, int d)
{
    if (i < 0 || i > std::min(r, d))
        throw std::invalid_argument("component index i outside [0, min(r,d)]");
    SodComponent c;
    c.i = i;
    c.lambda = lambda;
    c.aSequence = a_sequence(i, lambda, r);
    c.orderKey = c.aSequence;
    c.orderKey.resize(static_cast<std::size_t>(r), INT_MAX);
    c.target = "Grass(E^∨[1]; " + std::to_string(d - i) + ")";
    c.kernel = "S^" + lambda.str() + "(E^univ_(" + std::to_string(d) + "," + std::to_string(d - i) +
               ")) ⊗ det(Q)^" + std::to_string(i);
    return c;
}

std::strong_ordering order_compare(const SodComponent& a, const SodComponent& b)
{
    return a.orderKey <=> b.orderKey;
}

std::vector<SodComponent> enumerate_components(int r, int d)
{
    if (r < 0 || d < 1)
        throw std::invalid_argument("enumerate_components needs r >= 0 and d >= 1");
    std::vector<SodComponent> out;
    for (int i = 0; i <= std::min(r, d); ++i)
        for (const Partition& lam : box_enumerate(Box{r - i, i}))
            out.push_back(make_component(i, lam, r, d));
    std::sort(out.begin(), out.end(),
              [](const SodComponent& a, const SodComponent& b) { return order_compare(a, b) < 0; });
    return out;
}

std::string FunctorWord::str() const
{
    std::string s;
    for (int a : psiTwists) {
        if (!s.empty())
            s += "∘";
        s += "Ψ_" + std::to_string(a);
    }
    if (detTwist != 0 || s.empty()) {
        if (detTwist == 0)
            return "id";
        if (!s.empty())
            s += "∘";
        s += "⊗det^" + std::to_string(detTwist);
    }
    return s;
}

namespace {

struct TraceBuilder {
    LocalSetup setup;
    GenerationTrace* trace;

    void leaf(TraceNode& node, int level, const std::vector<int>& twists, int detTwist)
    {
        const int n = setup.n, r = setup.r(), d = setup.d;
        TraceLeaf lf;
        lf.level = level;
        lf.box = Box{n - level, level - r};
        lf.word.psiTwists = twists;
        lf.word.detTwist = detTwist;
        lf.i = r - static_cast<int>(twists.size());
        try {
            lf.lambda = lambda_from_a_sequence(lf.i, twists);
        } catch (const std::exception& e) {
            trace->problems.push_back("leaf " + lf.word.str() + ": " + e.what());
        }
        lf.generators = box_enumerate(lf.box);
        for (const Partition& nu : lf.generators) {
            Partition alpha = shift(nu, detTwist, n - level);
            for (int j = static_cast<int>(twists.size()); j >= 1; --j)
                alpha = shift(alpha, twists[static_cast<std::size_t>(j - 1)], n - (d + j - 1));
            lf.images.push_back(alpha);
        }
        node.leaf = true;
        node.leafIndex = static_cast<int>(trace->leaves.size());
        trace->leaves.push_back(std::move(lf));
    }

    void build(TraceNode& node, int level, int width, std::vector<int>& twists)
    {
        const int n = setup.n, r = setup.r();
        node.level = level;
        node.width = width;
        node.height = n - level;
        if (width == level - r) {
            leaf(node, level, twists, 0);
            return;
        }
        if (level <= n) {
            InductionBlocks blocks = induction_blocks(n, level, width, r);
            if (!blocks.ok())
                for (const std::string& p : blocks.problems)
                    trace->problems.push_back("level " + std::to_string(level) + ": " + p);
        }
        const int lower = std::max(0, level - r + 1);
        for (int t = 0; t <= width - lower; ++t) {
            TraceNode child;
            child.edgeTwist = t;
            twists.push_back(t);
            build(child, level + 1, width - t, twists);
            twists.pop_back();
            node.children.push_back(std::move(child));
        }
        if (level >= r) {
            TraceNode child;
            child.level = level;
            child.width = level - r;
            child.height = n - level;
            leaf(child, level, twists, width - level + r);
            node.children.push_back(std::move(child));
        }
    }
};

} // namespace

GenerationTrace generation_trace(const LocalSetup& setup)
{
    setup.validate();
    if (setup.d < 1)
        throw std::invalid_argument("generation_trace needs d >= 1");
    GenerationTrace trace;
    trace.setup = setup;
    TraceBuilder builder{setup, &trace};
    std::vector<int> twists;
    builder.build(trace.root, setup.d, setup.d, twists);

    const int r = setup.r(), d = setup.d, n = setup.n;
    std::vector<SodComponent> comps = enumerate_components(r, d);

    std::multiset<std::pair<int, Partition>> fromLeaves, fromComps;
    bool roundTrip = true;
    for (const TraceLeaf& lf : trace.leaves) {
        fromLeaves.emplace(lf.i, lf.lambda);
        if (lf.i < 0 || lf.i > std::min(r, d) || !Box{r - lf.i, lf.i}.contains(lf.lambda) ||
            a_sequence(lf.i, lf.lambda, r) != lf.word.psiTwists) {
            roundTrip = false;
            trace.problems.push_back("leaf " + lf.word.str() + " does not round-trip through a_sequence");
        }
        int expect = lf.i;
        for (int a : lf.word.psiTwists)
            expect -= a;
        if (lf.word.detTwist != expect)
            trace.problems.push_back("leaf " + lf.word.str() + " has det twist " +
                                     std::to_string(lf.word.detTwist) + ", expected " + std::to_string(expect));
    }
    for (const SodComponent& c : comps)
        fromComps.emplace(c.i, c.lambda);
    trace.leavesMatchComponents = roundTrip && fromLeaves == fromComps;

    trace.orderMatches = trace.leaves.size() == comps.size();
    for (std::size_t k = 0; trace.orderMatches && k < comps.size(); ++k)
        if (trace.leaves[k].i != comps[k].i || trace.leaves[k].lambda != comps[k].lambda)
            trace.orderMatches = false;

    std::set<Partition> seen;
    bool partitionBox = true;
    const Box whole{n - d, d};
    for (const TraceLeaf& lf : trace.leaves) {
        for (const Partition& a : lf.images) {
            if (!whole.contains(a) || !seen.insert(a).second) {
                partitionBox = false;
                trace.problems.push_back("image " + a.str() + " repeated or outside " + whole.str());
            }
        }
    }
    trace.imagesPartitionBox = partitionBox && seen.size() == whole.cardinality();
    return trace;
}

UnitriangularityCertificate k0_unitriangularity(const LocalSetup& setup)
{
    setup.validate();
    if (setup.n > 5)
        throw std::invalid_argument("k0_unitriangularity supports n <= 5");
    UnitriangularityCertificate cert;
    cert.setup = setup;
    GenerationTrace trace = generation_trace(setup);
    if (!trace.ok()) {
        cert.problems.push_back("generation trace failed");
        for (const std::string& p : trace.problems)
            cert.problems.push_back(p);
        return cert;
    }
    const int m = setup.m;

    std::vector<EquivariantClass> columns;
    for (const TraceLeaf& lf : trace.leaves) {
        for (std::size_t g = 0; g < lf.generators.size(); ++g) {
            EquivariantClass x = leaf_image(setup, lf, lf.generators[g]);
            cert.order.push_back(lf.images[g]);
            columns.push_back(std::move(x));
        }
    }

    const std::size_t N = cert.order.size();
    std::map<Partition, std::size_t> position;
    for (std::size_t k = 0; k < N; ++k)
        position[cert.order[k]] = k;
    WeightExpansion zero;
    zero.rank = m;
    cert.matrix.assign(N, std::vector<WeightExpansion>(N, zero));

    for (std::size_t col = 0; col < N; ++col) {
        for (const auto& [deg, terms] : columns[col].graded()) {
            for (const auto& [key, c] : terms) {
                if (!key.grass.is_dominant() || (key.grass.rank() > 0 && key.grass[key.grass.rank() - 1] < 0)) {
                    cert.problems.push_back("image of " + cert.order[col].str() + " has non-polynomial weight " +
                                            key.grass.str());
                    continue;
                }
                Partition beta = key.grass.to_partition();
                auto it = position.find(beta);
                if (it == position.end()) {
                    cert.problems.push_back("image of " + cert.order[col].str() + " involves " + beta.str() +
                                            " outside the Kapranov basis");
                    continue;
                }
                cert.matrix[it->second][col].add(key.w, deg % 2 ? BigInt(-c) : c);
            }
        }
    }

    WeightExpansion unit;
    unit.rank = m;
    unit.add(IntegerWeight::zero(m), 1);
    for (std::size_t col = 0; col < N; ++col) {
        if (!(cert.matrix[col][col] == unit))
            cert.problems.push_back("diagonal entry at " + cert.order[col].str() + " is " +
                                    cert.matrix[col][col].str());
        for (std::size_t row = 0; row < col; ++row)
            if (!cert.matrix[row][col].is_zero())
                cert.problems.push_back("above-diagonal entry (" + cert.order[row].str() + ", " +
                                        cert.order[col].str() + ") = " + cert.matrix[row][col].str());
    }
    cert.unitriangular = cert.problems.empty();
    return cert;
}

} // namespace sodlab
