#include "suites.hpp"

#include "sodlab/sodlab.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sodlab::cli {

namespace {

using Checks = std::vector<Check>;

Check make_check(std::string name, bool ok, std::string detail)
{
    return Check{std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 4)
{
    std::string s;
    for (std::size_t k = 0; k < items.size() && k < limit; ++k) {
        if (k)
            s += "; ";
        s += items[k];
    }
    if (items.size() > limit)
        s += "; ... (" + std::to_string(items.size()) + " total)";
    return s;
}

std::vector<LocalSetup> setups_or(const VerifyOptions& o, std::vector<LocalSetup> defaults)
{
    if (!o.n && !o.m && !o.d)
        return defaults;
    if (!o.n || !o.m || !o.d)
        throw std::invalid_argument("pass all of --n, --m, --d or none of them");
    LocalSetup s{*o.n, *o.m, *o.d};
    s.validate();
    return {s};
}

/* ---- bwb-oracle ---- */

Check compare_weights(const std::string& name, const std::vector<IntegerWeight>& weights)
{
    std::vector<std::string> bad;
    for (const IntegerWeight& w : weights) {
        LaurentCharacter fast = bott_euler_character(straighten(w), w.rank());
        LaurentCharacter slow = alternant_oracle(w);
        if (!(fast == slow))
            bad.push_back(w.str() + ": " + straighten(w).str());
    }
    std::string detail = std::to_string(weights.size()) + " weights";
    if (!bad.empty())
        detail += ", disagreements: " + join(bad);
    return make_check(name, bad.empty(), detail);
}

std::vector<Task> bwb_tasks(const VerifyOptions& o)
{
    const int maxRank = o.maxRank.value_or(4);
    if (maxRank < 2 || maxRank > 6)
        throw std::invalid_argument("bwb-oracle supports --max-rank in [2,6]");
    std::vector<Task> tasks;
    for (int n = 2; n <= std::min(maxRank, 4); ++n) {
        for (int first = -4; first <= 4; ++first) {
            std::string name = "bwb-oracle rank " + std::to_string(n) + " first=" + std::to_string(first);
            tasks.push_back({name, [n, first, name] {
                                 std::vector<IntegerWeight> ws;
                                 std::vector<int> e(static_cast<std::size_t>(n), -4);
                                 e[0] = first;
                                 while (true) {
                                     ws.emplace_back(e);
                                     int k = n - 1;
                                     while (k >= 1 && e[static_cast<std::size_t>(k)] == 4)
                                         e[static_cast<std::size_t>(k--)] = -4;
                                     if (k < 1)
                                         break;
                                     ++e[static_cast<std::size_t>(k)];
                                 }
                                 return Checks{compare_weights(name, ws)};
                             }});
        }
    }
    for (int n = 5; n <= maxRank; ++n) {
        const unsigned long long seed = o.seed;
        std::string name = "bwb-oracle rank " + std::to_string(n) + " sampled seed=" + std::to_string(seed);
        tasks.push_back({name, [n, seed, name] {
                             std::mt19937_64 rng(seed + static_cast<unsigned long long>(n));
                             std::uniform_int_distribution<int> dist(-4, 4);
                             std::vector<IntegerWeight> ws;
                             for (int s = 0; s < 200; ++s) {
                                 std::vector<int> e(static_cast<std::size_t>(n));
                                 for (int& v : e)
                                     v = dist(rng);
                                 ws.emplace_back(e);
                             }
                             return Checks{compare_weights(name, ws)};
                         }});
    }
    return tasks;
}

/* ---- cauchy ---- */

std::vector<Task> cauchy_tasks(const VerifyOptions& o)
{
    const int nx = o.n.value_or(3), ny = o.m.value_or(3), cutoff = o.cutoff.value_or(4);
    if (nx < 1 || ny < 1 || nx + ny > kMaxVariables || cutoff < 0 || cutoff > 8)
        throw std::invalid_argument("cauchy needs 1 <= n, m, n + m <= 16 and 0 <= cutoff <= 8");
    const int total = nx + ny;
    auto products = [nx, ny, total] {
        std::vector<LaurentCharacter> items;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                items.push_back(LaurentCharacter::variable(total, i) * LaurentCharacter::variable(total, nx + j));
        return items;
    };
    std::vector<Task> tasks;
    const std::string shape = "(" + std::to_string(nx) + "," + std::to_string(ny) + ")";
    for (int ell = 0; ell <= cutoff; ++ell) {
        std::string name = "cauchy exterior ell=" + std::to_string(ell) + " shape " + shape;
        tasks.push_back({name, [=] {
                             LaurentCharacter lhs = elementary_of(products(), ell, total);
                             LaurentCharacter rhs(total);
                             for (const auto& [mut, mu] : cauchy_exterior(ell))
                                 rhs += schur_polynomial(mut, nx).embed(total, 0) *
                                        schur_polynomial(mu, ny).embed(total, nx);
                             return Checks{make_check(name, lhs == rhs,
                                                      std::to_string(lhs.term_count()) + " monomials")};
                         }});
    }
    for (int k = 0; k <= cutoff; ++k) {
        std::string name = "cauchy symmetric k=" + std::to_string(k) + " shape " + shape;
        tasks.push_back({name, [=] {
                             LaurentCharacter lhs = complete_of(products(), k, total);
                             LaurentCharacter rhs(total);
                             for (const auto& [mu, same] : cauchy_symmetric(k))
                                 rhs += schur_polynomial(mu, nx).embed(total, 0) *
                                        schur_polynomial(same, ny).embed(total, nx);
                             return Checks{make_check(name, lhs == rhs,
                                                      std::to_string(lhs.term_count()) + " monomials")};
                         }});
    }
    return tasks;
}

/* ---- kapranov ---- */

std::vector<Task> kapranov_tasks(const VerifyOptions& o)
{
    std::vector<std::pair<int, int>> cases{{2, 1}, {3, 1}, {3, 2}, {4, 2}};
    if (o.n || o.d) {
        if (!o.n || !o.d)
            throw std::invalid_argument("kapranov needs both --n and --d");
        if (*o.d < 1 || *o.d > *o.n || *o.n > 5)
            throw std::invalid_argument("kapranov needs 1 <= d <= n <= 5");
        cases = {{*o.n, *o.d}};
    }
    std::vector<Task> tasks;
    for (auto [n, d] : cases) {
        std::string tag = "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
        tasks.push_back({"kapranov " + tag, [n, d, tag] {
                             Checks out;
                             PairingMatrix pm = kapranov_pairing_matrix(n, d);
                             const std::size_t N = pm.index.size();
                             out.push_back(make_check("kapranov pairing " + tag, pm.identity,
                                                      std::to_string(N) + "x" + std::to_string(N) +
                                                          (pm.identity ? " identity" : ", offending: " + join(pm.offending))));
                             if (d < n) {
                                 DualSequenceCheck ds = dual_sequence_pairing(n, d);
                                 out.push_back(make_check("kapranov dual sequence " + tag, ds.ok,
                                                          std::to_string(ds.pairs) + " pairs" +
                                                              (ds.ok ? "" : ", offending: " + join(ds.offending))));
                             }
                             return out;
                         }});
    }
    return tasks;
}

/* ---- flip ---- */

std::vector<Task> flip_tasks(const VerifyOptions& o)
{
    std::vector<LocalSetup> setups = setups_or(o, {{2, 1, 1}, {3, 2, 2}, {4, 3, 2}, {3, 1, 2}});
    std::vector<Task> tasks;
    for (const LocalSetup& s : setups) {
        if (s.d < s.r())
            throw std::invalid_argument("flip needs d >= n - m, got " + s.str());
        if (s.n > 6)
            throw std::invalid_argument("flip supports n <= 6");
        for (const Partition& lam : box_enumerate(Box{s.n - s.d, s.d - s.r()})) {
            std::string name = "flip " + s.str() + " lambda=" + lam.str();
            tasks.push_back({name, [s, lam, name] {
                                 FlipResult f = flip_image(s, lam);
                                 return Checks{make_check(name, f.matches,
                                                          "image " + f.image.str() + ", expected " + f.expected.str())};
                             }});
        }
    }
    return tasks;
}

/* ---- lascoux ---- */

std::vector<Task> lascoux_tasks(const VerifyOptions& o)
{
    std::vector<LocalSetup> setups = setups_or(o, {{3, 2, 1}, {4, 3, 2}, {4, 3, 1}});
    std::vector<Task> tasks;
    for (const LocalSetup& s : setups) {
        if (s.d > s.n - 1 || s.n > 6)
            throw std::invalid_argument("lascoux needs d <= n - 1 and n <= 6, got " + s.str());
        const int lower = std::max(0, s.d - s.r() + 1);
        for (const Partition& lam : box_enumerate(Box{s.n - s.d - 1, s.d})) {
            if (lam.first() < lower)
                continue;
            std::string name = "lascoux " + s.str() + " lambda=" + lam.str();
            tasks.push_back({name, [s, lam, name] {
                                 LascouxIdentity li = lascoux_identity(s, lam);
                                 std::string detail = std::to_string(li.terms.size()) + " terms, Koszul side " +
                                                      li.koszulSide.str();
                                 if (!li.ok())
                                     detail += "; " + join(li.details);
                                 return Checks{make_check(name, li.ok(), detail)};
                             }});
        }
    }
    return tasks;
}

/* ---- serre ---- */

std::vector<Task> serre_tasks(const VerifyOptions& o)
{
    const int maxRank = o.maxRank.value_or(6);
    if (maxRank < 1 || maxRank > 12)
        throw std::invalid_argument("serre supports --max-rank in [1,12]");
    std::vector<Task> tasks;
    for (int N = 1; N <= maxRank; ++N) {
        std::string name = "serre window N=" + std::to_string(N);
        tasks.push_back({name, [N, name] {
                             std::vector<std::string> bad;
                             for (int t = -N - 3; t <= 2 * N + 3; ++t) {
                                 BottOutcome out = serre_window(N, t);
                                 BottOutcome expect;
                                 if (t <= 0) {
                                     std::vector<int> w(static_cast<std::size_t>(N + 1), 0);
                                     w.back() = t;
                                     expect = BottOutcome::nonvanishing(IntegerWeight(w), 0);
                                 } else if (t > N) {
                                     std::vector<int> w(static_cast<std::size_t>(N + 1), 1);
                                     w.front() = t - N;
                                     expect = BottOutcome::nonvanishing(IntegerWeight(w), N);
                                 }
                                 if (!(out == expect))
                                     bad.push_back("t=" + std::to_string(t) + ": " + out.str());
                             }
                             return Checks{make_check(name, bad.empty(),
                                                      bad.empty() ? "vanishing exactly for 1 <= t <= " +
                                                                        std::to_string(N)
                                                                  : join(bad))};
                         }});
    }
    std::vector<LocalSetup> setups;
    if (o.n || o.m || o.d) {
        setups = setups_or(o, {});
    } else {
        for (int n = 1; n <= 4; ++n)
            for (int m = 0; m <= n; ++m)
                for (int d = 0; d < n; ++d)
                    setups.push_back({n, m, d});
    }
    for (const LocalSetup& s : setups) {
        if (s.d > s.n - 1)
            throw std::invalid_argument("psi-left comparison needs d <= n - 1");
        std::string name = "psi-left routes " + s.str();
        tasks.push_back({name, [s, name] {
                             std::vector<std::string> bad;
                             std::size_t count = 0;
                             for (const Partition& lam : box_enumerate(Box{s.n - s.d, s.d})) {
                                 ++count;
                                 PsiLeftResult a = psi_L_image(s, lam);
                                 PsiLeftResult b = psi_left_direct(s, s.d, IntegerWeight::from_partition(lam, s.n - s.d));
                                 if (!a.expressible || !b.expressible || !(a.cls == b.cls))
                                     bad.push_back(lam.str() + ": " + a.cls.str() + " vs " + b.cls.str());
                             }
                             return Checks{make_check(name, bad.empty(),
                                                      std::to_string(count) + " weights" +
                                                          (bad.empty() ? "" : ", " + join(bad)))};
                         }});
    }
    return tasks;
}

/* ---- generation ---- */

std::vector<Task> generation_tasks(const VerifyOptions& o)
{
    std::vector<LocalSetup> setups = setups_or(o, {{2, 1, 1}, {3, 1, 2}, {3, 2, 2}, {4, 2, 2}});
    std::vector<Task> tasks;
    for (const LocalSetup& s : setups) {
        if (s.d < 1 || s.n > 5)
            throw std::invalid_argument("generation needs d >= 1 and n <= 5, got " + s.str());
        std::string name = "generation " + s.str();
        tasks.push_back({name, [s] {
                             Checks out;
                             GenerationTrace tr = generation_trace(s);
                             std::ostringstream td;
                             td << tr.leaves.size() << " leaves; multiset " << (tr.leavesMatchComponents ? "ok" : "bad")
                                << ", order " << (tr.orderMatches ? "ok" : "bad") << ", images "
                                << (tr.imagesPartitionBox ? "partition the box" : "do not partition the box");
                             if (!tr.problems.empty())
                                 td << "; " << join(tr.problems);
                             out.push_back(make_check("generation trace " + s.str(), tr.ok(), td.str()));
                             UnitriangularityCertificate k0 = k0_unitriangularity(s);
                             out.push_back(make_check("k0 unitriangular " + s.str(), k0.unitriangular,
                                                      std::to_string(k0.order.size()) + "x" +
                                                          std::to_string(k0.order.size()) + " matrix" +
                                                          (k0.unitriangular ? "" : "; " + join(k0.problems))));
                             return out;
                         }});
    }
    if (!o.n) {
        tasks.push_back({"induction blocks n<=6", [] {
                             std::vector<std::string> bad;
                             std::size_t count = 0;
                             for (int n = 1; n <= 6; ++n)
                                 for (int r = 0; r <= n; ++r)
                                     for (int d = 0; d <= n; ++d)
                                         for (int k = std::max(0, d - r); k <= n; ++k) {
                                             ++count;
                                             InductionBlocks b = induction_blocks(n, d, k, r);
                                             if (!b.ok())
                                                 bad.push_back("(n,d,k,r)=(" + std::to_string(n) + "," +
                                                               std::to_string(d) + "," + std::to_string(k) + "," +
                                                               std::to_string(r) + "): " + join(b.problems, 2));
                                         }
                             return Checks{make_check("induction blocks n<=6", bad.empty(),
                                                      std::to_string(count) + " cases" +
                                                          (bad.empty() ? "" : ", " + join(bad)))};
                         }});
    }
    return tasks;
}

/* ---- semiorth ---- */

std::vector<Task> semiorth_tasks(const VerifyOptions& o)
{
    std::vector<LocalSetup> setups = setups_or(o, {{2, 1, 1}});
    const int cutoff = o.cutoff.value_or(6);
    if (cutoff < 0 || cutoff > 12)
        throw std::invalid_argument("semiorth supports cutoff in [0,12]");
    std::vector<Task> tasks;
    for (const LocalSetup& s : setups) {
        if (s.d < 1 || s.n > 4)
            throw std::invalid_argument("semiorth needs d >= 1 and n <= 4, got " + s.str());
        tasks.push_back({"semiorth " + s.str(), [s, cutoff] {
                             Checks out;
                             SemiorthReport rep = semiorthogonality_check(s, cutoff);
                             for (const SemiorthPair& p : rep.pairs) {
                                 std::string name = "semiorth " + s.str() + " " + p.later.label() + "->" +
                                                    p.earlier.label() + " gens " + p.laterGenerator.str() + "," +
                                                    p.earlierGenerator.str();
                                 std::string detail =
                                     "adjunction " + std::string(p.adjunction.all_zero() ? "zero" : "nonzero") +
                                     (p.adjunction.concentrated ? ", concentrated" : ", not concentrated") +
                                     "; direct Euler " + (p.direct.all_zero() ? "zero" : "nonzero") +
                                     (p.direct.concentrated ? "" : " (spread over degrees, informational)");
                                 if (!p.expressible)
                                     detail += "; left adjoint leaves the Schur range";
                                 out.push_back(Check{name, p.status, detail});
                             }
                             if (rep.pairs.empty())
                                 out.push_back(make_check("semiorth " + s.str(), true, "no cross-component pairs"));
                             return out;
                         }});
    }
    return tasks;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bwb-oracle", "cauchy", "kapranov", "flip", "lascoux",
                                                "serre", "generation", "semiorth", "all"};
    return names;
}

std::vector<Task> build_tasks(const std::string& suite, const VerifyOptions& opts)
{
    if (suite == "bwb-oracle")
        return bwb_tasks(opts);
    if (suite == "cauchy")
        return cauchy_tasks(opts);
    if (suite == "kapranov")
        return kapranov_tasks(opts);
    if (suite == "flip")
        return flip_tasks(opts);
    if (suite == "lascoux")
        return lascoux_tasks(opts);
    if (suite == "serre")
        return serre_tasks(opts);
    if (suite == "generation")
        return generation_tasks(opts);
    if (suite == "semiorth")
        return semiorth_tasks(opts);
    if (suite == "all") {
        if (opts.n || opts.m || opts.d || opts.cutoff || opts.maxRank)
            throw std::invalid_argument("verify all runs every suite with its defaults and takes no size flags");
        VerifyOptions defaults;
        defaults.seed = opts.seed;
        std::vector<Task> all;
        for (const std::string& name : suite_names()) {
            if (name == "all")
                continue;
            for (Task& t : build_tasks(name, defaults))
                all.push_back(std::move(t));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite " + suite);
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs)
{
    std::vector<std::vector<Check>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = tasks[i].run();
            } catch (const std::exception& e) {
                slots[i] = {Check{tasks[i].name, "fail", std::string("exception: ") + e.what()}};
            }
        }
    };
    const int count = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();

    std::vector<Check> out;
    for (auto& s : slots)
        for (Check& c : s)
            out.push_back(std::move(c));
    return out;
}

int exit_status(const std::vector<Check>& checks)
{
    for (const Check& c : checks)
        if (c.status == "fail")
            return 1;
    return 0;
}

} // namespace sodlab::cli
