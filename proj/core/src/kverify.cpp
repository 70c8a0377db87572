#include "sodlab/kverify.hpp"

#include <algorithm>
#include <stdexcept>

namespace sodlab {

namespace {

IntegerWeight ones(int count, int rank)
{
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    for (int k = 0; k < count && k < rank; ++k)
        e[static_cast<std::size_t>(k)] = 1;
    return IntegerWeight(e);
}

BigInt signed_unit(int exponent)
{
    return (exponent % 2 != 0) ? BigInt(-1) : BigInt(1);
}

} // namespace

/* ---- EquivariantClass ---- */

EquivariantClass::EquivariantClass(int grassRank, int wRank) : grassRank_(grassRank), wRank_(wRank) {}

void EquivariantClass::add(int degree, const IntegerWeight& grass, const IntegerWeight& w, const BigInt& c)
{
    if (grass.rank() != grassRank_ || w.rank() != wRank_)
        throw std::invalid_argument("EquivariantClass::add: rank mismatch");
    if (c == 0)
        return;
    auto& slot = graded_[degree];
    ClassKey key{grass, w};
    auto it = slot.find(key);
    if (it == slot.end()) {
        slot.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0)
            slot.erase(it);
    }
    if (slot.empty())
        graded_.erase(degree);
}

void EquivariantClass::add(const EquivariantClass& o, int degreeShift, const BigInt& scale)
{
    for (const auto& [deg, terms] : o.graded_)
        for (const auto& [key, c] : terms)
            add(deg + degreeShift, key.grass, key.w, c * scale);
}

bool EquivariantClass::operator==(const EquivariantClass& o) const
{
    return grassRank_ == o.grassRank_ && wRank_ == o.wRank_ && graded_ == o.graded_;
}

EquivariantClass EquivariantClass::det_twisted(int c) const
{
    EquivariantClass out(grassRank_, wRank_);
    for (const auto& [deg, terms] : graded_)
        for (const auto& [key, v] : terms)
            out.add(deg, key.grass.plus(c), key.w, v);
    return out;
}

EquivariantClass EquivariantClass::tensor_w(const IntegerWeight& omega) const
{
    if (omega.rank() != wRank_)
        throw std::invalid_argument("tensor_w: rank mismatch");
    if (omega.is_zero())
        return *this;
    EquivariantClass out(grassRank_, wRank_);
    for (const auto& [deg, terms] : graded_)
        for (const auto& [key, v] : terms)
            for (const auto& [w, c] : multiply_weights(key.w, omega).terms)
                out.add(deg, key.grass, w, v * c);
    return out;
}

std::map<int, LaurentCharacter> EquivariantClass::render() const
{
    const int total = grassRank_ + wRank_;
    std::map<int, LaurentCharacter> out;
    for (const auto& [deg, terms] : graded_) {
        LaurentCharacter acc(total);
        for (const auto& [key, c] : terms) {
            LaurentCharacter g = schur_character(key.grass).embed(total, 0);
            LaurentCharacter w = schur_character(key.w).embed(total, grassRank_);
            acc += (g * w) * c;
        }
        if (!acc.is_zero())
            out.emplace(deg, std::move(acc));
    }
    return out;
}

LaurentCharacter EquivariantClass::euler_character() const
{
    LaurentCharacter acc(grassRank_ + wRank_);
    for (const auto& [deg, ch] : render())
        acc += ch * signed_unit(deg);
    return acc;
}

std::string EquivariantClass::str() const
{
    if (graded_.empty())
        return "0";
    std::string s;
    for (const auto& [deg, terms] : graded_) {
        if (!s.empty())
            s += "; ";
        s += "[" + std::to_string(deg) + "] ";
        bool first = true;
        for (const auto& [key, c] : terms) {
            if (!first)
                s += " + ";
            first = false;
            if (c != 1)
                s += to_string(c) + "*";
            s += "S^" + key.grass.str();
            if (wRank_ > 0)
                s += "⊗S^" + key.w.str();
        }
    }
    return s;
}

/* ---- Koszul and flip ---- */

std::vector<KoszulTerm> koszul_terms(const LocalSetup& setup, int dPlus, int dMinus)
{
    setup.validate();
    if (dPlus < 0 || dPlus > setup.n || dMinus < 0 || dMinus > setup.m)
        throw std::invalid_argument("koszul_terms needs 0 <= d+ <= n and 0 <= d- <= m");
    const int h = setup.n - dPlus;
    std::vector<KoszulTerm> out;
    for (int ell = 0; ell <= h * dMinus; ++ell) {
        KoszulTerm term;
        term.ell = ell;
        term.cls = EquivariantClass(h, dMinus);
        for (const auto& [mut, mu] : cauchy_exterior(ell)) {
            if (mu.length() > h || mut.length() > dMinus)
                continue;
            term.summands.emplace_back(mut, mu);
            term.cls.add(ell, IntegerWeight::from_partition(mu, h),
                         dual_weight(IntegerWeight::from_partition(mut, dMinus)), 1);
        }
        out.push_back(std::move(term));
    }
    return out;
}

FlipResult flip_image(const LocalSetup& setup, const Partition& lambda)
{
    setup.validate();
    const int n = setup.n, m = setup.m, d = setup.d, r = setup.r();
    if (d < r)
        throw std::invalid_argument("flip_image needs d >= r");
    const int dm = d - r;
    const int h = n - d;
    if (!Box{h, dm}.contains(lambda))
        throw std::invalid_argument(lambda.str() + " is not in " + Box{h, dm}.str());

    FlipResult res;
    res.lambda = lambda;
    res.image = EquivariantClass(h, m);
    res.expected = EquivariantClass(h, m);
    res.expected.add(0, IntegerWeight::from_partition(lambda, h), IntegerWeight::zero(m), 1);

    const IntegerWeight beta = IntegerWeight::from_partition(lambda, m - dm);
    for (int ell = 0; ell <= h * dm; ++ell) {
        for (const auto& [mut, mu] : cauchy_exterior(ell)) {
            if (mu.length() > h || mut.length() > dm)
                continue;
            IntegerWeight alpha = dual_weight(IntegerWeight::from_partition(mut, dm));
            BottOutcome o = grassmannian_pushforward(alpha, beta);
            if (o.vanishing)
                continue;
            res.details.push_back("ell=" + std::to_string(ell) + " mu=" + mu.str() + ": " + o.str());
            res.image.add(ell - o.shift, IntegerWeight::from_partition(mu, h), dual_weight(o.dominant), 1);
        }
    }
    res.matches = res.image == res.expected;
    return res;
}

/* ---- Kapranov pairings ---- */

PairingMatrix kapranov_pairing_matrix(int n, int d)
{
    if (d < 1 || d > n || n > 5)
        throw std::invalid_argument("kapranov_pairing_matrix needs 1 <= d <= n <= 5");
    PairingMatrix pm;
    pm.n = n;
    pm.d = d;
    pm.index = box_enumerate(Box{n - d, d});
    const std::size_t N = pm.index.size();
    pm.entries.assign(N, std::vector<BigInt>(N, 0));
    for (std::size_t a = 0; a < N; ++a) {
        const Partition& mu = pm.index[a];
        IntegerWeight alpha = dual_weight(IntegerWeight::from_partition(transpose(mu), d));
        for (std::size_t b = 0; b < N; ++b) {
            const Partition& lambda = pm.index[b];
            BottOutcome o = grassmannian_pushforward(alpha, IntegerWeight::from_partition(lambda, n - d));
            if (o.vanishing)
                continue;
            BigInt e = signed_unit(o.shift - lambda.size()) * weyl_dimension(o.dominant);
            pm.entries[a][b] = e;
            pm.nonzero.push_back(PairingEntry{mu, lambda, o, e});
            const bool diag = a == b;
            if (!diag || !o.dominant.is_zero() || o.shift != lambda.size())
                pm.offending.push_back("(" + mu.str() + ", " + lambda.str() + "): " + o.str());
        }
        if (pm.entries[a][a] != 1)
            pm.offending.push_back("diagonal (" + mu.str() + ", " + mu.str() + ") = " + to_string(pm.entries[a][a]));
    }
    pm.identity = pm.offending.empty();
    return pm;
}

DualSequenceCheck dual_sequence_pairing(int n, int d)
{
    if (d < 1 || d >= n || n > 6)
        throw std::invalid_argument("dual_sequence_pairing needs 1 <= d < n <= 6");
    DualSequenceCheck res;
    res.n = n;
    res.d = d;
    for (const Partition& alpha : box_enumerate(Box{d, n - d})) {
        IntegerWeight qa = dual_weight(IntegerWeight::from_partition(alpha, d));
        for (const Partition& lambda : box_enumerate(Box{n - d, d})) {
            ++res.pairs;
            BottOutcome o = grassmannian_pushforward(qa, IntegerWeight::from_partition(lambda, n - d));
            const bool expectNonzero = lambda == transpose(alpha);
            bool good;
            if (expectNonzero)
                good = !o.vanishing && o.dominant.is_zero() && o.shift == lambda.size();
            else
                good = o.vanishing;
            if (!good)
                res.offending.push_back("alpha=" + alpha.str() + " lambda=" + lambda.str() + ": " + o.str());
        }
    }
    res.ok = res.offending.empty();
    return res;
}

/* ---- Lascoux and Psi ---- */

std::vector<ResolutionTerm> lascoux_resolution(const LocalSetup& setup, const Partition& lambda)
{
    setup.validate();
    const int n = setup.n, d = setup.d, r = setup.r();
    if (d > n - 1)
        throw std::invalid_argument("lascoux_resolution needs d <= n - 1");
    const int h = n - d - 1;
    if (!Box{h, d}.contains(lambda))
        throw std::invalid_argument(lambda.str() + " is not in " + Box{h, d}.str());
    const int k = lambda.first();
    if (k < std::max(0, d - r + 1))
        throw std::invalid_argument("lascoux_resolution needs lambda_1 >= max(0, d-r+1)");

    std::vector<ResolutionTerm> out;
    out.push_back(ResolutionTerm{0, lambda, 0});
    for (int i = 1; i <= k; ++i) {
        Partition li = lambda_superscript(lambda, i, h);
        out.push_back(ResolutionTerm{i, li, li.size() - lambda.size()});
    }
    return out;
}

EquivariantClass psi_forward(const LocalSetup& setup, int level, const IntegerWeight& lambda)
{
    const int n = setup.n, m = setup.m;
    const int rank = n - level;
    if (level < 0 || rank < 1)
        throw std::invalid_argument("psi_forward needs 0 <= level <= n - 1");
    if (lambda.rank() != rank - 1 || !lambda.is_dominant())
        throw std::invalid_argument("psi_forward needs a dominant weight of rank n - level - 1");
    EquivariantClass out(rank, m);
    for (int ell = 0; ell <= m; ++ell) {
        BottOutcome o = straighten(lambda.concat(IntegerWeight{ell}));
        if (!o.vanishing)
            out.add(ell - o.shift, o.dominant, ones(ell, m), 1);
    }
    return out;
}

EquivariantClass psi_forward_class(const LocalSetup& setup, int level, const EquivariantClass& input)
{
    EquivariantClass out(setup.n - level, setup.m);
    for (const auto& [deg, terms] : input.graded())
        for (const auto& [key, c] : terms)
            out.add(psi_forward(setup, level, key.grass).tensor_w(key.w), deg, c);
    return out;
}

EquivariantClass leaf_image(const LocalSetup& setup, const TraceLeaf& leaf, const Partition& generator)
{
    const int n = setup.n, m = setup.m, d = setup.d;
    EquivariantClass x(n - leaf.level, m);
    x.add(0, IntegerWeight::from_partition(generator, n - leaf.level).plus(leaf.word.detTwist),
          IntegerWeight::zero(m), 1);
    for (int j = static_cast<int>(leaf.word.psiTwists.size()); j >= 1; --j)
        x = psi_forward_class(setup, d + j - 1, x).det_twisted(leaf.word.psiTwists[static_cast<std::size_t>(j - 1)]);
    return x;
}

LascouxIdentity lascoux_identity(const LocalSetup& setup, const Partition& lambda)
{
    const int n = setup.n, m = setup.m, d = setup.d;
    LascouxIdentity res;
    res.lambda = lambda;
    res.terms = lascoux_resolution(setup, lambda);
    const int h = n - d;
    const int k = lambda.first();

    res.termsWellFormed = true;
    res.resolutionSide = EquivariantClass(h, m);
    LaurentCharacter resChar(h + m);
    for (const ResolutionTerm& t : res.terms) {
        if (t.index > 0) {
            if (!Box{h, k}.contains(t.schurWeight) || Box{h - 1, k}.contains(t.schurWeight) ||
                t.exteriorDegree != t.schurWeight.size() - lambda.size()) {
                res.termsWellFormed = false;
                res.details.push_back("term F_" + std::to_string(t.index) + " = " + t.schurWeight.str() +
                                      " is malformed");
            }
        }
        if (t.exteriorDegree > m) {
            res.details.push_back("F_" + std::to_string(t.index) + " vanishes: exterior degree " +
                                  std::to_string(t.exteriorDegree) + " > m");
            continue;
        }
        res.resolutionSide.add(t.index, IntegerWeight::from_partition(t.schurWeight, h), ones(t.exteriorDegree, m), 1);
        LaurentCharacter term = schur_polynomial(t.schurWeight, h).embed(h + m, 0) *
                                elementary(t.exteriorDegree, m).embed(h + m, h);
        resChar += term * signed_unit(t.index);
    }

    res.koszulSide = psi_forward(setup, d, IntegerWeight::from_partition(lambda, h - 1));

    LaurentCharacter kosChar(h + m);
    for (int ell = 0; ell <= m; ++ell) {
        BottOutcome o = straighten(IntegerWeight::from_partition(lambda, h - 1).concat(IntegerWeight{ell}));
        LaurentCharacter b = bott_euler_character(o, h).embed(h + m, 0);
        kosChar += (elementary(ell, m).embed(h + m, h) * b) * signed_unit(ell);
    }

    res.gradedMatch = res.resolutionSide == res.koszulSide;
    res.characterMatch = resChar == kosChar && resChar == res.resolutionSide.euler_character();
    if (!res.gradedMatch)
        res.details.push_back("graded mismatch: resolution " + res.resolutionSide.str() + " vs Koszul " +
                              res.koszulSide.str());
    if (!res.characterMatch)
        res.details.push_back("Euler characters differ");
    return res;
}

PsiLeftResult psi_L_image(const LocalSetup& setup, const Partition& lambda)
{
    setup.validate();
    const int n = setup.n, m = setup.m, d = setup.d;
    if (d > n - 1)
        throw std::invalid_argument("psi_L_image needs d <= n - 1");
    const int h = n - d;
    if (!Box{h, d}.contains(lambda))
        throw std::invalid_argument(lambda.str() + " is not in " + Box{h, d}.str());
    PsiLeftResult res;
    res.cls = EquivariantClass(h - 1, m);
    for (const Partition& nu : box_enumerate(Box{h - 1, lambda.first()})) {
        if (!interleaves(nu, lambda, h))
            continue;
        const int t = lambda.size() - nu.size();
        BottOutcome sw = serre_window(d, t);
        if (sw.vanishing) {
            res.details.push_back("stratum " + nu.str() + " (t=" + std::to_string(t) + ") killed");
            continue;
        }
        if (t == 0) {
            res.cls.add(0, IntegerWeight::from_partition(nu, h - 1), IntegerWeight::zero(m), 1);
            continue;
        }
        res.expressible = false;
        res.details.push_back("stratum " + nu.str() + " (t=" + std::to_string(t) + ") gives " + sw.str());
    }
    return res;
}

PsiLeftResult psi_left_direct(const LocalSetup& setup, int level, const IntegerWeight& lambda)
{
    const int n = setup.n, m = setup.m;
    const int g = n - level;
    if (level < 0 || g < 1)
        throw std::invalid_argument("psi_left_direct needs 0 <= level <= n - 1");
    if (lambda.rank() != g || !lambda.is_dominant())
        throw std::invalid_argument("psi_left_direct needs a dominant weight of rank n - level");
    const int c = lambda[g - 1];
    const Partition base = lambda.plus(-c).to_partition();

    // branch s_base(x_1..x_{g-1}, z) along the last variable
    std::map<int, LaurentCharacter> byZ;
    const LaurentCharacter full = schur_polynomial(base, g);
    for (const auto& [e, coeff] : full.terms()) {
        const int z = e[static_cast<std::size_t>(g - 1)];
        Exponent x = e;
        x[static_cast<std::size_t>(g - 1)] = 0;
        auto it = byZ.try_emplace(z, LaurentCharacter(g - 1)).first;
        it->second.add_term(x, coeff);
    }

    PsiLeftResult res;
    res.cls = EquivariantClass(g - 1, m);
    const IntegerWeight alpha(std::vector<int>(static_cast<std::size_t>(level), -1));
    for (const auto& [z, part] : byZ) {
        const int t = z + c;
        BottOutcome o = grassmannian_pushforward(alpha, IntegerWeight{level - t});
        if (o.vanishing)
            continue;
        if (!o.dominant.is_zero()) {
            res.expressible = false;
            res.details.push_back("t=" + std::to_string(t) + " pushes forward to " + o.str());
            continue;
        }
        for (const auto& [nu, mult] : weight_decompose(part).terms)
            res.cls.add(level - o.shift, nu.plus(c), IntegerWeight::zero(m), mult);
    }
    return res;
}

PsiLeftResult psi_left_class(const LocalSetup& setup, int level, const EquivariantClass& input)
{
    PsiLeftResult res;
    res.cls = EquivariantClass(setup.n - level - 1, setup.m);
    for (const auto& [deg, terms] : input.graded()) {
        for (const auto& [key, c] : terms) {
            PsiLeftResult part = psi_left_direct(setup, level, key.grass);
            if (!part.expressible)
                res.expressible = false;
            for (std::string& s : part.details)
                res.details.push_back(std::move(s));
            res.cls.add(part.cls.tensor_w(key.w), deg, c);
        }
    }
    return res;
}

/* ---- Hom series ---- */

bool HomSeries::all_zero() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const LaurentCharacter& c) { return c.is_zero(); });
}

HomSeries hom_series(const LocalSetup& setup, int level, const EquivariantClass& source,
                     const EquivariantClass& target, int cutoff)
{
    const int n = setup.n, m = setup.m;
    const int g = n - level;
    if (cutoff < 0)
        throw std::invalid_argument("hom_series needs cutoff >= 0");
    HomSeries hs;
    hs.n = n;
    hs.m = m;
    hs.degrees.assign(static_cast<std::size_t>(cutoff + 1), LaurentCharacter(n + m));
    if (g < 0 || source.is_zero() || target.is_zero())
        return hs;
    if (source.grass_rank() != g || target.grass_rank() != g || source.w_rank() != m || target.w_rank() != m)
        throw std::invalid_argument("hom_series: class ranks do not match the level");

    const IntegerWeight qZero = IntegerWeight::zero(level);
    const int maxLen = std::min(m, g);
    for (const auto& [hS, termsS] : source.graded()) {
        for (const auto& [keyS, cS] : termsS) {
            for (const auto& [hT, termsT] : target.graded()) {
                for (const auto& [keyT, cT] : termsT) {
                    const BigInt pairCoeff = cS * cT;
                    WeightExpansion rBase = multiply_weights(dual_weight(keyS.grass), keyT.grass);
                    WeightExpansion wBase = multiply_weights(dual_weight(keyS.w), keyT.w);
                    const long shiftW = keyS.w.total() - keyT.w.total();
                    for (int D = 0; D <= cutoff; ++D) {
                        const long k = D + shiftW;
                        if (k < 0)
                            continue;
                        for (const Partition& mu : partitions_of(static_cast<int>(k), maxLen)) {
                            const IntegerWeight muR = IntegerWeight::from_partition(mu, g);
                            const IntegerWeight muW = IntegerWeight::from_partition(mu, m);
                            LaurentCharacter wSide(m);
                            for (const auto& [w0, a] : wBase.terms)
                                for (const auto& [w, b] : multiply_weights(w0, muW).terms)
                                    wSide += schur_character(w) * (a * b);
                            if (wSide.is_zero())
                                continue;
                            LaurentCharacter wEmb = wSide.embed(n + m, n);
                            for (const auto& [k0, a] : rBase.terms) {
                                for (const auto& [kappa, b] : multiply_weights(k0, muR).terms) {
                                    BottOutcome o = grassmannian_pushforward(qZero, dual_weight(kappa));
                                    if (o.vanishing)
                                        continue;
                                    const int j = o.shift + hS - hT;
                                    hs.contributionDegrees.insert(j);
                                    LaurentCharacter v = schur_character(dual_weight(o.dominant)).embed(n + m, 0);
                                    hs.degrees[static_cast<std::size_t>(D)] +=
                                        (v * wEmb) * (signed_unit(j) * pairCoeff * a * b);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    hs.concentrated = hs.contributionDegrees.size() <= 1;
    return hs;
}

HomSeries local_hom_euler(const LocalSetup& setup, const Partition& source, const Partition& target, int twist,
                          int cutoff)
{
    setup.validate();
    const int g = setup.n - setup.d;
    if (source.length() > g || target.length() > g)
        throw std::invalid_argument("local_hom_euler: partitions must have at most n - d parts");
    EquivariantClass src(g, setup.m), tgt(g, setup.m);
    src.add(0, IntegerWeight::from_partition(source, g), IntegerWeight::zero(setup.m), 1);
    tgt.add(0, IntegerWeight::from_partition(target, g).plus(twist), IntegerWeight::zero(setup.m), 1);
    return hom_series(setup, setup.d, src, tgt, cutoff);
}

SemiorthReport semiorthogonality_check(const LocalSetup& setup, int cutoff)
{
    SemiorthReport rep;
    rep.setup = setup;
    rep.cutoff = cutoff;
    GenerationTrace trace = generation_trace(setup);
    if (!trace.ok())
        throw std::runtime_error("generation trace failed for " + setup.str());
    const int r = setup.r(), d = setup.d, n = setup.n, m = setup.m;
    std::vector<SodComponent> comps = enumerate_components(r, d);

    for (std::size_t late = 0; late < trace.leaves.size(); ++late) {
        const TraceLeaf& L = trace.leaves[late];
        for (std::size_t early = 0; early < late; ++early) {
            const TraceLeaf& E = trace.leaves[early];
            const int levelE = E.level;
            for (const Partition& x : L.generators) {
                EquivariantClass X = leaf_image(setup, L, x);
                for (const Partition& y : E.generators) {
                    SemiorthPair pair;
                    pair.later = comps[late];
                    pair.earlier = comps[early];
                    pair.laterGenerator = x;
                    pair.earlierGenerator = y;

                    EquivariantClass Y = X;
                    for (std::size_t j = 0; j < E.word.psiTwists.size(); ++j) {
                        PsiLeftResult step =
                            psi_left_class(setup, d + static_cast<int>(j), Y.det_twisted(-E.word.psiTwists[j]));
                        if (!step.expressible)
                            pair.expressible = false;
                        Y = std::move(step.cls);
                    }
                    Y = Y.det_twisted(-E.word.detTwist);
                    EquivariantClass T(n - levelE, m);
                    T.add(0, IntegerWeight::from_partition(y, n - levelE), IntegerWeight::zero(m), 1);
                    pair.adjunction = hom_series(setup, levelE, Y, T, cutoff);
                    pair.direct = hom_series(setup, d, X, leaf_image(setup, E, y), cutoff);

                    const bool adjZero = pair.adjunction.all_zero();
                    if (!pair.expressible)
                        pair.status = "inconclusive";
                    else if (!adjZero || !pair.direct.all_zero())
                        pair.status = "fail";
                    else if (!pair.adjunction.concentrated)
                        pair.status = "inconclusive";
                    else
                        pair.status = "pass";

                    rep.allZero = rep.allZero && adjZero && pair.direct.all_zero();
                    rep.allConcentrated = rep.allConcentrated && pair.adjunction.concentrated;
                    rep.anyFail = rep.anyFail || pair.status == "fail";
                    rep.pairs.push_back(std::move(pair));
                }
            }
        }
    }
    return rep;
}

} // namespace sodlab
