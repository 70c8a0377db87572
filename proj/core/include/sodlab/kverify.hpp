#pragma once

#include "sodlab/bigint.hpp"
#include "sodlab/bwb.hpp"
#include "sodlab/character.hpp"
#include "sodlab/partition.hpp"
#include "sodlab/sod.hpp"
#include "sodlab/weight.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sodlab {

/* Key of one graded summand: a weight for the Grassmannian-side bundle
 * (R^v unless stated otherwise) and a weight for the W-side. */
struct ClassKey {
    IntegerWeight grass;
    IntegerWeight w;

    auto operator<=>(const ClassKey&) const = default;
    bool operator==(const ClassKey&) const = default;
};

/* Graded class: homological degree -> integer combination of
 * S^grass(.) (x) S^w(.) symbols. */
class EquivariantClass {
public:
    EquivariantClass(int grassRank = 0, int wRank = 0);

    int grass_rank() const { return grassRank_; }
    int w_rank() const { return wRank_; }
    const std::map<int, std::map<ClassKey, BigInt>>& graded() const { return graded_; }

    void add(int degree, const IntegerWeight& grass, const IntegerWeight& w, const BigInt& c);
    void add(const EquivariantClass& o, int degreeShift = 0, const BigInt& scale = 1);
    bool is_zero() const { return graded_.empty(); }
    bool operator==(const EquivariantClass& o) const;

    /* grass weights shifted by c (tensor with det^c) */
    EquivariantClass det_twisted(int c) const;
    /* tensor every W-side weight with the irreducible of weight omega */
    EquivariantClass tensor_w(const IntegerWeight& omega) const;

    /* per degree, in variables (x_1..x_grassRank, y_1..y_wRank) */
    std::map<int, LaurentCharacter> render() const;
    /* sum over degrees with sign (-1)^degree */
    LaurentCharacter euler_character() const;
    std::string str() const;

private:
    int grassRank_;
    int wRank_;
    std::map<int, std::map<ClassKey, BigInt>> graded_;
};

/* ---- Koszul and flip ---- */

struct KoszulTerm {
    int ell = 0;
    std::vector<std::pair<Partition, Partition>> summands;  // (mu^t, mu)
    /* grass slot: mu for R_+^v; w slot: weight of S^{mu^t}(Q_-)^v */
    EquivariantClass cls;
};

std::vector<KoszulTerm> koszul_terms(const LocalSetup& setup, int dPlus, int dMinus);

struct FlipResult {
    Partition lambda;
    EquivariantClass image;     // grass slot R_+^v (rank n-d), w slot W (rank m)
    EquivariantClass expected;
    bool matches = false;
    std::vector<std::string> details;
};

FlipResult flip_image(const LocalSetup& setup, const Partition& lambda);

/* ---- Kapranov pairings on a genuine Grassmannian (m = 0) ---- */

struct PairingEntry {
    Partition row;
    Partition col;
    BottOutcome outcome;
    BigInt euler;
};

struct PairingMatrix {
    int n = 0;
    int d = 0;
    std::vector<Partition> index;
    std::vector<std::vector<BigInt>> entries;  // entries[mu][lambda]
    std::vector<PairingEntry> nonzero;
    bool identity = false;
    std::vector<std::string> offending;
};

PairingMatrix kapranov_pairing_matrix(int n, int d);

/* Hom(S^alpha Q, S^lambda R) for alpha in B(d, n-d), lambda in B(n-d, d):
 * expected k[-|lambda|] when lambda = alpha^t and zero otherwise. */
struct DualSequenceCheck {
    int n = 0;
    int d = 0;
    std::size_t pairs = 0;
    bool ok = false;
    std::vector<std::string> offending;
};

DualSequenceCheck dual_sequence_pairing(int n, int d);

/* ---- Lascoux resolutions and the functors Psi, Psi^L ---- */

struct ResolutionTerm {
    int index = 0;
    Partition schurWeight;
    int exteriorDegree = 0;

    bool operator==(const ResolutionTerm&) const = default;
};

/* F_0, ..., F_k for Psi(S^lambda(R_{d+1}^v)) on Grass(E; d). */
std::vector<ResolutionTerm> lascoux_resolution(const LocalSetup& setup, const Partition& lambda);

/* Psi(S^lambda(R_{level+1}^v)) on Grass(E; level) through the Koszul
 * resolution of the flag and Bott on the flag of R^v. Valid for any
 * dominant lambda of rank n - level - 1. */
EquivariantClass psi_forward(const LocalSetup& setup, int level, const IntegerWeight& lambda);
EquivariantClass psi_forward_class(const LocalSetup& setup, int level, const EquivariantClass& input);
/* word of the leaf applied to S^generator on its level, landing on Grass(E; d) */
EquivariantClass leaf_image(const LocalSetup& setup, const TraceLeaf& leaf, const Partition& generator);

struct LascouxIdentity {
    Partition lambda;
    std::vector<ResolutionTerm> terms;
    EquivariantClass resolutionSide;
    EquivariantClass koszulSide;
    bool termsWellFormed = false;
    bool gradedMatch = false;
    bool characterMatch = false;
    std::vector<std::string> details;

    bool ok() const { return termsWellFormed && gradedMatch && characterMatch; }
};

LascouxIdentity lascoux_identity(const LocalSetup& setup, const Partition& lambda);

struct PsiLeftResult {
    EquivariantClass cls;
    /* false when a stratum pushes forward to a non-trivial S^alpha(Q) */
    bool expressible = true;
    std::vector<std::string> details;
};

/* Psi^L(S^lambda(R_d^v)) for lambda in B(n-d, d) through the interleaving
 * filtration and serre_window. */
PsiLeftResult psi_L_image(const LocalSetup& setup, const Partition& lambda);
/* Second route: branching of s_lambda and Bott on the relative P^d with
 * its dualizing sheaf. Any dominant lambda of rank n - level. */
PsiLeftResult psi_left_direct(const LocalSetup& setup, int level, const IntegerWeight& lambda);
PsiLeftResult psi_left_class(const LocalSetup& setup, int level, const EquivariantClass& input);

/* ---- Hom series in the Sym(W (x) R^v) model ---- */

struct HomSeries {
    int n = 0;
    int m = 0;
    /* index = symmetric degree; variables (x_1..x_n) for V^v, (y_1..y_m) for W */
    std::vector<LaurentCharacter> degrees;
    std::set<int> contributionDegrees;
    bool concentrated = true;

    bool all_zero() const;
};

HomSeries local_hom_euler(const LocalSetup& setup, const Partition& source, const Partition& target,
                          int twist, int cutoff);
/* Hom(source, target) on Grass(E; level) for graded classes, bucketed by
 * total W-degree 0..cutoff. */
HomSeries hom_series(const LocalSetup& setup, int level, const EquivariantClass& source,
                     const EquivariantClass& target, int cutoff);

struct SemiorthPair {
    SodComponent later;
    SodComponent earlier;
    Partition laterGenerator;
    Partition earlierGenerator;
    HomSeries adjunction;   // Hom(Psi^L ... (later image), earlier generator)
    HomSeries direct;       // Hom(later image, earlier image), Euler level only
    bool expressible = true;
    std::string status;     // pass, fail, inconclusive
};

struct SemiorthReport {
    LocalSetup setup;
    int cutoff = 0;
    std::vector<SemiorthPair> pairs;
    bool allZero = true;
    bool allConcentrated = true;
    bool anyFail = false;
};

SemiorthReport semiorthogonality_check(const LocalSetup& setup, int cutoff);

} // namespace sodlab
