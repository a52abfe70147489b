#pragma once

#include <mutex>
#include <optional>

#include "truncat/charring.hpp"
#include "truncat/gmodule.hpp"

namespace truncat {

/// Finite-window graded g[t]-module with exact rational action matrices for
/// the degree-0 and degree-1 Chevalley generators (these generate U(g[t]);
/// higher t-powers are derived on demand by bracketing).
///
/// `certified` means the materialized window provably contains the whole
/// module: either some grade slice strictly inside the window is empty (all
/// higher slices then vanish, since every generator has degree 0 or 1), or the
/// window ends exactly at a truncation bound b that kills everything above.
struct ExplicitModule {
    const RootSystem* rs = nullptr;
    std::vector<Label> basis;
    std::vector<SMat> act0, act1; // indexed by Chevalley basis element
    GradeWindow window{0, 0};
    bool certified = false;
    SVec topVector; // distinguished cyclic / anchor vector when meaningful

    int dim() const { return static_cast<int>(basis.size()); }
    long dimAtGrade(int g) const;
    long dimAt(const Weight& w, int g) const;
    SVec applyGen(int z, int tpow, const SVec& v) const; // tpow >= 0, derived if > 1
    const SMat& derivedAction(int z, int tpow) const;

private:
    mutable std::map<std::pair<int, int>, SMat> derivedCache_;
    mutable std::recursive_mutex derivedMu_;

public:
    // copies and moves transfer the module data; the derived-action cache is
    // recomputable and deliberately left behind
    ExplicitModule() = default;
    ExplicitModule(const ExplicitModule& o)
        : rs(o.rs), basis(o.basis), act0(o.act0), act1(o.act1), window(o.window),
          certified(o.certified), topVector(o.topVector) {}
    ExplicitModule& operator=(const ExplicitModule& o) {
        rs = o.rs; basis = o.basis; act0 = o.act0; act1 = o.act1;
        window = o.window; certified = o.certified; topVector = o.topVector;
        return *this;
    }
    ExplicitModule(ExplicitModule&& o) noexcept
        : rs(o.rs), basis(std::move(o.basis)), act0(std::move(o.act0)),
          act1(std::move(o.act1)), window(o.window), certified(o.certified),
          topVector(std::move(o.topVector)) {}
    ExplicitModule& operator=(ExplicitModule&& o) noexcept {
        rs = o.rs; basis = std::move(o.basis); act0 = std::move(o.act0);
        act1 = std::move(o.act1); window = o.window; certified = o.certified;
        topVector = std::move(o.topVector);
        return *this;
    }
};

enum class CyclicKind { PType, DeltaType, WType };

/// Highest-weight cyclic presentation: the generator sits at (λ, r); the
/// relation profile is one of the named families, optionally with the grade
/// truncation U(g[t])[p]·w = 0 for p > b−r.
struct CyclicPresentation {
    CyclicKind kind = CyclicKind::DeltaType;
    Weight lambda;
    int grade = 0;
    std::optional<int> bTrunc; // b of the truncation interval, if any
};

struct CyclicBuild {
    ExplicitModule module;      // the presented module on the window
    ExplicitModule ambient;     // the induced module it is a quotient of
    std::vector<SVec> relationSub; // echelon basis of the relation submodule
    SMat projection;            // ambient -> module
};

/// Materialize the cyclic module by fixed-point closure inside the window
/// [pres.grade, gmax]. The result is flagged certified per the rules above;
/// otherwise it is a truncation, sound on its window but incomplete.
CyclicBuild buildCyclic(const RootSystem& rs, const CyclicPresentation& pres, int gmax);

GradedCharacter gradedCharacterOf(const ExplicitModule& M);

/// Degree-zero intertwiners M → N (exact basis).
struct HomBasis {
    int dim = 0;
    std::vector<SMat> maps;
    // coordinate system used to express arbitrary intertwiners:
    std::vector<std::pair<int, int>> unknowns; // (row in N, col in M)
    std::vector<SVec> coordVecs;               // maps in unknown coordinates
    SVec coordinatesOf(const SMat& f) const;
};
HomBasis homGraded(const ExplicitModule& M, const ExplicitModule& N);

/// Explicit submodule / quotient plumbing.
ExplicitModule submoduleOnBasis(const ExplicitModule& M, const std::vector<SVec>& basisVecs);
struct QuotientBuild {
    ExplicitModule module;
    SMat projection;
    std::vector<int> repIndex; // new basis index -> old coordinate index
};
QuotientBuild quotientModule(const ExplicitModule& M, const Echelon& sub);
std::vector<SVec> submoduleClosure(const ExplicitModule& M, const std::vector<SVec>& seeds);
ExplicitModule directSum(const ExplicitModule& A, const ExplicitModule& B);
ExplicitModule shifted(const ExplicitModule& M, int s);
ExplicitModule truncatedTo(const ExplicitModule& M, int lo, int hi);
ExplicitModule dualModule(const ExplicitModule& M);
bool isIsomorphic(const ExplicitModule& M, const ExplicitModule& N);

/// Ext¹ via an explicit projective presentation 0 → K → P → M → 0 with P a
/// direct sum of truncated induced modules; all data retained so extensions
/// can be realized as pushouts.
struct Ext1Context {
    int dim = 0;
    std::vector<SMat> cocycles; // K -> N representatives of a cokernel basis
    ExplicitModule P, K;
    std::vector<SVec> kernelInP; // K basis vectors in P coordinates
    SMat surjection;             // P -> M
    const ExplicitModule* M = nullptr;
    const ExplicitModule* N = nullptr;
};
Ext1Context ext1(const RootSystem& rs, const ExplicitModule& M, const ExplicitModule& N,
                 const TruncationSpec& gamma);

/// Pushout realization of 0 → N → E → M → 0 along a cocycle from ext1.
struct ExtensionBuild {
    ExplicitModule E;
    SMat injection;  // N -> E
    SMat projection; // E -> M
};
ExtensionBuild extensionFromCocycle(const Ext1Context& ctx, const SMat& cocycle);
bool extensionSplits(const ExtensionBuild& ext, const ExplicitModule& M);

/// Iterated non-split extensions until Ext¹(M, U) = 0 (requires Ext¹(M,M)=0).
struct UnivExtResult {
    ExplicitModule U;
    int d = 0;
    SMat inclusionOfN; // N -> U
};
UnivExtResult universalExtension(const RootSystem& rs, const ExplicitModule& M,
                                 const ExplicitModule& N, const TruncationSpec& gamma);

struct EndAnalysis {
    int endDim = 0;
    int radDim = 0;
    bool indecomposable = false;
};
EndAnalysis endAlgebraAnalysis(const ExplicitModule& M);

/// Maximal split direct summand isomorphic to copies of `delta`; returns the
/// complement containing M.topVector and the number of copies removed.
struct SplitOffResult {
    ExplicitModule complement;
    int copies = 0;
};
SplitOffResult splitOffDeltas(const ExplicitModule& M, const ExplicitModule& delta);

/// Socle multiplicities: the maximal semisimple submodule is the joint kernel
/// of the degree-1 generators, decomposed grade by grade.
std::map<Label, long> socleOf(const ExplicitModule& M);

struct OCanonicalFiltration {
    std::vector<int> dims;                      // dim M_s per enumeration index
    std::vector<GradedCharacter> quotientChars; // ch(M_s / M_{s-1})
    bool quotientConditionHolds = true;         // eq.: Hom(V(λ,r), M_s/M_{s-1}) ⇒ λ = λ_s
};
OCanonicalFiltration oCanonicalFiltration(const ExplicitModule& M,
                                          const std::vector<Weight>& enumeration);

/// Bracket soundness: commutators of stored generator actions match the
/// structure-constant table, including the degree-2 consistency checks.
bool bracketSoundness(const ExplicitModule& M, std::string* why = nullptr);

std::string moduleToJson(const ExplicitModule& M);
ExplicitModule moduleFromJson(const RootSystem& rs, const std::string& text);

} // namespace truncat
