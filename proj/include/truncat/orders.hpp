#pragma once

#include <set>

#include "truncat/rootdata.hpp"

namespace truncat {

/// Lexicographic order on Λ = P⁺×ℤ: (μ,r) ≤ (λ,s) iff μ < λ in dominance, or
/// μ = λ and r ≤ s.
bool lexLeq(const RootSystem& rs, const LamPoint& p, const LamPoint& q);

/// Order generated by the covering relation "(μ,s) covers (λ,r) iff s = r+1
/// and μ−λ ∈ R∪{0}": reachability by k = grade(q)−grade(p) steps from R∪{0};
/// dominance is required only at the endpoints.
bool coveringLeq(const RootSystem& rs, const LamPoint& p, const LamPoint& q);

/// Ambient weight multiset (a module's wt(V) with multiplicities) plus a
/// subset Ψ of its distinct weights.
struct PsiFace {
    std::map<Weight, long> ambient;
    std::set<Weight> psi;
};

/// Adjoint ambient: roots plus zero (multiplicity = rank).
PsiFace adjointFace(const RootSystem& rs, const std::set<Weight>& psi);

struct FaceCheckResult {
    bool ok = true;
    int radius = 0;          // coefficient-sum bound the search covered
    std::string witness;     // violating identity, when found
};

/// Verifies the two face conditions for all decompositions with coefficient
/// sums up to a bound; the bound is reported so a skeptical caller can raise
/// it via `radius`.
FaceCheckResult psiFaceCheck(const PsiFace& face, int radius = 0);

inline constexpr long kPsiInfinite = -1;

/// d_Ψ(μ,λ) = min{Σ m_ν : λ−μ = Σ m_ν ν}; kPsiInfinite when λ−μ ∉ ℤ₊Ψ
/// (search capped at `radius`, same reporting convention as psiFaceCheck).
long psiDistance(const Weight& mu, const Weight& lambda, const PsiFace& face, int radius = 0);

/// (λ,r) ⪯_Ψ (μ,s) iff λ ≤_Ψ μ, s−r ∈ ℤ₊ and d_Ψ(λ,μ) = s−r.
bool psiLeq(const LamPoint& p, const LamPoint& q, const PsiFace& face, int radius = 0);

int defaultPsiRadius(const PsiFace& face);

} // namespace truncat
