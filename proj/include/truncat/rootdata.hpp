#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "truncat/linalg.hpp"
#include "truncat/weights.hpp"

namespace truncat {

enum class AlgebraType { A1, A2, A3, C2 };

std::optional<AlgebraType> parseAlgebraType(const std::string& s);
std::string algebraTypeName(AlgebraType t);

struct CartanDatum {
    AlgebraType type;
    int rank;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    static CartanDatum of(AlgebraType t);
};

/// Thrown when an operation's domain precondition fails (bad type label,
/// non-dominant weight where one is required, infinite window, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Chevalley-basis tables for one finite-type simple Lie algebra, together
/// with a faithful defining representation used to extract exact structure
/// constants. Basis index layout: x⁺_α for α in R⁺ (ordered by height, then
/// lexicographically on root coordinates), then x⁻_α in the same order, then
/// h_1..h_ℓ.
class RootSystem {
public:
    static const RootSystem& get(AlgebraType type);
    static const RootSystem& get(const CartanDatum& datum);

    CartanDatum datum;
    int rank;
    int nPos;
    int dimG;

    std::vector<std::vector<int>> posRootCoords; // simple-root coordinates
    std::vector<Weight> posRoot;                 // fundamental-weight coordinates
    Weight highestRoot;

    // bracketTab[a][b] = [z_a, z_b] as an integer combination of basis elements
    std::vector<std::vector<std::vector<std::pair<int, long>>>> bracketTab;

    int defDim;
    std::vector<SMat> defRep;      // per basis element
    std::vector<Weight> defWeight; // weight of each defining-rep basis vector

    int idxXPlus(int a) const { return a; }
    int idxXMinus(int a) const { return nPos + a; }
    int idxH(int i) const { return 2 * nPos + i; }
    /// Weight by which ad(z) shifts: ±α for root vectors, 0 for h.
    const Weight& basisShift(int idx) const { return basisShift_[idx]; }
    std::string basisName(int idx) const;

    /// N_{α,β} for positive roots with α+β a root (0 when α+β is not a root).
    long structureConstant(int aPos, int bPos) const;

    // --- weight-space geometry ---
    Rat inner(const Weight& a, const Weight& b) const;
    std::vector<Rat> rootCoordsOf(const Weight& w) const;
    Rat heightOf(const Weight& w) const;
    Weight simpleRootFw(int i) const { return posRoot[simpleIdx_[i]]; }
    Weight fundamental(int i) const;
    Weight rho() const;

    Weight reflect(const Weight& w, int i) const;
    Weight dominantRep(const Weight& w) const;
    /// -w₀λ (dominant for dominant λ).
    Weight minusW0(const Weight& lambda) const;
    std::vector<Weight> weylOrbit(const Weight& w) const;

    bool dominanceLeq(const Weight& mu, const Weight& lambda) const;
    bool hullMembership(const Weight& mu, const Weight& lambda) const;

    // --- finite-dimensional characters ---
    /// Full weight-multiplicity map of V(λ) (Freudenthal).
    const std::map<Weight, long>& weylCharacter(const Weight& lambda) const;
    long weylDim(const Weight& lambda) const;
    std::map<Weight, long> adjointWeightMap() const;
    static std::map<Weight, long> weightMapProduct(const std::map<Weight, long>& a,
                                                   const std::map<Weight, long>& b);
    /// Simple multiplicities of a g-module character; throws DomainError if the
    /// map is not a non-negative combination of irreducible characters.
    std::map<Weight, long> decomposeWeightMap(std::map<Weight, long> ch) const;
    long homToAdjointTensor(const Weight& lambda, const Weight& mu) const;

    /// First `count` dominant weights in the fixed linearization
    /// (root-basis height ascending, then lexicographic on coordinates);
    /// compatible with the dominance order.
    std::vector<Weight> enumerateDominant(int count) const;
    /// Index of a dominant weight in that linearization.
    int dominantIndex(const Weight& lambda) const;

private:
    explicit RootSystem(const CartanDatum& d);
    void buildRoots();
    void buildDefiningRep();
    void buildBracketTable();
    void buildForms();

    std::vector<int> simpleIdx_;        // position of α_i among positive roots
    std::vector<Weight> basisShift_;
    std::vector<Rat> dSym_;             // d_i = (α_i,α_i)/2, short roots normalized to 1
    std::vector<std::vector<Rat>> cartanInv_;
    std::vector<std::vector<Rat>> fwGram_;

    mutable std::mutex cacheMu_;
    mutable std::map<Weight, std::map<Weight, long>> weylCharCache_;
};

/// Checks the Jacobi identity on every triple of Chevalley basis elements.
bool jacobiHolds(const RootSystem& rs, std::string* firstFailure = nullptr);

} // namespace truncat
