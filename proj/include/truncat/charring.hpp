#pragma once

#include <functional>
#include <optional>
#include <string>

#include "truncat/rootdata.hpp"

namespace truncat {

/// Grade interval a character is valid on (always finite for stored data).
struct GradeWindow {
    int lo = 0;
    int hi = 0;
    bool contains(int g) const { return lo <= g && g <= hi; }
    GradeWindow intersect(const GradeWindow& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }
    friend bool operator==(const GradeWindow&, const GradeWindow&) = default;
};

/// Element of ℤ[P][u,u⁻¹] restricted to a window, keyed by (grade, weight).
/// Module characters are non-negative; ring elements produced by subtraction
/// carry the virtual flag and are rejected by decomposition operations.
/// `complete` marks characters known in full (certified modules): these are
/// zero outside their window, so binary operations may widen rather than
/// intersect the validity window.
struct GradedCharacter {
    std::map<Label, long> terms;
    GradeWindow window;
    bool isVirtual = false;
    bool complete = false;

    long at(const Weight& w, int grade) const {
        auto it = terms.find(Label{w, grade});
        return it == terms.end() ? 0 : it->second;
    }
    long dimAtGrade(int g) const;
    long totalDim() const;
    void set(const Weight& w, int grade, long m);
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
        return a.terms == b.terms && a.window == b.window && a.isVirtual == b.isVirtual;
    }
};

GradedCharacter charUnit(int rank, const GradeWindow& window);
GradedCharacter charAdd(const GradedCharacter& x, const GradedCharacter& y);
GradedCharacter charSub(const GradedCharacter& x, const GradedCharacter& y);
GradedCharacter charMul(const GradedCharacter& x, const GradedCharacter& y,
                        const GradeWindow& window);
/// (μ, r, m) ↦ (−μ, −r, m); realizes graded duality on module characters.
GradedCharacter charDual(const GradedCharacter& x);
GradedCharacter charShift(const GradedCharacter& x, int s);
/// ev V(λ) placed at a grade.
GradedCharacter evCharacter(const RootSystem& rs, const Weight& lambda, int grade,
                            const GradeWindow& window);
/// Graded character of Sym(⊕_{k≥1} g⊗t^k) truncated at grade ≤ gradeBound.
GradedCharacter uPlusCharacter(const RootSystem& rs, int gradeBound);

/// Grade-by-grade simple multiplicities; throws DomainError on virtual input
/// or when stripping goes negative.
std::map<Label, long> simpleDecompose(const RootSystem& rs, const GradedCharacter& x);

enum class FamilyKind { Delta, GlobalWeyl, Nabla };

/// Family character provider: (λ dominant, r) → character on the needed window.
using CharFamily = std::function<GradedCharacter(const Weight&, int)>;

/// Interval J (ends optionally infinite) with an optional saturated weight cap.
struct TruncationSpec {
    std::optional<int> a, b;
    std::optional<Weight> weightCap;

    bool containsGrade(int s) const {
        if (a && s < *a) return false;
        if (b && s > *b) return false;
        return true;
    }
    bool capAdmits(const RootSystem& rs, const Weight& w) const {
        return !weightCap || rs.dominanceLeq(w, *weightCap);
    }
    bool contains(const RootSystem& rs, const LamPoint& p) const {
        return p.weight.isDominant() && containsGrade(p.grade) && capAdmits(rs, p.weight);
    }
    std::string str() const;
    static TruncationSpec parse(const std::string& j); // "a:b" with -inf/+inf
};

/// Unique multiplicities m(μ,s) with x = Σ m(μ,s)·ch family(μ,s) on the window,
/// by triangular elimination on leading terms. Throws DomainError when no exact
/// non-negative solution exists ("no such filtration at character level").
std::map<LamPoint, long> filtrationMultiplicities(const RootSystem& rs, const GradedCharacter& x,
                                                  const CharFamily& family, FamilyKind kind,
                                                  const TruncationSpec& gamma,
                                                  const std::vector<Weight>& enumeration);

// --- serialization (stable field order; used by the CLI) ---
std::string charToJson(const GradedCharacter& x);
GradedCharacter charFromJson(const std::string& text);
std::string charToTable(const GradedCharacter& x);

} // namespace truncat
