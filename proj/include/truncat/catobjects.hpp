#pragma once

#include "truncat/modengine.hpp"

namespace truncat {

enum class Family { Simple, Proj, Inj, Delta, GlobalWeyl, Nabla };

std::optional<Family> parseFamily(const std::string& s);
std::string familyName(Family f);

struct FamilyTag {
    Family family = Family::Simple;
    Weight lambda;
    int r = 0;
    TruncationSpec gamma;
};

struct BuildOptions {
    int cutoff = 2;     // initial window depth when no truncation bound applies
    int maxCutoff = 48; // auto-retry doubles the cutoff up to this
    bool requireCertified = true;
};

struct BuiltObject {
    ExplicitModule mod;
    bool capEscape = false; // simple support escapes a saturated weight cap
};

/// Construct one of the named families on a finite window, post-checked
/// against the family's structural properties (one-dimensional top line,
/// weights inside the hull, simple head/socle as applicable).
BuiltObject buildObject(const RootSystem& rs, const FamilyTag& tag,
                        const BuildOptions& opts = {});

/// ev V(λ) shifted to grade r.
ExplicitModule simpleModule(const RootSystem& rs, const Weight& lambda, int r);

/// The subquotient M_{≥a}/M_{>b} with the induced action.
ExplicitModule truncateModule(const ExplicitModule& M, const TruncationSpec& gamma);

/// Character provider for filtrationMultiplicities, backed by certified
/// builds; `window` is the window the characters are reported on.
CharFamily familyCharacters(const RootSystem& rs, Family f, const TruncationSpec& gamma,
                            const GradeWindow& window, const BuildOptions& opts = {});

/// Certified build of the full local Weyl module (b = ∞), window auto-retry.
ExplicitModule fullLocalWeyl(const RootSystem& rs, const Weight& lambda, int r,
                             const BuildOptions& opts = {});

} // namespace truncat
