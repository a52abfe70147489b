#include "truncat/catobjects.hpp"

#include <set>

namespace truncat {

std::optional<Family> parseFamily(const std::string& s) {
    if (s == "simple") return Family::Simple;
    if (s == "proj") return Family::Proj;
    if (s == "inj") return Family::Inj;
    if (s == "delta") return Family::Delta;
    if (s == "gweyl") return Family::GlobalWeyl;
    if (s == "nabla") return Family::Nabla;
    return std::nullopt;
}

std::string familyName(Family f) {
    switch (f) {
        case Family::Simple: return "simple";
        case Family::Proj: return "proj";
        case Family::Inj: return "inj";
        case Family::Delta: return "delta";
        case Family::GlobalWeyl: return "gweyl";
        case Family::Nabla: return "nabla";
    }
    return "?";
}

ExplicitModule simpleModule(const RootSystem& rs, const Weight& lambda, int r) {
    const GModule& V = simpleGModule(rs, lambda);
    ExplicitModule M;
    M.rs = &rs;
    M.window = {r, r};
    M.certified = true;
    M.basis.resize(V.dim);
    for (int j = 0; j < V.dim; ++j) M.basis[j] = Label{V.weight[j], r};
    M.act0 = V.act;
    M.act1.assign(rs.dimG, SMat::zero(V.dim, V.dim));
    M.topVector = SVec::unit(0);
    return M;
}

ExplicitModule truncateModule(const ExplicitModule& M, const TruncationSpec& gamma) {
    int lo = gamma.a ? *gamma.a : M.window.lo;
    int hi = gamma.b ? *gamma.b : M.window.hi;
    if (!M.certified && (lo < M.window.lo || hi > M.window.hi))
        throw DomainError("truncateModule: window does not certify the requested truncation");
    return truncatedTo(M, lo, hi);
}

namespace {

// cyclic family build with the window/auto-retry policy
ExplicitModule cyclicFamilyBuild(const RootSystem& rs, CyclicKind kind, const Weight& lambda,
                                 int r, const TruncationSpec& gamma, const BuildOptions& opts) {
    CyclicPresentation pres;
    pres.kind = kind;
    pres.lambda = lambda;
    pres.grade = r;
    if (gamma.b) pres.bTrunc = *gamma.b;
    int depth = gamma.b ? (*gamma.b - r) : opts.cutoff;
    while (true) {
        CyclicBuild cb = buildCyclic(rs, pres, r + depth);
        if (cb.module.certified || !opts.requireCertified) return std::move(cb.module);
        if (gamma.b || depth >= opts.maxCutoff)
            throw DomainError("build not certified within the window (cutoff " +
                              std::to_string(depth) + ")");
        depth = std::min(opts.maxCutoff, depth * 2);
    }
}

void checkHead(const RootSystem& rs, const ExplicitModule& M, const Weight& lambda, int r) {
    // unique irreducible quotient V(λ,r): Hom(M, V(μ,s)) is 1 at (λ,r), else 0
    std::set<Label> seen;
    for (const auto& l : M.basis) {
        Weight dom = rs.dominantRep(l.weight);
        seen.insert(Label{dom, l.grade});
    }
    for (const auto& l : seen) {
        HomBasis h = homGraded(M, simpleModule(rs, l.weight, l.grade));
        int expect = (l.weight == lambda && l.grade == r) ? 1 : 0;
        if (h.dim != expect)
            throw DomainError("head check failed at " + labelStr(l) + ": dim Hom = " +
                              std::to_string(h.dim));
    }
}

void checkSocleSimple(const RootSystem& rs, const ExplicitModule& M, const Weight& lambda, int r) {
    auto soc = socleOf(M);
    if (soc.size() != 1 || soc.begin()->first.weight != lambda ||
        soc.begin()->first.grade != r || soc.begin()->second != 1)
        throw DomainError("socle is not the single simple V(" + weightStr(lambda) + "," +
                          std::to_string(r) + ")");
    (void)rs;
}

} // namespace

namespace {

using BuildKey = std::tuple<AlgebraType, Family, Weight, int, std::optional<int>,
                            std::optional<int>, int, int, bool>;

std::mutex buildCacheMu;
std::map<BuildKey, ExplicitModule> buildCache;

} // namespace

BuiltObject buildObject(const RootSystem& rs, const FamilyTag& tag, const BuildOptions& opts) {
    const Weight& la = tag.lambda;
    int r = tag.r;
    const TruncationSpec& G = tag.gamma;
    if (!la.isDominant()) throw DomainError("buildObject: weight not dominant");
    if (!G.containsGrade(r))
        throw DomainError("buildObject: (λ,r) outside the truncation: r = " + std::to_string(r) +
                          ", J = " + G.str());

    BuildKey key{rs.datum.type, tag.family, la,          r,
                 G.a,           G.b,        opts.cutoff, opts.maxCutoff,
                 opts.requireCertified};
    auto finish = [&](BuiltObject obj) {
        if (G.weightCap)
            for (const auto& [l, m] : simpleDecompose(rs, gradedCharacterOf(obj.mod)))
                if (m != 0 && !G.capAdmits(rs, l.weight)) obj.capEscape = true;
        return obj;
    };
    {
        std::lock_guard<std::mutex> lk(buildCacheMu);
        auto it = buildCache.find(key);
        if (it != buildCache.end()) return finish(BuiltObject{it->second, false});
    }

    BuiltObject out;
    switch (tag.family) {
        case Family::Simple:
            out.mod = simpleModule(rs, la, r);
            break;
        case Family::Delta:
            out.mod = cyclicFamilyBuild(rs, CyclicKind::DeltaType, la, r, G, opts);
            break;
        case Family::GlobalWeyl:
            out.mod = cyclicFamilyBuild(rs, CyclicKind::WType, la, r, G, opts);
            break;
        case Family::Proj:
            out.mod = cyclicFamilyBuild(rs, CyclicKind::PType, la, r, G, opts);
            break;
        case Family::Nabla:
        case Family::Inj: {
            if (!G.a)
                throw DomainError(
                    "buildObject: costandard/injective over an unbounded-below interval needs a "
                    "cutoff; supply a finite a");
            // reflected interval Γ' = P⁺ × (−J); build at (−w₀λ, −r) and dualize
            TruncationSpec refl;
            refl.a = G.b ? std::optional<int>(-*G.b) : std::nullopt;
            refl.b = -*G.a;
            CyclicKind kind = tag.family == Family::Nabla ? CyclicKind::WType : CyclicKind::PType;
            ExplicitModule W =
                cyclicFamilyBuild(rs, kind, rs.minusW0(la), -r, refl, opts);
            out.mod = dualModule(W);
            // socle generator line: the dual of the cyclic top
            for (int i = 0; i < out.mod.dim(); ++i)
                if (out.mod.basis[i] == Label{la, r}) out.mod.topVector = SVec::unit(i);
            break;
        }
    }

    // structural post-checks per family
    const ExplicitModule& M = out.mod;
    if (M.certified) {
        if (tag.family != Family::Proj && tag.family != Family::Inj) {
            if (M.dimAt(la, r) != 1)
                throw DomainError("top line is not one-dimensional for " + familyName(tag.family));
            for (const auto& l : M.basis)
                if (!rs.hullMembership(l.weight, la))
                    throw DomainError("weight " + weightStr(l.weight) + " escapes conv W(" +
                                      weightStr(la) + ")");
        }
        if (tag.family == Family::Proj && M.window.contains(r)) {
            if (M.dimAtGrade(r) != rs.weylDim(la))
                throw DomainError("projective top slice is not V(λ)");
        }
        if (tag.family == Family::Delta || tag.family == Family::GlobalWeyl)
            checkHead(rs, M, la, r);
        if (tag.family == Family::Nabla) checkSocleSimple(rs, M, la, r);
    }

    {
        std::lock_guard<std::mutex> lk(buildCacheMu);
        buildCache.emplace(key, out.mod);
    }
    return finish(std::move(out));
}

ExplicitModule fullLocalWeyl(const RootSystem& rs, const Weight& lambda, int r,
                             const BuildOptions& opts) {
    TruncationSpec unbounded; // b = ∞: auto-retry until the empty-slice certificate
    return cyclicFamilyBuild(rs, CyclicKind::DeltaType, lambda, r, unbounded, opts);
}

CharFamily familyCharacters(const RootSystem& rs, Family f, const TruncationSpec& gamma,
                            const GradeWindow& window, const BuildOptions& opts) {
    auto cache = std::make_shared<std::map<Label, GradedCharacter>>();
    auto mutex = std::make_shared<std::mutex>();
    return [&rs, f, gamma, window, opts, cache, mutex](const Weight& mu, int s) {
        {
            std::lock_guard<std::mutex> lk(*mutex);
            auto it = cache->find(Label{mu, s});
            if (it != cache->end()) return it->second;
        }
        FamilyTag tag{f, mu, s, gamma};
        GradedCharacter ch = gradedCharacterOf(buildObject(rs, tag, opts).mod);
        ch.window = window;
        std::erase_if(ch.terms, [&](const auto& t) { return !window.contains(t.first.grade); });
        std::lock_guard<std::mutex> lk(*mutex);
        cache->emplace(Label{mu, s}, ch);
        return ch;
    };
}

} // namespace truncat
