#include "truncat/modengine.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace truncat {

long ExplicitModule::dimAtGrade(int g) const {
    long d = 0;
    for (const auto& l : basis)
        if (l.grade == g) ++d;
    return d;
}

long ExplicitModule::dimAt(const Weight& w, int g) const {
    long d = 0;
    for (const auto& l : basis)
        if (l.grade == g && l.weight == w) ++d;
    return d;
}

const SMat& ExplicitModule::derivedAction(int z, int tpow) const {
    if (tpow == 0) return act0[z];
    if (tpow == 1) return act1[z];
    std::lock_guard<std::recursive_mutex> lk(derivedMu_);
    auto key = std::make_pair(z, tpow);
    auto it = derivedCache_.find(key);
    if (it != derivedCache_.end()) return it->second;

    const RootSystem& R = *rs;
    SMat result;
    if (z >= 2 * R.nPos) {
        // h_i ⊗ t^k = [x⁺_{α_i} ⊗ t, x⁻_{α_i} ⊗ t^{k-1}]
        int i = z - 2 * R.nPos;
        int aPos = -1;
        for (int a = 0; a < R.nPos; ++a)
            if (R.posRoot[a] == R.simpleRootFw(i)) aPos = a;
        const SMat& lo = derivedAction(R.idxXMinus(aPos), tpow - 1);
        result = smCommutator(act1[R.idxXPlus(aPos)], lo);
    } else {
        // x_α ⊗ t^k = [h_i ⊗ t, x_α ⊗ t^{k-1}] / α(h_i) for any i with α(h_i) ≠ 0
        const Weight& shift = R.basisShift(z);
        int i = -1;
        for (int j = 0; j < R.rank && i < 0; ++j)
            if (shift.c[j] != 0) i = j;
        const SMat& lo = derivedAction(z, tpow - 1);
        result = smCommutator(act1[R.idxH(i)], lo).scaled(Rat(1) / Rat(shift.c[i]));
    }
    return derivedCache_.emplace(key, std::move(result)).first->second;
}

SVec ExplicitModule::applyGen(int z, int tpow, const SVec& v) const {
    return derivedAction(z, tpow).apply(v);
}

// ---------------------------------------------------------------------------
// PBW machinery for the positive-degree part of the enveloping algebra
// ---------------------------------------------------------------------------

namespace {

using Atom = std::pair<int, int>; // (tpow >= 1, basis element)
using Monomial = std::vector<Atom>;

int monDegree(const Monomial& m) {
    int d = 0;
    for (const auto& [k, z] : m) d += k;
    return d;
}

struct UPlusTable {
    const RootSystem* rs;
    int depth;
    std::vector<Monomial> mon;
    std::map<Monomial, int> idx;
    std::map<std::pair<Atom, int>, std::vector<std::pair<int, Rat>>> nfCache;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> commuteCache;
    std::vector<Weight> monWeight;
    std::mutex mu;

    UPlusTable(const RootSystem& r, int d) : rs(&r), depth(d) {
        std::vector<Atom> atoms;
        for (int k = 1; k <= depth; ++k)
            for (int z = 0; z < rs->dimG; ++z) atoms.emplace_back(k, z);
        Monomial cur;
        std::function<void(size_t, int)> rec = [&](size_t from, int left) {
            mon.push_back(cur);
            for (size_t a = from; a < atoms.size(); ++a) {
                if (atoms[a].first > left) continue;
                cur.push_back(atoms[a]);
                rec(a, left - atoms[a].first);
                cur.pop_back();
            }
        };
        rec(0, depth);
        std::sort(mon.begin(), mon.end(), [](const Monomial& a, const Monomial& b) {
            int da = monDegree(a), db = monDegree(b);
            if (da != db) return da < db;
            return a < b;
        });
        for (size_t i = 0; i < mon.size(); ++i) idx[mon[i]] = static_cast<int>(i);
        monWeight.resize(mon.size());
        for (size_t i = 0; i < mon.size(); ++i) {
            Weight w = Weight::zero(rs->rank);
            for (const auto& [k, z] : mon[i]) w = w + rs->basisShift(z);
            monWeight[i] = w;
        }
    }

    // normal form of atom * monomial; total degree must stay <= depth
    std::vector<std::pair<int, Rat>> nf(const Atom& g, int mIdx) {
        auto key = std::make_pair(g, mIdx);
        {
            auto it = nfCache.find(key);
            if (it != nfCache.end()) return it->second;
        }
        const Monomial& m = mon[mIdx];
        std::vector<std::pair<int, Rat>> out;
        if (m.empty() || g <= m.front()) {
            Monomial r;
            r.reserve(m.size() + 1);
            r.push_back(g);
            r.insert(r.end(), m.begin(), m.end());
            out.emplace_back(idx.at(r), Rat(1));
        } else {
            Atom head = m.front();
            Monomial tail(m.begin() + 1, m.end());
            int tailIdx = idx.at(tail);
            for (const auto& [m2, c] : nf(g, tailIdx)) {
                // prepend head; stays sorted since every monomial produced by
                // nf(g, tail) leads with an atom >= min(g, tail.front) >= head
                Monomial r;
                const Monomial& base = mon[m2];
                r.reserve(base.size() + 1);
                r.push_back(head);
                r.insert(r.end(), base.begin(), base.end());
                if (!r.empty() && base.size() && !(head <= base.front()))
                    throw std::logic_error("pbw: prepend order violated");
                out.emplace_back(idx.at(r), c);
            }
            for (const auto& [z2, coef] : rs->bracketTab[g.second][head.second]) {
                Atom br{g.first + head.first, z2};
                for (auto [m2, c] : nf(br, tailIdx)) out.emplace_back(m2, c * Rat(coef));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rat>> merged;
        for (auto& [i, c] : out) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second += c;
            else
                merged.emplace_back(i, c);
        }
        std::erase_if(merged, [](const auto& p) { return isZero(p.second); });
        nfCache.emplace(key, merged);
        return merged;
    }

    std::vector<std::pair<int, Rat>> nfWord(const Monomial& word) {
        std::vector<std::pair<int, Rat>> acc;
        acc.emplace_back(idx.at({}), Rat(1));
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            std::vector<std::pair<int, Rat>> next;
            for (const auto& [mIdx, c] : acc)
                for (const auto& [m2, c2] : nf(*it, mIdx)) next.emplace_back(m2, c * c2);
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            acc.clear();
            for (auto& [i, c] : next) {
                if (!acc.empty() && acc.back().first == i)
                    acc.back().second += c;
                else
                    acc.emplace_back(i, c);
            }
            std::erase_if(acc, [](const auto& p) { return isZero(p.second); });
        }
        return acc;
    }

    // [z ⊗ 1, monomial] for a degree-0 generator z: same total degree
    std::vector<std::pair<int, Rat>> commute0(int z, int mIdx) {
        auto key = std::make_pair(z, mIdx);
        {
            auto it = commuteCache.find(key);
            if (it != commuteCache.end()) return it->second;
        }
        const Monomial& m = mon[mIdx];
        std::vector<std::pair<int, Rat>> out;
        for (size_t p = 0; p < m.size(); ++p) {
            for (const auto& [z2, coef] : rs->bracketTab[z][m[p].second]) {
                Monomial word = m;
                word[p] = Atom{m[p].first, z2};
                for (auto [m2, c] : nfWord(word)) out.emplace_back(m2, c * Rat(coef));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rat>> merged;
        for (auto& [i, c] : out) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second += c;
            else
                merged.emplace_back(i, c);
        }
        std::erase_if(merged, [](const auto& p) { return isZero(p.second); });
        commuteCache.emplace(key, merged);
        return merged;
    }
};

UPlusTable& uplusTable(const RootSystem& rs, int depth) {
    static std::mutex mu;
    static std::map<std::pair<AlgebraType, int>, std::unique_ptr<UPlusTable>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(rs.datum.type, depth);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<UPlusTable>(rs, depth)).first;
    return *it->second;
}

// induced module U(g[t]) ⊗_{U(g)} V(λ) at grade r, materialized on [r, gmax]
ExplicitModule inducedWindow(const RootSystem& rs, const Weight& lambda, int r, int gmax) {
    if (gmax < r) throw DomainError("induced module: window ends below the generator grade");
    int depth = gmax - r;
    UPlusTable& T = uplusTable(rs, depth);
    const GModule& V = simpleGModule(rs, lambda);
    std::lock_guard<std::mutex> lk(T.mu);

    int nMon = static_cast<int>(T.mon.size());
    ExplicitModule M;
    M.rs = &rs;
    M.window = {r, gmax};
    M.basis.resize(static_cast<size_t>(nMon) * V.dim);
    for (int m = 0; m < nMon; ++m)
        for (int j = 0; j < V.dim; ++j)
            M.basis[static_cast<size_t>(m) * V.dim + j] =
                Label{T.monWeight[m] + V.weight[j], r + monDegree(T.mon[m])};

    int D = M.dim();
    M.act0.assign(rs.dimG, SMat::zero(D, D));
    M.act1.assign(rs.dimG, SMat::zero(D, D));
    for (int z = 0; z < rs.dimG; ++z) {
        for (int m = 0; m < nMon; ++m) {
            auto comm = T.commute0(z, m);
            for (int j = 0; j < V.dim; ++j) {
                SVec col;
                for (const auto& [m2, c] : comm) svAxpy(col, c, SVec::unit(m2 * V.dim + j));
                for (const auto& [j2, c] : V.act[z].col[j].e)
                    svAxpy(col, c, SVec::unit(m * V.dim + j2));
                M.act0[z].col[static_cast<size_t>(m) * V.dim + j] = std::move(col);
            }
            if (monDegree(T.mon[m]) + 1 <= depth) {
                auto prod = T.nf(Atom{1, z}, m);
                for (int j = 0; j < V.dim; ++j) {
                    SVec col;
                    for (const auto& [m2, c] : prod) svAxpy(col, c, SVec::unit(m2 * V.dim + j));
                    M.act1[z].col[static_cast<size_t>(m) * V.dim + j] = std::move(col);
                }
            }
        }
    }
    M.topVector = SVec::unit(0); // empty monomial ⊗ highest weight vector
    M.certified = false;
    return M;
}

ExplicitModule inducedWindowCached(const RootSystem& rs, const Weight& lambda, int r, int gmax) {
    static std::mutex mu;
    static std::map<std::tuple<AlgebraType, Weight, int>, std::unique_ptr<ExplicitModule>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_tuple(rs.datum.type, lambda, gmax - r);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(key, std::make_unique<ExplicitModule>(
                                   inducedWindow(rs, lambda, 0, gmax - r)))
                 .first;
    return shifted(*it->second, r);
}

} // namespace

// ---------------------------------------------------------------------------
// submodule / quotient plumbing
// ---------------------------------------------------------------------------

std::vector<SVec> submoduleClosure(const ExplicitModule& M, const std::vector<SVec>& seeds) {
    Echelon ech(false);
    std::vector<SVec> work;
    for (const SVec& s : seeds) {
        SVec r = ech.reduce(s);
        if (!r.isZero() && ech.insert(r)) work.push_back(r);
    }
    for (size_t q = 0; q < work.size(); ++q) {
        SVec cur = work[q];
        for (int z = 0; z < M.rs->dimG; ++z)
            for (const SMat* A : {&M.act0[z], &M.act1[z]}) {
                SVec img = A->apply(cur);
                SVec r = ech.reduce(img);
                if (!r.isZero() && ech.insert(r)) work.push_back(r);
            }
    }
    return ech.rows();
}

QuotientBuild quotientModule(const ExplicitModule& M, const Echelon& sub) {
    int D = M.dim();
    std::vector<int> repIndex;
    std::vector<int> newIdx(D, -1);
    std::set<int> pivots;
    for (const auto& row : sub.rows()) pivots.insert(row.lead());
    for (int i = 0; i < D; ++i)
        if (!pivots.count(i)) {
            newIdx[i] = static_cast<int>(repIndex.size());
            repIndex.push_back(i);
        }
    auto project = [&](const SVec& v) {
        SVec red = sub.reduce(v);
        SVec out;
        for (const auto& [i, c] : red.e) {
            if (newIdx[i] < 0) throw std::logic_error("quotient: pivot survived reduction");
            out.e.emplace_back(newIdx[i], c);
        }
        return out;
    };

    QuotientBuild qb;
    qb.repIndex = repIndex;
    qb.module.rs = M.rs;
    qb.module.window = M.window;
    qb.module.basis.resize(repIndex.size());
    for (size_t q = 0; q < repIndex.size(); ++q) qb.module.basis[q] = M.basis[repIndex[q]];
    int Q = static_cast<int>(repIndex.size());
    qb.module.act0.assign(M.rs->dimG, SMat::zero(Q, Q));
    qb.module.act1.assign(M.rs->dimG, SMat::zero(Q, Q));
    for (int z = 0; z < M.rs->dimG; ++z)
        for (int q = 0; q < Q; ++q) {
            qb.module.act0[z].col[q] = project(M.act0[z].col[repIndex[q]]);
            qb.module.act1[z].col[q] = project(M.act1[z].col[repIndex[q]]);
        }
    qb.projection = SMat::zero(Q, D);
    for (int i = 0; i < D; ++i) qb.projection.col[i] = project(SVec::unit(i));
    qb.module.topVector = qb.projection.apply(M.topVector);
    qb.module.certified = M.certified;
    return qb;
}

ExplicitModule submoduleOnBasis(const ExplicitModule& M, const std::vector<SVec>& basisVecs) {
    Echelon coords(true);
    for (const SVec& v : basisVecs)
        if (!coords.insert(v)) throw std::logic_error("submoduleOnBasis: dependent basis");
    ExplicitModule S;
    S.rs = M.rs;
    S.window = M.window;
    S.certified = M.certified;
    int n = static_cast<int>(basisVecs.size());
    S.basis.resize(n);
    for (int j = 0; j < n; ++j) {
        if (basisVecs[j].isZero()) throw std::logic_error("submoduleOnBasis: zero vector");
        Label l = M.basis[basisVecs[j].e.front().first];
        for (const auto& [i, c] : basisVecs[j].e)
            if (!(M.basis[i] == l)) throw std::logic_error("submoduleOnBasis: mixed labels");
        S.basis[j] = l;
    }
    S.act0.assign(M.rs->dimG, SMat::zero(n, n));
    S.act1.assign(M.rs->dimG, SMat::zero(n, n));
    for (int z = 0; z < M.rs->dimG; ++z)
        for (int j = 0; j < n; ++j) {
            auto c0 = coords.expressRaw(M.act0[z].apply(basisVecs[j]));
            auto c1 = coords.expressRaw(M.act1[z].apply(basisVecs[j]));
            if (!c0 || !c1) throw std::logic_error("submoduleOnBasis: not action-invariant");
            S.act0[z].col[j] = *c0;
            S.act1[z].col[j] = *c1;
        }
    return S;
}

ExplicitModule directSum(const ExplicitModule& A, const ExplicitModule& B) {
    if (A.dim() == 0) return B;
    if (B.dim() == 0) return A;
    ExplicitModule S;
    S.rs = A.rs;
    S.window = {std::min(A.window.lo, B.window.lo), std::max(A.window.hi, B.window.hi)};
    S.certified = A.certified && B.certified;
    S.basis = A.basis;
    S.basis.insert(S.basis.end(), B.basis.begin(), B.basis.end());
    int da = A.dim(), n = da + B.dim();
    S.act0.assign(S.rs->dimG, SMat::zero(n, n));
    S.act1.assign(S.rs->dimG, SMat::zero(n, n));
    for (int z = 0; z < S.rs->dimG; ++z) {
        for (int j = 0; j < da; ++j) {
            S.act0[z].col[j] = A.act0[z].col[j];
            S.act1[z].col[j] = A.act1[z].col[j];
        }
        for (int j = 0; j < B.dim(); ++j) {
            S.act0[z].col[da + j] = svShiftIndices(B.act0[z].col[j], da);
            S.act1[z].col[da + j] = svShiftIndices(B.act1[z].col[j], da);
        }
    }
    S.topVector = A.topVector;
    return S;
}

ExplicitModule shifted(const ExplicitModule& M, int s) {
    ExplicitModule R = M;
    R.window = {M.window.lo + s, M.window.hi + s};
    for (auto& l : R.basis) l.grade += s;
    return R;
}

ExplicitModule truncatedTo(const ExplicitModule& M, int lo, int hi) {
    std::vector<int> keep, newIdx(M.dim(), -1);
    for (int i = 0; i < M.dim(); ++i)
        if (M.basis[i].grade >= lo && M.basis[i].grade <= hi) {
            newIdx[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    ExplicitModule R;
    R.rs = M.rs;
    R.window = {std::max(lo, M.window.lo), std::min(hi, M.window.hi)};
    R.certified = M.certified;
    int n = static_cast<int>(keep.size());
    R.basis.resize(n);
    for (int q = 0; q < n; ++q) R.basis[q] = M.basis[keep[q]];
    auto restrict = [&](const SVec& v) {
        SVec out;
        for (const auto& [i, c] : v.e)
            if (newIdx[i] >= 0) out.e.emplace_back(newIdx[i], c);
        return out;
    };
    R.act0.assign(M.rs->dimG, SMat::zero(n, n));
    R.act1.assign(M.rs->dimG, SMat::zero(n, n));
    for (int z = 0; z < M.rs->dimG; ++z)
        for (int q = 0; q < n; ++q) {
            R.act0[z].col[q] = restrict(M.act0[z].col[keep[q]]);
            R.act1[z].col[q] = restrict(M.act1[z].col[keep[q]]);
        }
    R.topVector = restrict(M.topVector);
    return R;
}

ExplicitModule dualModule(const ExplicitModule& M) {
    if (!M.certified) throw DomainError("dualModule: module must be certified complete");
    int n = M.dim();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<Label> dualLabel(n);
    for (int i = 0; i < n; ++i) dualLabel[i] = Label{-M.basis[i].weight, -M.basis[i].grade};
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (!(dualLabel[a] == dualLabel[b])) return dualLabel[a] < dualLabel[b];
        return a < b;
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;

    ExplicitModule R;
    R.rs = M.rs;
    R.window = {-M.window.hi, -M.window.lo};
    R.certified = true;
    R.basis.resize(n);
    for (int i = 0; i < n; ++i) R.basis[pos[i]] = dualLabel[i];
    auto dualize = [&](const SMat& A) {
        SMat T = A.negTranspose();
        SMat out = SMat::zero(n, n);
        for (int j = 0; j < n; ++j) {
            SVec c;
            for (const auto& [i, x] : T.col[j].e) c.e.emplace_back(pos[i], x);
            std::sort(c.e.begin(), c.e.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.col[pos[j]] = std::move(c);
        }
        return out;
    };
    R.act0.resize(M.rs->dimG);
    R.act1.resize(M.rs->dimG);
    for (int z = 0; z < M.rs->dimG; ++z) {
        R.act0[z] = dualize(M.act0[z]);
        R.act1[z] = dualize(M.act1[z]);
    }
    return R;
}

GradedCharacter gradedCharacterOf(const ExplicitModule& M) {
    GradedCharacter ch;
    ch.window = M.window;
    ch.complete = M.certified;
    for (const auto& l : M.basis) ch.terms[l] += 1;
    return ch;
}

// ---------------------------------------------------------------------------
// cyclic builds
// ---------------------------------------------------------------------------

CyclicBuild buildCyclic(const RootSystem& rs, const CyclicPresentation& pres, int gmax) {
    int eff = pres.bTrunc ? std::min(gmax, *pres.bTrunc) : gmax;
    if (eff < pres.grade) throw DomainError("buildCyclic: empty window");
    CyclicBuild out;
    out.ambient = inducedWindowCached(rs, pres.lambda, pres.grade, eff);

    const GModule& V = simpleGModule(rs, pres.lambda);
    UPlusTable& T = uplusTable(rs, eff - pres.grade);
    std::vector<SVec> seeds;
    {
        std::lock_guard<std::mutex> lk(T.mu);
        for (int s = 1; s <= eff - pres.grade; ++s) {
            std::vector<int> zs;
            if (pres.kind == CyclicKind::DeltaType || pres.kind == CyclicKind::WType)
                for (int a = 0; a < rs.nPos; ++a) zs.push_back(rs.idxXPlus(a));
            if (pres.kind == CyclicKind::DeltaType)
                for (int i = 0; i < rs.rank; ++i) zs.push_back(rs.idxH(i));
            for (int z : zs) {
                Monomial m = {Atom{s, z}};
                seeds.push_back(SVec::unit(T.idx.at(m) * V.dim + 0));
            }
        }
    }

    std::vector<SVec> rel = submoduleClosure(out.ambient, seeds);
    Echelon sub(false);
    for (const SVec& v : rel) sub.insert(v);
    out.relationSub = sub.rows();
    QuotientBuild qb = quotientModule(out.ambient, sub);
    out.module = std::move(qb.module);
    out.projection = std::move(qb.projection);

    bool complete = pres.bTrunc && eff == *pres.bTrunc;
    if (!complete)
        for (int g = pres.grade; g < eff; ++g)
            if (out.module.dimAtGrade(g) == 0) {
                complete = true;
                for (int g2 = g; g2 <= eff; ++g2)
                    if (out.module.dimAtGrade(g2) != 0)
                        throw std::logic_error("termination certificate violated");
                break;
            }
    out.module.certified = complete;
    out.ambient.certified = pres.bTrunc && eff == *pres.bTrunc;
    return out;
}

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

SVec HomBasis::coordinatesOf(const SMat& f) const {
    std::map<std::pair<int, int>, int> lookup;
    for (size_t u = 0; u < unknowns.size(); ++u) lookup[unknowns[u]] = static_cast<int>(u);
    SVec v;
    for (int j = 0; j < f.cols(); ++j)
        for (const auto& [i, c] : f.col[j].e) {
            auto it = lookup.find({i, j});
            if (it == lookup.end())
                throw std::logic_error("HomBasis: entry outside matched labels");
            v.e.emplace_back(it->second, c);
        }
    std::sort(v.e.begin(), v.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

HomBasis homGraded(const ExplicitModule& M, const ExplicitModule& N) {
    HomBasis H;
    std::map<Label, std::pair<std::vector<int>, std::vector<int>>> byLabel;
    for (int i = 0; i < M.dim(); ++i) byLabel[M.basis[i]].first.push_back(i);
    for (int j = 0; j < N.dim(); ++j) byLabel[N.basis[j]].second.push_back(j);
    std::map<std::pair<int, int>, int> unknownId; // (N row, M col) -> id
    for (const auto& [l, mn] : byLabel)
        for (int i : mn.first)
            for (int j : mn.second) {
                unknownId[{j, i}] = static_cast<int>(H.unknowns.size());
                H.unknowns.emplace_back(j, i);
            }
    int NU = static_cast<int>(H.unknowns.size());
    if (NU == 0) return H;

    std::vector<SVec> equations;
    auto nCandidates = [&](const Label& l) -> const std::vector<int>& {
        static const std::vector<int> none;
        auto it = byLabel.find(l);
        return it == byLabel.end() ? none : it->second.second;
    };
    auto addEquations = [&](const SMat& AM, const SMat& AN) {
        for (int i = 0; i < M.dim(); ++i) {
            // φ(A_M e_i) = A_N φ(e_i): one equation per possible target row n
            std::map<int, SVec> rowEq;
            for (const auto& [k, c] : AM.col[i].e)
                for (int n : nCandidates(M.basis[k]))
                    svAxpy(rowEq[n], c, SVec::unit(unknownId.at({n, k})));
            for (int m : nCandidates(M.basis[i])) {
                int u = unknownId.at({m, i});
                for (const auto& [n, c] : AN.col[m].e) svAxpy(rowEq[n], -c, SVec::unit(u));
            }
            for (auto& [n, eq] : rowEq)
                if (!eq.isZero()) equations.push_back(std::move(eq));
        }
    };
    for (int z = 0; z < M.rs->dimG; ++z) {
        addEquations(M.act0[z], N.act0[z]);
        addEquations(M.act1[z], N.act1[z]);
    }
    auto ker = kernelBasis(std::move(equations), NU, ElimMode::Parallel);
    H.dim = static_cast<int>(ker.size());
    for (const SVec& v : ker) {
        SMat f = SMat::zero(N.dim(), M.dim());
        for (const auto& [u, c] : v.e) f.col[H.unknowns[u].second].e.emplace_back(H.unknowns[u].first, c);
        for (auto& col : f.col)
            std::sort(col.e.begin(), col.e.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        H.maps.push_back(std::move(f));
        H.coordVecs.push_back(v);
    }
    return H;
}

namespace {

struct Presentation {
    ExplicitModule P, K;
    std::vector<SVec> kernelInP;
    SMat surjection;
};

Presentation presentationOf(const RootSystem& rs, const ExplicitModule& M, int b) {
    for (const auto& l : M.basis)
        if (l.grade > b) throw DomainError("ext1: module escapes the truncation bound");

    // generating highest weight vectors, grades ascending, weights descending
    struct Gen {
        Weight lambda;
        int grade;
        SVec vec;
    };
    std::vector<Gen> gens;
    Echelon span(false);
    std::vector<SVec> work;
    auto absorb = [&](const SVec& seed) {
        SVec r = span.reduce(seed);
        if (r.isZero()) return false;
        span.insert(r);
        work.push_back(r);
        for (size_t q = work.size() - 1; q < work.size(); ++q) {
            SVec cur = work[q];
            for (int z = 0; z < rs.dimG; ++z)
                for (const SMat* A : {&M.act0[z], &M.act1[z]}) {
                    SVec img = A->apply(cur);
                    SVec rr = span.reduce(img);
                    if (!rr.isZero() && span.insert(rr)) work.push_back(rr);
                }
        }
        return true;
    };

    std::vector<int> simplePlus;
    for (int i = 0; i < rs.rank; ++i)
        for (int a = 0; a < rs.nPos; ++a)
            if (rs.posRoot[a] == rs.simpleRootFw(i)) simplePlus.push_back(rs.idxXPlus(a));

    std::map<Label, std::vector<int>> byLabel;
    for (int i = 0; i < M.dim(); ++i) byLabel[M.basis[i]].push_back(i);
    for (int g = M.window.lo; g <= M.window.hi && span.dim() < M.dim(); ++g) {
        // dominant weights at this grade, descending by (height, lex)
        std::vector<Weight> ws;
        for (const auto& [l, idxs] : byLabel)
            if (l.grade == g && l.weight.isDominant()) ws.push_back(l.weight);
        std::sort(ws.begin(), ws.end(), [&](const Weight& a, const Weight& bq) {
            Rat ha = rs.heightOf(a), hb = rs.heightOf(bq);
            if (ha != hb) return ha > hb;
            return bq < a;
        });
        for (const Weight& w : ws) {
            const auto& idxs = byLabel[Label{w, g}];
            // highest weight vectors inside the label block
            std::vector<SVec> eqs;
            for (int z : simplePlus) {
                std::map<int, SVec> rows;
                for (size_t c = 0; c < idxs.size(); ++c)
                    for (const auto& [r2, v] : M.act0[z].col[idxs[c]].e)
                        svAxpy(rows[r2], v, SVec::unit(static_cast<int>(c)));
                for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
            }
            auto hw = kernelBasis(std::move(eqs), static_cast<int>(idxs.size()));
            for (const SVec& coeffs : hw) {
                SVec v;
                for (const auto& [c, x] : coeffs.e) svAxpy(v, x, SVec::unit(idxs[c]));
                if (absorb(v)) gens.push_back(Gen{w, g, v});
            }
        }
    }
    if (span.dim() != M.dim())
        throw std::logic_error("presentationOf: highest weight vectors fail to generate");

    Presentation pre;
    std::vector<int> blockOffset;
    for (const Gen& gen : gens) {
        blockOffset.push_back(pre.P.dim());
        ExplicitModule block = inducedWindowCached(rs, gen.lambda, gen.grade, b);
        block.certified = true; // the block is the whole b-truncated projective
        pre.P = directSum(pre.P, block);
    }
    if (gens.empty()) {
        pre.P.rs = &rs;
        pre.P.window = M.window;
        pre.P.act0.assign(rs.dimG, SMat::zero(0, 0));
        pre.P.act1.assign(rs.dimG, SMat::zero(0, 0));
    }
    pre.P.certified = true;

    // surjection: block by block, monomial ⊗ V-basis ↦ monomial · (word · v)
    pre.surjection = SMat::zero(M.dim(), pre.P.dim());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Gen& gen = gens[gi];
        const GModule& V = simpleGModule(rs, gen.lambda);
        UPlusTable& T = uplusTable(rs, b - gen.grade);
        std::lock_guard<std::mutex> lk(T.mu);
        std::vector<SVec> uj(V.dim);
        for (int j = 0; j < V.dim; ++j) {
            SVec v = gen.vec;
            for (int z : V.loweringWord[j]) v = M.act0[z].apply(v);
            uj[j] = std::move(v);
        }
        for (size_t m = 0; m < T.mon.size(); ++m)
            for (int j = 0; j < V.dim; ++j) {
                SVec img = uj[j];
                const Monomial& mon = T.mon[m];
                for (auto it = mon.rbegin(); it != mon.rend() && !img.isZero(); ++it)
                    img = M.applyGen(it->second, it->first, img);
                pre.surjection.col[blockOffset[gi] + m * V.dim + j] = std::move(img);
            }
    }

    // kernel, label block by label block
    std::map<Label, std::vector<int>> pByLabel;
    for (int i = 0; i < pre.P.dim(); ++i) pByLabel[pre.P.basis[i]].push_back(i);
    std::map<Label, std::vector<int>> mByLabel;
    for (int i = 0; i < M.dim(); ++i) mByLabel[M.basis[i]].push_back(i);
    for (const auto& [l, pidx] : pByLabel) {
        std::vector<SVec> eqs;
        auto mit = mByLabel.find(l);
        if (mit != mByLabel.end()) {
            std::map<int, SVec> rows;
            for (size_t c = 0; c < pidx.size(); ++c)
                for (const auto& [r2, v] : pre.surjection.col[pidx[c]].e)
                    svAxpy(rows[r2], v, SVec::unit(static_cast<int>(c)));
            for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
        } else {
            for (size_t c = 0; c < pidx.size(); ++c)
                if (!pre.surjection.col[pidx[c]].isZero())
                    throw std::logic_error("surjection is not label-graded");
        }
        auto ker = kernelBasis(std::move(eqs), static_cast<int>(pidx.size()));
        for (const SVec& coeffs : ker) {
            SVec v;
            for (const auto& [c, x] : coeffs.e) svAxpy(v, x, SVec::unit(pidx[c]));
            pre.kernelInP.push_back(std::move(v));
        }
    }
    if (!pre.kernelInP.empty())
        pre.K = submoduleOnBasis(pre.P, pre.kernelInP);
    else {
        pre.K.rs = &rs;
        pre.K.window = pre.P.window;
        pre.K.act0.assign(rs.dimG, SMat::zero(0, 0));
        pre.K.act1.assign(rs.dimG, SMat::zero(0, 0));
        pre.K.certified = true;
    }
    pre.K.certified = true;
    return pre;
}

Ext1Context ext1From(Presentation pre, const ExplicitModule& M, const ExplicitModule& N) {
    Ext1Context ctx;
    ctx.P = std::move(pre.P);
    ctx.K = std::move(pre.K);
    ctx.kernelInP = std::move(pre.kernelInP);
    ctx.surjection = std::move(pre.surjection);
    ctx.M = &M;
    ctx.N = &N;
    if (ctx.K.dim() == 0) return ctx;

    HomBasis homKN = homGraded(ctx.K, N);
    if (homKN.dim == 0) return ctx;
    HomBasis homPN = homGraded(ctx.P, N);
    Echelon image(false);
    for (const SMat& psi : homPN.maps) {
        SMat rho = SMat::zero(N.dim(), ctx.K.dim());
        for (int t = 0; t < ctx.K.dim(); ++t) rho.col[t] = psi.apply(ctx.kernelInP[t]);
        image.insert(homKN.coordinatesOf(rho));
    }
    for (int c = 0; c < homKN.dim; ++c)
        if (image.insert(homKN.coordVecs[c])) {
            ctx.cocycles.push_back(homKN.maps[c]);
            ++ctx.dim;
        }
    return ctx;
}

} // namespace

Ext1Context ext1(const RootSystem& rs, const ExplicitModule& M, const ExplicitModule& N,
                 const TruncationSpec& gamma) {
    if (!gamma.b) throw DomainError("ext1: truncation must be bounded above");
    for (const auto& l : N.basis)
        if (l.grade > *gamma.b) throw DomainError("ext1: target escapes the truncation bound");
    return ext1From(presentationOf(rs, M, *gamma.b), M, N);
}

ExtensionBuild extensionFromCocycle(const Ext1Context& ctx, const SMat& cocycle) {
    const ExplicitModule& N = *ctx.N;
    ExplicitModule sum = directSum(N, ctx.P);
    int dn = N.dim();
    // graph of the cocycle: (c(k), -k) spans a submodule since c intertwines
    Echelon graph(false);
    for (size_t t = 0; t < ctx.kernelInP.size(); ++t) {
        SVec v = cocycle.col[t];
        svAxpy(v, Rat(-1), svShiftIndices(ctx.kernelInP[t], dn));
        graph.insert(v);
    }
    QuotientBuild qb = quotientModule(sum, graph);
    ExtensionBuild ext;
    ext.E = std::move(qb.module);
    ext.injection = SMat::zero(ext.E.dim(), dn);
    for (int j = 0; j < dn; ++j) ext.injection.col[j] = qb.projection.col[j];
    ext.projection = SMat::zero(ctx.M->dim(), ext.E.dim());
    for (size_t q = 0; q < qb.repIndex.size(); ++q) {
        int o = qb.repIndex[q];
        if (o >= dn) ext.projection.col[q] = ctx.surjection.col[o - dn];
    }
    ext.E.topVector = ext.injection.apply(N.topVector);
    ext.E.certified = N.certified && ctx.P.certified;
    return ext;
}

bool extensionSplits(const ExtensionBuild& ext, const ExplicitModule& M) {
    // section σ: M -> E with π∘σ = id, solved as an affine intertwiner system
    const ExplicitModule& E = ext.E;
    std::map<Label, std::vector<int>> eByLabel;
    for (int i = 0; i < E.dim(); ++i) eByLabel[E.basis[i]].push_back(i);
    std::map<std::pair<int, int>, int> unknownId; // (E row, M col)
    std::vector<std::pair<int, int>> unknowns;
    for (int j = 0; j < M.dim(); ++j) {
        auto it = eByLabel.find(M.basis[j]);
        if (it == eByLabel.end()) continue;
        for (int i : it->second) {
            unknownId[{i, j}] = static_cast<int>(unknowns.size());
            unknowns.emplace_back(i, j);
        }
    }
    int NU = static_cast<int>(unknowns.size());
    std::vector<SVec> rows;
    auto eCandidates = [&](const Label& l) -> const std::vector<int>& {
        static const std::vector<int> none;
        auto it = eByLabel.find(l);
        return it == eByLabel.end() ? none : it->second;
    };
    auto addIntertwine = [&](const SMat& AM, const SMat& AE) {
        for (int j = 0; j < M.dim(); ++j) {
            std::map<int, SVec> rowEq;
            for (const auto& [k, c] : AM.col[j].e)
                for (int n : eCandidates(M.basis[k]))
                    svAxpy(rowEq[n], c, SVec::unit(unknownId.at({n, k})));
            for (int m : eCandidates(M.basis[j])) {
                int u = unknownId.at({m, j});
                for (const auto& [n, c] : AE.col[m].e) svAxpy(rowEq[n], -c, SVec::unit(u));
            }
            for (auto& [n, eq] : rowEq)
                if (!eq.isZero()) rows.push_back(std::move(eq));
        }
    };
    for (int z = 0; z < M.rs->dimG; ++z) {
        addIntertwine(M.act0[z], E.act0[z]);
        addIntertwine(M.act1[z], E.act1[z]);
    }
    // π∘σ = id: for each M col j and M row r: Σ_i π[r,i]·σ[i,j] = δ_{rj}
    for (int j = 0; j < M.dim(); ++j) {
        std::map<int, SVec> rowEq;
        for (const auto& [i, u] : unknownId) {
            if (i.second != j) continue;
            for (const auto& [r2, c] : ext.projection.col[i.first].e)
                svAxpy(rowEq[r2], c, SVec::unit(u));
        }
        for (int r2 = 0; r2 < M.dim(); ++r2) {
            SVec eq = rowEq.count(r2) ? rowEq[r2] : SVec{};
            Rat rhs = (r2 == j) ? Rat(1) : Rat(0);
            if (!isZero(rhs)) eq.e.emplace_back(NU, -rhs);
            if (!eq.isZero()) rows.push_back(std::move(eq));
        }
    }
    rowReduce(rows, ElimMode::Serial);
    for (const auto& r : rows)
        if (r.lead() == NU) return false;
    return true;
}

UnivExtResult universalExtension(const RootSystem& rs, const ExplicitModule& M,
                                 const ExplicitModule& N, const TruncationSpec& gamma) {
    if (!gamma.b) throw DomainError("universalExtension: truncation must be bounded above");
    Presentation pre = presentationOf(rs, M, *gamma.b);
    {
        Ext1Context self = ext1From(pre, M, M);
        if (self.dim != 0) throw DomainError("universalExtension: Ext1(M,M) != 0");
    }
    UnivExtResult res;
    res.U = N;
    res.d = 0;
    res.inclusionOfN = SMat::identity(N.dim());
    int bound = -1;
    while (true) {
        Ext1Context ctx = ext1From(pre, M, res.U);
        if (bound < 0) bound = ctx.dim;
        if (ctx.dim == 0) break;
        ExtensionBuild eb = extensionFromCocycle(ctx, ctx.cocycles.front());
        res.U = std::move(eb.E);
        res.inclusionOfN = eb.injection.compose(res.inclusionOfN);
        ++res.d;
        if (res.d > bound)
            throw std::logic_error("universalExtension: exceeded the a-priori bound (window defect)");
    }
    return res;
}

EndAnalysis endAlgebraAnalysis(const ExplicitModule& M) {
    if (!M.certified) throw DomainError("endAlgebraAnalysis: module must be certified complete");
    HomBasis end = homGraded(M, M);
    EndAnalysis out;
    out.endDim = end.dim;
    if (end.dim == 0) {
        out.indecomposable = false;
        return out;
    }
    // radical via the trace form of the defining action (characteristic zero)
    std::vector<SVec> gram(end.dim);
    for (int i = 0; i < end.dim; ++i)
        for (int j = 0; j < end.dim; ++j) {
            Rat t = end.maps[i].traceOfProduct(end.maps[j]);
            if (!isZero(t)) gram[i].e.emplace_back(j, t);
        }
    int rank = rowReduce(gram, ElimMode::Serial);
    out.radDim = end.dim - rank;
    out.indecomposable = (end.dim - out.radDim == 1);
    return out;
}

SplitOffResult splitOffDeltas(const ExplicitModule& M, const ExplicitModule& delta) {
    SplitOffResult res;
    res.complement = M;
    res.copies = 0;
    if (delta.topVector.isZero()) throw DomainError("splitOffDeltas: delta has no top vector");
    while (true) {
        const ExplicitModule& cur = res.complement;
        HomBasis H = homGraded(delta, cur);
        if (H.dim == 0) break;
        HomBasis C = homGraded(cur, delta);
        if (C.dim == 0) break;
        int si = -1, sj = -1;
        Rat scal;
        for (int i = 0; i < H.dim && si < 0; ++i)
            for (int j = 0; j < C.dim && si < 0; ++j) {
                SVec w = C.maps[j].apply(H.maps[i].apply(delta.topVector));
                if (w.isZero()) continue;
                // w lies on the one-dimensional top line of delta
                Rat ratio = w.e.front().second / delta.topVector.e.front().second;
                SVec check = svAdd(w, svScale(delta.topVector, -ratio));
                if (!check.isZero()) throw std::logic_error("splitOffDeltas: top line not 1-dim");
                si = i;
                sj = j;
                scal = ratio;
            }
        if (si < 0) break;
        SMat sigma = H.maps[si];
        SMat pi = C.maps[sj].scaled(1 / scal);
        // correct σ by the nilpotent part so that π∘σ = id
        SMat n = pi.compose(sigma).plus(SMat::identity(delta.dim()).scaled(Rat(-1)));
        SMat inv = SMat::identity(delta.dim());
        SMat pw = n;
        int guard = 0;
        while (!pw.isZeroMat()) {
            inv = inv.plus(pw.scaled(Rat((guard % 2 == 0) ? -1 : 1)));
            pw = pw.compose(n);
            if (++guard > delta.dim()) throw std::logic_error("splitOffDeltas: non-nilpotent part");
        }
        sigma = sigma.compose(inv);
        if (!(pi.compose(sigma) == SMat::identity(delta.dim())))
            throw std::logic_error("splitOffDeltas: section correction failed");
        // complement = ker π, label block by label block
        std::map<Label, std::vector<int>> byLabel;
        for (int i = 0; i < cur.dim(); ++i) byLabel[cur.basis[i]].push_back(i);
        std::vector<SVec> kerVecs;
        for (const auto& [l, idxs] : byLabel) {
            std::map<int, SVec> rows;
            for (size_t c = 0; c < idxs.size(); ++c)
                for (const auto& [r2, v] : pi.col[idxs[c]].e)
                    svAxpy(rows[r2], v, SVec::unit(static_cast<int>(c)));
            std::vector<SVec> eqs;
            for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
            for (const SVec& coeffs : kernelBasis(std::move(eqs), static_cast<int>(idxs.size()))) {
                SVec v;
                for (const auto& [c, x] : coeffs.e) svAxpy(v, x, SVec::unit(idxs[c]));
                kerVecs.push_back(std::move(v));
            }
        }
        Echelon kerSpan(true);
        for (const SVec& v : kerVecs) kerSpan.insert(v);
        auto topCoords = kerSpan.expressRaw(cur.topVector);
        if (!topCoords) throw std::logic_error("splitOffDeltas: anchor escapes the complement");
        ExplicitModule next = submoduleOnBasis(cur, kerVecs);
        next.topVector = *topCoords;
        next.certified = cur.certified;
        res.complement = std::move(next);
        ++res.copies;
    }
    return res;
}

std::map<Label, long> socleOf(const ExplicitModule& M) {
    if (!M.certified) throw DomainError("socleOf: module must be certified complete");
    std::map<Label, std::vector<int>> byLabel;
    for (int i = 0; i < M.dim(); ++i) byLabel[M.basis[i]].push_back(i);
    std::vector<int> simplePlus;
    for (int i = 0; i < M.rs->rank; ++i)
        for (int a = 0; a < M.rs->nPos; ++a)
            if (M.rs->posRoot[a] == M.rs->simpleRootFw(i)) simplePlus.push_back(M.rs->idxXPlus(a));

    std::map<Label, long> out;
    for (const auto& [l, idxs] : byLabel) {
        if (!l.weight.isDominant()) continue;
        // joint kernel of every degree-1 generator on the label block
        std::vector<SVec> eqs;
        for (int z = 0; z < M.rs->dimG; ++z) {
            std::map<int, SVec> rows;
            for (size_t c = 0; c < idxs.size(); ++c)
                for (const auto& [r2, v] : M.act1[z].col[idxs[c]].e)
                    svAxpy(rows[r2], v, SVec::unit(static_cast<int>(c)));
            for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
        }
        auto zBasis = kernelBasis(std::move(eqs), static_cast<int>(idxs.size()));
        if (zBasis.empty()) continue;
        // highest weight vectors inside the invariant part
        std::vector<SVec> eqs2;
        for (int z : simplePlus) {
            std::map<int, SVec> rows;
            for (size_t c = 0; c < zBasis.size(); ++c) {
                SVec v;
                for (const auto& [cc, x] : zBasis[c].e) svAxpy(v, x, SVec::unit(idxs[cc]));
                SVec img = M.act0[z].apply(v);
                for (const auto& [r2, x] : img.e) svAxpy(rows[r2], x, SVec::unit(static_cast<int>(c)));
            }
            for (auto& [r2, eq] : rows) eqs2.push_back(std::move(eq));
        }
        long mult = static_cast<long>(kernelBasis(std::move(eqs2), static_cast<int>(zBasis.size())).size());
        if (mult > 0) out[l] = mult;
    }
    return out;
}

OCanonicalFiltration oCanonicalFiltration(const ExplicitModule& M,
                                          const std::vector<Weight>& enumeration) {
    if (!M.certified) throw DomainError("oCanonicalFiltration: module must be certified complete");
    OCanonicalFiltration out;
    const RootSystem& rs = *M.rs;

    auto invariantInside = [&](const std::vector<int>& allowedIdx) {
        // greatest action-invariant subspace of the coordinate subspace
        std::vector<SVec> B;
        for (int i : allowedIdx) B.push_back(SVec::unit(i));
        while (true) {
            if (B.empty()) return B;
            Echelon span(false);
            for (const SVec& v : B) span.insert(v);
            std::vector<SVec> eqs;
            for (int z = 0; z < rs.dimG; ++z)
                for (const SMat* A : {&M.act0[z], &M.act1[z]}) {
                    std::map<int, SVec> rows;
                    for (size_t c = 0; c < B.size(); ++c) {
                        SVec res = span.reduce(A->apply(B[c]));
                        for (const auto& [r2, x] : res.e)
                            svAxpy(rows[r2], x, SVec::unit(static_cast<int>(c)));
                    }
                    for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
                }
            auto ker = kernelBasis(std::move(eqs), static_cast<int>(B.size()));
            if (static_cast<int>(ker.size()) == static_cast<int>(B.size())) return B;
            std::vector<SVec> next;
            for (const SVec& coeffs : ker) {
                SVec v;
                for (const auto& [c, x] : coeffs.e) svAxpy(v, x, B[c]);
                next.push_back(std::move(v));
            }
            B = std::move(next);
        }
    };

    std::vector<SVec> prevHomog;
    GradedCharacter prevChar;
    prevChar.window = M.window;
    for (size_t s = 0; s < enumeration.size(); ++s) {
        std::vector<int> allowed;
        for (int i = 0; i < M.dim(); ++i) {
            bool ok = false;
            for (size_t t = 0; t <= s && !ok; ++t)
                ok = rs.hullMembership(M.basis[i].weight, enumeration[t]);
            if (ok) allowed.push_back(i);
        }
        std::vector<SVec> B = invariantInside(allowed);
        out.dims.push_back(static_cast<int>(B.size()));

        // label-homogeneous basis of the invariant subspace
        Echelon span(false);
        for (const SVec& v : B) span.insert(v);
        std::map<Label, std::vector<int>> byLabel;
        for (int i = 0; i < M.dim(); ++i) byLabel[M.basis[i]].push_back(i);
        std::vector<SVec> homog;
        GradedCharacter ch;
        ch.window = M.window;
        for (const auto& [l, idxs] : byLabel) {
            // X ∩ coordinate(L): kernel of projection-to-complement restricted to X
            std::vector<SVec> eqs;
            std::map<int, SVec> rows;
            for (size_t c = 0; c < B.size(); ++c)
                for (const auto& [r2, x] : B[c].e)
                    if (!(M.basis[r2] == l)) svAxpy(rows[r2], x, SVec::unit(static_cast<int>(c)));
            for (auto& [r2, eq] : rows) eqs.push_back(std::move(eq));
            for (const SVec& coeffs : kernelBasis(std::move(eqs), static_cast<int>(B.size()))) {
                SVec v;
                for (const auto& [c, x] : coeffs.e) svAxpy(v, x, B[c]);
                homog.push_back(std::move(v));
                ch.terms[l] += 1;
            }
        }
        if (static_cast<int>(homog.size()) != static_cast<int>(B.size()))
            throw std::logic_error("o-canonical subspace is not label-graded");
        out.quotientChars.push_back(charSub(ch, prevChar));
        out.quotientChars.back().isVirtual = false;

        // quotient condition via the socle of M_s / M_{s-1}
        if (!(ch == prevChar)) {
            ExplicitModule Ms = submoduleOnBasis(M, homog);
            Ms.certified = true;
            Echelon inner(false);
            Echelon coords(true);
            for (const SVec& v : homog) coords.insert(v);
            for (const SVec& v : prevHomog) {
                auto c = coords.expressRaw(v);
                if (!c) throw std::logic_error("o-canonical chain not nested");
                inner.insert(*c);
            }
            QuotientBuild qb = quotientModule(Ms, inner);
            qb.module.certified = true;
            for (const auto& [l, m] : socleOf(qb.module))
                if (m > 0 && !(l.weight == enumeration[s])) out.quotientConditionHolds = false;
        }
        prevHomog = homog;
        prevChar = ch;
    }
    return out;
}

bool bracketSoundness(const ExplicitModule& M, std::string* why) {
    const RootSystem& rs = *M.rs;
    auto expected = [&](int a, int b, int deg) {
        SMat r = SMat::zero(M.dim(), M.dim());
        for (const auto& [t, c] : rs.bracketTab[a][b])
            r = r.plus(M.derivedAction(t, deg).scaled(Rat(c)));
        return r;
    };
    for (int a = 0; a < rs.dimG; ++a)
        for (int b = 0; b < rs.dimG; ++b) {
            if (a == b) continue;
            struct Case {
                const SMat *A, *B;
                int deg;
            } cases[] = {{&M.act0[a], &M.act0[b], 0},
                         {&M.act0[a], &M.act1[b], 1},
                         {&M.act1[a], &M.act1[b], 2}};
            for (const auto& c : cases) {
                SMat lhs = smCommutator(*c.A, *c.B);
                SMat rhs = expected(a, b, c.deg);
                if (!(lhs == rhs)) {
                    if (why)
                        *why = "bracket failure [" + rs.basisName(a) + "@" +
                               std::to_string(c.deg == 2 ? 1 : 0) + ", " + rs.basisName(b) + "]";
                    return false;
                }
            }
        }
    return true;
}

bool isIsomorphic(const ExplicitModule& M, const ExplicitModule& N) {
    if (M.dim() != N.dim()) return false;
    if (!(gradedCharacterOf(M).terms == gradedCharacterOf(N).terms)) return false;
    HomBasis H = homGraded(M, N);
    if (H.dim == 0) return M.dim() == 0;
    auto invertible = [&](const SMat& f) {
        std::vector<SVec> rows(f.cols());
        for (int j = 0; j < f.cols(); ++j)
            for (const auto& [i, c] : f.col[j].e) rows[i].e.emplace_back(j, c);
        for (auto& r : rows)
            std::sort(r.e.begin(), r.e.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return rowReduce(rows, ElimMode::Serial) == f.cols();
    };
    for (const SMat& f : H.maps)
        if (invertible(f)) return true;
    for (int i = 0; i < H.dim; ++i)
        for (int j = i + 1; j < H.dim; ++j) {
            if (invertible(H.maps[i].plus(H.maps[j]))) return true;
            if (invertible(H.maps[i].plus(H.maps[j].scaled(Rat(-1))))) return true;
        }
    return false;
}

std::string moduleToJson(const ExplicitModule& M) {
    nlohmann::ordered_json j;
    j["window"] = {{"lo", M.window.lo}, {"hi", M.window.hi}};
    j["certified"] = M.certified;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& l : M.basis) {
        nlohmann::ordered_json b;
        b["weight"] = l.weight.c;
        b["grade"] = l.grade;
        j["basis"].push_back(b);
    }
    auto dumpAct = [&](const std::vector<SMat>& act) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (size_t z = 0; z < act.size(); ++z) {
            nlohmann::ordered_json entries = nlohmann::ordered_json::array();
            for (int c = 0; c < act[z].cols(); ++c)
                for (const auto& [r, v] : act[z].col[c].e)
                    entries.push_back({r, c, v.get_num().get_str(), v.get_den().get_str()});
            arr.push_back(entries);
        }
        return arr;
    };
    j["act0"] = dumpAct(M.act0);
    j["act1"] = dumpAct(M.act1);
    return j.dump();
}

ExplicitModule moduleFromJson(const RootSystem& rs, const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ExplicitModule M;
    M.rs = &rs;
    M.window = {j.at("window").at("lo").get<int>(), j.at("window").at("hi").get<int>()};
    M.certified = j.at("certified").get<bool>();
    for (const auto& b : j.at("basis"))
        M.basis.push_back(Label{Weight(b.at("weight").get<std::vector<int>>()), b.at("grade").get<int>()});
    int D = M.dim();
    auto loadAct = [&](const nlohmann::json& arr) {
        std::vector<SMat> act(arr.size(), SMat::zero(D, D));
        for (size_t z = 0; z < arr.size(); ++z) {
            for (const auto& e : arr[z]) {
                int r = e[0].get<int>(), c = e[1].get<int>();
                Rat v(Int(e[2].get<std::string>()), Int(e[3].get<std::string>()));
                v.canonicalize();
                act[z].col[c].e.emplace_back(r, v);
            }
            for (auto& col : act[z].col)
                std::sort(col.e.begin(), col.e.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        return act;
    };
    M.act0 = loadAct(j.at("act0"));
    M.act1 = loadAct(j.at("act1"));
    return M;
}

} // namespace truncat
