#include "truncat/gmodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace truncat {

namespace {

// Tensor-power ambient: index = Σ pos_k * defDim^k over factor positions.
struct Ambient {
    const RootSystem* rs;
    int factors;
    long dim;

    SVec applyBasisElt(int z, const SVec& v) const {
        const SMat& m = rs->defRep[z];
        SVec out;
        int d = rs->defDim;
        for (const auto& [idx, c] : v.e) {
            long stride = 1;
            for (int f = 0; f < factors; ++f) {
                int pos = static_cast<int>((idx / stride) % d);
                for (const auto& [row, mc] : m.col[pos].e) {
                    long target = idx + stride * (row - pos);
                    svAxpy(out, c * mc, SVec::unit(static_cast<int>(target)));
                }
                stride *= d;
            }
        }
        return out;
    }
};

// antisymmetrized v_0 ∧ ... ∧ v_{k-1} inside k tensor factors starting at `at`
SVec wedgeTop(const RootSystem& rs, int k, int at) {
    int d = rs.defDim;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    SVec out;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        long idx = 0;
        long stride = 1;
        for (int f = 0; f < at; ++f) stride *= d;
        for (int i = 0; i < k; ++i) {
            idx += stride * perm[i];
            stride *= d;
        }
        svAxpy(out, Rat(inv % 2 == 0 ? 1 : -1), SVec::unit(static_cast<int>(idx)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

GModule buildSimple(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.isDominant()) throw DomainError("simpleGModule: weight not dominant");
    GModule M;
    M.rs = &rs;
    if (lambda.isZero()) {
        M.dim = 1;
        M.weight = {lambda};
        M.act.assign(rs.dimG, SMat::zero(1, 1));
        M.loweringWord = {{}};
        return M;
    }

    // one block of k tensor factors per unit of the k-th fundamental coordinate
    int factors = 0;
    for (int i = 0; i < rs.rank; ++i) factors += lambda.c[i] * (i + 1);
    Ambient amb{&rs, factors, 1};
    for (int f = 0; f < factors; ++f) amb.dim *= rs.defDim;
    if (amb.dim > (1L << 26)) throw DomainError("simpleGModule: weight too large for desk scale");

    // highest weight vector: product of wedge tops over disjoint factor blocks
    SVec top;
    {
        std::vector<SVec> parts;
        int at = 0;
        for (int i = 0; i < rs.rank; ++i)
            for (int c = 0; c < lambda.c[i]; ++c) {
                parts.push_back(wedgeTop(rs, i + 1, at));
                at += i + 1;
            }
        top = parts[0];
        for (size_t p = 1; p < parts.size(); ++p) {
            SVec next;
            for (const auto& [ia, ca] : top.e)
                for (const auto& [ib, cb] : parts[p].e) {
                    // disjoint blocks: mixed-radix indices add
                    long idx = static_cast<long>(ia) + static_cast<long>(ib);
                    svAxpy(next, ca * cb, SVec::unit(static_cast<int>(idx)));
                }
            top = next;
        }
    }

    // cyclic closure under the simple lowering operators; each accepted vector
    // is the raw image of its parent, so its word from the top is exact
    std::vector<SVec> basisVecs = {top};
    std::vector<Weight> weights = {lambda};
    std::vector<std::vector<int>> words = {{}};
    Echelon span(false);
    span.insert(top);
    std::vector<int> simpleMinus(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        for (int a = 0; a < rs.nPos; ++a)
            if (rs.posRoot[a] == rs.simpleRootFw(i)) simpleMinus[i] = rs.idxXMinus(a);
    for (size_t cur = 0; cur < basisVecs.size(); ++cur) {
        for (int i = 0; i < rs.rank; ++i) {
            SVec img = amb.applyBasisElt(simpleMinus[i], basisVecs[cur]);
            if (img.isZero()) continue;
            if (span.insert(img)) {
                basisVecs.push_back(img);
                weights.push_back(weights[cur] - rs.simpleRootFw(i));
                std::vector<int> w = words[cur];
                w.push_back(simpleMinus[i]);
                words.push_back(std::move(w));
            }
        }
    }

    M.dim = static_cast<int>(basisVecs.size());
    M.weight = std::move(weights);
    M.loweringWord = std::move(words);

    // coordinates of arbitrary ambient vectors over the chosen basis
    Echelon coords(true);
    for (const SVec& v : basisVecs) coords.insert(v);
    M.act.assign(rs.dimG, SMat::zero(M.dim, M.dim));
    for (int z = 0; z < rs.dimG; ++z) {
        for (int j = 0; j < M.dim; ++j) {
            SVec img = amb.applyBasisElt(z, basisVecs[j]);
            auto c = coords.expressRaw(img);
            if (!c) throw std::logic_error("simpleGModule: action escapes cyclic span");
            M.act[z].col[j] = *c;
        }
    }

    long expect = rs.weylDim(lambda);
    if (expect != M.dim) throw std::logic_error("simpleGModule: dimension mismatch vs Weyl formula");
    return M;
}

} // namespace

const GModule& simpleGModule(const RootSystem& rs, const Weight& lambda) {
    static std::mutex mu;
    static std::map<std::pair<AlgebraType, Weight>, std::unique_ptr<GModule>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(rs.datum.type, lambda);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<GModule>(buildSimple(rs, lambda))).first;
    return *it->second;
}

} // namespace truncat
