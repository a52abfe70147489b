#include "truncat/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace truncat {

std::optional<AlgebraType> parseAlgebraType(const std::string& s) {
    if (s == "A1") return AlgebraType::A1;
    if (s == "A2") return AlgebraType::A2;
    if (s == "A3") return AlgebraType::A3;
    if (s == "C2") return AlgebraType::C2;
    return std::nullopt;
}

std::string algebraTypeName(AlgebraType t) {
    switch (t) {
        case AlgebraType::A1: return "A1";
        case AlgebraType::A2: return "A2";
        case AlgebraType::A3: return "A3";
        case AlgebraType::C2: return "C2";
    }
    return "?";
}

CartanDatum CartanDatum::of(AlgebraType t) {
    CartanDatum d;
    d.type = t;
    switch (t) {
        case AlgebraType::A1:
            d.rank = 1;
            d.cartan = {{2}};
            break;
        case AlgebraType::A2:
            d.rank = 2;
            d.cartan = {{2, -1}, {-1, 2}};
            break;
        case AlgebraType::A3:
            d.rank = 3;
            d.cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
            break;
        case AlgebraType::C2:
            // α₁ short, α₂ long: cartan[i][j] = <α_j, α_i^vee>
            d.rank = 2;
            d.cartan = {{2, -2}, {-1, 2}};
            break;
    }
    return d;
}

namespace {

int heightOfCoords(const std::vector<int>& rc) {
    return std::accumulate(rc.begin(), rc.end(), 0);
}

// dense elementary matrix helpers for the defining representation
SMat unitMat(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
    SMat m = SMat::zero(n, n);
    for (auto [r, c, v] : entries) m.col[c].e.emplace_back(r, Rat(v));
    for (auto& col : m.col)
        std::sort(col.e.begin(), col.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

std::vector<std::vector<Rat>> invertMatrix(const std::vector<std::vector<int>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<SVec> rows(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (a[i][j] != 0) rows[i].e.emplace_back(j, Rat(a[i][j]));
        rows[i].e.emplace_back(n + i, Rat(1));
    }
    rowReduce(rows, ElimMode::Serial);
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& r : rows) {
        int p = r.lead();
        if (p >= n) throw std::logic_error("cartan matrix singular");
        for (const auto& [j, c] : r.e)
            if (j >= n) inv[p][j - n] = c;
    }
    return inv;
}

} // namespace

const RootSystem& RootSystem::get(AlgebraType type) {
    static std::mutex mu;
    static std::map<AlgebraType, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(type);
    if (it == cache.end())
        it = cache.emplace(type, std::unique_ptr<RootSystem>(new RootSystem(CartanDatum::of(type)))).first;
    return *it->second;
}

const RootSystem& RootSystem::get(const CartanDatum& datum) {
    const CartanDatum ref = CartanDatum::of(datum.type);
    if (datum.rank != ref.rank || datum.cartan != ref.cartan)
        throw DomainError("unsupported Cartan datum for type " + algebraTypeName(datum.type));
    return get(datum.type);
}

RootSystem::RootSystem(const CartanDatum& d) : datum(d), rank(d.rank) {
    buildRoots();
    buildForms();
    buildDefiningRep();
    buildBracketTable();
}

void RootSystem::buildRoots() {
    // grow positive roots height by height using root strings
    std::set<std::vector<int>> roots;
    std::vector<std::vector<std::vector<int>>> byHeight;
    byHeight.emplace_back(); // height 0 unused
    byHeight.emplace_back();
    for (int i = 0; i < rank; ++i) {
        std::vector<int> rc(rank, 0);
        rc[i] = 1;
        roots.insert(rc);
        byHeight[1].push_back(rc);
    }
    for (int h = 1; !byHeight[h].empty(); ++h) {
        byHeight.emplace_back();
        for (const auto& beta : byHeight[h]) {
            for (int i = 0; i < rank; ++i) {
                // p = max{k : beta - k*alpha_i is a root}
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (heightOfCoords(down) <= 0 || !roots.count(down)) break;
                    ++p;
                }
                // fw coordinate of beta at i: (A * beta)_i
                int pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += datum.cartan[i][j] * beta[j];
                if (p - pairing >= 1) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) byHeight[h + 1].push_back(up);
                }
            }
        }
        if (h + 1 >= static_cast<int>(byHeight.size())) break;
    }
    posRootCoords.assign(roots.begin(), roots.end());
    std::sort(posRootCoords.begin(), posRootCoords.end(), [](const auto& a, const auto& b) {
        int ha = heightOfCoords(a), hb = heightOfCoords(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    nPos = static_cast<int>(posRootCoords.size());
    dimG = 2 * nPos + rank;

    posRoot.reserve(nPos);
    simpleIdx_.assign(rank, -1);
    for (int a = 0; a < nPos; ++a) {
        Weight fw = Weight::zero(rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) fw.c[i] += datum.cartan[i][j] * posRootCoords[a][j];
        posRoot.push_back(fw);
        if (heightOfCoords(posRootCoords[a]) == 1) {
            for (int i = 0; i < rank; ++i)
                if (posRootCoords[a][i] == 1) simpleIdx_[i] = a;
        }
    }
    highestRoot = posRoot[nPos - 1];

    basisShift_.resize(dimG);
    for (int a = 0; a < nPos; ++a) {
        basisShift_[idxXPlus(a)] = posRoot[a];
        basisShift_[idxXMinus(a)] = -posRoot[a];
    }
    for (int i = 0; i < rank; ++i) basisShift_[idxH(i)] = Weight::zero(rank);
}

void RootSystem::buildForms() {
    // symmetrizers: d_i * cartan[i][j] symmetric, short roots at d = 1
    std::vector<Rat> d(rank, Rat(0));
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (datum.cartan[i][j] == 0) continue;
                if (!isZero(d[i]) && isZero(d[j])) {
                    d[j] = d[i] * datum.cartan[i][j] / datum.cartan[j][i];
                    changed = true;
                }
            }
    }
    Rat dmin = d[0];
    for (const Rat& x : d) dmin = std::min(dmin, x);
    for (Rat& x : d) x /= dmin;
    dSym_ = d;

    cartanInv_ = invertMatrix(datum.cartan);
    fwGram_.assign(rank, std::vector<Rat>(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) fwGram_[i][j] = dSym_[i] * cartanInv_[i][j];
}

void RootSystem::buildDefiningRep() {
    std::vector<SMat> e(rank), f(rank), h(rank);
    switch (datum.type) {
        case AlgebraType::A1:
        case AlgebraType::A2:
        case AlgebraType::A3: {
            defDim = rank + 1;
            for (int i = 0; i < rank; ++i) {
                e[i] = unitMat(defDim, {{i, i + 1, 1}});
                f[i] = unitMat(defDim, {{i + 1, i, 1}});
                h[i] = unitMat(defDim, {{i, i, 1}, {i + 1, i + 1, -1}});
            }
            break;
        }
        case AlgebraType::C2: {
            defDim = 4;
            e[0] = unitMat(4, {{0, 1, 1}, {2, 3, -1}});
            f[0] = unitMat(4, {{1, 0, 1}, {3, 2, -1}});
            h[0] = unitMat(4, {{0, 0, 1}, {1, 1, -1}, {2, 2, 1}, {3, 3, -1}});
            e[1] = unitMat(4, {{1, 2, 1}});
            f[1] = unitMat(4, {{2, 1, 1}});
            h[1] = unitMat(4, {{1, 1, 1}, {2, 2, -1}});
            break;
        }
    }

    defRep.assign(dimG, SMat());
    for (int i = 0; i < rank; ++i) {
        defRep[idxXPlus(simpleIdx_[i])] = e[i];
        defRep[idxXMinus(simpleIdx_[i])] = f[i];
        defRep[idxH(i)] = h[i];
    }

    // coroot of a positive root γ = Σ k_j α_j: h_γ = Σ k_j (d_j / d_γ) h_j
    auto corootMat = [&](int a) {
        Rat dGamma = inner(posRoot[a], posRoot[a]) / 2;
        SMat m = SMat::zero(defDim, defDim);
        for (int j = 0; j < rank; ++j) {
            Rat coef = Rat(posRootCoords[a][j]) * dSym_[j] / dGamma;
            if (!isZero(coef)) m = m.plus(defRep[idxH(j)].scaled(coef));
        }
        return m;
    };

    // extraspecial construction for non-simple root vectors, heights ascending
    for (int a = 0; a < nPos; ++a) {
        if (heightOfCoords(posRootCoords[a]) == 1) continue;
        int i = -1, bIdx = -1;
        for (int s = 0; s < rank && i < 0; ++s) {
            std::vector<int> rest = posRootCoords[a];
            rest[s] -= 1;
            for (int b = 0; b < nPos; ++b)
                if (posRootCoords[b] == rest) {
                    i = s;
                    bIdx = b;
                    break;
                }
        }
        if (i < 0) throw std::logic_error("no simple summand for root");
        // p = max{k : beta - k*alpha_i in R}, beta = gamma - alpha_i
        int p = 0;
        {
            std::vector<int> down = posRootCoords[bIdx];
            auto isRoot = [&](const std::vector<int>& rc) {
                for (const auto& r : posRootCoords)
                    if (r == rc) return true;
                std::vector<int> neg = rc;
                for (int& x : neg) x = -x;
                for (const auto& r : posRootCoords)
                    if (r == neg) return true;
                return false;
            };
            while (true) {
                down[i] -= 1;
                bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
                if (zero || !isRoot(down)) break;
                ++p;
            }
        }
        int ai = simpleIdx_[i];
        SMat plus = smCommutator(defRep[idxXPlus(ai)], defRep[idxXPlus(bIdx)]).scaled(Rat(1, p + 1));
        defRep[idxXPlus(a)] = plus;
        // normalize the negative vector so that [x_γ, x_{-γ}] = h_γ
        SMat cand = smCommutator(defRep[idxXMinus(ai)], defRep[idxXMinus(bIdx)]);
        SMat hGamma = corootMat(a);
        SMat br = smCommutator(plus, cand);
        Rat t(0);
        for (int c = 0; c < defDim && isZero(t); ++c)
            for (const auto& [r, v] : hGamma.col[c].e) {
                Rat num = br.entry(r, c);
                if (!isZero(v)) {
                    t = num / v;
                    break;
                }
            }
        if (isZero(t)) throw std::logic_error("degenerate coroot normalization");
        SMat minus = cand.scaled(1 / t);
        if (!(smCommutator(plus, minus) == hGamma))
            throw std::logic_error("coroot normalization failed");
        defRep[idxXMinus(a)] = minus;
    }

    // integrality of the extracted basis matrices
    for (const SMat& m : defRep)
        for (const SVec& c : m.col)
            for (const auto& [r, v] : c.e)
                if (!isInteger(v)) throw std::logic_error("non-integral Chevalley matrix");

    defWeight.resize(defDim);
    for (int v = 0; v < defDim; ++v) {
        Weight w = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) {
            Rat x = defRep[idxH(i)].entry(v, v);
            w.c[i] = static_cast<int>(toLong(x));
        }
        defWeight[v] = w;
    }
}

void RootSystem::buildBracketTable() {
    // flatten matrices to vectors over r*defDim+c and express commutators
    Echelon ech(true);
    auto flat = [&](const SMat& m) {
        SVec v;
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& [r, x] : m.col[c].e) v.e.emplace_back(r * defDim + c, x);
        std::sort(v.e.begin(), v.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };
    for (int a = 0; a < dimG; ++a)
        if (!ech.insert(flat(defRep[a]))) throw std::logic_error("defining rep not faithful");

    bracketTab.assign(dimG, std::vector<std::vector<std::pair<int, long>>>(dimG));
    for (int a = 0; a < dimG; ++a)
        for (int b = 0; b < dimG; ++b) {
            if (a == b) continue;
            SMat br = smCommutator(defRep[a], defRep[b]);
            auto combo = ech.expressRaw(flat(br));
            if (!combo) throw std::logic_error("bracket escapes basis span");
            std::vector<std::pair<int, long>> out;
            for (const auto& [idx, c] : combo->e) out.emplace_back(idx, toLong(c));
            bracketTab[a][b] = std::move(out);
        }
}

std::string RootSystem::basisName(int idx) const {
    std::ostringstream os;
    if (idx < nPos)
        os << "x+[" << weightStr(posRoot[idx]) << "]";
    else if (idx < 2 * nPos)
        os << "x-[" << weightStr(posRoot[idx - nPos]) << "]";
    else
        os << "h" << (idx - 2 * nPos + 1);
    return os.str();
}

long RootSystem::structureConstant(int aPos, int bPos) const {
    Weight sum = posRoot[aPos] + posRoot[bPos];
    for (int c = 0; c < nPos; ++c)
        if (posRoot[c] == sum) {
            for (const auto& [idx, v] : bracketTab[idxXPlus(aPos)][idxXPlus(bPos)])
                if (idx == idxXPlus(c)) return v;
            return 0;
        }
    return 0;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (a.c[i] != 0 && b.c[j] != 0) s += Rat(a.c[i]) * fwGram_[i][j] * Rat(b.c[j]);
    return s;
}

std::vector<Rat> RootSystem::rootCoordsOf(const Weight& w) const {
    std::vector<Rat> x(rank, Rat(0));
    for (int k = 0; k < rank; ++k)
        for (int i = 0; i < rank; ++i)
            if (w.c[i] != 0) x[k] += cartanInv_[k][i] * Rat(w.c[i]);
    // cartanInv is A^{-1} with (A x)_i = c_i; x = A^{-1} c uses columns indexed by i
    return x;
}

Rat RootSystem::heightOf(const Weight& w) const {
    Rat s(0);
    for (const Rat& x : rootCoordsOf(w)) s += x;
    return s;
}

Weight RootSystem::fundamental(int i) const {
    Weight w = Weight::zero(rank);
    w.c[i] = 1;
    return w;
}

Weight RootSystem::rho() const {
    Weight w = Weight::zero(rank);
    for (int& x : w.c) x = 1;
    return w;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    Weight r = w;
    int ci = w.c[i];
    const Weight& alpha = posRoot[simpleIdx_[i]];
    for (int j = 0; j < rank; ++j) r.c[j] -= ci * alpha.c[j];
    return r;
}

Weight RootSystem::dominantRep(const Weight& w) const {
    Weight cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i)
            if (cur.c[i] < 0) {
                cur = reflect(cur, i);
                moved = true;
            }
    }
    return cur;
}

Weight RootSystem::minusW0(const Weight& lambda) const { return dominantRep(-lambda); }

std::vector<Weight> RootSystem::weylOrbit(const Weight& w) const {
    std::set<Weight> seen;
    std::vector<Weight> todo = {dominantRep(w)};
    seen.insert(todo[0]);
    while (!todo.empty()) {
        Weight cur = todo.back();
        todo.pop_back();
        for (int i = 0; i < rank; ++i) {
            Weight nxt = reflect(cur, i);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

bool RootSystem::dominanceLeq(const Weight& mu, const Weight& lambda) const {
    std::vector<Rat> x = rootCoordsOf(lambda - mu);
    for (const Rat& v : x)
        if (!isInteger(v) || sgn(v) < 0) return false;
    return true;
}

bool RootSystem::hullMembership(const Weight& mu, const Weight& lambda) const {
    if (!lambda.isDominant()) throw DomainError("hullMembership: lambda must be dominant");
    // dominant orbit representative below lambda, and the same root-lattice coset
    std::vector<Rat> coset = rootCoordsOf(lambda - mu);
    for (const Rat& v : coset)
        if (!isInteger(v)) return false;
    return dominanceLeq(dominantRep(mu), lambda);
}

const std::map<Weight, long>& RootSystem::weylCharacter(const Weight& lambda) const {
    if (!lambda.isDominant()) throw DomainError("weylCharacter: weight not dominant");
    {
        std::lock_guard<std::mutex> lk(cacheMu_);
        auto it = weylCharCache_.find(lambda);
        if (it != weylCharCache_.end()) return it->second;
    }

    // dominant candidates: lambda - Q+ box bounded by lambda - w0(lambda)
    std::vector<Rat> box = rootCoordsOf(lambda - (-minusW0(lambda)));
    std::vector<int> bound(rank);
    for (int i = 0; i < rank; ++i) bound[i] = static_cast<int>(toLong(box[i]));
    std::vector<Weight> dominants;
    std::vector<int> x(rank, 0);
    const Weight rhoW = rho();
    std::function<void(int)> rec = [&](int i) {
        if (i == rank) {
            Weight mu = lambda;
            for (int j = 0; j < rank; ++j)
                for (int k = 0; k < rank; ++k) mu.c[k] -= x[j] * posRoot[simpleIdx_[j]].c[k];
            if (mu.isDominant()) dominants.push_back(mu);
            return;
        }
        for (x[i] = 0; x[i] <= bound[i]; ++x[i]) rec(i + 1);
        x[i] = 0;
    };
    rec(0);
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        Rat ha = heightOf(lambda - a), hb = heightOf(lambda - b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::map<Weight, long> mult; // over all weights, filled orbit by orbit
    Rat nLam = inner(lambda + rhoW, lambda + rhoW);
    for (const Weight& mu : dominants) {
        if (mu == lambda) {
            for (const Weight& w : weylOrbit(mu)) mult[w] = 1;
            continue;
        }
        Rat denom = nLam - inner(mu + rhoW, mu + rhoW);
        Rat acc(0);
        for (int a = 0; a < nPos; ++a) {
            for (int k = 1;; ++k) {
                Weight nu = mu + k * posRoot[a];
                auto it = mult.find(nu);
                if (it == mult.end()) break;
                acc += Rat(2) * Rat(it->second) * inner(nu, posRoot[a]);
            }
        }
        Rat m = acc / denom;
        long mv = toLong(m); // exactness asserted, never rounded
        if (mv > 0)
            for (const Weight& w : weylOrbit(mu)) mult[w] = mv;
    }
    std::lock_guard<std::mutex> lk(cacheMu_);
    return weylCharCache_.emplace(lambda, std::move(mult)).first->second;
}

long RootSystem::weylDim(const Weight& lambda) const {
    if (!lambda.isDominant()) throw DomainError("weylDim: weight not dominant");
    Rat num(1), den(1);
    const Weight rhoW = rho();
    for (int a = 0; a < nPos; ++a) {
        num *= inner(lambda + rhoW, posRoot[a]);
        den *= inner(rhoW, posRoot[a]);
    }
    return toLong(num / den);
}

std::map<Weight, long> RootSystem::adjointWeightMap() const {
    std::map<Weight, long> m;
    for (int a = 0; a < nPos; ++a) {
        m[posRoot[a]] = 1;
        m[-posRoot[a]] = 1;
    }
    m[Weight::zero(rank)] = rank;
    return m;
}

std::map<Weight, long> RootSystem::weightMapProduct(const std::map<Weight, long>& a,
                                                    const std::map<Weight, long>& b) {
    std::map<Weight, long> r;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) r[wa + wb] += ma * mb;
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::map<Weight, long> RootSystem::decomposeWeightMap(std::map<Weight, long> ch) const {
    std::map<Weight, long> out;
    while (!ch.empty()) {
        // maximal-height weight is dominant for W-invariant module characters
        auto best = ch.begin();
        Rat bestH = heightOf(best->first);
        for (auto it = std::next(ch.begin()); it != ch.end(); ++it) {
            Rat h = heightOf(it->first);
            if (h > bestH || (h == bestH && it->first > best->first)) {
                best = it;
                bestH = h;
            }
        }
        Weight top = best->first;
        long m = best->second;
        if (!top.isDominant() || m < 0)
            throw DomainError("decomposeWeightMap: not a module character at " + weightStr(top));
        out[top] += m;
        for (const auto& [w, mw] : weylCharacter(top)) {
            long& v = ch[w];
            v -= m * mw;
            if (v == 0) ch.erase(w);
        }
    }
    return out;
}

long RootSystem::homToAdjointTensor(const Weight& lambda, const Weight& mu) const {
    if (!lambda.isDominant() || !mu.isDominant())
        throw DomainError("homToAdjointTensor: weights must be dominant");
    auto prod = weightMapProduct(adjointWeightMap(),
                                 weylCharacter(mu));
    auto dec = decomposeWeightMap(std::move(prod));
    auto it = dec.find(lambda);
    return it == dec.end() ? 0 : it->second;
}

std::vector<Weight> RootSystem::enumerateDominant(int count) const {
    std::vector<Weight> out;
    int bound = 1;
    while (static_cast<int>(out.size()) < count) {
        out.clear();
        // all dominant weights with height <= bound
        std::vector<int> cap(rank);
        for (int i = 0; i < rank; ++i) {
            Rat h = heightOf(fundamental(i));
            int c = 0;
            while (Rat(c + 1) * h <= Rat(bound)) ++c;
            cap[i] = c;
        }
        std::vector<int> cur(rank, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == rank) {
                Weight w(cur);
                if (heightOf(w) <= Rat(bound)) out.push_back(w);
                return;
            }
            for (cur[i] = 0; cur[i] <= cap[i]; ++cur[i]) rec(i + 1);
            cur[i] = 0;
        };
        rec(0);
        std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
            Rat ha = heightOf(a), hb = heightOf(b);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        bound *= 2;
    }
    out.resize(count);
    return out;
}

int RootSystem::dominantIndex(const Weight& lambda) const {
    if (!lambda.isDominant()) throw DomainError("dominantIndex: weight not dominant");
    int count = 8;
    while (true) {
        auto seq = enumerateDominant(count);
        for (int i = 0; i < count; ++i)
            if (seq[i] == lambda) return i;
        count *= 2;
        if (count > (1 << 20)) throw std::logic_error("dominantIndex: runaway enumeration");
    }
}

bool jacobiHolds(const RootSystem& rs, std::string* firstFailure) {
    auto bracket = [&](const SVec& u, int bIdx) {
        // [Σ u_a z_a, z_b] as coefficient vector over the basis
        SVec out;
        for (const auto& [a, c] : u.e)
            for (const auto& [t, v] : rs.bracketTab[a][bIdx]) {
                SVec term = SVec::unit(t);
                svAxpy(out, c * Rat(v), term);
            }
        return out;
    };
    for (int a = 0; a < rs.dimG; ++a)
        for (int b = 0; b < rs.dimG; ++b)
            for (int c = 0; c < rs.dimG; ++c) {
                SVec ab, bc, ca;
                for (const auto& [t, v] : rs.bracketTab[a][b]) svAxpy(ab, Rat(v), SVec::unit(t));
                for (const auto& [t, v] : rs.bracketTab[b][c]) svAxpy(bc, Rat(v), SVec::unit(t));
                for (const auto& [t, v] : rs.bracketTab[c][a]) svAxpy(ca, Rat(v), SVec::unit(t));
                SVec total = bracket(ab, c);
                svAxpy(total, Rat(1), bracket(bc, a));
                svAxpy(total, Rat(1), bracket(ca, b));
                if (!total.isZero()) {
                    if (firstFailure) {
                        *firstFailure = "[[" + rs.basisName(a) + "," + rs.basisName(b) + "]," +
                                        rs.basisName(c) + "] + cyc != 0";
                    }
                    return false;
                }
            }
    return true;
}

} // namespace truncat
