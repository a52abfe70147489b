#include "truncat/orders.hpp"

#include <algorithm>
#include <sstream>

namespace truncat {

bool lexLeq(const RootSystem& rs, const LamPoint& p, const LamPoint& q) {
    if (p.weight == q.weight) return p.grade <= q.grade;
    return rs.dominanceLeq(p.weight, q.weight) && !(p.weight == q.weight);
}

bool coveringLeq(const RootSystem& rs, const LamPoint& p, const LamPoint& q) {
    if (!p.weight.isDominant() || !q.weight.isDominant())
        throw DomainError("coveringLeq: points of Λ must have dominant weights");
    int k = q.grade - p.grade;
    if (k < 0) return false;
    if (k > 512) throw DomainError("coveringLeq: grade gap too large for the layer search");
    std::set<Weight> layer = {p.weight};
    for (int step = 0; step < k; ++step) {
        std::set<Weight> next;
        for (const Weight& w : layer) {
            next.insert(w); // 0 ∈ R∪{0}
            for (int a = 0; a < rs.nPos; ++a) {
                next.insert(w + rs.posRoot[a]);
                next.insert(w - rs.posRoot[a]);
            }
        }
        layer = std::move(next);
    }
    return layer.count(q.weight) > 0;
}

PsiFace adjointFace(const RootSystem& rs, const std::set<Weight>& psi) {
    PsiFace f;
    f.ambient = rs.adjointWeightMap();
    for (const Weight& w : psi)
        if (!f.ambient.count(w)) throw DomainError("psi subset escapes the ambient weights");
    f.psi = psi;
    return f;
}

int defaultPsiRadius(const PsiFace& face) {
    int maxCoord = 1;
    int rank = 1;
    for (const auto& [w, m] : face.ambient) {
        rank = w.rank();
        for (int c : w.c) maxCoord = std::max(maxCoord, std::abs(c));
    }
    // coefficient-sum bound from the coordinate box the ambient weights span
    return std::min(8, 2 * maxCoord * rank + 2);
}

namespace {

// achievable coefficient sums per reachable lattice vector, with a flag for
// whether some decomposition of that (vector, sum) uses a weight outside Ψ
void enumerateCombos(const std::vector<Weight>& gens, const std::set<Weight>& inside, int radius,
                     std::map<Weight, std::map<long, bool>>& sums) {
    if (gens.empty()) return;
    int rank = gens[0].rank();
    std::function<void(size_t, int, Weight, long, bool)> rec = [&](size_t i, int left, Weight acc,
                                                                   long total, bool outside) {
        auto& slot = sums[acc];
        auto it = slot.find(total);
        if (it == slot.end())
            slot[total] = outside;
        else
            it->second = it->second || outside;
        if (left == 0) return;
        for (size_t j = i; j < gens.size(); ++j)
            rec(j, left - 1, acc + gens[j], total + 1, outside || !inside.count(gens[j]));
    };
    rec(0, radius, Weight::zero(rank), 0, false);
}

} // namespace

FaceCheckResult psiFaceCheck(const PsiFace& face, int radius) {
    FaceCheckResult res;
    res.radius = radius > 0 ? radius : defaultPsiRadius(face);
    if (face.psi.empty()) return res; // vacuously a face

    std::vector<Weight> psiGens(face.psi.begin(), face.psi.end());
    std::vector<Weight> ambGens;
    for (const auto& [w, m] : face.ambient) ambGens.push_back(w);

    std::map<Weight, std::map<long, bool>> psiSums, ambSums;
    enumerateCombos(psiGens, face.psi, res.radius, psiSums);
    enumerateCombos(ambGens, face.psi, res.radius, ambSums);

    for (const auto& [x, mSums] : psiSums) {
        auto it = ambSums.find(x);
        if (it == ambSums.end()) continue;
        long minN = it->second.begin()->first;
        long maxM = mSums.rbegin()->first;
        // condition 1: Σm_ν ≤ Σn_μ whenever the sum vectors agree
        if (maxM > minN) {
            std::ostringstream os;
            os << "sum " << maxM << " over the face exceeds sum " << minN << " at "
               << weightStr(x);
            res.ok = false;
            res.witness = os.str();
            return res;
        }
        // condition 2: equal sums force the support inside Ψ
        for (const auto& [s, dummy] : mSums) {
            (void)dummy;
            if (s == 0) continue;
            auto nt = it->second.find(s);
            if (nt != it->second.end() && nt->second) {
                std::ostringstream os;
                os << "equal sums " << s << " at " << weightStr(x)
                   << " with support outside the face";
                res.ok = false;
                res.witness = os.str();
                return res;
            }
        }
    }
    return res;
}

long psiDistance(const Weight& mu, const Weight& lambda, const PsiFace& face, int radius) {
    int cap = radius > 0 ? radius : defaultPsiRadius(face);
    Weight target = lambda - mu;
    // breadth-first over the lattice, subtracting elements of Ψ
    std::set<Weight> seen = {target};
    std::vector<Weight> frontier = {target};
    int rank = target.rank();
    Weight zero = Weight::zero(rank);
    if (target == zero) return 0;
    for (int level = 1; level <= cap; ++level) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (const Weight& nu : face.psi) {
                Weight x = w - nu;
                if (x == zero) return level;
                if (seen.insert(x).second) next.push_back(x);
            }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return kPsiInfinite;
}

bool psiLeq(const LamPoint& p, const LamPoint& q, const PsiFace& face, int radius) {
    int gap = q.grade - p.grade;
    if (gap < 0) return false;
    long d = psiDistance(p.weight, q.weight, face, radius);
    return d != kPsiInfinite && d == gap;
}

} // namespace truncat
