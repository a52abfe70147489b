#include "truncat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace truncat {

const Rat* SVec::at(int idx) const {
    auto it = std::lower_bound(e.begin(), e.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != e.end() && it->first == idx) return &it->second;
    return nullptr;
}

SVec svAdd(const SVec& a, const SVec& b) {
    SVec r;
    r.e.reserve(a.e.size() + b.e.size());
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first < b.e[j].first)
            r.e.push_back(a.e[i++]);
        else if (a.e[i].first > b.e[j].first)
            r.e.push_back(b.e[j++]);
        else {
            Rat s = a.e[i].second + b.e[j].second;
            if (!isZero(s)) r.e.emplace_back(a.e[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.e.size(); ++i) r.e.push_back(a.e[i]);
    for (; j < b.e.size(); ++j) r.e.push_back(b.e[j]);
    return r;
}

SVec svScale(const SVec& a, const Rat& c) {
    SVec r;
    if (isZero(c)) return r;
    r.e.reserve(a.e.size());
    for (const auto& [i, x] : a.e) r.e.emplace_back(i, x * c);
    return r;
}

void svAxpy(SVec& dst, const Rat& c, const SVec& src) {
    if (isZero(c) || src.e.empty()) return;
    dst = svAdd(dst, svScale(src, c));
}

SVec svShiftIndices(const SVec& a, int offset) {
    SVec r = a;
    for (auto& [i, x] : r.e) i += offset;
    return r;
}

SMat SMat::identity(int n) {
    SMat m = zero(n, n);
    for (int i = 0; i < n; ++i) m.col[i] = SVec::unit(i);
    return m;
}

SVec SMat::apply(const SVec& v) const {
    SVec r;
    for (const auto& [j, c] : v.e) svAxpy(r, c, col[j]);
    return r;
}

SMat SMat::compose(const SMat& rhs) const {
    SMat r = zero(rows, rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) r.col[j] = apply(rhs.col[j]);
    return r;
}

SMat SMat::scaled(const Rat& c) const {
    SMat r = zero(rows, cols());
    for (int j = 0; j < cols(); ++j) r.col[j] = svScale(col[j], c);
    return r;
}

SMat SMat::plus(const SMat& rhs) const {
    SMat r = zero(rows, cols());
    for (int j = 0; j < cols(); ++j) r.col[j] = svAdd(col[j], rhs.col[j]);
    return r;
}

SMat SMat::negTranspose() const {
    SMat r = zero(cols(), rows);
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, c] : col[j].e) r.col[i].e.emplace_back(j, -c);
    // columns gathered in increasing row order already (j increasing per i? no):
    for (auto& cc : r.col)
        std::sort(cc.e.begin(), cc.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

Rat SMat::entry(int r, int c) const {
    const Rat* p = col[c].at(r);
    return p ? *p : Rat(0);
}

bool SMat::isZeroMat() const {
    for (const auto& c : col)
        if (!c.isZero()) return false;
    return true;
}

Rat SMat::traceOfProduct(const SMat& rhs) const {
    // tr(A·B) = Σ_j (A·B)_{jj} = Σ_j Σ_k A_{jk} B_{kj}
    Rat t(0);
    for (int j = 0; j < rhs.cols(); ++j)
        for (const auto& [k, c] : rhs.col[j].e) {
            const Rat* a = col[k].at(j);
            if (a) t += (*a) * c;
        }
    return t;
}

SMat smCommutator(const SMat& a, const SMat& b) {
    SMat ab = a.compose(b);
    SMat ba = b.compose(a).scaled(Rat(-1));
    return ab.plus(ba);
}

bool Echelon::insert(const SVec& v) {
    SVec cur = v;
    SVec curExpr;
    if (track_) curExpr = SVec::unit(static_cast<int>(expr_.size()));
    while (!cur.isZero()) {
        int lead = cur.lead();
        auto it = pivot_.find(lead);
        if (it == pivot_.end()) {
            Rat inv = 1 / cur.e.front().second;
            cur = svScale(cur, inv);
            if (track_) curExpr = svScale(curExpr, inv);
            // back-reduce existing rows against the new pivot
            for (size_t r = 0; r < rows_.size(); ++r) {
                const Rat* coef = rows_[r].at(lead);
                if (coef) {
                    Rat c = -(*coef);
                    svAxpy(rows_[r], c, cur);
                    if (track_) svAxpy(expr_[r], c, curExpr);
                }
            }
            pivot_[lead] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(cur));
            if (track_) expr_.push_back(std::move(curExpr));
            return true;
        }
        Rat c = -cur.e.front().second;
        svAxpy(cur, c, rows_[it->second]);
        if (track_) svAxpy(curExpr, c, expr_[it->second]);
    }
    return false;
}

SVec Echelon::reduce(const SVec& v) const {
    SVec cur = v;
    SVec done; // prefix with no pivot available, already fully reduced
    while (!cur.isZero()) {
        auto it = pivot_.find(cur.lead());
        if (it == pivot_.end()) {
            done.e.push_back(cur.e.front());
            cur.e.erase(cur.e.begin());
            continue;
        }
        svAxpy(cur, -cur.e.front().second, rows_[it->second]);
    }
    return done;
}

std::optional<SVec> Echelon::expressRaw(const SVec& v) const {
    if (!track_) throw std::logic_error("Echelon: expression tracking disabled");
    SVec cur = v;
    SVec comb;
    while (!cur.isZero()) {
        auto it = pivot_.find(cur.lead());
        if (it == pivot_.end()) return std::nullopt;
        Rat c = cur.e.front().second;
        svAxpy(cur, -c, rows_[it->second]);
        svAxpy(comb, c, expr_[it->second]);
    }
    return comb;
}

int rowReduce(std::vector<SVec>& rows, ElimMode mode) {
    int n = static_cast<int>(rows.size());
    int rank = 0;
    while (true) {
        // deterministic pivot: smallest leading column among rows >= rank,
        // first such row
        int bestRow = -1, bestCol = -1;
        for (int i = rank; i < n; ++i) {
            if (rows[i].isZero()) continue;
            int l = rows[i].lead();
            if (bestRow < 0 || l < bestCol) {
                bestRow = i;
                bestCol = l;
            }
        }
        if (bestRow < 0) break;
        std::swap(rows[rank], rows[bestRow]);
        rows[rank] = svScale(rows[rank], 1 / rows[rank].e.front().second);
        const SVec& pivotRow = rows[rank];
        if (mode == ElimMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
            for (int i = 0; i < n; ++i) {
                if (i == rank) continue;
                const Rat* c = rows[i].at(bestCol);
                if (c) svAxpy(rows[i], -(*c), pivotRow);
            }
        } else {
            for (int i = 0; i < n; ++i) {
                if (i == rank) continue;
                const Rat* c = rows[i].at(bestCol);
                if (c) svAxpy(rows[i], -(*c), pivotRow);
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

std::vector<SVec> kernelBasis(std::vector<SVec> equations, int ncols, ElimMode mode) {
    rowReduce(equations, mode);
    std::map<int, const SVec*> pivotRow;
    std::vector<bool> isPivot(ncols, false);
    for (const auto& r : equations) {
        pivotRow[r.lead()] = &r;
        isPivot[r.lead()] = true;
    }
    std::vector<SVec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (isPivot[f]) continue;
        SVec v;
        // entries with pivot columns first (they are < or > f arbitrarily); build then sort
        for (const auto& [p, row] : pivotRow) {
            const Rat* c = row->at(f);
            if (c) v.e.emplace_back(p, -(*c));
        }
        v.e.emplace_back(f, Rat(1));
        std::sort(v.e.begin(), v.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SVec> solveColumns(const std::vector<SVec>& cols, const SVec& b) {
    // rows of the system live on the combined row index set; unknown j has
    // coefficient cols[j][r] in row r; augmented column index = ncols
    int ncols = static_cast<int>(cols.size());
    std::map<int, SVec> rowsByIndex;
    for (int j = 0; j < ncols; ++j)
        for (const auto& [r, c] : cols[j].e) rowsByIndex[r].e.emplace_back(j, c);
    for (const auto& [r, c] : b.e) rowsByIndex[r].e.emplace_back(ncols, c);
    std::vector<SVec> rows;
    rows.reserve(rowsByIndex.size());
    for (auto& [r, v] : rowsByIndex) {
        std::sort(v.e.begin(), v.e.end(),
                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
        rows.push_back(std::move(v));
    }
    rowReduce(rows, ElimMode::Serial);
    SVec x;
    for (const auto& r : rows) {
        if (r.lead() == ncols) return std::nullopt; // inconsistent
        const Rat* c = r.at(ncols);
        if (c) x.e.emplace_back(r.lead(), *c);
    }
    std::sort(x.e.begin(), x.e.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
    return x;
}

} // namespace truncat
