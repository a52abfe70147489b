#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "truncat/rat.hpp"

namespace truncat {

/// Sparse vector: entries sorted by strictly increasing index, all nonzero.
struct SVec {
    std::vector<std::pair<int, Rat>> e;

    bool isZero() const { return e.empty(); }
    int lead() const { return e.empty() ? -1 : e.front().first; }
    const Rat* at(int idx) const;
    static SVec unit(int idx) {
        SVec v;
        v.e.emplace_back(idx, Rat(1));
        return v;
    }
    friend bool operator==(const SVec& a, const SVec& b) { return a.e == b.e; }
};

SVec svAdd(const SVec& a, const SVec& b);
SVec svScale(const SVec& a, const Rat& c);
/// dst += c * src
void svAxpy(SVec& dst, const Rat& c, const SVec& src);
/// Apply an index translation; offsets must keep indices strictly increasing.
SVec svShiftIndices(const SVec& a, int offset);

/// Column-sparse matrix.
struct SMat {
    int rows = 0;
    std::vector<SVec> col;

    static SMat zero(int r, int c) {
        SMat m;
        m.rows = r;
        m.col.resize(c);
        return m;
    }
    static SMat identity(int n);
    int cols() const { return static_cast<int>(col.size()); }
    SVec apply(const SVec& v) const;
    SMat compose(const SMat& rhs) const; // this ∘ rhs
    SMat scaled(const Rat& c) const;
    SMat plus(const SMat& rhs) const;
    SMat negTranspose() const;
    Rat entry(int r, int c) const;
    bool isZeroMat() const;
    Rat traceOfProduct(const SMat& rhs) const; // tr(this * rhs)
    friend bool operator==(const SMat& a, const SMat& b) { return a.rows == b.rows && a.col == b.col; }
};

SMat smCommutator(const SMat& a, const SMat& b);

/// Incremental reduced echelon basis. With tracking enabled, every vector in the
/// span can be expressed over the raw vectors that were inserted (and accepted).
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    /// Returns true if v enlarged the span.
    bool insert(const SVec& v);
    /// Residual of v after reduction against the basis.
    SVec reduce(const SVec& v) const;
    bool contains(const SVec& v) const { return reduce(v).isZero(); }
    /// Coordinates of v over the accepted raw vectors; nullopt if v is outside
    /// the span. Requires tracking.
    std::optional<SVec> expressRaw(const SVec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SVec>& rows() const { return rows_; }

private:
    std::vector<SVec> rows_;  // pivot coefficient 1, mutually reduced
    std::vector<SVec> expr_;  // row i over raw indices (tracking only)
    std::map<int, int> pivot_;
    bool track_;
};

enum class ElimMode { Serial, Parallel };

/// In-place reduced row echelon form; returns the rank. Pivot choice and all
/// arithmetic are identical in both modes, so the output is byte-identical;
/// Parallel only fans the per-row elimination loop out over OpenMP threads.
int rowReduce(std::vector<SVec>& rows, ElimMode mode = ElimMode::Serial);

/// Basis of {x : Σ_j rows[i][j]·x_j = 0 for all i} over unknowns 0..ncols-1.
std::vector<SVec> kernelBasis(std::vector<SVec> equations, int ncols,
                              ElimMode mode = ElimMode::Serial);

/// Solve Σ_j x_j · cols[j] = b exactly; nullopt if inconsistent. Free unknowns
/// are set to zero, which makes the result deterministic.
std::optional<SVec> solveColumns(const std::vector<SVec>& cols, const SVec& b);

} // namespace truncat
