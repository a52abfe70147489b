#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace truncat {

/// Integral weight in fundamental-weight coordinates: λ = Σ c_i ω_i.
struct Weight {
    std::vector<int> c;

    Weight() = default;
    explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(c.size()); }
    bool isZero() const {
        for (int x : c)
            if (x != 0) return false;
        return true;
    }
    bool isDominant() const {
        for (int x : c)
            if (x < 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
        Weight r = a;
        for (int i = 0; i < r.rank(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
        Weight r = a;
        for (int i = 0; i < r.rank(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (int& x : r.c) x = -x;
        return r;
    }
    friend Weight operator*(int k, const Weight& a) {
        Weight r = a;
        for (int& x : r.c) x *= k;
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    /// Deterministic total order (lexicographic on coordinates); not the dominance order.
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.c <=> b.c; }
};

/// Basis label of a graded module: weight plus grade. Doubles as a point of Λ = P⁺×ℤ.
struct Label {
    Weight weight;
    int grade = 0;

    friend bool operator==(const Label& a, const Label& b) {
        return a.grade == b.grade && a.weight == b.weight;
    }
    friend auto operator<=>(const Label& a, const Label& b) {
        if (auto c = a.grade <=> b.grade; c != 0) return c;
        return a.weight <=> b.weight;
    }
};

using LamPoint = Label;

/// "2w1+w2"-style rendering, "0" for the zero weight.
inline std::string weightStr(const Weight& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
        int x = w.c[i];
        if (x == 0) continue;
        if (!s.empty() && x > 0) s += "+";
        if (x == -1)
            s += "-";
        else if (x != 1)
            s += std::to_string(x);
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string labelStr(const Label& p) {
    return "(" + weightStr(p.weight) + "," + std::to_string(p.grade) + ")";
}

} // namespace truncat
