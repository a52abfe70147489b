#include "truncat/charring.hpp"

#include <sstream>

#include "json.hpp"

namespace truncat {

long GradedCharacter::dimAtGrade(int g) const {
    long d = 0;
    for (const auto& [l, m] : terms)
        if (l.grade == g) d += m;
    return d;
}

long GradedCharacter::totalDim() const {
    long d = 0;
    for (const auto& [l, m] : terms) d += m;
    return d;
}

void GradedCharacter::set(const Weight& w, int grade, long m) {
    Label l{w, grade};
    if (m == 0)
        terms.erase(l);
    else
        terms[l] = m;
}

GradedCharacter charUnit(int rank, const GradeWindow& window) {
    GradedCharacter r;
    r.window = window;
    r.complete = true;
    if (window.contains(0)) r.set(Weight::zero(rank), 0, 1);
    return r;
}

static GradedCharacter combine(const GradedCharacter& x, const GradedCharacter& y, long sign) {
    GradedCharacter r;
    bool both = x.complete && y.complete;
    r.complete = both;
    r.window = both ? GradeWindow{std::min(x.window.lo, y.window.lo),
                                  std::max(x.window.hi, y.window.hi)}
                    : x.window.intersect(y.window);
    r.isVirtual = x.isVirtual || y.isVirtual || sign < 0;
    for (const auto& [l, m] : x.terms)
        if (r.window.contains(l.grade)) r.terms[l] += m;
    for (const auto& [l, m] : y.terms)
        if (r.window.contains(l.grade)) r.terms[l] += sign * m;
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = it->second == 0 ? r.terms.erase(it) : std::next(it);
    if (!r.isVirtual)
        for (const auto& [l, m] : r.terms)
            if (m < 0) r.isVirtual = true;
    return r;
}

GradedCharacter charAdd(const GradedCharacter& x, const GradedCharacter& y) {
    return combine(x, y, 1);
}
GradedCharacter charSub(const GradedCharacter& x, const GradedCharacter& y) {
    return combine(x, y, -1);
}

GradedCharacter charMul(const GradedCharacter& x, const GradedCharacter& y,
                        const GradeWindow& window) {
    GradedCharacter r;
    if (x.complete && y.complete) {
        r.window = window;
        r.complete = window.lo <= x.window.lo + y.window.lo &&
                     window.hi >= x.window.hi + y.window.hi;
    } else {
        // characters vanish below their window and are unknown above it, so
        // the product is trustworthy only up to min(xhi+ylo, xlo+yhi)
        r.window = window.intersect({x.window.lo + y.window.lo, x.window.hi + y.window.lo});
        r.window = r.window.intersect({x.window.lo + y.window.lo, x.window.lo + y.window.hi});
    }
    r.isVirtual = x.isVirtual || y.isVirtual;
    for (const auto& [lx, mx] : x.terms)
        for (const auto& [ly, my] : y.terms) {
            int g = lx.grade + ly.grade;
            if (!r.window.contains(g)) continue;
            r.terms[Label{lx.weight + ly.weight, g}] += mx * my;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = it->second == 0 ? r.terms.erase(it) : std::next(it);
    return r;
}

GradedCharacter charDual(const GradedCharacter& x) {
    GradedCharacter r;
    r.window = {-x.window.hi, -x.window.lo};
    r.isVirtual = x.isVirtual;
    r.complete = x.complete;
    for (const auto& [l, m] : x.terms) r.terms[Label{-l.weight, -l.grade}] = m;
    return r;
}

GradedCharacter charShift(const GradedCharacter& x, int s) {
    GradedCharacter r;
    r.window = {x.window.lo + s, x.window.hi + s};
    r.isVirtual = x.isVirtual;
    r.complete = x.complete;
    for (const auto& [l, m] : x.terms) r.terms[Label{l.weight, l.grade + s}] = m;
    return r;
}

GradedCharacter evCharacter(const RootSystem& rs, const Weight& lambda, int grade,
                            const GradeWindow& window) {
    GradedCharacter r;
    r.window = window;
    r.complete = window.contains(grade);
    if (window.contains(grade))
        for (const auto& [w, m] : rs.weylCharacter(lambda)) r.set(w, grade, m);
    return r;
}

GradedCharacter uPlusCharacter(const RootSystem& rs, int gradeBound) {
    if (gradeBound < 0) throw DomainError("uPlusCharacter: negative grade bound");
    GradeWindow win{0, gradeBound};
    GradedCharacter acc = charUnit(rs.rank, win);
    auto geometric = [&](const Weight& w, int k) {
        // Σ_j e^{jw} u^{jk} truncated
        GradedCharacter g;
        g.window = win;
        for (int j = 0; j * k <= gradeBound; ++j) {
            Weight jw = j * w;
            g.terms[Label{jw, j * k}] += 1;
        }
        return g;
    };
    for (int k = 1; k <= gradeBound; ++k) {
        for (int a = 0; a < rs.nPos; ++a) {
            acc = charMul(acc, geometric(rs.posRoot[a], k), win);
            acc = charMul(acc, geometric(-rs.posRoot[a], k), win);
        }
        for (int i = 0; i < rs.rank; ++i) acc = charMul(acc, geometric(Weight::zero(rs.rank), k), win);
    }
    acc.window = win;
    return acc;
}

std::map<Label, long> simpleDecompose(const RootSystem& rs, const GradedCharacter& x) {
    if (x.isVirtual) throw DomainError("simpleDecompose: virtual character");
    std::map<Label, long> out;
    std::map<int, std::map<Weight, long>> byGrade;
    for (const auto& [l, m] : x.terms) byGrade[l.grade][l.weight] = m;
    for (auto& [g, wm] : byGrade) {
        auto dec = rs.decomposeWeightMap(std::move(wm));
        for (const auto& [w, m] : dec)
            if (m != 0) out[Label{w, g}] = m;
    }
    return out;
}

std::string TruncationSpec::str() const {
    std::string s = (a ? std::to_string(*a) : std::string("-inf")) + ":" +
                    (b ? std::to_string(*b) : std::string("+inf"));
    if (weightCap) s += " cap " + weightStr(*weightCap);
    return s;
}

TruncationSpec TruncationSpec::parse(const std::string& j) {
    auto colon = j.find(':');
    if (colon == std::string::npos) throw DomainError("J must look like a:b");
    std::string lo = j.substr(0, colon), hi = j.substr(colon + 1);
    TruncationSpec t;
    if (lo != "-inf") t.a = std::stoi(lo);
    if (hi != "+inf" && hi != "inf") t.b = std::stoi(hi);
    if (t.a && t.b && *t.a > *t.b) throw DomainError("J empty: a > b");
    return t;
}

std::map<LamPoint, long> filtrationMultiplicities(const RootSystem& rs, const GradedCharacter& x,
                                                  const CharFamily& family, FamilyKind kind,
                                                  const TruncationSpec& gamma,
                                                  const std::vector<Weight>& enumeration) {
    if (x.isVirtual) throw DomainError("filtrationMultiplicities: virtual character");
    std::map<int, Weight> idxToWeight;
    std::map<Weight, int> weightToIdx;
    for (size_t i = 0; i < enumeration.size(); ++i) {
        idxToWeight[static_cast<int>(i)] = enumeration[i];
        weightToIdx[enumeration[i]] = static_cast<int>(i);
    }

    // residue in simple-multiplicity coordinates
    std::map<Label, long> residue = simpleDecompose(rs, x);
    std::map<LamPoint, long> out;

    auto simpleOf = [&](const Weight& mu, int s) {
        GradedCharacter ch = family(mu, s);
        ch.window = x.window; // family characters are provided on x's window
        return simpleDecompose(rs, ch);
    };

    while (!residue.empty()) {
        // leading term: highest enumeration index; grade per family orientation
        int bestIdx = -1;
        Label bestLabel;
        for (const auto& [l, m] : residue) {
            if (m == 0) continue;
            auto it = weightToIdx.find(l.weight);
            if (it == weightToIdx.end())
                throw DomainError("filtrationMultiplicities: weight " + weightStr(l.weight) +
                                  " outside the supplied enumeration");
            bool better = false;
            if (it->second > bestIdx)
                better = true;
            else if (it->second == bestIdx) {
                if (kind == FamilyKind::Nabla)
                    better = l.grade > bestLabel.grade;
                else
                    better = l.grade < bestLabel.grade;
            }
            if (better) {
                bestIdx = it->second;
                bestLabel = l;
            }
        }
        if (bestIdx < 0) break;
        long m = residue[bestLabel];
        if (m < 0 || !gamma.contains(rs, bestLabel))
            throw DomainError("no such filtration at character level: residue " +
                              std::to_string(m) + " at " + labelStr(bestLabel));
        out[bestLabel] = m;
        auto fam = simpleOf(bestLabel.weight, bestLabel.grade);
        if (fam.find(bestLabel) == fam.end() || fam[bestLabel] != 1)
            throw DomainError("family member has no unit leading term at " + labelStr(bestLabel));
        for (const auto& [l, fm] : fam) {
            long& v = residue[l];
            v -= m * fm;
            if (v == 0) residue.erase(l);
        }
    }
    for (const auto& [l, m] : residue)
        if (m != 0) throw DomainError("no such filtration at character level (nonzero residue)");
    return out;
}

std::string charToJson(const GradedCharacter& x) {
    nlohmann::ordered_json j;
    j["window"] = {{"lo", x.window.lo}, {"hi", x.window.hi}};
    j["virtual"] = x.isVirtual;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [l, m] : x.terms) {
        nlohmann::ordered_json t;
        t["weight"] = l.weight.c;
        t["grade"] = l.grade;
        t["mult"] = m;
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

GradedCharacter charFromJson(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GradedCharacter x;
    x.window = {j.at("window").at("lo").get<int>(), j.at("window").at("hi").get<int>()};
    x.isVirtual = j.value("virtual", false);
    for (const auto& t : j.at("terms")) {
        Weight w(t.at("weight").get<std::vector<int>>());
        x.set(w, t.at("grade").get<int>(), t.at("mult").get<long>());
    }
    return x;
}

std::string charToTable(const GradedCharacter& x) {
    std::ostringstream os;
    os << "window [" << x.window.lo << "," << x.window.hi << "]";
    if (x.isVirtual) os << " (virtual)";
    os << "\n";
    int curGrade = x.window.lo - 1;
    for (const auto& [l, m] : x.terms) {
        if (l.grade != curGrade) {
            curGrade = l.grade;
            os << "grade " << curGrade << " (dim " << x.dimAtGrade(curGrade) << "):\n";
        }
        os << "  " << weightStr(l.weight) << " x" << m << "\n";
    }
    os << "total dim " << x.totalDim() << "\n";
    return os.str();
}

} // namespace truncat
