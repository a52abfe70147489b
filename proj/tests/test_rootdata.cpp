#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "truncat/gmodule.hpp"
#include "truncat/rootdata.hpp"

using namespace truncat;

namespace {
Weight w(std::initializer_list<int> c) { return Weight(std::vector<int>(c)); }
}

TEST_CASE("root counts, highest roots") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    CHECK(a1.nPos == 1);
    CHECK(a1.posRoot[0] == w({2})); // α₁ = 2ω₁
    CHECK(a1.highestRoot == w({2}));

    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    CHECK(a2.nPos == 3);
    CHECK(a2.highestRoot == w({1, 1})); // θ = α₁+α₂

    const RootSystem& a3 = RootSystem::get(AlgebraType::A3);
    CHECK(a3.nPos == 6);
    CHECK(a3.highestRoot == w({1, 0, 1}));

    const RootSystem& c2 = RootSystem::get(AlgebraType::C2);
    CHECK(c2.nPos == 4);
    CHECK(c2.highestRoot == w({2, 0})); // 2α₁+α₂ = 2ε₁

    CHECK_FALSE(parseAlgebraType("B7").has_value());
}

TEST_CASE("Chevalley structure constants") {
    for (auto t : {AlgebraType::A1, AlgebraType::A2, AlgebraType::A3, AlgebraType::C2}) {
        const RootSystem& rs = RootSystem::get(t);
        std::string why;
        CHECK_MESSAGE(jacobiHolds(rs, &why), why);
        for (int a = 0; a < rs.nPos; ++a)
            for (int b = 0; b < rs.nPos; ++b) {
                long nab = rs.structureConstant(a, b);
                long nba = rs.structureConstant(b, a);
                CHECK(nab == -nba);
                if (nab != 0) CHECK(std::abs(nab) <= 3);
            }
        // [x_α, x_{-α}] = h_α pairs with λ(h_α) integral on fundamental weights
        for (int a = 0; a < rs.nPos; ++a) {
            const auto& combo = rs.bracketTab[rs.idxXPlus(a)][rs.idxXMinus(a)];
            CHECK_FALSE(combo.empty());
            for (const auto& [idx, c] : combo) {
                CHECK(idx >= 2 * rs.nPos);
                (void)c;
            }
        }
    }
    // A2: N_{α₁,α₂} = ±1
    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    long n = a2.structureConstant(0, 1);
    CHECK((n == 1 || n == -1));
}

TEST_CASE("dominance order") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    CHECK(a1.dominanceLeq(w({0}), w({2})));
    CHECK(a1.dominanceLeq(w({2}), w({2})));
    CHECK_FALSE(a1.dominanceLeq(w({0}), w({1}))); // ω₁ = α₁/2 ∉ Q⁺
    CHECK_FALSE(a1.dominanceLeq(w({2}), w({0})));

    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    CHECK(a2.dominanceLeq(w({0, 0}), w({1, 1})));
    CHECK_FALSE(a2.dominanceLeq(w({1, 0}), w({0, 1})));
}

TEST_CASE("hull membership") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    CHECK(a1.hullMembership(w({0}), w({2})));
    CHECK(a1.hullMembership(w({2}), w({2})));
    CHECK(a1.hullMembership(w({-2}), w({2})));
    CHECK_FALSE(a1.hullMembership(w({3}), w({2})));
    CHECK_FALSE(a1.hullMembership(w({1}), w({2}))); // different coset
}

TEST_CASE("weylCharacter strings and adjoint") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    for (int m = 0; m <= 4; ++m) {
        const auto& ch = a1.weylCharacter(w({m}));
        CHECK(static_cast<int>(ch.size()) == m + 1);
        for (int k = -m; k <= m; k += 2) CHECK(ch.at(w({k})) == 1);
    }
    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    const auto& adj = a2.weylCharacter(a2.highestRoot);
    CHECK(adj.at(Weight::zero(2)) == 2);
    long total = 0;
    for (const auto& [wt, m] : adj) total += m;
    CHECK(total == 8);
    for (int a = 0; a < a2.nPos; ++a) CHECK(adj.at(a2.posRoot[a]) == 1);
}

TEST_CASE("weylCharacter cross-check against character arithmetic") {
    // ch V(ω₁)·ch V(ω₂) − ch V(0) = ch V(ω₁+ω₂) in A2, with the two fundamental
    // characters written out by hand
    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    std::map<Weight, long> f1, f2;
    f1[w({1, 0})] = 1;
    f1[w({-1, 1})] = 1; // ω₁ − α₁
    f1[w({0, -1})] = 1; // ω₁ − α₁ − α₂
    f2[w({0, 1})] = 1;
    f2[w({1, -1})] = 1;
    f2[w({-1, 0})] = 1;
    auto prod = RootSystem::weightMapProduct(f1, f2);
    prod[Weight::zero(2)] -= 1;
    CHECK(prod == a2.weylCharacter(w({1, 1})));
}

TEST_CASE("dimension formula matches Freudenthal sum, height <= 4") {
    for (auto t : {AlgebraType::A1, AlgebraType::A2, AlgebraType::A3, AlgebraType::C2}) {
        const RootSystem& rs = RootSystem::get(t);
        auto doms = rs.enumerateDominant(64);
        for (const Weight& la : doms) {
            if (rs.heightOf(la) > Rat(4)) continue;
            long total = 0;
            for (const auto& [wt, m] : rs.weylCharacter(la)) {
                total += m;
                CHECK(rs.hullMembership(wt, la));
                for (int i = 0; i < rs.rank; ++i)
                    CHECK(rs.weylCharacter(la).at(rs.reflect(wt, i)) == m);
            }
            CHECK(total == rs.weylDim(la));
        }
    }
}

TEST_CASE("homToAdjointTensor") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    CHECK(a1.homToAdjointTensor(w({2}), w({0})) == 1);
    CHECK(a1.homToAdjointTensor(w({0}), w({0})) == 0);
    // V(2)⊗V(2) = V(4)⊕V(2)⊕V(0); multiplicity of V(2) in g⊗V(2) is 1
    CHECK(a1.homToAdjointTensor(w({2}), w({2})) == 1);
    CHECK(a1.homToAdjointTensor(w({0}), w({2})) == 1);
    CHECK(a1.homToAdjointTensor(w({4}), w({2})) == 1);
    CHECK(a1.homToAdjointTensor(w({6}), w({2})) == 0);
}

TEST_CASE("enumerateDominant is dominance-compatible and deterministic") {
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    auto e3 = a1.enumerateDominant(3);
    CHECK(e3[0] == w({0}));
    CHECK(e3[1] == w({1}));
    CHECK(e3[2] == w({2}));

    for (auto t : {AlgebraType::A2, AlgebraType::C2}) {
        const RootSystem& rs = RootSystem::get(t);
        auto seq = rs.enumerateDominant(20);
        CHECK(seq[0].isZero());
        for (size_t i = 0; i < seq.size(); ++i)
            for (size_t j = 0; j < seq.size(); ++j) {
                if (i != j) CHECK_FALSE(seq[i] == seq[j]);
                // dominance-compatibility: seq[i] > seq[j] implies i > j
                if (rs.dominanceLeq(seq[j], seq[i]) && !(seq[i] == seq[j])) CHECK(i > j);
            }
        CHECK(rs.enumerateDominant(20) == seq);
    }
}

TEST_CASE("minusW0 per type") {
    CHECK(RootSystem::get(AlgebraType::A1).minusW0(w({3})) == w({3}));
    CHECK(RootSystem::get(AlgebraType::A2).minusW0(w({2, 1})) == w({1, 2}));
    CHECK(RootSystem::get(AlgebraType::A3).minusW0(w({1, 2, 3})) == w({3, 2, 1}));
    CHECK(RootSystem::get(AlgebraType::C2).minusW0(w({1, 2})) == w({1, 2}));
}

TEST_CASE("explicit simple modules") {
    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    const GModule& adj = simpleGModule(a2, w({1, 1}));
    CHECK(adj.dim == 8);
    // bracket soundness on the module: [act(a), act(b)] = act([a,b])
    for (int a = 0; a < a2.dimG; ++a)
        for (int b = 0; b < a2.dimG; ++b) {
            SMat lhs = smCommutator(adj.act[a], adj.act[b]);
            SMat rhs = SMat::zero(adj.dim, adj.dim);
            for (const auto& [t, c] : a2.bracketTab[a][b]) rhs = rhs.plus(adj.act[t].scaled(Rat(c)));
            CHECK(lhs == rhs);
        }

    const RootSystem& c2 = RootSystem::get(AlgebraType::C2);
    CHECK(simpleGModule(c2, w({1, 0})).dim == 4);
    CHECK(simpleGModule(c2, w({0, 1})).dim == 5);
    CHECK(simpleGModule(c2, w({1, 1})).dim == 16);

    const RootSystem& a3 = RootSystem::get(AlgebraType::A3);
    CHECK(simpleGModule(a3, w({0, 1, 0})).dim == 6);
    CHECK(simpleGModule(a3, w({1, 0, 1})).dim == 15);
}

TEST_CASE("dominance is a partial order on a finite sample") {
    const RootSystem& a2 = RootSystem::get(AlgebraType::A2);
    auto sample = a2.enumerateDominant(12);
    for (const auto& p : sample) {
        CHECK(a2.dominanceLeq(p, p));
        for (const auto& q : sample) {
            if (a2.dominanceLeq(p, q) && a2.dominanceLeq(q, p)) CHECK(p == q);
            for (const auto& r : sample)
                if (a2.dominanceLeq(p, q) && a2.dominanceLeq(q, r)) CHECK(a2.dominanceLeq(p, r));
        }
    }
}
