#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "truncat/linalg.hpp"

using namespace truncat;

namespace {

SVec vec(std::initializer_list<std::pair<int, int>> entries) {
    SVec v;
    for (auto [i, x] : entries)
        if (x != 0) v.e.emplace_back(i, Rat(x));
    return v;
}

// deterministic test matrix with rational entries, no randomness
std::vector<SVec> testMatrix(int rows, int cols, int spread) {
    std::vector<SVec> m(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int num = ((i + 2) * (j + 3)) % spread - spread / 2;
            int den = (i + j) % 3 + 1;
            Rat v(num, den);
            v.canonicalize();
            if (num != 0) m[i].e.emplace_back(j, v);
        }
    return m;
}

} // namespace

TEST_CASE("sparse vector arithmetic") {
    SVec a = vec({{0, 1}, {2, 3}});
    SVec b = vec({{0, -1}, {1, 5}});
    SVec s = svAdd(a, b);
    CHECK(s == vec({{1, 5}, {2, 3}}));
    svAxpy(s, Rat(2), a);
    CHECK(s == vec({{0, 2}, {1, 5}, {2, 9}}));
}

TEST_CASE("echelon insert, reduce, expressRaw") {
    Echelon e(true);
    CHECK(e.insert(vec({{0, 1}, {1, 1}})));
    CHECK(e.insert(vec({{1, 2}})));
    CHECK_FALSE(e.insert(vec({{0, 3}, {1, 7}}))); // 3*(v0) + 2*(v1)... dependent
    CHECK(e.dim() == 2);
    auto c = e.expressRaw(vec({{0, 2}, {1, 2}}));
    REQUIRE(c.has_value());
    // 2*(e0+e1) = 2*raw0 + 0*raw1
    CHECK(*c == vec({{0, 2}}));
    CHECK(e.reduce(vec({{2, 5}})) == vec({{2, 5}}));
    CHECK_FALSE(e.expressRaw(vec({{2, 1}})).has_value());
}

TEST_CASE("rowReduce rank and kernel") {
    std::vector<SVec> rows = {vec({{0, 1}, {1, 2}}), vec({{0, 2}, {1, 4}}), vec({{1, 1}, {2, 1}})};
    CHECK(rowReduce(rows) == 2);

    // kernel of [[1,2,0],[0,1,1]] is spanned by (2,-1,1)
    auto ker = kernelBasis({vec({{0, 1}, {1, 2}}), vec({{1, 1}, {2, 1}})}, 3);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == vec({{0, 2}, {1, -1}, {2, 1}}));
}

TEST_CASE("serial and parallel elimination agree exactly") {
    for (int n : {6, 17, 40}) {
        auto a = testMatrix(n, n + 3, 7);
        auto b = a;
        int ra = rowReduce(a, ElimMode::Serial);
        int rb = rowReduce(b, ElimMode::Parallel);
        CHECK(ra == rb);
        CHECK(a == b);
    }
    auto eqs = testMatrix(23, 31, 11);
    auto k1 = kernelBasis(eqs, 31, ElimMode::Serial);
    auto k2 = kernelBasis(eqs, 31, ElimMode::Parallel);
    CHECK(k1 == k2);
}

TEST_CASE("solveColumns") {
    // columns of [[1,0],[1,1]]; solve for b=(3,5): x = (3,2)
    std::vector<SVec> cols = {vec({{0, 1}, {1, 1}}), vec({{1, 1}})};
    auto x = solveColumns(cols, vec({{0, 3}, {1, 5}}));
    REQUIRE(x.has_value());
    CHECK(*x == vec({{0, 3}, {1, 2}}));
    CHECK_FALSE(solveColumns({vec({{0, 1}})}, vec({{1, 1}})).has_value());
}

TEST_CASE("matrix ops") {
    SMat a = SMat::zero(2, 2);
    a.col[0] = vec({{0, 1}});
    a.col[1] = vec({{0, 1}, {1, 1}});
    SMat b = SMat::identity(2);
    CHECK(a.compose(b) == a);
    CHECK(a.negTranspose().entry(1, 0) == Rat(-1));
    CHECK(a.traceOfProduct(a) == Rat(2)); // tr(a^2), a upper triangular unipotent
    CHECK(smCommutator(a, a).isZeroMat());
}
