#include "doctest.h"

#include <map>
#include <set>

#include "bcells/domino_rs.hpp"

using namespace bcells;

TEST_CASE("identity maps to equal tableaux") {
    for (int n = 0; n <= 4; ++n) {
        for (int r = 0; r <= 3; ++r) {
            TableauPair pr = g_r(SignedPermutation::identity(n), r);
            CHECK(pr.left == pr.right);
            CHECK(pr.left.rank() == r);
            CHECK(pr.left.domino_count() == n);
        }
    }
}

TEST_CASE("single letters at rank 0") {
    TableauPair plus = g_r(SignedPermutation({1}), 0);
    CHECK(plus.left.shape().parts() == std::vector<int>{2});
    TableauPair minus = g_r(SignedPermutation({-1}), 0);
    CHECK(minus.left.shape().parts() == std::vector<int>{1, 1});

    // the two same-shape pairs of SDT_0(1)^2 are exactly these two images
    DominoTableau vert(0, Partition({1, 1}), {{{1, 1}, {2, 1}}});
    SignedPermutation w = g_r_inverse({vert, vert});
    CHECK((w == SignedPermutation({1}) || w == SignedPermutation({-1})));
    CHECK(g_r(w, 0).left == vert);
}

TEST_CASE("outputs are valid same-shape pairs") {
    for (int n = 1; n <= 4; ++n) {
        WeylGroupB W(n);
        for (int r = 0; r <= 4; ++r) {
            for (int id = 0; id < W.size(); ++id) {
                TableauPair pr = g_r(W.element(id), r);
                CHECK(pr.left.shape() == pr.right.shape());
                CHECK_FALSE(validate_tableau(pr.left).has_value());
                CHECK_FALSE(validate_tableau(pr.right).has_value());
            }
        }
    }
}

TEST_CASE("bijectivity onto same-shape pairs") {
    for (int n = 1; n <= 4; ++n) {
        WeylGroupB W(n);
        for (int r = 0; r <= 4; ++r) {
            std::set<TableauPair> images;
            for (int id = 0; id < W.size(); ++id)
                images.insert(g_r(W.element(id), r));
            CHECK(static_cast<int>(images.size()) == W.size());
            std::int64_t pairs = 0;
            for (const Partition& p : partitions_of_rank(n, r)) {
                std::int64_t c = count_sdt(p);
                pairs += c * c;
            }
            CHECK(pairs == W.size());
        }
    }
}

TEST_CASE("inverse swaps the pair") {
    for (int n = 1; n <= 4; ++n) {
        WeylGroupB W(n);
        for (int r = 0; r <= 3; ++r) {
            for (int id = 0; id < W.size(); ++id) {
                TableauPair pr = g_r(W.element(id), r);
                TableauPair inv = g_r(W.element(W.inverse(id)), r);
                CHECK(inv.left == pr.right);
                CHECK(inv.right == pr.left);
            }
        }
    }
}

TEST_CASE("round trip through g_r_inverse") {
    for (int n = 0; n <= 3; ++n) {
        WeylGroupB W(n);
        for (int r = 0; r <= 3; ++r) {
            for (int id = 0; id < W.size(); ++id) {
                const SignedPermutation& w = W.element(id);
                CHECK(g_r_inverse(g_r(w, r)) == w);
            }
        }
    }
}

TEST_CASE("mismatched pairs are rejected") {
    DominoTableau horiz(0, Partition({2}), {{{1, 1}, {1, 2}}});
    DominoTableau vert(0, Partition({1, 1}), {{{1, 1}, {2, 1}}});
    CHECK_THROWS_AS(g_r_inverse({horiz, vert}), std::invalid_argument);
}

TEST_CASE("rank stability beyond n-2") {
    // for r > n-2 the partition of W_n by right tableau no longer depends on r
    const int n = 3;
    WeylGroupB W(n);
    auto classes = [&](int r) {
        std::map<DominoTableau, std::set<int>> by_right;
        for (int id = 0; id < W.size(); ++id)
            by_right[g_r(W.element(id), r).right].insert(id);
        std::set<std::set<int>> out;
        for (auto& [t, ids] : by_right) out.insert(ids);
        return out;
    };
    auto base = classes(n - 1);
    CHECK(classes(n) == base);
    CHECK(classes(n + 1) == base);
}
