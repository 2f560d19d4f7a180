#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "bcells/symbol.hpp"

using namespace bcells;

TEST_CASE("normalization") {
    Symbol s({0, 1, 3, 4}, {2});
    CHECK(s.top() == std::vector<int>{0, 1, 3, 4});
    CHECK(s.bottom() == std::vector<int>{2});
    CHECK(s.defect() == 3);

    // one inverse shift: (0 1 2 4 5 / 0 3) -> (0 1 3 4 / 2)
    CHECK(Symbol({0, 1, 2, 4, 5}, {0, 3}) == s);
    // shifting the representative lands on the same symbol
    std::vector<int> top{0}, bottom{0};
    for (int v : s.top()) top.push_back(v + 1);
    for (int v : s.bottom()) bottom.push_back(v + 1);
    CHECK(Symbol(top, bottom) == s);

    CHECK(Symbol({}, {}).defect() == 0);
    CHECK_THROWS_AS(Symbol({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Symbol({}, {1}), std::invalid_argument);
}

TEST_CASE("symbol of the worked partition") {
    Symbol s = partition_to_symbol(Partition({4, 3, 3, 1}));
    CHECK(s == Symbol({0, 1, 3, 4}, {2}));
    CHECK(s.to_string() == "0 1 3 4 / 2");
    CHECK(Symbol::parse("0 1 3 4 / 2") == s);
}

TEST_CASE("symbol of the empty partition") {
    Symbol s = partition_to_symbol(Partition{});
    CHECK(s.top() == std::vector<int>{0});
    CHECK(s.bottom().empty());
    CHECK(s.defect() == 1);
}

TEST_CASE("bipartition of the worked symbol") {
    Bipartition bp = symbol_to_bipartition(Symbol({0, 1, 3, 4}, {2}));
    CHECK(bp.first.parts() == std::vector<int>{1, 1});
    CHECK(bp.second.parts() == std::vector<int>{2});
    CHECK(bp.first.size() + bp.second.size() == 4);

    Bipartition empty = symbol_to_bipartition(Symbol({}, {}));
    CHECK(empty.first.parts().empty());
    CHECK(empty.second.parts().empty());
}

TEST_CASE("defect equals rank plus one and round trips hold") {
    for (int r = 0; r <= 3; ++r) {
        for (int n = 0; n <= 5; ++n) {
            std::set<Symbol> images;
            for (const Partition& p : partitions_of_rank(n, r)) {
                Symbol s = partition_to_symbol(p);
                CHECK(s.defect() == r + 1);
                CHECK(images.insert(s).second);  // injective
                CHECK(symbol_to_partition(s) == p);
                Bipartition bp = symbol_to_bipartition(s);
                CHECK(bp.first.size() + bp.second.size() == n);
                CHECK(bipartition_to_symbol(bp, r + 1) == s);
            }
        }
    }
}

TEST_CASE("bipartitions are exhausted") {
    // the composite P_r(n) -> P^2(n) is onto: count bipartitions of n = 4
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const Partition& p : partitions_of_rank(4, 2)) {
        Bipartition bp = symbol_to_bipartition(partition_to_symbol(p));
        seen.insert({bp.first.parts(), bp.second.parts()});
    }
    CHECK(seen.size() == 20);  // sum over k of p(k) p(4-k)
}

TEST_CASE("singles and doubles") {
    auto [z1, z2] = singles_doubles(Symbol({0, 1, 3, 4}, {2}));
    CHECK(z1 == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(z2.empty());

    auto [y1, y2] = singles_doubles(Symbol({0, 1}, {1}));
    CHECK(y1 == std::vector<int>{0});
    CHECK(y2 == std::vector<int>{1});

    auto [x1, x2] = singles_doubles(Symbol({0}, {}));
    CHECK(x1 == std::vector<int>{0});
    CHECK(x2.empty());
}

TEST_CASE("singles parity matches the defect") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n)
            for (const Partition& p : partitions_of_rank(n, r)) {
                auto [z1, z2] = singles_doubles(partition_to_symbol(p));
                CHECK(z1.size() % 2 == static_cast<size_t>(r + 1) % 2);
            }
}

TEST_CASE("z1 to corner-hole bijection on the worked partition") {
    Partition p({4, 3, 3, 1});
    auto corr = z1_to_hc(p);
    std::vector<std::pair<int, Square>> expect{
        {0, {5, 1}}, {1, {4, 2}}, {2, {3, 3}}, {3, {2, 4}}, {4, {1, 5}}};
    CHECK(corr == expect);
}

TEST_CASE("z1 to corner-hole bijection in general") {
    for (int r = 0; r <= 4; ++r) {
        for (int n = 0; n <= 5; ++n) {
            for (const Partition& p : partitions_of_rank(n, r)) {
                if (p.size() > 10) continue;
                auto corr = z1_to_hc(p);
                Symbol sym = partition_to_symbol(p);
                auto [z1, z2] = singles_doubles(sym);
                // domain is exactly Z1, image exactly HC(p), order reversed
                std::vector<int> entries;
                for (auto& [e, s] : corr) entries.push_back(e);
                CHECK(entries == z1);
                CHECK(corr.size() == p.corner_hole_data().all.size());
                for (size_t i = 0; i + 1 < corr.size(); ++i)
                    CHECK(corr[i].second.row > corr[i + 1].second.row);
                // filled squares correspond to bottom-row entries
                for (auto& [e, s] : corr) {
                    bool in_bottom =
                        std::count(sym.bottom().begin(), sym.bottom().end(), e) > 0;
                    CHECK(in_bottom == p.corner_hole_data().is_filled(s));
                }
            }
        }
    }
}

TEST_CASE("staircase singles count") {
    Partition p({2, 1});
    auto corr = z1_to_hc(p);
    CHECK(corr.size() == 3);  // r + 1 with kappa = 0
}
