#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "bcells/tableau.hpp"

using namespace bcells;

namespace {

DominoTableau vertical_domino() {
    return DominoTableau(0, Partition({1, 1}), {{{1, 1}, {2, 1}}});
}

std::vector<Cycle> pick(const std::vector<Cycle>& cycles, const std::vector<int>& mask_labels) {
    std::vector<Cycle> out;
    for (const Cycle& c : cycles)
        if (std::count(mask_labels.begin(), mask_labels.end(), c.labels.front()))
            out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("tableau construction and validation") {
    DominoTableau t = vertical_domino();
    CHECK_FALSE(validate_tableau(t).has_value());
    CHECK(t.label_at({1, 1}) == 1);

    // a domino covering the rank-1 core square is rejected
    CHECK_THROWS_AS(DominoTableau(1, Partition({1, 1}), {{{1, 1}, {2, 1}}}),
                    std::invalid_argument);

    // weakly increasing labels are enforced by validate
    DominoTableau bad(0, Partition({2, 2}),
                      {{{2, 1}, {2, 2}}, {{1, 1}, {1, 2}}});
    CHECK(validate_tableau(bad).has_value());
}

TEST_CASE("square classification") {
    DominoTableau r0 = vertical_domino();
    CHECK(classify_square(r0, {1, 1}) == SquareKind::Variable);  // 1+1 = 0 mod 2
    DominoTableau r1 = DominoTableau::core_tableau(1);
    CHECK(classify_square(r1, {1, 1}) == SquareKind::Fixed);
    DominoTableau r2 = DominoTableau::core_tableau(2);
    CHECK(classify_square(r2, {2, 4}) == SquareKind::Variable);
}

TEST_CASE("single domino cycle is core open") {
    DominoTableau t = vertical_domino();
    Cycle c = cycle_through(t, 1);
    CHECK(c.labels == std::vector<int>{1});
    CHECK(c.kind == CycleKind::CoreOpen);
    CHECK(*c.start == Square{1, 1});
    CHECK(*c.finish == Square{3, 1});

    // moving through it reinterprets the tableau at rank 1
    DominoTableau up = move_through(t, c);
    CHECK(up.rank() == 1);
    CHECK(up.shape().parts() == std::vector<int>{1, 1, 1});
    CHECK_FALSE(validate_tableau(up).has_value());
}

TEST_CASE("d_prime keeps exactly the fixed square") {
    for (int r = 0; r <= 2; ++r) {
        for (int n = 1; n <= 3; ++n) {
            for (const DominoTableau& t : enumerate_sdt(n, r)) {
                for (int k = 1; k <= n; ++k) {
                    auto d = t.domino(k);
                    auto dp = d_prime(t, k);
                    std::vector<Square> overlap;
                    for (const Square& s : {d.first, d.second})
                        if (s == dp.first || s == dp.second) overlap.push_back(s);
                    REQUIRE(overlap.size() == 1);
                    CHECK_FALSE(t.variable(overlap.front()));
                }
            }
        }
    }
}

TEST_CASE("cycles partition the labels") {
    for (int r = 0; r <= 2; ++r) {
        for (int n = 1; n <= 4; ++n) {
            for (const DominoTableau& t : enumerate_sdt(n, r)) {
                std::set<int> seen;
                for (const Cycle& c : cycles_of(t))
                    for (int l : c.labels) CHECK(seen.insert(l).second);
                CHECK(static_cast<int>(seen.size()) == n);
            }
        }
    }
}

TEST_CASE("moving through the empty set is the identity") {
    DominoTableau t = vertical_domino();
    CHECK(move_through(t, std::vector<Cycle>{}) == t);
}

TEST_CASE("moving through non-core cycles is a rank-preserving involution") {
    for (int r = 0; r <= 2; ++r) {
        for (int n = 1; n <= 3; ++n) {
            for (const DominoTableau& t : enumerate_sdt(n, r)) {
                auto open_star = non_core_open_cycles(t);
                for (int mask = 0; mask < (1 << open_star.size()); ++mask) {
                    std::vector<Cycle> sub;
                    for (size_t i = 0; i < open_star.size(); ++i)
                        if (mask & (1 << i)) sub.push_back(open_star[i]);
                    DominoTableau moved = move_through(t, sub);
                    CHECK(moved.rank() == r);
                    CHECK_FALSE(validate_tableau(moved).has_value());
                    // fixed squares keep their labels
                    for (int i = 1; i <= moved.shape().rows(); ++i)
                        for (int j = 1; j <= moved.shape().row_length(i); ++j)
                            if (!moved.variable({i, j}) && t.contains({i, j}))
                                CHECK(moved.label_at({i, j}) == t.label_at({i, j}));
                    // the moved cycles are still cycles and moving back returns
                    std::vector<Cycle> back;
                    for (const Cycle& c : sub) back.push_back(cycle_through(moved, c.labels[0]));
                    CHECK(move_through(moved, back) == t);
                }
            }
        }
    }
}

TEST_CASE("order independence of disjoint moves") {
    for (int n = 1; n <= 3; ++n) {
        for (const DominoTableau& t : enumerate_sdt(n, 1)) {
            auto open_star = non_core_open_cycles(t);
            if (open_star.size() < 2) continue;
            DominoTableau simultaneous = move_through(t, open_star);
            DominoTableau stepwise = t;
            for (const Cycle& c : open_star)
                stepwise = move_through(stepwise, cycle_through(stepwise, c.labels[0]));
            CHECK(simultaneous == stepwise);
        }
    }
}

TEST_CASE("rejects foreign cycles") {
    DominoTableau t(0, Partition({2}), {{{1, 1}, {1, 2}}});
    Cycle fake;
    fake.labels = {2};
    CHECK_THROWS_AS(move_through(t, fake), std::invalid_argument);
}

TEST_CASE("cycle structure sets of the worked partition") {
    Partition p({4, 3, 3, 1});
    auto sets = all_cycle_structure_sets(p);
    REQUIRE(sets.size() == 4);
    std::set<CycleStructureSet> expect{
        CycleStructureSet::of({{{1, 5}, {2, 4}}}),
        CycleStructureSet::of({{{2, 4}, {3, 3}}}),
        CycleStructureSet::of({{{3, 3}, {4, 2}}}),
        CycleStructureSet::of({{{4, 2}, {5, 1}}}),
    };
    CHECK(std::set<CycleStructureSet>(sets.begin(), sets.end()) == expect);
    for (const auto& s : sets)
        CHECK(static_cast<int>(s.pairs.size()) == p.corner_hole_data().kappa);
}

TEST_CASE("staircase admits only the empty cycle structure set") {
    auto sets = all_cycle_structure_sets(Partition({2, 1}));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].pairs.empty());
}

TEST_CASE("nesting excludes crossings") {
    // (4,4,3,1) at rank 0 has five starred squares with kappa = 2
    Partition p({4, 4, 3, 1});
    REQUIRE(p.rank() == 0);
    REQUIRE(p.corner_hole_data().kappa == 2);
    auto sets = all_cycle_structure_sets(p);
    CHECK(sets.size() == 5);
    for (const auto& s : sets) CHECK_FALSE(validate_cs_set(p, s).has_value());
    CycleStructureSet crossing =
        CycleStructureSet::of({{{1, 5}, {3, 3}}, {{2, 4}, {5, 1}}});
    CHECK(validate_cs_set(p, crossing).has_value());
}

TEST_CASE("tableau cycle structures are valid for their shapes") {
    for (int r = 0; r <= 2; ++r)
        for (int n = 1; n <= 4; ++n)
            for (const DominoTableau& t : enumerate_sdt(n, r))
                CHECK_FALSE(validate_cs_set(t.shape(), tableau_cs_set(t)).has_value());
}

TEST_CASE("construct_with_cs realizes each worked cycle structure set") {
    Partition p({4, 3, 3, 1});
    for (const CycleStructureSet& sigma : all_cycle_structure_sets(p)) {
        DominoTableau t = construct_with_cs(p, sigma);
        CHECK(t.rank() == 2);
        CHECK_FALSE(validate_tableau(t).has_value());
        CHECK(tableau_cs_set(t) == sigma);
    }
    // with the compatible set the shape is p itself
    DominoTableau t = construct_with_cs(p, CycleStructureSet::of({{{3, 3}, {4, 2}}}));
    CHECK(t.shape() == p);
}

TEST_CASE("construct_with_cs with empty set gives some tableau of shape p") {
    Partition p({2, 2, 1});  // rank 1, kappa 0
    REQUIRE(p.rank() == 1);
    DominoTableau t = construct_with_cs(p, CycleStructureSet{});
    CHECK(t.shape() == p);
    CHECK(tableau_cs_set(t).pairs.empty());
}

TEST_CASE("complete_to_cs") {
    Partition p({4, 3, 3, 1});
    auto valid = all_cycle_structure_sets(p);
    auto s1 = complete_to_cs(p, {{2, 4}});
    CHECK(std::count(valid.begin(), valid.end(), s1) == 1);
    bool has24 = false;
    for (const auto& pr : s1.pairs)
        has24 |= pr.first == Square{2, 4} || pr.second == Square{2, 4};
    CHECK(has24);

    CHECK(complete_to_cs(Partition({2, 1}), {}).pairs.empty());
    CHECK(complete_to_cs(p, {{5, 1}}) == CycleStructureSet::of({{{4, 2}, {5, 1}}}));
    CHECK_THROWS_AS(complete_to_cs(p, {{2, 4}, {4, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(complete_to_cs(p, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("enumerate_sdt basics") {
    CHECK(enumerate_sdt(1, 0).size() == 2);  // horizontal and vertical domino
    std::int64_t sum = 0;
    for (const Partition& p : partitions_of_rank(2, 0)) {
        std::int64_t c = count_sdt(p);
        CHECK(c == static_cast<std::int64_t>(enumerate_sdt(p).size()));
        sum += c * c;
    }
    CHECK(sum == 8);  // 2^2 * 2!
}

TEST_CASE("counting identity at small sizes") {
    for (int r = 0; r <= 3; ++r) {
        for (int n = 1; n <= 4; ++n) {
            std::int64_t sum = 0;
            for (const Partition& p : partitions_of_rank(n, r)) {
                std::int64_t c = count_sdt(p);
                sum += c * c;
            }
            std::int64_t expect = 1;
            for (int i = 1; i <= n; ++i) expect *= 2 * i;
            CHECK(sum == expect);
        }
    }
}
