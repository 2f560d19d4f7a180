#include "bcells/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

namespace bcells {

namespace {

std::pair<Square, Square> ordered(Square a, Square b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

bool adjacent(const Square& a, const Square& b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

Partition staircase(int r) {
    std::vector<int> c;
    for (int i = r; i >= 1; --i) c.push_back(i);
    return Partition(std::move(c));
}

// Row lengths of a set of squares; throws unless rows are contiguous
// segments starting at column 1 with weakly decreasing lengths.
Partition shape_of_squares(const std::set<Square>& squares) {
    std::map<int, std::set<int>> rows;
    for (const Square& s : squares) rows[s.row].insert(s.col);
    std::vector<int> parts;
    int expect = 1;
    for (const auto& [row, cols] : rows) {
        if (row != expect++)
            throw std::invalid_argument("squares do not form a Young diagram (row gap)");
        int len = static_cast<int>(cols.size());
        if (*cols.begin() != 1 || *cols.rbegin() != len)
            throw std::invalid_argument("squares do not form a Young diagram (column gap)");
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

}  // namespace

DominoTableau::DominoTableau(int rank, Partition shape,
                             std::vector<std::pair<Square, Square>> dominoes)
    : rank_(rank), shape_(std::move(shape)), dominoes_(std::move(dominoes)) {
    if (shape_.rank() != rank_)
        throw std::invalid_argument("shape is not of the stated rank");
    grid_.resize(shape_.rows());
    for (int i = 1; i <= shape_.rows(); ++i) grid_[i - 1].assign(shape_.row_length(i), 0);
    int label = 0;
    for (auto& d : dominoes_) {
        ++label;
        d = ordered(d.first, d.second);
        if (!adjacent(d.first, d.second))
            throw std::invalid_argument("domino " + std::to_string(label) + " squares not adjacent");
        for (const Square& s : {d.first, d.second}) {
            if (!shape_.contains(s))
                throw std::invalid_argument("domino " + std::to_string(label) + " outside the shape");
            if (s.diag() < rank_ + 2)
                throw std::invalid_argument("domino " + std::to_string(label) + " covers the core");
            int& cell = grid_[s.row - 1][s.col - 1];
            if (cell != 0)
                throw std::invalid_argument("dominoes " + std::to_string(cell) + " and " +
                                            std::to_string(label) + " overlap");
            cell = label;
        }
    }
    for (int i = 1; i <= shape_.rows(); ++i)
        for (int j = 1; j <= shape_.row_length(i); ++j)
            if (i + j >= rank_ + 2 && grid_[i - 1][j - 1] == 0)
                throw std::invalid_argument("non-core square " + Square{i, j}.to_string() +
                                            " is not covered");
}

DominoTableau DominoTableau::core_tableau(int rank) {
    return DominoTableau(rank, staircase(rank), {});
}

const std::pair<Square, Square>& DominoTableau::domino(int label) const {
    if (label < 1 || label > domino_count())
        throw std::out_of_range("no domino with label " + std::to_string(label));
    return dominoes_[label - 1];
}

int DominoTableau::label_at(const Square& s) const {
    if (!shape_.contains(s)) throw std::out_of_range("square outside the shape");
    return grid_[s.row - 1][s.col - 1];
}

int DominoTableau::extended_label(const Square& s) const {
    if (s.row < 1 || s.col < 1) return 0;
    if (s.diag() < rank_ + 2) return 0;  // the core region
    if (shape_.contains(s)) return grid_[s.row - 1][s.col - 1];
    return INT_MAX;
}

bool DominoTableau::operator==(const DominoTableau& o) const {
    return rank_ == o.rank_ && shape_ == o.shape_ && dominoes_ == o.dominoes_;
}

bool DominoTableau::operator<(const DominoTableau& o) const {
    if (rank_ != o.rank_) return rank_ < o.rank_;
    if (!(shape_ == o.shape_)) return shape_ < o.shape_;
    return dominoes_ < o.dominoes_;
}

std::string DominoTableau::to_string() const {
    std::ostringstream out;
    for (int i = 1; i <= shape_.rows(); ++i) {
        for (int j = 1; j <= shape_.row_length(i); ++j) {
            if (j > 1) out << ' ';
            out << grid_[i - 1][j - 1];
        }
        out << '\n';
    }
    return out.str();
}

std::optional<std::string> validate_tableau(const DominoTableau& t) {
    const Partition& p = t.shape();
    const int r = t.rank();
    if (p.rank() != r) return "shape rank mismatch";
    // 0 labels exactly the squares with i+j < r+2
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.row_length(i); ++j) {
            Square s{i, j};
            int lab = t.label_at(s);
            if ((lab == 0) != (s.diag() < r + 2))
                return "square " + s.to_string() + " has wrong core labeling";
        }
    }
    // each positive label twice, adjacent (checked at construction); weak
    // increase along rows and columns
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.row_length(i); ++j) {
            int lab = t.label_at({i, j});
            if (j < p.row_length(i) && lab > t.label_at({i, j + 1}))
                return "labels decrease along row " + std::to_string(i);
            if (p.row_length(i + 1) >= j && lab > t.label_at({i + 1, j}))
                return "labels decrease along column " + std::to_string(j);
        }
    }
    for (int k = 1; k <= t.domino_count(); ++k) {
        const auto& d = t.domino(k);
        if (t.label_at(d.first) != k || t.label_at(d.second) != k)
            return "domino map inconsistent at label " + std::to_string(k);
    }
    return std::nullopt;
}

SquareKind classify_square(const DominoTableau& t, const Square& s) {
    return t.variable(s) ? SquareKind::Variable : SquareKind::Fixed;
}

std::pair<Square, Square> d_prime(const DominoTableau& t, int label) {
    const auto& [a, b] = t.domino(label);
    Square f = t.variable(a) ? b : a;  // exactly one square of a domino is fixed
    Square v = t.variable(a) ? a : b;
    const int i = f.row, j = f.col;
    if (v == Square{i + 1, j} || v == Square{i, j - 1}) {
        // variable square below or to the left; compare with the upper-right neighbour
        int ref = t.extended_label({i - 1, j + 1});
        return label < ref ? ordered(f, {i - 1, j}) : ordered(f, {i, j + 1});
    }
    // variable square above or to the right; compare with the lower-left neighbour
    int ref = t.extended_label({i + 1, j - 1});
    return label < ref ? ordered(f, {i, j - 1}) : ordered(f, {i + 1, j});
}

namespace {

struct CycleScratch {
    std::vector<std::pair<Square, Square>> dp;  // d_prime per label
    std::vector<std::vector<int>> adj;          // overlap relation on labels
};

CycleScratch cycle_scratch(const DominoTableau& t) {
    const int n = t.domino_count();
    CycleScratch sc;
    sc.dp.resize(n + 1);
    sc.adj.assign(n + 1, {});
    std::map<Square, std::vector<int>> by_dp_square;
    for (int k = 1; k <= n; ++k) {
        sc.dp[k] = d_prime(t, k);
        by_dp_square[sc.dp[k].first].push_back(k);
        by_dp_square[sc.dp[k].second].push_back(k);
    }
    for (int k = 1; k <= n; ++k) {
        for (const Square& s : {t.domino(k).first, t.domino(k).second}) {
            auto it = by_dp_square.find(s);
            if (it == by_dp_square.end()) continue;
            for (int m : it->second) {
                if (m == k) continue;
                sc.adj[k].push_back(m);
                sc.adj[m].push_back(k);
            }
        }
    }
    return sc;
}

Cycle build_cycle(const DominoTableau& t, const CycleScratch& sc, int label) {
    Cycle c;
    std::vector<int> stack{label};
    std::set<int> seen{label};
    while (!stack.empty()) {
        int k = stack.back();
        stack.pop_back();
        c.labels.push_back(k);
        for (int m : sc.adj[k])
            if (seen.insert(m).second) stack.push_back(m);
    }
    std::sort(c.labels.begin(), c.labels.end());

    std::set<Square> before, after;
    for (int k : c.labels) {
        before.insert(t.domino(k).first);
        before.insert(t.domino(k).second);
        after.insert(sc.dp[k].first);
        after.insert(sc.dp[k].second);
    }
    std::vector<Square> gone, added;
    for (const Square& s : before)
        if (!after.count(s)) gone.push_back(s);
    for (const Square& s : after)
        if (!before.count(s)) added.push_back(s);
    if (gone.empty() && added.empty()) {
        c.kind = CycleKind::Closed;
        return c;
    }
    if (gone.size() != 1 || added.size() != 1)
        throw std::logic_error("open cycle must exchange exactly one square");
    c.start = gone.front();
    c.finish = added.front();
    const int r = t.rank();
    c.kind = (c.start->diag() > r + 2 && c.finish->diag() > r + 2) ? CycleKind::NonCoreOpen
                                                                   : CycleKind::CoreOpen;
    if (c.kind == CycleKind::CoreOpen && c.start->diag() != r + 2)
        throw std::logic_error("core open cycle must vacate a square on the core diagonal");
    return c;
}

}  // namespace

Cycle cycle_through(const DominoTableau& t, int label) {
    return build_cycle(t, cycle_scratch(t), label);
}

std::vector<Cycle> cycles_of(const DominoTableau& t) {
    CycleScratch sc = cycle_scratch(t);
    std::vector<Cycle> out;
    std::vector<bool> used(t.domino_count() + 1, false);
    for (int k = 1; k <= t.domino_count(); ++k) {
        if (used[k]) continue;
        Cycle c = build_cycle(t, sc, k);
        for (int m : c.labels) used[m] = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Cycle> non_core_open_cycles(const DominoTableau& t) {
    std::vector<Cycle> out;
    for (auto& c : cycles_of(t))
        if (c.kind == CycleKind::NonCoreOpen) out.push_back(std::move(c));
    return out;
}

DominoTableau move_through(const DominoTableau& t, const std::vector<Cycle>& cs) {
    std::vector<Cycle> actual = cycles_of(t);
    int core_open_total = 0;
    for (const Cycle& c : actual)
        if (c.kind == CycleKind::CoreOpen) ++core_open_total;

    std::set<int> moving;
    int core_open_moving = 0;
    for (const Cycle& c : cs) {
        auto it = std::find_if(actual.begin(), actual.end(),
                               [&](const Cycle& a) { return a.labels == c.labels; });
        if (it == actual.end())
            throw std::invalid_argument("not a cycle of this tableau");
        if (it->kind == CycleKind::CoreOpen) ++core_open_moving;
        for (int k : c.labels) {
            if (!moving.insert(k).second)
                throw std::invalid_argument("cycles in the set are not distinct");
        }
    }
    if (core_open_moving != 0 && core_open_moving != core_open_total)
        throw std::invalid_argument("core open cycles can only be moved through all at once");
    bool raise_rank = core_open_moving > 0;

    const int new_rank = raise_rank ? t.rank() + 1 : t.rank();
    std::vector<std::pair<Square, Square>> doms;
    std::set<Square> squares;
    for (int i = 1; i <= new_rank; ++i)
        for (int j = 1; j + i <= new_rank + 1; ++j) squares.insert({i, j});
    for (int k = 1; k <= t.domino_count(); ++k) {
        auto d = moving.count(k) ? d_prime(t, k) : t.domino(k);
        doms.push_back(d);
        squares.insert(d.first);
        squares.insert(d.second);
    }
    return DominoTableau(new_rank, shape_of_squares(squares), std::move(doms));
}

DominoTableau move_through(const DominoTableau& t, const Cycle& c) {
    return move_through(t, std::vector<Cycle>{c});
}

CycleStructure cycle_structure(const DominoTableau& t) {
    CycleStructure out;
    for (const Cycle& c : cycles_of(t)) {
        if (!c.open()) continue;
        out.cs.emplace_back(*c.start, *c.finish);
        if (c.kind == CycleKind::NonCoreOpen) out.cs_star.emplace_back(*c.start, *c.finish);
    }
    std::sort(out.cs.begin(), out.cs.end());
    std::sort(out.cs_star.begin(), out.cs_star.end());
    return out;
}

CycleStructureSet CycleStructureSet::of(std::vector<std::pair<Square, Square>> raw) {
    for (auto& pr : raw) pr = ordered(pr.first, pr.second);
    std::sort(raw.begin(), raw.end());
    return CycleStructureSet{std::move(raw)};
}

std::string CycleStructureSet::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ", ";
        out += "{" + pairs[i].first.to_string() + "," + pairs[i].second.to_string() + "}";
    }
    return out + "}";
}

CycleStructureSet tableau_cs_set(const DominoTableau& t) {
    return CycleStructureSet::of(cycle_structure(t).cs_star);
}

std::optional<std::string> validate_cs_set(const Partition& p, const CycleStructureSet& sigma) {
    const CornerHoleData& chd = p.corner_hole_data();
    std::set<Square> used;
    for (const auto& [a, b] : sigma.pairs) {
        bool ah = std::count(chd.holes_star.begin(), chd.holes_star.end(), a) > 0;
        bool ac = std::count(chd.corners_star.begin(), chd.corners_star.end(), a) > 0;
        bool bh = std::count(chd.holes_star.begin(), chd.holes_star.end(), b) > 0;
        bool bc = std::count(chd.corners_star.begin(), chd.corners_star.end(), b) > 0;
        if (!((ah && bc) || (ac && bh)))
            return "pair {" + a.to_string() + "," + b.to_string() +
                   "} does not join a starred hole with a starred corner";
        if (!used.insert(a).second || !used.insert(b).second)
            return "pairs are not disjoint";
    }
    int unpaired = static_cast<int>(chd.all_star.size()) - 2 * static_cast<int>(sigma.pairs.size());
    if (unpaired != chd.gamma)
        return "expected exactly " + std::to_string(chd.gamma) + " unpaired squares";
    // nesting: a square between the endpoints of a pair is itself paired
    // between those endpoints
    for (const auto& [a, b] : sigma.pairs) {
        for (const Square& c : chd.all_star) {
            if (c == a || c == b || !between(a, b, c)) continue;
            const Square* partner = nullptr;
            for (const auto& [x, y] : sigma.pairs) {
                if (x == c) partner = &y;
                if (y == c) partner = &x;
            }
            if (!partner)
                return "square " + c.to_string() + " lies unpaired between a pair";
            if (!between(a, b, *partner))
                return "partner of " + c.to_string() + " escapes the enclosing pair";
        }
    }
    return std::nullopt;
}

// Nested pairings via a stack walk over the row-sorted starred squares: a
// square may stay unpaired only outside every open arc, so arcs close in
// last-open-first-closed order.
std::vector<CycleStructureSet> all_cycle_structure_sets(const Partition& p) {
    const CornerHoleData& chd = p.corner_hole_data();
    const auto& sq = chd.all_star;
    const int need = chd.kappa;
    std::vector<CycleStructureSet> out;
    std::vector<int> open;                    // stack of open arc indices
    std::vector<std::pair<Square, Square>> acc;

    auto is_hole = [&](const Square& s) {
        return std::count(chd.holes_star.begin(), chd.holes_star.end(), s) > 0;
    };
    std::function<void(size_t)> walk = [&](size_t idx) {
        if (idx == sq.size()) {
            if (open.empty() && static_cast<int>(acc.size()) == need)
                out.push_back(CycleStructureSet::of(acc));
            return;
        }
        if (open.empty()) {  // leave unpaired
            walk(idx + 1);
        }
        if (!open.empty() && is_hole(sq[open.back()]) != is_hole(sq[idx])) {  // close the top arc
            acc.emplace_back(sq[open.back()], sq[idx]);
            int saved = open.back();
            open.pop_back();
            walk(idx + 1);
            open.push_back(saved);
            acc.pop_back();
        }
        if (static_cast<int>(acc.size() + open.size()) < need) {  // open a new arc
            open.push_back(static_cast<int>(idx));
            walk(idx + 1);
            open.pop_back();
        }
    };
    walk(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Canonical standard filling: reverse the greedy domino stripping, so the
// first-stripped domino carries the largest label.
std::vector<std::pair<Square, Square>> canonical_fill(const Partition& shape) {
    std::vector<int> q = shape.parts();
    std::vector<std::pair<Square, Square>> strip_order;
    const int r = shape.rank();
    auto remove_one = [&]() -> bool {
        int k = static_cast<int>(q.size());
        for (int i = 0; i < k; ++i) {
            int below = (i + 1 < k) ? q[i + 1] : 0;
            if (q[i] >= 2 && q[i] - 2 >= below && (i + 1) + (q[i] - 1) >= r + 2) {
                strip_order.push_back(ordered({i + 1, q[i] - 1}, {i + 1, q[i]}));
                q[i] -= 2;
                return true;
            }
            int next2 = (i + 2 < k) ? q[i + 2] : 0;
            if (i + 1 < k && q[i] == q[i + 1] && q[i + 1] - 1 >= next2 &&
                (i + 1) + q[i] >= r + 2) {
                strip_order.push_back(ordered({i + 1, q[i]}, {i + 2, q[i]}));
                q[i] -= 1;
                q[i + 1] -= 1;
                return true;
            }
        }
        return false;
    };
    while (remove_one()) {
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
    std::reverse(strip_order.begin(), strip_order.end());
    return strip_order;
}

// The rim ribbon of `shape` spanning the box between squares a and b:
// boundary squares (no lower-right neighbour in the shape) within the box,
// walked from the bottom-left end to the top-right end.
std::vector<Square> rim_ribbon(const Partition& shape, const Square& a, const Square& b) {
    int rlo = std::min(a.row, b.row), rhi = std::max(a.row, b.row);
    int clo = std::min(a.col, b.col), chi = std::max(a.col, b.col);
    std::vector<Square> strip;
    for (int i = rhi; i >= rlo; --i)
        for (int j = clo; j <= chi; ++j) {
            Square s{i, j};
            if (shape.contains(s) && !shape.contains({i + 1, j + 1})) strip.push_back(s);
        }
    for (size_t i = 0; i + 1 < strip.size(); ++i) {
        if (!adjacent(strip[i], strip[i + 1]))
            throw std::logic_error("rim ribbon is not connected");
    }
    return strip;
}

}  // namespace

DominoTableau construct_with_cs(const Partition& p, const CycleStructureSet& sigma) {
    if (auto err = validate_cs_set(p, sigma))
        throw std::invalid_argument("invalid cycle structure set: " + *err);
    const int r = p.rank();
    const CornerHoleData& chd = p.corner_hole_data();

    // Target shape: the heart with one square of each pair filled, keeping
    // the squares already filled in p whenever the pair allows it.
    std::vector<int> parts = heart(p).parts();
    std::vector<std::pair<Square, Square>> todo;  // (S_b, S_f) per pair
    for (const auto& [a, b] : sigma.pairs) {
        Square sb = a, sf = b;
        if (chd.is_filled(b) && !chd.is_filled(a)) std::swap(sb, sf);
        todo.emplace_back(sb, sf);
        if (static_cast<int>(parts.size()) < sb.row) parts.resize(sb.row, 0);
        parts[sb.row - 1] = sb.col;
    }
    Partition shape(parts);
    if (shape.rank() != r) throw std::logic_error("construct_with_cs: target shape has wrong rank");

    // Peel pairs innermost-first (smallest row span), collecting ribbons;
    // each peeled ribbon will carry the largest remaining labels.
    std::vector<std::vector<Square>> ribbons;
    Partition cur = shape;
    std::vector<std::pair<Square, Square>> rest = todo;
    while (!rest.empty()) {
        size_t pick = rest.size();
        int best_span = INT_MAX;
        for (size_t i = 0; i < rest.size(); ++i) {
            int span = std::abs(rest[i].first.row - rest[i].second.row);
            bool inner = true;
            for (size_t j = 0; j < rest.size() && inner; ++j) {
                if (j == i) continue;
                for (const Square& s : {rest[j].first, rest[j].second})
                    if (between(rest[i].first, rest[i].second, s)) inner = false;
            }
            if (inner && span < best_span) {
                best_span = span;
                pick = i;
            }
        }
        if (pick == rest.size()) throw std::logic_error("construct_with_cs: no innermost pair");
        auto [sb, sf] = rest[pick];
        rest.erase(rest.begin() + pick);
        if (!cur.contains(sb) || cur.contains(sf))
            throw std::logic_error("construct_with_cs: pair orientation lost");
        std::vector<Square> ribbon = rim_ribbon(cur, sb, sf);
        if (ribbon.size() % 2 != 0) throw std::logic_error("construct_with_cs: odd ribbon");
        std::vector<int> np = cur.parts();
        for (const Square& s : ribbon) np[s.row - 1] = std::min(np[s.row - 1], s.col - 1);
        ribbons.push_back(std::move(ribbon));
        cur = Partition(np);
        if (cur.rank() != r) throw std::logic_error("construct_with_cs: peel changed the rank");
    }

    // Base filling, then ribbons back on top, last peeled first.
    std::vector<std::pair<Square, Square>> doms = canonical_fill(cur);
    for (auto it = ribbons.rbegin(); it != ribbons.rend(); ++it) {
        const std::vector<Square>& strip = *it;
        size_t t = strip.size() / 2;
        std::vector<std::pair<Square, Square>> walk;
        for (size_t i = 0; i < t; ++i) walk.push_back(ordered(strip[2 * i], strip[2 * i + 1]));
        // Chain constraints along the walk: a step to the right forces a
        // larger label on the next domino, a step upward a smaller one.
        // Assign the smallest free label to the earliest free domino.
        std::vector<int> indeg(t, 0);
        std::vector<std::vector<size_t>> succ(t);
        for (size_t i = 0; i + 1 < t; ++i) {
            const Square& last = strip[2 * i + 1];
            const Square& next = strip[2 * i + 2];
            if (next.row == last.row - 1) {
                succ[i + 1].push_back(i);  // next domino sits above
                indeg[i]++;
            } else {
                succ[i].push_back(i + 1);  // next domino sits to the right
                indeg[i + 1]++;
            }
        }
        std::vector<size_t> order;
        std::vector<int> deg = indeg;
        while (order.size() < t) {
            size_t best = t;
            for (size_t i = 0; i < t; ++i)
                if (deg[i] == 0) {
                    best = i;
                    break;
                }
            if (best == t) throw std::logic_error("construct_with_cs: ribbon order cycle");
            deg[best] = -1;
            order.push_back(best);
            for (size_t s : succ[best]) deg[s]--;
        }
        std::vector<std::pair<Square, Square>> labeled(t);
        for (size_t i = 0; i < t; ++i) labeled[i] = walk[order[i]];
        doms.insert(doms.end(), labeled.begin(), labeled.end());
    }

    DominoTableau out(r, shape, doms);
    if (auto err = validate_tableau(out))
        throw std::logic_error("construct_with_cs: invalid tableau: " + *err);
    if (!(tableau_cs_set(out) == sigma))
        throw std::logic_error("construct_with_cs: cycle structure mismatch");
    return out;
}

namespace {

CycleStructureSet complete_on(const Partition& p, std::vector<Square> remaining,
                              std::set<Square> chosen,
                              std::vector<std::pair<Square, Square>> acc) {
    const int kappa = p.corner_hole_data().kappa;
    while (static_cast<int>(acc.size()) < kappa) {
        bool found = false;
        for (size_t i = 0; i + 1 < remaining.size(); ++i) {
            bool a = chosen.count(remaining[i]) > 0;
            bool b = chosen.count(remaining[i + 1]) > 0;
            if (a == b) continue;
            acc.emplace_back(remaining[i], remaining[i + 1]);
            if (a) chosen.erase(remaining[i]);
            if (b) chosen.erase(remaining[i + 1]);
            remaining.erase(remaining.begin() + i, remaining.begin() + i + 2);
            found = true;
            break;
        }
        if (!found)
            throw std::invalid_argument("no cycle structure set completes the given squares");
    }
    auto sigma = CycleStructureSet::of(std::move(acc));
    if (auto err = validate_cs_set(p, sigma))
        throw std::logic_error("complete_to_cs produced an invalid set: " + *err);
    return sigma;
}

}  // namespace

CycleStructureSet complete_to_cs(const Partition& p, const std::vector<Square>& S) {
    const CornerHoleData& chd = p.corner_hole_data();
    if (static_cast<int>(S.size()) != chd.kappa)
        throw std::invalid_argument("expected exactly " + std::to_string(chd.kappa) + " squares");
    for (const Square& s : S)
        if (!chd.contains_star(s))
            throw std::invalid_argument("square " + s.to_string() + " is not a starred corner or hole");
    std::set<Square> chosen(S.begin(), S.end());
    if (static_cast<int>(chosen.size()) != chd.kappa)
        throw std::invalid_argument("squares are not distinct");
    return complete_on(p, chd.all_star, std::move(chosen), {});
}

CycleStructureSet complete_to_cs_with_pair(const Partition& p, const Square& a, const Square& b,
                                           const std::vector<Square>& S) {
    const CornerHoleData& chd = p.corner_hole_data();
    std::vector<Square> remaining;
    for (const Square& s : chd.all_star)
        if (!(s == a) && !(s == b)) remaining.push_back(s);
    std::set<Square> chosen(S.begin(), S.end());
    chosen.erase(a);
    chosen.erase(b);
    return complete_on(p, std::move(remaining), std::move(chosen), {{a, b}});
}

namespace {

std::vector<std::pair<Square, Square>> removable_dominoes(const Partition& p) {
    std::vector<std::pair<Square, Square>> out;
    const int r = p.rank();
    for (int i = 1; i <= p.rows(); ++i) {
        int len = p.row_length(i);
        if (len >= 2 && len - 2 >= p.row_length(i + 1) && i + len - 1 >= r + 2)
            out.push_back(ordered({i, len - 1}, {i, len}));
        if (len >= 1 && len == p.row_length(i + 1) && len - 1 >= p.row_length(i + 2) &&
            i + len >= r + 2)
            out.push_back(ordered({i, len}, {i + 1, len}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void enumerate_rec(std::vector<int>& parts, int rank, int n,
                   std::vector<std::pair<Square, Square>>& acc,
                   const std::function<void(const DominoTableau&)>& visit) {
    if (n == 0) {
        std::vector<std::pair<Square, Square>> doms(acc.rbegin(), acc.rend());
        visit(DominoTableau(rank, Partition(parts), std::move(doms)));
        return;
    }
    Partition cur(parts);
    for (const auto& d : removable_dominoes(cur)) {
        std::vector<int> np = parts;
        np[d.first.row - 1] -= 1;
        np[d.second.row - 1] -= 1;
        while (!np.empty() && np.back() == 0) np.pop_back();
        acc.push_back(d);
        std::vector<int> saved = parts;
        parts = np;
        enumerate_rec(parts, rank, n - 1, acc, visit);
        parts = saved;
        acc.pop_back();
    }
}

}  // namespace

void enumerate_sdt(const Partition& shape, const std::function<void(const DominoTableau&)>& visit) {
    int core_size = shape.rank() * (shape.rank() + 1) / 2;
    int n = (shape.size() - core_size) / 2;
    std::vector<int> parts = shape.parts();
    std::vector<std::pair<Square, Square>> acc;
    enumerate_rec(parts, shape.rank(), n, acc, visit);
}

std::vector<DominoTableau> enumerate_sdt(const Partition& shape) {
    std::vector<DominoTableau> out;
    enumerate_sdt(shape, [&](const DominoTableau& t) { out.push_back(t); });
    return out;
}

std::vector<DominoTableau> enumerate_sdt(int n, int r) {
    std::vector<DominoTableau> out;
    for (const Partition& p : partitions_of_rank(n, r)) {
        auto ts = enumerate_sdt(p);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

std::int64_t count_sdt(const Partition& shape) {
    static std::map<std::vector<int>, std::int64_t> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(shape.parts());
        if (it != cache.end()) return it->second;
    }
    auto removable = removable_dominoes(shape);
    std::int64_t total = removable.empty() ? 1 : 0;
    for (const auto& d : removable) {
        std::vector<int> np = shape.parts();
        np[d.first.row - 1] -= 1;
        np[d.second.row - 1] -= 1;
        total += count_sdt(Partition(std::move(np)));
    }
    {
        std::unique_lock lock(mutex);
        cache[shape.parts()] = total;
    }
    return total;
}

}  // namespace bcells
