#include "bcells/domino_rs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bcells {

namespace {

using Domino = std::pair<Square, Square>;

Domino make_domino(Square a, Square b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

// Working state of the insertion algorithm.  Unlike a finished tableau the
// label set may have gaps while only part of the window has been read.
struct InsertionState {
    int rank = 0;
    std::map<int, Domino> dominoes;

    // Row lengths of the core plus every domino with label < bound.
    std::vector<int> shape_below(int bound) const {
        std::vector<int> rows(rank, 0);
        for (int i = 0; i < rank; ++i) rows[i] = rank - i;
        auto bump = [&rows](const Square& s) {
            if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
            rows[s.row - 1]++;
        };
        for (const auto& [label, d] : dominoes) {
            if (label >= bound) continue;
            bump(d.first);
            bump(d.second);
        }
        return rows;
    }

    std::vector<int> total_shape() const { return shape_below(INT32_MAX); }
};

bool in_shape(const std::vector<int>& rows, const Square& s) {
    return s.row >= 1 && s.col >= 1 && s.row <= static_cast<int>(rows.size()) &&
           s.col <= rows[s.row - 1];
}

void add_to_shape(std::vector<int>& rows, const Square& s) {
    if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
    rows[s.row - 1]++;
}

int column_length(const std::vector<int>& rows, int col) {
    int d = 0;
    while (d < static_cast<int>(rows.size()) && rows[d] >= col) ++d;
    return d;
}

// One Garfinkle insertion step: enter the domino labeled m (horizontal for
// positive letters, vertical for negative) at the end of the first row or
// column of the shape spanned by the smaller labels, then re-place every
// larger label in increasing order.  A displaced domino keeps its position
// when it misses the growing shape, pivots around its free square when it
// is half covered, and when fully covered re-enters at the end of the next
// row (horizontal) or column (vertical) of the shape grown so far.
void insert_letter(InsertionState& state, int m, bool positive) {
    std::vector<int> lambda = state.shape_below(m);
    Domino placed;
    if (positive) {
        int len = lambda.empty() ? 0 : lambda[0];
        placed = make_domino({1, len + 1}, {1, len + 2});
    } else {
        int depth = column_length(lambda, 1);
        placed = make_domino({depth + 1, 1}, {depth + 2, 1});
    }
    add_to_shape(lambda, placed.first);
    add_to_shape(lambda, placed.second);

    std::vector<int> larger;
    for (const auto& [label, d] : state.dominoes)
        if (label > m) larger.push_back(label);
    std::sort(larger.begin(), larger.end());

    state.dominoes[m] = placed;
    for (int l : larger) {
        Domino old = state.dominoes[l];
        bool a_in = in_shape(lambda, old.first);
        bool b_in = in_shape(lambda, old.second);
        Domino next = old;
        if (a_in && b_in) {
            const auto& [p, q] = old;
            if (p.row == q.row) {
                int row = p.row + 1;
                int len = row <= static_cast<int>(lambda.size()) ? lambda[row - 1] : 0;
                next = make_domino({row, len + 1}, {row, len + 2});
            } else {
                int col = p.col + 1;
                int depth = column_length(lambda, col);
                next = make_domino({depth + 1, col}, {depth + 2, col});
            }
        } else if (a_in || b_in) {
            // rows left-justified and columns top-justified: the covered
            // square is the first of the pair
            const Square& free_sq = old.second;
            if (old.first.row == old.second.row)
                next = make_domino(free_sq, {free_sq.row + 1, free_sq.col});
            else
                next = make_domino(free_sq, {free_sq.row, free_sq.col + 1});
        }
        state.dominoes[l] = next;
        add_to_shape(lambda, next.first);
        add_to_shape(lambda, next.second);
    }
}

DominoTableau state_to_tableau(const InsertionState& state) {
    std::vector<Domino> doms;
    int expect = 1;
    for (const auto& [label, d] : state.dominoes) {
        if (label != expect++)
            throw std::logic_error("insertion state has label gaps");
        doms.push_back(d);
    }
    std::vector<int> rows = state.total_shape();
    return DominoTableau(state.rank, Partition(rows), std::move(doms));
}

Domino shape_growth(const std::vector<int>& before, const std::vector<int>& after) {
    std::vector<Square> grown;
    for (int i = 1; i <= static_cast<int>(after.size()); ++i) {
        int b = i <= static_cast<int>(before.size()) ? before[i - 1] : 0;
        for (int j = b + 1; j <= after[i - 1]; ++j) grown.push_back({i, j});
    }
    if (grown.size() != 2)
        throw std::logic_error("insertion step must grow the shape by one domino");
    return make_domino(grown[0], grown[1]);
}

}  // namespace

TableauPair g_r(const SignedPermutation& w, int rank) {
    if (rank < 0) throw std::invalid_argument("rank must be non-negative");
    InsertionState state;
    state.rank = rank;
    std::vector<Domino> recording;
    for (int k = 1; k <= w.n(); ++k) {
        int letter = w.window()[k - 1];
        std::vector<int> before = state.total_shape();
        insert_letter(state, std::abs(letter), letter > 0);
        recording.push_back(shape_growth(before, state.total_shape()));
    }
    DominoTableau left = state_to_tableau(state);
    DominoTableau right(rank, left.shape(), std::move(recording));
    return {std::move(left), std::move(right)};
}

namespace {

// Reverse of insert_letter for a known inserted label m: recover every
// larger label's previous position.  The shape seen when label l was
// re-placed is determined by the final positions of the smaller labels, so
// candidate preimages are local; the rare ambiguity between the pivot and
// shift cases is resolved by requiring the old positions to tile the
// pre-insertion shape exactly.
struct UnInsert {
    const InsertionState& state;
    std::vector<int> larger;          // labels > m, descending
    std::vector<std::vector<int>> lambdas;  // shape below each such label
    std::map<int, Domino> old_pos;
    std::set<Square> region;          // cells the old positions must tile
    std::vector<std::map<int, Domino>> solutions;

    void solve(size_t idx) {
        if (idx == larger.size()) {
            if (region.empty()) solutions.push_back(old_pos);
            return;
        }
        int l = larger[idx];
        const std::vector<int>& lambda = lambdas[idx];
        Domino cur = state.dominoes.at(l);
        const auto& [p, q] = cur;
        bool horizontal = p.row == q.row;
        std::vector<Domino> candidates;
        candidates.push_back(cur);  // was never displaced
        if (horizontal) {
            Domino pivot = make_domino({p.row - 1, p.col}, p);
            if (p.row > 1 && in_shape(lambda, pivot.first) && !in_shape(lambda, p))
                candidates.push_back(pivot);
            // fully displaced dominoes re-entered at the row end, so the old
            // position can be anywhere in the previous row inside the shape
            int len = p.row <= static_cast<int>(lambda.size()) ? lambda[p.row - 1] : 0;
            if (p.row > 1 && p.col == len + 1) {
                for (int c = 1; c + 1 <= (p.row - 1 <= static_cast<int>(lambda.size())
                                              ? lambda[p.row - 2]
                                              : 0);
                     ++c)
                    candidates.push_back(make_domino({p.row - 1, c}, {p.row - 1, c + 1}));
            }
        } else {
            Domino pivot = make_domino({p.row, p.col - 1}, p);
            if (p.col > 1 && in_shape(lambda, pivot.first) && !in_shape(lambda, p))
                candidates.push_back(pivot);
            int depth = column_length(lambda, p.col);
            if (p.col > 1 && p.row == depth + 1) {
                int prev_depth = column_length(lambda, p.col - 1);
                for (int r = 1; r + 1 <= prev_depth; ++r)
                    candidates.push_back(make_domino({r, p.col - 1}, {r + 1, p.col - 1}));
            }
        }
        for (const Domino& cand : candidates) {
            if (!region.count(cand.first) || !region.count(cand.second)) continue;
            region.erase(cand.first);
            region.erase(cand.second);
            old_pos[l] = cand;
            solve(idx + 1);
            region.insert(cand.first);
            region.insert(cand.second);
            old_pos.erase(l);
        }
    }
};

// A partial insertion state (labels may have gaps) is standard when its
// cells form a Young diagram over the core and labels weakly increase
// along rows and columns.
bool state_is_standard(const InsertionState& state) {
    std::vector<int> rows = state.total_shape();
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] < rows[i + 1]) return false;
    std::map<Square, int> at;
    for (const auto& [label, d] : state.dominoes) {
        at[d.first] = label;
        at[d.second] = label;
    }
    for (const auto& [s, label] : at) {
        if (s.diag() < state.rank + 2) return false;  // domino on the core
        for (const Square& next : {Square{s.row, s.col + 1}, Square{s.row + 1, s.col}}) {
            auto it = at.find(next);
            if (it != at.end() && it->second < label) return false;
        }
    }
    return true;
}

bool shapes_equal(const std::vector<int>& a, const std::vector<int>& b) {
    auto strip = [](std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    return strip(a) == strip(b);
}

// Undo the insertion step that grew the shape at `removed`; returns the
// extracted signed letter.
int un_insert(InsertionState& state, const Domino& removed) {
    std::vector<int> total = state.total_shape();
    std::vector<int> target = total;
    for (const Square& s : {removed.first, removed.second}) {
        if (!in_shape(total, s))
            throw std::invalid_argument("recorded growth squares missing from the shape");
        target[s.row - 1]--;
    }
    for (const Square& s : {removed.first, removed.second})
        if (s.col <= target[s.row - 1])
            throw std::invalid_argument("recorded growth squares are not at row ends");
    for (size_t i = 0; i + 1 < target.size(); ++i)
        if (target[i] < target[i + 1])
            throw std::invalid_argument("recorded growth squares are not removable");

    for (const auto& [m, dom] : state.dominoes) {
        // the inserted domino never moves again, so it must still sit at
        // its entry position: end of row one or of column one
        std::vector<int> base = state.shape_below(m);
        bool positive;
        int len = base.empty() ? 0 : base[0];
        int depth = column_length(base, 1);
        if (dom == make_domino({1, len + 1}, {1, len + 2})) {
            positive = true;
        } else if (dom == make_domino({depth + 1, 1}, {depth + 2, 1})) {
            positive = false;
        } else {
            continue;
        }

        UnInsert rev{state, {}, {}, {}, {}};
        for (auto it = state.dominoes.rbegin(); it != state.dominoes.rend(); ++it)
            if (it->first > m) rev.larger.push_back(it->first);
        for (int l : rev.larger) rev.lambdas.push_back(state.shape_below(l));
        for (int i = 1; i <= static_cast<int>(target.size()); ++i)
            for (int j = 1; j <= target[i - 1]; ++j)
                if (!in_shape(base, {i, j})) rev.region.insert({i, j});
        if (rev.region.size() != 2 * rev.larger.size()) continue;
        rev.solve(0);

        for (const auto& assignment : rev.solutions) {
            InsertionState prev;
            prev.rank = state.rank;
            for (const auto& [label, d] : state.dominoes) {
                if (label == m) continue;
                prev.dominoes[label] = label > m ? assignment.at(label) : d;
            }
            // confirm by replaying the forward step from a standard state
            if (!state_is_standard(prev)) continue;
            InsertionState replay = prev;
            insert_letter(replay, m, positive);
            if (replay.dominoes == state.dominoes && shapes_equal(prev.total_shape(), target)) {
                state = std::move(prev);
                return positive ? m : -m;
            }
        }
    }
    throw std::invalid_argument("tableau pair is not in the image of the insertion map");
}

}  // namespace

SignedPermutation g_r_inverse(const TableauPair& pair) {
    if (auto err = validate_tableau(pair.left))
        throw std::invalid_argument("left tableau invalid: " + *err);
    if (auto err = validate_tableau(pair.right))
        throw std::invalid_argument("right tableau invalid: " + *err);
    if (!(pair.left.shape() == pair.right.shape()))
        throw std::invalid_argument("tableaux have different shapes");
    if (pair.left.rank() != pair.right.rank())
        throw std::invalid_argument("tableaux have different ranks");

    const int n = pair.left.domino_count();
    InsertionState state;
    state.rank = pair.left.rank();
    for (int k = 1; k <= n; ++k) state.dominoes[k] = pair.left.domino(k);

    std::vector<int> window(n);
    for (int k = n; k >= 1; --k) window[k - 1] = un_insert(state, pair.right.domino(k));
    return SignedPermutation(std::move(window));
}

}  // namespace bcells
