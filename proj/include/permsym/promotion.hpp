#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permsym/errors.hpp"
#include "permsym/tableau.hpp"

namespace permsym {

/// The boxes visited by one promotion slide, with the value window [a,b]
/// it operated in. Boxes are 1-based (row, col), consecutive boxes adjacent.
struct PromotionTrace {
    int low = 0;
    int high = 0;
    std::vector<std::pair<int, int>> path;
};

struct PromotionResult {
    StandardTableau tableau;
    PromotionTrace trace;
};

namespace detail {

struct TableauGrid {
    explicit TableauGrid(const StandardTableau& t) : cells(t.rows()) {}

    std::vector<std::vector<int>> cells;

    bool in_shape(int r, int c) const {
        return r >= 0 && r < static_cast<int>(cells.size()) && c >= 0 &&
               c < static_cast<int>(cells[static_cast<std::size_t>(r)].size());
    }
    int& at(int r, int c) { return cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    int get(int r, int c) const {
        return cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    std::pair<int, int> find(int value) const {
        for (std::size_t r = 0; r < cells.size(); ++r)
            for (std::size_t c = 0; c < cells[r].size(); ++c)
                if (cells[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
        throw std::invalid_argument("value not present in tableau");
    }
};

} // namespace detail

/// The promotion operator on the value window [a,b]: delete a, slide along
/// the a-promotion path inside the skew tableau of values in [a,b], write
/// b+1 into the vacated box, then decrement the window by 1. Boxes holding
/// values outside [a,b] are untouched.
inline PromotionResult promote(const StandardTableau& p, int a, int b) {
    const int n = p.size();
    if (a < 1 || a > b || b > n) throw std::invalid_argument("promote: need 1 <= a <= b <= n");
    detail::TableauGrid grid(p);
    auto in_window = [&](int r, int c) {
        return grid.in_shape(r, c) && grid.get(r, c) >= a && grid.get(r, c) <= b;
    };

    PromotionTrace trace;
    trace.low = a;
    trace.high = b;
    auto [r, c] = grid.find(a);
    trace.path.emplace_back(r + 1, c + 1);
    // Maximal a-promotion path: step to whichever in-window neighbor (below
    // or right) holds the smaller value; neighbor values are necessarily
    // distinct, so there is never a tie to break.
    while (true) {
        const bool down = in_window(r + 1, c);
        const bool right = in_window(r, c + 1);
        if (!down && !right) break;
        int nr = r, nc = c;
        if (down && right) {
            if (grid.get(r + 1, c) < grid.get(r, c + 1)) {
                nr = r + 1;
            } else {
                nc = c + 1;
            }
        } else if (down) {
            nr = r + 1;
        } else {
            nc = c + 1;
        }
        grid.at(r, c) = grid.get(nr, nc); // slide toward the vacancy
        r = nr;
        c = nc;
        trace.path.emplace_back(r + 1, c + 1);
    }
    // The window boxes now hold [a+1, b] plus the vacancy at the path's
    // end. Only they are decremented: an original b+1 outside the window
    // stays put.
    grid.at(r, c) = 0;
    for (auto& row : grid.cells)
        for (int& v : row)
            if (v >= a + 1 && v <= b) --v;
    grid.at(r, c) = b; // the written b+1, after the decrement
    return {StandardTableau(std::move(grid.cells)), std::move(trace)};
}

/// Exact inverse of promote: delete b, slide back along the reverse path
/// (choosing the larger in-window neighbor above or to the left), increment
/// the window, and write a into the freed box.
inline PromotionResult inverse_promote(const StandardTableau& p, int a, int b) {
    const int n = p.size();
    if (a < 1 || a > b || b > n) throw std::invalid_argument("inverse_promote: need 1 <= a <= b <= n");
    detail::TableauGrid grid(p);
    auto in_window = [&](int r, int c) {
        return grid.in_shape(r, c) && grid.get(r, c) >= a && grid.get(r, c) <= b;
    };

    PromotionTrace trace;
    trace.low = a;
    trace.high = b;
    auto [r, c] = grid.find(b);
    trace.path.emplace_back(r + 1, c + 1);
    while (true) {
        const bool up = in_window(r - 1, c);
        const bool left = in_window(r, c - 1);
        if (!up && !left) break;
        int nr = r, nc = c;
        if (up && left) {
            if (grid.get(r - 1, c) > grid.get(r, c - 1)) {
                nr = r - 1;
            } else {
                nc = c - 1;
            }
        } else if (up) {
            nr = r - 1;
        } else {
            nc = c - 1;
        }
        grid.at(r, c) = grid.get(nr, nc);
        r = nr;
        c = nc;
        trace.path.emplace_back(r + 1, c + 1);
    }
    grid.at(r, c) = 0;
    for (auto& row : grid.cells)
        for (int& v : row)
            if (v >= a && v <= b - 1) ++v;
    grid.at(r, c) = a;
    return {StandardTableau(std::move(grid.cells)), std::move(trace)};
}

/// The staged operator for V = {v_1 < ... < v_{n-k}}, k = n - |V|:
/// apply the window promotions right to left, starting with v_{n-k} on
/// [v_{n-k}, n] and ending with v_1 on [v_1, k+1].
inline std::vector<PromotionResult> promote_v_stages(const StandardTableau& p,
                                                     std::vector<int> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("promote_v: V has repeated elements");
    const int n = p.size();
    for (int x : v)
        if (x < 1 || x > n) throw std::invalid_argument("promote_v: V not contained in [n]");
    const int k = n - static_cast<int>(v.size());
    std::vector<PromotionResult> stages;
    StandardTableau cur = p;
    for (int i = static_cast<int>(v.size()); i >= 1; --i) {
        stages.push_back(promote(cur, v[static_cast<std::size_t>(i) - 1], k + i));
        cur = stages.back().tableau;
    }
    return stages;
}

/// The composite promotion; the identity when V is empty.
inline StandardTableau promote_v(const StandardTableau& p, const std::vector<int>& v) {
    std::vector<PromotionResult> stages = promote_v_stages(p, v);
    return stages.empty() ? p : stages.back().tableau;
}

} // namespace permsym
