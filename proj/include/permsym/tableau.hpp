#pragma once

#include <algorithm>
#include <compare>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsym/composition.hpp"
#include "permsym/errors.hpp"

namespace permsym {

/// A standard Young tableau: strictly increasing rows and columns filled by
/// [n] exactly once. Boxes use 1-based matrix coordinates (row, col).
class StandardTableau {
public:
    StandardTableau() = default;

    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        int n = 0;
        for (const auto& row : rows_) n += static_cast<int>(row.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                throw std::invalid_argument("tableau: empty row");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw std::invalid_argument("tableau: row lengths must weakly decrease");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                const int v = rows_[r][c];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("tableau: content must be [n] used exactly once");
                seen[static_cast<std::size_t>(v)] = 1;
                if (c > 0 && rows_[r][c - 1] >= v)
                    throw std::invalid_argument("tableau: rows must strictly increase");
                if (r > 0 && rows_[r - 1][c] >= v)
                    throw std::invalid_argument("tableau: columns must strictly increase");
            }
        }
    }

    int size() const {
        int n = 0;
        for (const auto& row : rows_) n += static_cast<int>(row.size());
        return n;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Partition shape() const {
        std::vector<int> parts;
        for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    int value_at(int r, int c) const {
        return rows_[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
    }

    /// (row, col) of a value, 1-based.
    std::pair<int, int> position_of(int value) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < rows_[r].size(); ++c)
                if (rows_[r][c] == value)
                    return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
        throw std::invalid_argument("value not present in tableau");
    }

    /// 1-based row holding a value; 0 when absent.
    int row_of(int value) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (int x : rows_[r])
                if (x == value) return static_cast<int>(r) + 1;
        return 0;
    }

    StandardTableau transposed() const {
        std::vector<std::vector<int>> cols;
        if (!rows_.empty()) cols.resize(rows_[0].size());
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
        StandardTableau out;
        out.rows_ = std::move(cols);
        return out;
    }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
};

/// Des Q = { i : i+1 lies on a row below i }.
inline std::vector<int> tableau_descents(const StandardTableau& q) {
    std::vector<int> rows(static_cast<std::size_t>(q.size()) + 1, 0);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (int v : q.rows()[r]) rows[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
    std::vector<int> out;
    for (int i = 1; i < q.size(); ++i)
        if (rows[static_cast<std::size_t>(i) + 1] > rows[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

/// All standard Young tableaux of a shape, in lexicographic row order.
inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    const std::vector<int>& parts = shape.parts();
    const int n = shape.n();
    std::vector<std::vector<int>> rows(parts.size());
    std::vector<int> filled(parts.size(), 0);
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            std::vector<std::vector<int>> copy = rows;
            out.push_back(StandardTableau(std::move(copy)));
            return;
        }
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (filled[r] >= parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            rows[r].push_back(value);
            ++filled[r];
            self(self, value + 1);
            --filled[r];
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// The row-reading filling: row 1 holds 1..lambda_1, row 2 the next values,
/// and so on. Always a valid standard tableau.
inline StandardTableau superstandard_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row;
        for (int i = 0; i < len; ++i) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

/// Tableau text format: one row per line, space-separated values.
inline StandardTableau parse_tableau(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> row;
        std::string token;
        while (ls >> token) {
            if (token.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("invalid tableau entry '" + token + "'", lineno);
            row.push_back(std::stoi(token));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    try {
        return StandardTableau(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline StandardTableau parse_tableau(const std::string& text) {
    std::istringstream in(text);
    return parse_tableau(in);
}

inline std::string format_tableau(const StandardTableau& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

} // namespace permsym
