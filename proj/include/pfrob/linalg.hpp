#pragma once

// Exact row reduction over F_q. Rows are dense vectors of element indices;
// pivot rows are kept sparse.

#include <cstddef>
#include <utility>
#include <vector>

#include "pfrob/ffield.hpp"

namespace pfrob {

class RowEchelon {
  public:
    RowEchelon(const FieldCtx &ctx, std::size_t cols) : ctx_(&ctx), cols_(cols), pivot_of_col_(cols, -1) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    bool full() const { return pivots_.size() == cols_; }

    /// Reduces `row` in place against the stored pivots.
    void reduce(std::vector<u64> &row) const {
        for (const auto &pv : pivots_) {
            const u64 c = row[pv.col];
            if (c == 0) continue;
            const u64 nc = ctx_->neg(c);
            for (const auto &[col, val] : pv.entries) row[col] = ctx_->add(row[col], ctx_->mul(nc, val));
        }
    }

    /// Adds the row to the span; returns true when the rank grew.
    bool insert(std::vector<u64> row) {
        reduce(row);
        std::size_t lead = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (row[c] != 0) {
                lead = c;
                break;
            }
        if (lead == cols_) return false;
        const u64 inv = ctx_->inv(row[lead]);
        Pivot pv{lead, {}};
        for (std::size_t c = lead; c < cols_; ++c)
            if (row[c] != 0) pv.entries.emplace_back(c, ctx_->mul(row[c], inv));
        pivot_of_col_[lead] = static_cast<long>(pivots_.size());
        pivots_.push_back(std::move(pv));
        return true;
    }

  private:
    struct Pivot {
        std::size_t col;
        std::vector<std::pair<std::size_t, u64>> entries;
    };

    const FieldCtx *ctx_;
    std::size_t cols_;
    std::vector<Pivot> pivots_;
    std::vector<long> pivot_of_col_;
};

inline std::size_t matrix_rank(const FieldCtx &ctx, const std::vector<std::vector<u64>> &rows, std::size_t cols) {
    RowEchelon ech(ctx, cols);
    for (const auto &r : rows) {
        ech.insert(r);
        if (ech.full()) break;
    }
    return ech.rank();
}

/// Basis of { v : M v = 0 } via reduced row echelon form.
inline std::vector<std::vector<u64>> nullspace(const FieldCtx &ctx, std::vector<std::vector<u64>> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const u64 inv = ctx.inv(rows[r][c]);
        for (auto &x : rows[r]) x = ctx.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 f = ctx.neg(rows[i][c]);
            for (std::size_t j = 0; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] = ctx.add(rows[i][j], ctx.mul(f, rows[r][j]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<u64> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = ctx.neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pfrob
