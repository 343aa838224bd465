// The worker x position grid as a digraph with implicit arcs: within a row,
// arcs point from each vertex to every live vertex the worker prefers more;
// within a column, to every live vertex the position's firm prefers more.
// Arcs are never materialized; rank comparisons stand in for them. Per-row
// and per-column cursors track the best and worst live entry so zero
// out-degree tests and deletions stay cheap.
#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <vector>

#include "smc/split.hpp"

namespace smc {

// Search annotation on a live vertex: required in the matching, excluded
// from it, or unconstrained. Discarded when the vertex is deleted.
enum class Mark : unsigned char { none, keep, avoid };

class MatchingDigraph {
public:
    // All acceptable pairs start live and unmarked; cursors point at each
    // row's and column's most and least preferred live entries.
    static MatchingDigraph build(std::shared_ptr<const SplitInstance> split);
    static MatchingDigraph build(const Instance& inst) { return build(split_shared(inst)); }

    // Copies are mutation-independent; the immutable preference tables are
    // shared. A digraph has a single writer; snapshots may diverge freely.
    MatchingDigraph snapshot() const { return *this; }

    int rows() const { return split_->rows; }
    int cols() const { return split_->cols; }
    const SplitInstance& split() const { return *split_; }
    std::shared_ptr<const SplitInstance> split_ptr() const { return split_; }

    bool live(int row, int col) const { return live_[cell(row, col)] != 0; }
    bool live(Vertex v) const { return live(v.row, v.col); }
    int live_count() const { return live_count_; }
    std::vector<Vertex> live_vertices() const;    // row-major order
    std::vector<int> live_cols_in_row(int row) const;  // best first
    std::vector<int> live_rows_in_col(int col) const;  // best first

    // Count of live strictly-more-preferred columns in v's row (arcs out of v
    // within the row); v must be live.
    int out_degree_row(Vertex v) const;
    // Count of live strictly-more-preferred workers in v's column.
    int out_degree_col(Vertex v) const;

    // The row's most preferred live column, or -1 for an empty row. A live v
    // has out_degree_row(v) == 0 iff v.col == row_best(v.row).
    int row_best(int row) const { return cursor_col(row, row_best_[row]); }
    int row_worst(int row) const { return cursor_col(row, row_worst_[row]); }
    int col_best(int col) const { return cursor_row(col, col_best_[col]); }
    int col_worst(int col) const { return cursor_row(col, col_worst_[col]); }
    bool row_empty(int row) const { return row_best(row) < 0; }
    bool col_empty(int col) const { return col_best(col) < 0; }
    int nonempty_row_count() const;
    int nonempty_col_count() const;

    // Removes v and recomputes the four affected cursors by scanning onward
    // from their previous positions; no other vertex changes state.
    void delete_vertex(Vertex v);

    Mark mark(Vertex v) const { return mark_[cell(v.row, v.col)]; }
    void set_mark(Vertex v, Mark m) { mark_[cell(v.row, v.col)] = m; }

    // Structural equality: same shape, live set, and marks.
    bool operator==(const MatchingDigraph& other) const
    {
        return live_ == other.live_ && mark_ == other.mark_;
    }

private:
    int cell(int row, int col) const { return row * split_->cols + col; }
    int cursor_col(int row, int pos) const
    {
        const auto& pref = split_->row_pref[row];
        return pos >= 0 && pos < static_cast<int>(pref.size()) ? pref[pos] : -1;
    }
    int cursor_row(int col, int pos) const
    {
        const auto& pref = split_->col_pref[col];
        return pos >= 0 && pos < static_cast<int>(pref.size()) ? pref[pos] : -1;
    }

    std::shared_ptr<const SplitInstance> split_;
    std::vector<char> live_;
    std::vector<Mark> mark_;
    std::vector<int> row_best_, row_worst_;   // positions into row_pref
    std::vector<int> col_best_, col_worst_;   // positions into col_pref
    int live_count_ = 0;
};

}  // namespace smc
