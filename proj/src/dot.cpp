#include "smc/dot.hpp"

namespace smc {

namespace {

const char* fill_for(Mark m)
{
    switch (m) {
        case Mark::keep: return "palegreen";
        case Mark::avoid: return "lightcoral";
        default: return "white";
    }
}

}  // namespace

void write_dot(std::ostream& os, const MatchingDigraph& d)
{
    const SplitInstance& sp = d.split();
    os << "digraph matching {\n";
    os << "  node [shape=box, style=filled, fontsize=10];\n";
    for (int r = 0; r < d.rows(); ++r)
        for (int c : d.live_cols_in_row(r))
            os << "  v" << r << "_" << c << " [label=\"(" << sp.row_name(r) << ","
               << sp.col_name(c) << ")\", pos=\"" << c << "," << -r << "!\", fillcolor=\""
               << fill_for(d.mark({r, c})) << "\"];\n";
    // Arcs point toward the more preferred vertex; only neighbours in the
    // surviving preference order are drawn.
    for (int r = 0; r < d.rows(); ++r) {
        const auto cols = d.live_cols_in_row(r);
        for (size_t i = 1; i < cols.size(); ++i)
            os << "  v" << r << "_" << cols[i] << " -> v" << r << "_" << cols[i - 1] << ";\n";
    }
    for (int c = 0; c < d.cols(); ++c) {
        const auto rows = d.live_rows_in_col(c);
        for (size_t i = 1; i < rows.size(); ++i)
            os << "  v" << rows[i] << "_" << c << " -> v" << rows[i - 1] << "_" << c
               << " [style=dashed];\n";
    }
    os << "}\n";
}

}  // namespace smc
