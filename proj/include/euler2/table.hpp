#pragma once

#include "euler2/rational.hpp"

#include <string>
#include <vector>

namespace euler2 {

// Rectangular grid of exact values with row/column labels. Cells render
// canonically ("p/q", "/1" suppressed) in every output format.
struct Table {
    std::string caption;
    std::string corner;  // header cell above the row labels, e.g. "n"
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<Rat>> cells;  // cells[row][col]

    // Throws Error when the grid is not rectangular.
    void validate() const;

    std::string to_markdown() const;
    std::string to_csv() const;
    std::string to_json() const;  // single line, stable key order
};

}
