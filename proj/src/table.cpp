#include "euler2/table.hpp"

#include "euler2/errors.hpp"

#include <json.hpp>

namespace euler2 {

void Table::validate() const {
    if (cells.size() != row_labels.size()) {
        throw Error("table has " + std::to_string(cells.size()) + " rows, expected " +
                    std::to_string(row_labels.size()));
    }
    for (const auto& row : cells) {
        if (row.size() != col_labels.size()) {
            throw Error("table row has " + std::to_string(row.size()) +
                        " cells, expected " + std::to_string(col_labels.size()));
        }
    }
}

std::string Table::to_markdown() const {
    validate();
    std::string out = "| " + corner + " |";
    for (const auto& label : col_labels) {
        out += " " + label + " |";
    }
    out += "\n|";
    for (std::size_t i = 0; i <= col_labels.size(); ++i) {
        out += " --- |";
    }
    out += "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out += "| " + row_labels[r] + " |";
        for (const auto& cell : cells[r]) {
            out += " " + to_string(cell) + " |";
        }
        out += "\n";
    }
    return out;
}

std::string Table::to_csv() const {
    validate();
    // No quoting needed: canonical rationals never contain commas.
    std::string out = corner;
    for (const auto& label : col_labels) {
        out += "," + label;
    }
    out += "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out += row_labels[r];
        for (const auto& cell : cells[r]) {
            out += "," + to_string(cell);
        }
        out += "\n";
    }
    return out;
}

std::string Table::to_json() const {
    validate();
    nlohmann::json j;
    j["caption"] = caption;
    j["corner"] = corner;
    j["row_labels"] = row_labels;
    j["col_labels"] = col_labels;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : cells) {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& cell : row) {
            cols.push_back(to_string(cell));
        }
        rows.push_back(cols);
    }
    j["cells"] = rows;
    return j.dump();
}

}
