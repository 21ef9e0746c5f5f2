#pragma once

// Regenerated tables and cell-by-cell diffs against the printed baselines.

#include <string>
#include <vector>

#include <json.hpp>

#include "burniat/hypothesis_checker.hpp"

namespace burniat {

enum class Format { md, csv, json };
Format parse_format(const std::string& name);

struct Cell {
    std::string md;  // Unicode display
    std::string plain;  // ASCII display, used by csv
    nlohmann::ordered_json raw;  // value from the computation pipeline
};

struct RenderedTable {
    std::string id;  // T1, T2, T3, theta-table, theta-worked, hodge-X, checker
    std::string title;
    std::vector<std::string> columns;  // first column is the row key
    std::vector<std::string> keys;
    std::vector<std::vector<Cell>> rows;  // excluding the key column
    std::vector<std::string> notes;
};

RenderedTable table1();
RenderedTable table2();
RenderedTable table3();
RenderedTable theta_table();
RenderedTable theta_worked_table();
RenderedTable hodge_x_table();
RenderedTable checker_table(const std::vector<CheckReport>& reports);

// "1", "2", "3", "theta", "theta-worked", "hodge-x".
RenderedTable table_by_name(const std::string& which);

std::string render(const RenderedTable& t, Format f);

// A machine-checked consistency test applied to both the printed and the recomputed value.
struct Witness {
    std::string name;
    bool printed_ok = true;
    bool recomputed_ok = true;
    std::string detail;

    bool discriminates() const { return !printed_ok && recomputed_ok; }
};

struct DiffCell {
    std::string row;
    std::string column;
    std::string printed;
    std::string recomputed;
    bool match = true;
    std::vector<Witness> witnesses;

    bool witnessed() const;
};

struct DiffReport {
    std::string table;
    std::vector<DiffCell> cells;

    int matches() const;
    int mismatches() const;
    int unwitnessed() const;  // mismatches without a discriminating witness
    std::vector<std::string> mismatched_rows() const;
};

DiffReport diff_table1();
DiffReport diff_table2();
DiffReport diff_table3();
DiffReport diff_theta_table();
DiffReport diff_theta_worked();
DiffReport diff_hodge_x();
DiffReport diff_by_name(const std::string& which);

std::string render(const DiffReport& d, Format f);

}  // namespace burniat
