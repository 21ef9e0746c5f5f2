#pragma once

// Printed values from the published tables, kept verbatim (including
// apparent misprints) for diffing only. Nothing in the computation path
// includes this header.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/characters.hpp"
#include "burniat/hodge_engine.hpp"
#include "burniat/theta_model.hpp"

namespace burniat {

struct PrintedTable1Row {
    std::string family;
    std::array<std::string, 3> generators;  // token words
    std::string invariant_forms;  // "none", "dz3", "dz1,dz2", "all"
    std::string chi_A;  // "+--"
};

struct PrintedTable2Row {
    std::string family;
    std::string U;
    std::string W;
    std::string H11;
    HodgeTriple b2_fix;
    HodgeTriple b2_var;
    std::string note;  // provenance of any normalization
};

struct PrintedTable3Row {
    std::string family;
    std::vector<long long> type;
    std::vector<long long> trace_H2var;
    std::vector<long long> trace_chiA;
    long long mult_chiA = 0;
};

struct PaperBaseline {
    std::string family;
    bool trusted = false;  // always false: printed values are diff targets only
    std::optional<PrintedTable1Row> table1;
    std::optional<PrintedTable2Row> table2;
    std::optional<PrintedTable3Row> table3;
    std::optional<std::string> sections;  // section-space statement
};

PaperBaseline baseline(std::string_view name);

const std::vector<PrintedTable1Row>& printed_table1();
const std::vector<PrintedTable2Row>& printed_table2();
const std::vector<PrintedTable3Row>& printed_table3();

// 8x7 grid of theta signs against i1 ... i123.
SignTable printed_theta_table();
// Worked generator tables: S2 and S6 columns.
SignTable printed_worked_table(std::string_view family);

struct PrintedXInvariants {
    long long euler = 48, b1 = 6, b2 = 58;
    HodgeTriple var{7, 29, 7};
    HodgeTriple fix{3, 9, 3};
};
PrintedXInvariants printed_x_invariants();

// Case lists for p = 0..3.
std::array<long long, 4> printed_trace_H1_cases();
std::array<long long, 4> printed_trace_H2A_cases();
std::array<long long, 4> printed_trace_H2var_cases();

struct PrintedSicilian {
    long long h11_Y = 6;
    long long pg_Y = 1;
    long long q_Y = 1;
    long long c1sq_Y = 6;
    long long h20var_trivial = 0;
    long long h11var_trivial = 1;
    std::string sections = "(++)(+-)(-+)(--)";
    std::string h20var = "(+-)(-+)(--)";
};
PrintedSicilian printed_sicilian();

// Parses table expressions such as "(+-+)(+--) + 1", "2(---) + 1", "2·(+--) + 1", "3·1".
CharMultiset parse_multiset_expr(std::string_view text, int rank);

}  // namespace burniat
