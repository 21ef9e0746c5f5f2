#include "burniat/baseline.hpp"

#include <algorithm>
#include <cctype>

namespace burniat {

namespace {

using V = std::vector<long long>;

const std::vector<PrintedTable1Row> kTable1 = {
    {"S1", {"i1 i2 i3", "i2 i3 i123", "i3 i23"}, "none", "---"},
    {"S2", {"i1 i3 i23", "i3 i13", "i2 i23"}, "none", "+--"},
    {"S3", {"i1 i3 i23", "i3 i123", "i2 i3 i12"}, "none", "+++"},
    {"S4", {"i1 i3 i12", "i2 i123", "i2 i3 i23"}, "none", "+++"},
    {"S5", {"i1 i3 i13", "i3 i123", "i3 i23"}, "dz3", "++-"},
    {"S6", {"i2 i3 i123", "i2 i3 i13", "i3 i23"}, "dz3", "-+-"},
    {"S7", {"i1 i3 i23", "i3 i123", "i2 i12"}, "dz3", "++-"},
    {"S8", {"i1 i3 i23", "i2 i3 i123", "i2 i3 i13"}, "dz3", "+-+"},
    {"S9", {"i1 i2 i3 i13", "i3 i123", "i2 i12"}, "dz3", "-+-"},
    {"S10", {"i1 i2 i3 i13", "i2 i3 i123", "i3 i23"}, "dz3", "---"},
    {"S11", {"i1 i2 i23", "i2 i123", "i2 i3 i12"}, "dz2", "+++"},
    {"S12", {"i1 i3 i13", "i3 i123", "i2 i3 i23"}, "dz3", "+++"},
    {"S13", {"i1 i2 i3 i23", "i2 i3 i123", "i2 i12"}, "dz2,dz3", "---"},
    {"S14", {"i1 i13", "i12 i123", "i2 i23"}, "dz1,dz2", "---"},
    {"S15", {"i1 i3 i13", "i12 i123", "i2 i3 i23"}, "dz1,dz2", "+-+"},
    {"S16", {"i1 i3 i13", "i3 i12 i123", "i2 i3 i23"}, "all", "+++"},
};

const std::string kH11 = "3·1 + 2W";

const std::vector<PrintedTable2Row> kTable2 = {
    {"S1", "(-++)(--+)(-+-)", "(+-+)(++-)(+--)", kH11, {0, 3, 0}, {0, 4, 0}, ""},
    {"S2", "(-++)(+-+)(++-)", "(+--)(-+-)(--+)", kH11, {0, 3, 0}, {0, 4, 0}, ""},
    {"S3", "(---)(--+)(++-)", "(++-)(--+)(---)", kH11, {0, 3, 0}, {0, 4, 0}, ""},
    {"S4", "(+-+)(-++)(--+)", "(--+)(-++)(+-+)", kH11, {0, 3, 0}, {0, 4, 0}, ""},
    {"S5", "(+-+)(+--) + 1", "(+-+)(+--)(++-)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S6", "(--+)(+--) + 1", "(--+)(+--)(-+-)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S7", "(---)(-++) + 1", "(---)(-++)(+--)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S8", "(---)(-++) + 1", "(---)(-++)(+--)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S9", "(+--)(--+) + 1", "(+--)(--+)(-++)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S10", "(+-+)(-+-) + 1", "(+-+)(-+-)(---)", kH11, {0, 3, 0}, {1, 3, 1}, ""},
    {"S11", "2(---) + 1", "2(---) + 1", kH11, {1, 5, 1}, {0, 1, 0}, ""},
    {"S12", "2(+-+) + 1", "2(+-+) + 1", kH11, {1, 5, 1}, {0, 1, 0}, ""},
    {"S13", "(+--) + 2·1", "2·(+--) + 1", kH11, {1, 5, 1}, {1, 3, 1}, ""},
    {"S14", "(---) + 2·1", "2·(---) + 1", kH11, {1, 5, 1}, {1, 3, 1}, ""},
    {"S15", "(+-+) + 2·1", "2·(+-+) + 1", kH11, {1, 5, 1}, {1, 3, 1},
     "W printed as \"2·+-+) + 1\" with an unbalanced parenthesis; stored as 2·(+-+) + 1"},
    {"S16", "3·1", "3·1", kH11, {3, 9, 3}, {0, 1, 0}, "b2_fix printed as \"(3,9,3\"; stored as (3,9,3)"},
};

const std::vector<PrintedTable3Row> kTable3 = {
    {"S5", V{3, 3, 1, 1, 1, 2, 2, 2}, V{43, -5, -5, -5, -5, 3, 3, 3}, V{1, 1, 1, -1, 1, -1, -1, -1}, 3},
    {"S6", V{3, 2, 1, 2, 2, 1, 2, 2}, V{43, 3, -5, 3, -5, 3, -5, 3}, V{1, -1, 1, -1, -1, 1, -1, 1}, 6},
    {"S7", V{3, 1, 2, 2, 2, 2, 3, 1}, V{43, -5, 3, 3, 3, 3, -5, -5}, V{1, 1, 1, -1, 1, -1, -1, -1}, 6},
    {"S8", V{3, 1, 2, 2, 2, 2, 3, 1}, V{43, -5, 3, 3, 3, 3, -5, -5}, V{1, 1, -1, 1, -1, 1, -1, -1}, 6},
    {"S9", V{3, 2, 1, 2, 2, 1, 2, 3}, V{43, 3, -5, 3, -5, 3, -5, -5}, V{1, -1, 1, -1, -1, 1, -1, 1}, 5},
    {"S10", V{3, 2, 2, 2, 1, 3, 1, 2}, V{43, -5, -5, -5, -5, -5, -5, 3}, V{1, -1, -1, -1, 1, 1, 1, -1}, 5},
    {"S13", V{3, 3, 2, 2, 2, 2, 3, 3}, V{43, -5, 3, 3, 3, 3, -5, -5}, V{1, -1, -1, -1, 1, 1, 1, -1}, 6},
    {"S14", V{3, 2, 2, 2, 3, 3, 3, 2}, V{43, 3, 3, 3, -5, -5, -5, 3}, V{1, -1, -1, -1, 1, 1, 1, -1}, 2},
    {"S15", V{3, 3, 2, 3, 2, 3, 2, 2}, V{43, -5, 3, -5, 3, -5, 3, 3}, V{1, 1, -1, 1, -1, 1, -1, -1}, 2},
};

SignTable parse_grid(std::vector<std::string> cols, const std::vector<std::string>& rows) {
    SignTable t;
    t.column_labels = std::move(cols);
    const std::vector<std::string> labels = {"111", "211", "121", "112", "122", "212", "221", "222"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.row_labels.push_back(labels[i]);
        std::vector<int> r;
        for (char c : rows[i]) r.push_back(c == '+' ? 1 : -1);
        t.signs.push_back(r);
    }
    return t;
}

}  // namespace

const std::vector<PrintedTable1Row>& printed_table1() { return kTable1; }
const std::vector<PrintedTable2Row>& printed_table2() { return kTable2; }
const std::vector<PrintedTable3Row>& printed_table3() { return kTable3; }

PaperBaseline baseline(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    PaperBaseline b;
    if (key == "SICILIAN") {
        b.family = "sicilian";
        b.sections = printed_sicilian().sections;
        return b;
    }
    auto t1 = std::find_if(kTable1.begin(), kTable1.end(), [&](const auto& r) { return r.family == key; });
    if (t1 == kTable1.end()) throw ValidationError("no printed baseline for \"" + std::string(name) + "\"");
    b.family = key;
    b.table1 = *t1;
    for (const auto& r : kTable2) {
        if (r.family == key) b.table2 = r;
    }
    for (const auto& r : kTable3) {
        if (r.family == key) b.table3 = r;
    }
    if (key == "S1") {
        b.sections = "2(+++) + 2(++-) + 2(+-+) + 2(+--)";
    } else if (key == "S2") {
        b.sections = "2(+++) + 2(+-+) + 2(-+-) + 2(---)";
    } else {
        b.sections = "regular";
    }
    return b;
}

SignTable printed_theta_table() {
    return parse_grid({"i1", "i2", "i3", "i12", "i13", "i23", "i123"},
                      {"++++++-", "+++--++", "+++-+-+", "++++--+", "+++--+-", "+++-+--", "++++---", "+++++++"});
}

SignTable printed_worked_table(std::string_view family) {
    if (family == "S2") {
        return parse_grid({"i1 i3 i23", "i3 i13", "i2 i23"}, {"+++", "+-+", "-+-", "---", "+-+", "-+-", "---", "+++"});
    }
    if (family == "S6") {
        return parse_grid({"i2 i3 i123", "i2 i3 i13", "i3 i23"}, {"-++", "+-+", "++-", "--+", "-+-", "--+", "---", "+++"});
    }
    throw ValidationError("no printed worked table for " + std::string(family));
}

PrintedXInvariants printed_x_invariants() { return {}; }

std::array<long long, 4> printed_trace_H1_cases() { return {-6, -2, 2, 6}; }
std::array<long long, 4> printed_trace_H2A_cases() { return {15, -1, 1, 15}; }
std::array<long long, 4> printed_trace_H2var_cases() { return {-29, -5, 3, -5}; }

PrintedSicilian printed_sicilian() { return {}; }

CharMultiset parse_multiset_expr(std::string_view text, int rank) {
    CharMultiset m(rank);
    std::size_t i = 0;
    const std::string s(text);
    auto bad = [&] { return ParseError("bad multiset expression \"" + s + "\""); };
    auto skip = [&] {
        while (i < s.size() && s[i] == ' ') ++i;
    };
    while (true) {
        skip();
        if (i >= s.size()) break;
        long long k = 1;
        if (std::isdigit(static_cast<unsigned char>(s[i])) && !(s[i] == '1' && (i + 1 == s.size() || s[i + 1] == ' ' || s[i + 1] == '+'))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            k = std::stoll(s.substr(i, j - i));
            i = j;
            if (s.compare(i, 2, "·") == 0) {
                i += 2;
            } else if (i < s.size() && s[i] == '*') {
                ++i;
            }
            skip();
        }
        if (i < s.size() && s[i] == '1') {
            m.add(Character::trivial(rank), k);
            ++i;
        } else if (i < s.size() && s[i] == '(') {
            // A run of juxtaposed characters; the coefficient binds to the first.
            bool first = true;
            while (i < s.size() && s[i] == '(') {
                std::size_t j = s.find(')', i);
                if (j == std::string::npos) throw bad();
                Character c = Character::parse(s.substr(i, j - i + 1));
                if (c.rank() != rank) throw bad();
                m.add(c, first ? k : 1);
                first = false;
                i = j + 1;
            }
        } else {
            throw bad();
        }
        skip();
        if (i < s.size()) {
            if (s[i] != '+') throw bad();
            ++i;
        }
    }
    return m;
}

}  // namespace burniat
