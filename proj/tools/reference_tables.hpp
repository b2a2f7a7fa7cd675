#pragma once

// Published reference values. Rows are n, columns m; empty strings are
// cells with no published value.

#include <string>
#include <vector>

namespace indcx::ref {

struct IntTable {
    int id;
    std::string family;
    std::vector<int> ns, ms;
    std::vector<std::vector<long long>> z;  // z[row][col]
    bool blank_zero = false;                // zeros printed empty
};

struct HomTable {
    int id;
    std::string family;
    std::vector<int> ns, ms;
    std::vector<std::vector<std::string>> h;
};

// Homology of I(C_{m,n}), n even.
inline const HomTable& table1() {
    static const HomTable t{1, "square_cyl", {2, 4, 6, 8, 10, 12, 14}, {1, 2, 3, 4, 5, 6, 7, 8},
        {
            {"(0,1)", "(0,1)", "(1,1)", "(1,1)", "(2,1)", "(2,1)", "(3,1)", "(3,1)"},
            {"(0,1)", "(1,3)", "(2,3)", "(3,5)", "(4,5)", "(5,7)", "(6,7)", "(7,9)"},
            {"(1,2)", "(2,1)", "(3,1)", "(5,4)", "(6,1)", "(7,1), (8,2)", "(9,4)", "(11,7)"},
            {"(2,1)", "(3,3)", "(5,5)", "(7,5)", "(8,1), (9,4)", "(11,7)", "", ""},
            {"(2,1)", "(4,1)", "(7,1)", "(8,1), (9,2)", "", "", "", ""},
            {"(3,2)", "(5,3)", "(8,3)", "(11,8)", "", "", "", ""},
            {"(4,1)", "(6,1)", "(9,1)", "", "", "", "", ""},
        }};
    return t;
}

// Homology of I(C_{m,n}), n odd.
inline const HomTable& table2() {
    static const HomTable t{2, "square_cyl", {3, 5, 7, 9, 11, 13, 15, 17, 19}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
        {
            {"(0,2)", "(1,1)", "(1,1)", "(2,2)", "(3,1)", "(3,1)", "(4,2)", "(5,1)", "(5,1)", "(6,2)", "(7,1)"},
            {"(1,1)", "(1,1)", "(3,1)", "(3,1)", "(5,1)", "(5,1)", "(7,1)", "(7,1)", "(9,1)", "(9,1)", ""},
            {"(1,1)", "(3,1)", "(5,1)", "(5,1)", "(7,1)", "(9,1)", "(11,1)", "", "", "", ""},
            {"(2,2)", "(3,1)", "(5,1)", "(7,1), (8,3)", "(9,1)", "", "", "", "", "", ""},
            {"(3,1)", "(5,1)", "(7,1)", "(9,1)", "", "", "", "", "", "", ""},
            {"(3,1)", "(5,1)", "(9,1)", "", "", "", "", "", "", "", ""},
            {"(4,2)", "(7,1)", "(11,1)", "", "", "", "", "", "", "", ""},
            {"(5,1)", "(7,1)", "", "", "", "", "", "", "", "", ""},
            {"(5,1)", "(9,1)", "", "", "", "", "", "", "", "", ""},
        }};
    return t;
}

// Z(C_{m,n}), n even.
inline const IntTable& table3() {
    static const IntTable t{3, "square_cyl", {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
        {
            {-1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1},
            {-1, 3, -3, 5, -5, 7, -7, 9, -9, 11, -11},
            {2, -1, 1, 4, -1, -1, 4, 1, -1, 2, 1},
            {-1, 3, 5, 5, 3, 7, 1, 1, -1, 3, -3},
            {-1, -1, 1, 1, 9, -1, 1, 1, -11, -1, 1},
            {2, 3, -3, 8, -5, 7, 8, 9, -9, 14, -11},
            {-1, -1, 1, 1, -1, 13, 1, 1, 13, -1, 15},
            {-1, 3, 5, 5, 3, 7, 1, 33, -1, 3, 13},
            {2, -1, 1, 4, -1, -1, 22, 1, -1, 38, 1},
            {-1, 3, -3, 5, 5, 7, -7, 9, 41, 11, -11},
            {-1, -1, 1, 1, -1, -1, 1, 23, -1, -1, 89},
            {2, 3, 5, 8, 3, 7, 16, 1, -1, 78, -3},
        }};
    return t;
}

// Homology of I(C^H_{m,n}).
inline const HomTable& table5() {
    static const HomTable t{5, "hex_cyl", {2, 3, 4, 5, 6, 7, 8}, {2, 3, 4, 5, 6, 7, 8},
        {
            {"(2,3)", "(3,5)", "(4,8)", "(5,13)", "(6,21)", "(7,34)", "(8,55)"},
            {"(4,5)", "(6,7)", "(7,3)", "(9,22)", "(11,23)", "(12,24)", ""},
            {"(6,3)", "(7,4), (9,1)", "(10,8)", "(11,8), (13,5)", "", "", ""},
            {"(7,6)", "(10,11)", "", "", "", "", ""},
            {"(9,15)", "(11,4), (13,13)", "", "", "", "", ""},
            {"(11,8)", "", "", "", "", "", ""},
            {"(12,19)", "", "", "", "", "", ""},
        }};
    return t;
}

// Z(C^H_{m,n}).
inline const IntTable& table6() {
    static const IntTable t{6, "hex_cyl", {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
        {
            {0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1},
            {2, -3, 5, -8, 13, -21, 34, -55, 89, -144, 233, -377},
            {0, -5, -7, 3, 22, 23, -24, -92, -67, 141, 367, 152},
            {2, -3, 5, -8, 13, -21, 34, -55, 89, -144, 233, -377},
            {0, 6, -11, -5, 51, -76, -60, 416, -536, -655, 3351, -3646},
            {2, 15, 17, 55, 160, 231, 886, 1664, 3947, 11121, 21065, 59296},
            {0, 8, -15, -35, 57, 34, -42, 687, 20, -4207, -2379, 3611},
            {2, -19, 37, -88, 533, -725, 3466, -11927, 21417, -105552, 273881, -682665},
            {0, -41, -43, 183, 958, 941, -9924, -22943, 19265, 289806, 587437, -1949599},
        }};
    return t;
}

// Homology of I(T^H_{m,n}).
inline const HomTable& table7() {
    static const HomTable t{7, "hex_torus", {2, 3, 4}, {2, 3, 4, 5, 6, 7, 8},
        {
            {"(1,3)", "(2,4)", "(3,7)", "(4,11)", "(5,18)", "(6,29)", "(7,47)"},
            {"(2,4)", "(4,10)", "(6,4)", "(7,17)", "(9,32)", "(10,1), (11,3)", "(12,76)"},
            {"(3,7)", "(6,4)", "(7,15)", "(9,1), (10,12)", "(11,20), (12,1), (13,3)", "", ""},
        }};
    return t;
}

// Z(T^H_{m,n}).
inline const IntTable& table8() {
    static const IntTable t{8, "hex_torus", {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7},
        {
            {-1, -1, 2, -1, -1, 2, -1},
            {-1, 3, -4, 7, -11, 18, -29},
            {2, -4, -10, -4, 17, 32, 2},
            {-1, 7, -4, 15, -11, 22, -29},
            {-1, -11, 17, -11, -51, 127, -36},
            {2, 18, 32, 22, 127, 192, 394},
            {-1, -29, 2, -29, -36, 394, 552},
            {-1, 47, -76, 55, -411, 1478, 83},
        }};
    return t;
}

// Part of Z(C_{m,n}) left after the P2, Q1 and Q3 recursion is unrolled.
inline const IntTable& table9() {
    static const IntTable t{9, "square_cyl", {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
        {
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 8, 0, 8, 0, 8, -8, 8, -8, 8},
            {0, 0, 0, 0, 10, 0, 0, 0, -10, 0, 0},
            {0, 0, 0, 0, 0, 0, 12, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 14, 0, 0, 14, 0, 14},
            {0, 0, 8, 0, 8, 0, 8, 24, 8, -8, 24},
            {0, 0, 0, 0, 0, 0, 18, 0, 0, 36, 0},
            {0, 0, 0, 0, 10, 0, 0, 0, 50, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 22, 0, 0, 88},
            {0, 0, 8, 0, 8, 0, 20, -8, 8, 64, 8},
        },
        true};
    return t;
}

// Z(C_{m,6}) for m = 1..12; period 12.
inline const std::vector<long long>& c6_sequence() {
    static const std::vector<long long> s{2, -1, 1, 4, -1, -1, 4, 1, -1, 2, 1, 1};
    return s;
}

}  // namespace indcx::ref
