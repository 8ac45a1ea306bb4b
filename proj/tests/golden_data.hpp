#pragma once

// Frozen reference data for the coefficient triangles: the small t/r tables,
// the symmetric boundary array, and the leading terms of the printed
// generating-function expansions, entered as (i, j, coefficient) triples
// per level.

#include <map>
#include <string>
#include <vector>

#include "dumont/polynomial.hpp"
#include "dumont/triangle.hpp"

namespace golden {

using Triple = std::array<long, 3>;
using Level = std::vector<Triple>;

inline const std::map<std::string, std::vector<Level>>& expansions() {
    // expansions()[name][n] lists the (i, j, coef) entries of level n.
    static const std::map<std::string, std::vector<Level>> data{
        {"a",
         {{{0, 0, 1}},
          {{0, 0, 1}},
          {{1, 0, 1}, {1, 1, 1}, {0, 1, 1}},
          {{2, 0, 4}, {1, 0, 5}, {1, 1, 5}, {0, 1, 1}},
          {{3, 0, 4}, {3, 1, 4}, {2, 0, 5}, {2, 1, 50}, {2, 2, 5}, {1, 1, 18}, {1, 2, 18},
           {0, 2, 1}},
          {{4, 0, 16}, {3, 0, 148}, {3, 1, 148}, {2, 0, 61}, {2, 1, 394}, {2, 2, 61},
           {1, 1, 58}, {1, 2, 58}, {0, 2, 1}}}},
        {"c",
         {{{0, 0, 1}},
          {{0, 0, 2}},
          {{1, 0, 2}, {1, 1, 2}, {0, 1, 4}},
          {{2, 0, 8}, {1, 0, 16}, {1, 1, 16}, {0, 1, 8}},
          {{3, 0, 8}, {3, 1, 8}, {2, 0, 16}, {2, 1, 144}, {2, 2, 16}, {1, 1, 88}, {1, 2, 88},
           {0, 2, 16}},
          {{4, 0, 32}, {3, 0, 416}, {3, 1, 416}, {2, 0, 272}, {2, 1, 1568}, {2, 2, 272},
           {1, 1, 416}, {1, 2, 416}, {0, 2, 32}}}},
        {"d",
         {{{0, 0, 1}},
          {{1, 0, 1}, {0, 1, 1}},
          {{2, 0, 1}, {1, 0, 5}, {1, 1, 1}, {0, 1, 1}},
          {{3, 0, 1}, {2, 0, 5}, {2, 1, 18}, {1, 1, 18}, {1, 2, 5}, {0, 2, 1}},
          {{4, 0, 1}, {3, 0, 58}, {3, 1, 18}, {2, 0, 61}, {2, 1, 164}, {2, 2, 5}, {1, 1, 58},
           {1, 2, 18}, {0, 2, 1}}}},
        {"b",
         {{{0, 0, 1}},
          {{0, 0, 1}},
          {{1, 0, 1}, {0, 1, 2}},
          {{2, 0, 1}, {1, 0, 8}, {1, 1, 2}, {0, 1, 4}},
          {{3, 0, 1}, {2, 0, 8}, {2, 1, 28}, {1, 1, 44}, {1, 2, 16}, {0, 2, 8}},
          {{4, 0, 1}, {3, 0, 88}, {3, 1, 28}, {2, 0, 136}, {2, 1, 364}, {2, 2, 16},
           {1, 1, 208}, {1, 2, 88}, {0, 2, 16}}}},
        {"t",
         {{{0, 0, 1}},
          {{0, 0, 1}},
          {{1, 0, 1}, {0, 1, 1}},
          {{0, 0, 1}, {1, 0, 1}, {0, 1, 3}, {0, 2, 1}},
          {{2, 0, 1}, {1, 0, 4}, {1, 1, 10}, {0, 1, 1}, {1, 2, 4}, {0, 2, 3}, {0, 3, 1}},
          {{2, 0, 1}, {1, 0, 14}, {0, 0, 1}, {1, 1, 30}, {0, 1, 15}, {1, 2, 14}, {0, 2, 29},
           {0, 3, 15}, {0, 4, 1}}}},
        {"r",
         {{{0, 0, 1}},
          {{0, 0, 2}},
          {{1, 0, 4}, {0, 1, 2}},
          {{0, 0, 2}, {1, 0, 8}, {0, 1, 12}, {0, 2, 2}},
          {{1, 0, 16}, {2, 0, 16}, {0, 1, 2}, {1, 1, 56}, {0, 2, 12}, {1, 2, 16}, {0, 3, 2}},
          {{0, 0, 2}, {1, 0, 88}, {2, 0, 32}, {0, 1, 60}, {1, 1, 240}, {0, 2, 148},
           {1, 2, 88}, {0, 3, 60}, {0, 4, 2}}}},
    };
    return data;
}

// The n <= 4 tables: tables()[name][n] is the dense row-major matrix
// indexed [i][j].
inline const std::map<std::string, std::vector<std::vector<std::vector<long>>>>& tables() {
    static const std::map<std::string, std::vector<std::vector<std::vector<long>>>> data{
        {"t",
         {{{1}},
          {{1}},
          {{0, 1}, {1, 0}},
          {{1, 3, 1}, {1, 0, 0}},
          {{0, 1, 3, 1}, {4, 10, 4, 0}, {1, 0, 0, 0}}}},
        {"r",
         {{{1}},
          {{2}},
          {{0, 2}, {4, 0}},
          {{2, 12, 2}, {8, 0, 0}},
          {{0, 2, 12, 2}, {16, 56, 16, 0}, {16, 0, 0, 0}}}},
    };
    return data;
}

// Rows of the symmetric boundary array, interleaving t and r at odd levels.
inline const std::vector<std::vector<long>>& symmetric_array_rows() {
    static const std::vector<std::vector<long>> rows{
        {1}, {2}, {1, 3, 1}, {2, 12, 2}, {1, 15, 29, 15, 1}, {2, 60, 148, 60, 2}};
    return rows;
}

inline dumont::ExactPolynomial level_polynomial(const Level& level) {
    static const dumont::VariableSetPtr pq = dumont::make_ring({"p", "q"});
    dumont::ExactPolynomial out(pq);
    for (const auto& [i, j, c] : level) {
        dumont::Monomial m(2);
        m.exp[0] = static_cast<unsigned>(i);
        m.exp[1] = static_cast<unsigned>(j);
        out.add_term(m, dumont::BigInt(c));
    }
    return out;
}

}  // namespace golden
