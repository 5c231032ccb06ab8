#ifndef LIECOMB_TESTS_WORKED_TABLES_HPP
#define LIECOMB_TESTS_WORKED_TABLES_HPP

// The two published decompositions of (9,5) (x) (6,2) and (9,5) (x) (2,6),
// 51 entries each in multiplicity blocks of 21 / 16 / 14.

#include <array>
#include <utility>
#include <vector>

namespace worked_tables {

using Entry = std::pair<std::array<int, 2>, int>;

inline const std::vector<Entry>& table_95_62() {
  static const std::vector<Entry> t = {
      {{1, 11}, 1}, {{2, 9}, 1},  {{2, 12}, 1}, {{3, 7}, 1},  {{3, 13}, 1}, {{4, 5}, 1},
      {{5, 3}, 1},  {{5, 12}, 1}, {{6, 1}, 1},  {{7, 11}, 1}, {{8, 0}, 1},  {{9, 10}, 1},
      {{11, 0}, 1}, {{11, 9}, 1}, {{13, 8}, 1}, {{14, 0}, 1}, {{15, 1}, 1}, {{15, 7}, 1},
      {{16, 2}, 1}, {{16, 5}, 1}, {{17, 3}, 1},
      {{3, 10}, 2}, {{4, 8}, 2},  {{4, 11}, 2}, {{5, 6}, 2},  {{6, 4}, 2},  {{6, 10}, 2},
      {{7, 2}, 2},  {{8, 9}, 2},  {{9, 1}, 2},  {{10, 8}, 2}, {{12, 1}, 2}, {{12, 7}, 2},
      {{13, 2}, 2}, {{14, 3}, 2}, {{14, 6}, 2}, {{15, 4}, 2},
      {{5, 9}, 3},  {{6, 7}, 3},  {{7, 5}, 3},  {{7, 8}, 3},  {{8, 3}, 3},  {{8, 6}, 3},
      {{9, 4}, 3},  {{9, 7}, 3},  {{10, 2}, 3}, {{10, 5}, 3}, {{11, 3}, 3}, {{11, 6}, 3},
      {{12, 4}, 3}, {{13, 5}, 3}};
  return t;
}

inline const std::vector<Entry>& table_95_26() {
  static const std::vector<Entry> t = {
      {{1, 7}, 1},   {{2, 5}, 1},  {{2, 8}, 1},  {{3, 3}, 1},  {{3, 9}, 1},  {{4, 10}, 1},
      {{5, 2}, 1},   {{5, 11}, 1}, {{6, 12}, 1}, {{7, 1}, 1},  {{7, 13}, 1}, {{9, 0}, 1},
      {{9, 12}, 1},  {{11, 11}, 1}, {{12, 0}, 1}, {{12, 9}, 1}, {{13, 7}, 1}, {{14, 5}, 1},
      {{15, 0}, 1},  {{15, 3}, 1}, {{16, 1}, 1},
      {{3, 6}, 2},   {{4, 4}, 2},  {{4, 7}, 2},  {{5, 8}, 2},  {{6, 3}, 2},  {{6, 9}, 2},
      {{7, 10}, 2},  {{8, 2}, 2},  {{8, 11}, 2}, {{10, 1}, 2}, {{10, 10}, 2}, {{11, 8}, 2},
      {{12, 6}, 2},  {{13, 1}, 2}, {{13, 4}, 2}, {{14, 2}, 2},
      {{5, 5}, 3},   {{6, 6}, 3},  {{7, 4}, 3},  {{7, 7}, 3},  {{8, 5}, 3},  {{8, 8}, 3},
      {{9, 3}, 3},   {{9, 6}, 3},  {{9, 9}, 3},  {{10, 4}, 3}, {{10, 7}, 3}, {{11, 2}, 3},
      {{11, 5}, 3},  {{12, 3}, 3}};
  return t;
}

}  // namespace worked_tables

#endif
