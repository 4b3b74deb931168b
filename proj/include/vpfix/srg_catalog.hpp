#pragma once

#include <string>
#include <vector>

#include "vpfix/digraph.hpp"
#include "vpfix/rational.hpp"

namespace vpfix {

// One printed line of the strongly-regular-graph parameter table, evaluated
// exactly at a given parameter. Rows are "i", "ii", "iii", "iv+", "iv-",
// "v+", "v-", "vi", "vii", "viii". The table substitutes a = 3^(m-1),
// b = 2^(m-2), c = 3^(m-2); for row "i" the parameter is the field size
// q in {2, 3} instead of m.
struct CatalogLine {
  long long v, d, lambda, mu;
  Rational relfix;
};

CatalogLine catalog_line(const std::string& row, int m);

struct CatalogRowInfo {
  std::string row;
  int min_m;           // smallest parameter with an in-scope construction
  std::string action;  // human-readable construction summary
};
const std::vector<CatalogRowInfo>& catalog_rows();

// The graph the row describes. For rows on nonsingular points over GF(3)
// both form-value classes are built and the one matching the printed line
// best is selected (full (v,d,lambda,mu) match, then strongly regular with
// matching v, then class 1); value_class records the choice, note explains
// it. value_class is 0 where no choice arises.
struct CatalogConstruction {
  Digraph graph;
  int value_class;
  std::string note;
};

CatalogConstruction construct_catalog_row(const std::string& row, int m);

// Row/parameter pairs covering every row at its smallest in-scope parameter
// (plus the second minus/plus-type nonsingular GF(2) instances, whose m = 3
// graphs realize the table's b = 2 column).
std::vector<std::pair<std::string, int>> catalog_instances();

}  // namespace vpfix
