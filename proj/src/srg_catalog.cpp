#include "vpfix/srg_catalog.hpp"

#include "vpfix/errors.hpp"
#include "vpfix/formed_space.hpp"

namespace vpfix {

namespace {

long long pow_ll(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

long long half(long long x) {
  if (x % 2 != 0) throw DomainError("catalog formula is not integral here");
  return x / 2;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace

CatalogLine catalog_line(const std::string& row, int m) {
  require(m <= 12, "catalog parameter too large");
  if (row == "i") {
    if (m == 2) return {27, 10, 1, 5, Rational(7, 27)};
    if (m == 3) return {112, 30, 2, 10, Rational(11, 56)};
    throw DomainError("row i takes q in {2, 3}");
  }
  if (row == "ii") {
    require(m >= 2, "row ii needs m >= 2");
    long long a = pow_ll(3, m - 1);
    return {half(9 * a - 1), half(3 * (a * a - 1)), half(a * a - 9) + 2,
            half(a * a - 1), Rational(a + 1, 3 * a + 1)};
  }
  if (row == "iii") {
    require(m >= 2, "row iii needs m >= 2");
    long long a = pow_ll(3, m - 1);
    return {half(3 * a * (3 * a - 1)), (a - 1) * (3 * a + 1),
            2 * (a * a - a - 1), 2 * a * (a - 1),
            Rational(3 * a * a + a + 1, 3 * a * (3 * a - 1))};
  }
  if (row == "iv+" || row == "iv-") {
    require(m >= 3, "row iv needs m >= 3");
    long long b = pow_ll(2, m - 2);
    if (row == "iv+")
      return {(4 * b - 1) * (2 * b - 1), 2 * (2 * b - 1) * (b + 1),
              (2 * b - 2) * (b - 2) + 1, (2 * b - 1) * (b + 1),
              Rational(b - 1, 2 * b - 1)};
    return {4 * b * b - 1, 2 * (b * b - 1), b * b - 3, b * b - 1,
            Rational(2 * b + 1, 4 * b + 1)};
  }
  if (row == "v+" || row == "v-") {
    require(m >= 2, "row v needs m >= 2");
    long long b = pow_ll(2, m - 2);
    long long eps = row == "v+" ? 1 : -1;
    return {2 * b * (4 * b - eps), 4 * b * b - 1, 2 * (b * b - 1),
            b * (2 * b + eps), Rational(2 * b, 4 * b - eps)};
  }
  if (row == "vi") {
    require(m >= 2, "row vi needs m >= 2");
    long long c = pow_ll(3, m - 2);
    return {half(3 * c * (9 * c - 1)), half(3 * c * (3 * c - 1)),
            half(c * (3 * c - 1)), half(3 * c * (c - 1)),
            Rational(3 * (c + 1), 9 * c - 1)};
  }
  if (row == "vii") {
    require(m >= 3, "row vii needs m >= 3");
    long long c = pow_ll(3, m - 2);
    return {half(9 * c * c - 1), half(3 * (c * c - 1)), half(c * c - 9) + 2,
            half(c * c - 1), Rational(3 * c + 1, 9 * c + 1)};
  }
  if (row == "viii") {
    require(m >= 2, "row viii needs m >= 2");
    long long c = pow_ll(3, m - 2);
    return {half(3 * c * (9 * c + 1)), half(3 * c * (3 * c + 1)),
            half(c * (3 * c - 1)), half(3 * c * (c + 1)),
            Rational(9 * c * c + 3 * c - 2, 3 * c * (9 * c + 1))};
  }
  throw DomainError("unknown catalog row: " + row);
}

const std::vector<CatalogRowInfo>& catalog_rows() {
  static const std::vector<CatalogRowInfo> rows = {
      {"i", 2, "totally isotropic lines of the hermitian space over GF(4), "
               "adjacent when meeting in a point (parameter is q)"},
      {"ii", 2, "singular points of the parabolic space over GF(3), "
                "orthogonality"},
      {"iii", 2, "nonsingular points of the parabolic space over GF(3), "
                 "tangent lines"},
      {"iv+", 3, "singular points of the plus-type space over GF(2), "
                 "orthogonality"},
      {"iv-", 3, "singular points of the minus-type space over GF(2), "
                 "orthogonality"},
      {"v+", 2, "nonsingular points of the plus-type space over GF(2), "
                "orthogonality"},
      {"v-", 2, "nonsingular points of the minus-type space over GF(2), "
                "orthogonality"},
      {"vi", 3, "nonsingular points of the plus-type space over GF(3), "
                "orthogonality"},
      {"vii", 3, "singular points of the minus-type space over GF(3), "
                 "orthogonality"},
      {"viii", 2, "nonsingular points of the minus-type space over GF(3), "
                  "orthogonality"},
  };
  return rows;
}

namespace {

int construction_min_m(const std::string& row) {
  for (const auto& info : catalog_rows())
    if (info.row == row) return info.min_m;
  throw DomainError("unknown catalog row: " + row);
}

// Build both form-value classes and pick the one agreeing with the printed
// line: full (v,d,lambda,mu) match beats strongly regular with the printed
// vertex count, which beats the class-1 default.
CatalogConstruction select_value_class(const FormedSpace& space,
                                       const CatalogLine& line,
                                       bool tangent) {
  Digraph best;
  int best_class = 0, best_score = -1;
  for (int cls = 1; cls <= 2; ++cls) {
    std::vector<int> pts = nonsingular_point_indices(space, cls);
    Digraph g = tangent ? tangent_line_graph(space, pts)
                        : orthogonality_graph(space, pts);
    auto p = srg_parameters(g);
    int score = 0;
    if (p) {
      score = 1;
      if (p->v == line.v) score = 2;
      if (*p == SrgParams{line.v, line.d, line.lambda, line.mu}) score = 3;
    }
    if (score > best_score) {
      best = g;
      best_class = cls;
      best_score = score;
    }
  }
  const char* why[] = {"default (neither class strongly regular)",
                       "default (classes tie or differ off-table)",
                       "strongly regular with the printed vertex count",
                       "full printed-parameter match"};
  return {best, best_class,
          "value class " + std::to_string(best_class) + ": " +
              why[best_score]};
}

}  // namespace

CatalogConstruction construct_catalog_row(const std::string& row, int m) {
  require(m >= construction_min_m(row),
          "row " + row + " construction starts at parameter " +
              std::to_string(construction_min_m(row)));
  if (row == "i") {
    require(m == 2, "hermitian construction is in scope for q = 2 only");
    FormedSpace s(4, 4, FormKind::Hermitian);
    return {isotropic_line_graph(s), 0, "totally isotropic lines"};
  }
  if (row == "ii" || row == "iii") {
    require(2 * m + 1 <= 8, "dimension cap: parabolic rows need m <= 3");
    FormedSpace s(3, 2 * m + 1, FormKind::Parabolic);
    if (row == "ii")
      return {orthogonality_graph(s, singular_point_indices(s)), 0,
              "singular points"};
    return select_value_class(s, catalog_line(row, m), true);
  }
  require(2 * m <= 8, "dimension cap: even-dimension rows need m <= 4");
  if (row == "iv+" || row == "iv-") {
    FormedSpace s(2, 2 * m, row == "iv+" ? FormKind::Plus : FormKind::Minus);
    return {orthogonality_graph(s, singular_point_indices(s)), 0,
            "singular points"};
  }
  if (row == "v+" || row == "v-") {
    FormedSpace s(2, 2 * m, row == "v+" ? FormKind::Plus : FormKind::Minus);
    return {orthogonality_graph(s, nonsingular_point_indices(s, 1)), 0,
            "nonsingular points"};
  }
  if (row == "vi") {
    FormedSpace s(3, 2 * m, FormKind::Plus);
    return select_value_class(s, catalog_line(row, m), false);
  }
  if (row == "vii") {
    FormedSpace s(3, 2 * m, FormKind::Minus);
    return {orthogonality_graph(s, singular_point_indices(s)), 0,
            "singular points"};
  }
  if (row == "viii") {
    FormedSpace s(3, 2 * m, FormKind::Minus);
    return select_value_class(s, catalog_line(row, m), false);
  }
  throw DomainError("unknown catalog row: " + row);
}

std::vector<std::pair<std::string, int>> catalog_instances() {
  return {{"i", 2},  {"ii", 2},  {"iii", 2}, {"iv+", 3}, {"iv-", 3},
          {"v+", 2}, {"v-", 2},  {"v+", 3},  {"v-", 3},  {"vi", 3},
          {"vii", 3}, {"viii", 2}};
}

}  // namespace vpfix
