#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpfix/digraph.hpp"
#include "vpfix/digraph_aut.hpp"
#include "vpfix/jset.hpp"
#include "vpfix/rational.hpp"

namespace vpfix {

// Fixity data measured on the full automorphism group: mu is the minimal
// degree, fix = n - mu is the largest number of vertices a nonidentity
// automorphism leaves fixed, relfix = fix / n.
struct FixityReport {
  int n;
  BigInt aut_order;
  int mu;
  int fix;
  Rational relfix;
  Permutation witness;  // nonidentity automorphism of support exactly mu
  std::string method;   // "brute-force" here; formula-derived reports differ
};

// Exhausts Aut(g): automorphism search, closure materialization, support
// scan. Throws RigidGraph when the identity is the only automorphism
// (relative fixity is undefined then), budget errors otherwise.
FixityReport fixity_brute(const Digraph& g, const SearchBudget& budget = {},
                          unsigned long long element_cap = kDefaultElementCap);

// The families classified as realizing relative fixity above 1/3.
enum class FamilyTag {
  GeneralisedHamming,  // merged product over {loops, complete graph}
  Johnson,             // merged product over the distance-i Johnson graphs
  SquashedJohnson,     // merged product over the squashed distance graphs
  SrgProduct,          // merged product over {loops, catalog row, complement}
};

// A concrete family member. j lives in {0..x}^r where x indexes the last
// base orbital: 1 for Hamming, k for Johnson, floor(m/2) for squashed, 2 for
// catalog rows. m is the alphabet size (Hamming), the ground-set size
// (Johnson), the half size (squashed, on C(2m,m)/2 vertices), or the catalog
// parameter (field size q for row "i").
struct FamilyDescriptor {
  FamilyTag tag;
  int r;
  int m;
  int k;            // Johnson subset size; 0 elsewhere
  std::string row;  // catalog row id; empty elsewhere
  JSet j;

  bool operator==(const FamilyDescriptor&) const = default;
};

// Factories validate ranges and the shape of j. The int-index shorthands
// build the r = 1 singleton {(i)}.
FamilyDescriptor hamming_descriptor(int r, int m);  // unit tuples
FamilyDescriptor hamming_descriptor(int r, int m, JSet j);
FamilyDescriptor johnson_descriptor(int m, int k, int i);
FamilyDescriptor johnson_descriptor(int m, int k, int r, JSet j);
FamilyDescriptor squashed_descriptor(int two_m, int m, int i);
FamilyDescriptor squashed_descriptor(int two_m, int m, int r, JSet j);
FamilyDescriptor srg_descriptor(const std::string& row, int m, int i = 1);
FamilyDescriptor srg_descriptor(const std::string& row, int m, int r, JSet j);

// Canonical rendering: "H(2,4; J={01,10})", "J(6,2; J={1})",
// "QJ(8,4; J={1})", "SRG(viii,2; J={1})"; r >= 2 products wrap the base as
// "P(2, J(6,2); J={01,10,11})".
std::string describe(const FamilyDescriptor& f);

// The digraph the descriptor names.
Digraph construct_family(const FamilyDescriptor& f);

// Closed-form relative fixity. Validity ranges (DomainError outside):
// Hamming m >= 3 gives 1 - 2/m; Johnson k >= 1, m >= 2k+1 gives
// 1 - 2k(m-k)/(m(m-1)); squashed m >= 3 gives (1/2)(1 - 1/(2m-1)); catalog
// rows read the printed table column. The value does not depend on r or j;
// below the stated family ranges (squashed m = 3) the formula still
// evaluates but the graph's automorphism group can be larger, which
// verify_family reports as a failure.
Rational relfix_formula(const FamilyDescriptor& f);

// Relative fixity of a product-action minimal-degree bound: a base element
// of support base_mu on m points has support base_mu * m^(r-1) on m^r, so
// the value 1 - base_mu/m is independent of r. Requires 1 <= base_mu <= m,
// r >= 1.
Rational relfix_product(int base_mu, int m, int r);

// One comparison outcome. status is "PASS" when measured equals expected,
// "FAIL" when a formula fails verification, "DISCREPANCY" when a printed
// table value disagrees with the measured construction.
struct VerificationRecord {
  std::string subject;
  std::string expected;
  std::string measured;
  std::string status;
  std::string note;
};

// Constructs the instance, brute-forces its fixity and compares with
// relfix_formula. A mismatch yields status FAIL, never a throw; budget
// errors still propagate.
VerificationRecord verify_family(
    const FamilyDescriptor& f, const SearchBudget& budget = {},
    unsigned long long element_cap = kDefaultElementCap);

// Compares the constructed catalog row against the printed table line,
// field by field: v, d, lambda, mu from srg_parameters, then relative
// fixity by brute force when the graph has at most 64 vertices (larger
// instances omit the relfix record). Printed-vs-measured mismatches are
// DISCREPANCY records; the batch never aborts on them.
std::vector<VerificationRecord> check_catalog_row(
    const std::string& row, int m, const SearchBudget& budget = {},
    unsigned long long element_cap = kDefaultElementCap);

enum class Verdict {
  GeneralisedHamming,
  JohnsonFamily,
  SquashedJohnsonFamily,
  SrgProductFamily,
  BelowThreshold,
  NotVertexPrimitive,
};

// matched is present for every family verdict and for BelowThreshold inputs
// that still equal a constructible family member (informational). relfix is
// the measured value; it is absent for NotVertexPrimitive, where the group
// is not materialized. advisory flags matched catalog rows whose printed
// relative fixity sits at or below the 1/3 threshold.
struct ClassificationResult {
  Verdict verdict;
  std::optional<FamilyDescriptor> matched;
  std::optional<Rational> relfix;
  std::string match_quality;  // "isomorphism" | "parameter match" | ""
  std::string advisory;
};

// Decision pipeline: full automorphism group; NotVertexPrimitive unless it
// is transitive and primitive; measured relfix <= 1/3 gives BelowThreshold
// (with a relaxed informational match); otherwise the graph is matched
// against the families at their classified ranges (Hamming m >= 4, Johnson
// k >= 2 and m >= 2k+2, squashed m >= 4, catalog rows) by parameter
// prefilter plus certified isomorphism over enumerable homogeneous index
// sets. Catalog candidates fall back to a printed-parameter match when no
// isomorphism certificate is available. Inputs above the threshold that
// match nothing (boundary actions outside the classified ranges, e.g.
// distance graphs of 7 points choose 3) raise DomainError. Throws
// RigidGraph on a single vertex, DomainError on an arcless digraph.
ClassificationResult classify(const Digraph& g, const SearchBudget& budget = {},
                              unsigned long long element_cap = kDefaultElementCap);

struct GrowthRow {
  std::string family;
  long long n;
  int valency;
  double log_n;
  double ratio;  // valency / ln n
};

// One row per descriptor, exact n and valency, floating ln n. Loop-carrying
// graphs are rejected with Irregular.
std::vector<GrowthRow> growth_report(const std::vector<FamilyDescriptor>& specs);

// CSV renderings; fields containing commas or quotes are double-quoted.
std::string to_csv(const std::vector<VerificationRecord>& records);
std::string to_csv(const std::vector<GrowthRow>& rows);

}  // namespace vpfix
