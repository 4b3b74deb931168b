// Acceptance battery: twelve end-to-end criteria, one line of output each.
// Unlike the unit tests this binary has its own main so a criterion failure
// prints as "criterion NN: FAIL" with the failed sub-checks indented below
// it instead of aborting the run; the exit status is the number of failed
// criteria. Expected values come from printed tables or from independent
// oracles implemented inside this file, never from the library under test.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "vpfix/digraph.hpp"
#include "vpfix/digraph_aut.hpp"
#include "vpfix/families.hpp"
#include "vpfix/fixity.hpp"
#include "vpfix/jset.hpp"
#include "vpfix/orbitals.hpp"
#include "vpfix/perm_group.hpp"
#include "vpfix/rational.hpp"
#include "vpfix/srg_catalog.hpp"
#include "vpfix/wreath.hpp"

namespace {

using namespace vpfix;

struct Checker {
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename T, typename U>
  void equal(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": expected " << want << ", got " << got;
      failures.push_back(os.str());
    }
  }
};

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

bool preserves_arcs(const Digraph& g, const Permutation& p) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.arc(u, v) != g.arc(p[u], p[v])) return false;
  return true;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::GeneralisedHamming: return "GeneralisedHamming";
    case Verdict::JohnsonFamily: return "JohnsonFamily";
    case Verdict::SquashedJohnsonFamily: return "SquashedJohnsonFamily";
    case Verdict::SrgProductFamily: return "SrgProductFamily";
    case Verdict::BelowThreshold: return "BelowThreshold";
    case Verdict::NotVertexPrimitive: return "NotVertexPrimitive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Criteria 1-3: brute-force fixity reports for one member of each infinite
// family, checked against the closed-form values.

void criterion_hamming_fixity(Checker& chk) {
  Digraph g = standard_hamming_graph(2, 4);
  FixityReport rep = fixity_brute(g);
  chk.equal(rep.n, 16, "vertex count");
  chk.check(rep.aut_order == 1152, "automorphism order: expected 1152, got " +
                                       rep.aut_order.str());
  chk.equal(rep.mu, 8, "minimal degree");
  chk.equal(rep.relfix, Rational(1, 2), "relative fixity");
  chk.check(!rep.witness.is_identity(), "witness must move something");
  chk.equal(rep.witness.support_size(), 8, "witness support size");
  chk.check(preserves_arcs(g, rep.witness), "witness must be an automorphism");
}

void criterion_johnson_fixity(Checker& chk) {
  Digraph g = johnson_graph(6, 2, 1);
  FixityReport rep = fixity_brute(g);
  chk.equal(rep.n, 15, "vertex count");
  chk.check(rep.aut_order == 720,
            "automorphism order: expected 720, got " + rep.aut_order.str());
  chk.equal(rep.mu, 8, "minimal degree");
  // A transposition of the 6 ground points moves exactly the 2-subsets
  // meeting the swapped pair in one point: 2 * C(4, 1) of them.
  chk.equal(rep.mu, 2 * 4, "minimal degree vs transposition support");
  chk.equal(rep.relfix, Rational(7, 15), "relative fixity");
  chk.check(preserves_arcs(g, rep.witness), "witness must be an automorphism");
}

void criterion_squashed_fixity(Checker& chk) {
  Digraph g = squashed_johnson_graph(8, 4, 1);
  FixityReport rep = fixity_brute(g);
  chk.equal(rep.n, 35, "vertex count");
  chk.check(rep.aut_order == 40320,
            "automorphism order: expected 40320, got " + rep.aut_order.str());
  chk.equal(rep.mu, 20, "minimal degree");
  chk.equal(rep.relfix, Rational(3, 7), "relative fixity");
  chk.check(preserves_arcs(g, rep.witness), "witness must be an automorphism");
}

// ---------------------------------------------------------------------------
// Criterion 4: catalog row i at q=2. The printed relative fixity is 7/27 and
// the classifier is expected to file the graph below the 1/3 threshold; the
// measured group is larger than the printed one, so these sub-checks record
// the mismatch rather than papering over it.

void criterion_row_i(Checker& chk) {
  Digraph g = construct_catalog_row("i", 2).graph;
  auto p = srg_parameters(g);
  chk.check(p.has_value(), "graph must be strongly regular");
  if (p) {
    chk.equal(p->v, 27, "v");
    chk.equal(p->d, 10, "d");
    chk.equal(p->lambda, 1, "lambda");
    chk.equal(p->mu, 5, "mu");
  }
  FixityReport rep = fixity_brute(g);
  chk.equal(rep.relfix, Rational(7, 27), "brute relative fixity vs printed");
  ClassificationResult res = classify(g);
  chk.check(res.verdict == Verdict::BelowThreshold,
            std::string("classifier verdict: expected BelowThreshold, got ") +
                verdict_name(res.verdict));
  chk.check(!res.advisory.empty(),
            "classifier must flag the at-or-below-threshold printed value");
}

// ---------------------------------------------------------------------------
// Criterion 5: catalog row ii at m=2. The printed vertex count disagrees
// with the constructed graph; that must surface as a DISCREPANCY record,
// not a crash, while d, lambda, mu and the relative fixity check out.

void criterion_row_ii(Checker& chk) {
  Digraph g = construct_catalog_row("ii", 2).graph;
  auto p = srg_parameters(g);
  chk.check(p.has_value(), "graph must be strongly regular");
  if (p) {
    chk.equal(p->v, 40, "v");
    chk.equal(p->d, 12, "d");
    chk.equal(p->lambda, 2, "lambda");
    chk.equal(p->mu, 4, "mu");
  }
  std::vector<VerificationRecord> recs = check_catalog_row("ii", 2);
  chk.equal(recs.size(), size_t{5}, "record count");
  if (recs.size() == 5) {
    chk.equal(recs[0].subject, std::string("table row ii, m=2: v"),
              "first subject");
    chk.equal(recs[0].status, std::string("DISCREPANCY"), "v status");
    chk.equal(recs[0].expected, std::string("13"), "printed v");
    chk.equal(recs[0].measured, std::string("40"), "measured v");
    for (int i = 1; i <= 3; ++i)
      chk.equal(recs[i].status, std::string("PASS"),
                recs[i].subject + " status");
    chk.equal(recs[4].status, std::string("PASS"), "relfix status");
    chk.equal(recs[4].measured, std::string("2/5"), "measured relfix");
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: the orbital digraphs of S4 wr S2 in product action equal the
// merged product action graphs built from the orbitals of S4 (loops plus
// the complete graph) under the top group.

void criterion_wreath_orbitals(Checker& chk) {
  WreathAction wa = wreath_product_action(symmetric_group(4),
                                          symmetric_group(2));
  std::vector<Digraph> got = orbitals(wa.group);
  std::vector<Digraph> want = orbital_digraphs_wreath(
      {loop_graph(4), complete_graph(4)}, symmetric_group(2));
  chk.equal(got.size(), want.size(), "orbital count");
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  chk.check(got == want, "orbital arc sets must match the merged products");
  long long arcs = 0;
  for (const Digraph& d : got) arcs += d.arc_count();
  chk.equal(arcs, 256LL, "orbitals must partition all ordered pairs");
  chk.check(orbitals_match(wa.group, {loop_graph(4), complete_graph(4)},
                           symmetric_group(2)),
            "orbitals_match must agree");
}

// ---------------------------------------------------------------------------
// Criterion 7: primitivity of K wr H in product action is equivalent to
// H transitive, K primitive and K not regular, across a 6 x 2 grid.

void criterion_primitivity_grid(Checker& chk) {
  struct Named {
    std::string name;
    PermutationGroup group;
  };
  const std::vector<Named> inners = {
      {"S3", symmetric_group(3)},   {"S4", symmetric_group(4)},
      {"A4", alternating_group(4)}, {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)},      {"V4", klein_four_group()},
  };
  const std::vector<Named> tops = {
      {"S2", symmetric_group(2)},
      {"1", trivial_group(2)},
  };
  for (const Named& k : inners) {
    for (const Named& h : tops) {
      bool expected = h.group.is_transitive() && is_primitive(k.group) &&
                      !is_regular(k.group);
      WreathAction wa = wreath_product_action(k.group, h.group);
      bool got = is_primitive(wa.group);
      chk.check(got == expected,
                k.name + " wr " + h.name + ": expected " +
                    (expected ? "primitive" : "imprimitive") + ", got " +
                    (got ? "primitive" : "imprimitive"));
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: the homogeneous / hamming predicates agree with an oracle
// built from first principles, over every nonempty J inside {0,1,2}^r for
// r <= 3. The oracle enumerates all subgroups of Sym(r) by subset closure,
// keeps the transitive ones, and declares a mask homogeneous when some
// transitive subgroup fixes it setwise, hamming when it equals the closure
// of a core (X\{0})^a x X^b x {0}^(r-a-b) under some transitive subgroup.

struct MaskOracle {
  int r = 0, k = 0, tuple_count = 0, bytes = 0;
  // One table row of 256 entries per (group element, mask byte).
  std::vector<std::vector<uint64_t>> byte_tables;
  std::vector<std::vector<int>> transitive_subgroups;  // element indices
  std::vector<uint64_t> hamming_masks;                 // sorted

  MaskOracle(int r_in, int k_in) : r(r_in), k(k_in) {
    tuple_count = 1;
    for (int i = 0; i < r; ++i) tuple_count *= k + 1;
    bytes = (tuple_count + 7) / 8;

    std::vector<std::vector<int>> perms;
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    // Tuple index image under a coordinate permutation: entry at position i
    // moves to position p[i]; index digits are mixed-radix, coordinate 0
    // most significant.
    auto tuple_image = [&](const std::vector<int>& perm, int t) {
      std::vector<int> digits(r);
      for (int i = r - 1; i >= 0; --i) {
        digits[i] = t % (k + 1);
        t /= k + 1;
      }
      std::vector<int> moved(r);
      for (int i = 0; i < r; ++i) moved[perm[i]] = digits[i];
      int out = 0;
      for (int i = 0; i < r; ++i) out = out * (k + 1) + moved[i];
      return out;
    };

    std::vector<std::vector<int>> images;  // per element, per tuple index
    for (const auto& perm : perms) {
      std::vector<int> img(tuple_count);
      for (int t = 0; t < tuple_count; ++t) img[t] = tuple_image(perm, t);
      images.push_back(img);
    }
    for (const auto& img : images) {
      std::vector<uint64_t> table(size_t(bytes) * 256, 0);
      for (int t = 0; t < tuple_count; ++t)
        for (int v = 0; v < 256; ++v)
          if (v & (1 << (t % 8)))
            table[size_t(t / 8) * 256 + v] |= uint64_t{1} << img[t];
      byte_tables.push_back(std::move(table));
    }

    // Composition table over element indices, then every subset of Sym(r)
    // that contains the identity and is closed under composition.
    const int e = int(perms.size());
    std::vector<std::vector<int>> comp(e, std::vector<int>(e));
    auto index_of = [&](const std::vector<int>& q) {
      return int(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (int a = 0; a < e; ++a)
      for (int b = 0; b < e; ++b) {
        std::vector<int> q(r);
        for (int i = 0; i < r; ++i) q[i] = perms[a][perms[b][i]];
        comp[a][b] = index_of(q);
      }
    const int identity = index_of([&] {
      std::vector<int> id(r);
      for (int i = 0; i < r; ++i) id[i] = i;
      return id;
    }());
    for (uint64_t subset = 1; subset < (uint64_t{1} << e); ++subset) {
      if (!(subset & (uint64_t{1} << identity))) continue;
      bool closed = true;
      for (int a = 0; a < e && closed; ++a)
        for (int b = 0; b < e && closed; ++b)
          if ((subset >> a & 1) && (subset >> b & 1) &&
              !(subset >> comp[a][b] & 1))
            closed = false;
      if (!closed) continue;
      std::vector<int> members;
      std::set<int> orbit_of_0;
      for (int a = 0; a < e; ++a)
        if (subset >> a & 1) {
          members.push_back(a);
          orbit_of_0.insert(perms[a][0]);
        }
      if (int(orbit_of_0.size()) == r) transitive_subgroups.push_back(members);
    }
    std::sort(transitive_subgroups.begin(), transitive_subgroups.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    // Hamming masks: closures of the cores under each transitive subgroup.
    std::set<uint64_t> hams;
    for (int a = 0; a + 0 <= r; ++a)
      for (int b = 0; a + b <= r; ++b) {
        uint64_t core = 0;
        for (int t = 0; t < tuple_count; ++t) {
          int x = t;
          std::vector<int> digits(r);
          for (int i = r - 1; i >= 0; --i) {
            digits[i] = x % (k + 1);
            x /= k + 1;
          }
          bool in = true;
          for (int i = 0; i < a; ++i)
            if (digits[i] == 0) in = false;
          for (int i = a + b; i < r; ++i)
            if (digits[i] != 0) in = false;
          if (in) core |= uint64_t{1} << t;
        }
        for (const auto& sub : transitive_subgroups) {
          uint64_t closure = 0;
          for (int m : sub) closure |= apply(m, core);
          hams.insert(closure);
        }
      }
    hamming_masks.assign(hams.begin(), hams.end());
  }

  uint64_t apply(int element, uint64_t mask) const {
    const std::vector<uint64_t>& table = byte_tables[element];
    uint64_t out = 0;
    for (int bpos = 0; bpos < bytes; ++bpos)
      out |= table[size_t(bpos) * 256 + ((mask >> (8 * bpos)) & 0xff)];
    return out;
  }

  bool homogeneous(uint64_t mask) const {
    for (const auto& sub : transitive_subgroups) {
      bool fixed = true;
      for (int m : sub)
        if (apply(m, mask) != mask) {
          fixed = false;
          break;
        }
      if (fixed) return true;
    }
    return false;
  }

  bool hamming(uint64_t mask) const {
    return std::binary_search(hamming_masks.begin(), hamming_masks.end(),
                              mask);
  }
};

void criterion_jset_oracle(Checker& chk) {
  for (int r = 1; r <= 3; ++r) {
    const int k = 2;
    MaskOracle oracle(r, k);
    TupleSpace ts(r, k);
    chk.equal(ts.tuple_count(), oracle.tuple_count, "tuple count");
    const uint64_t full = ts.full_mask();

    // Bulk sweep over every nonempty mask, split across threads; analyze
    // holds no per-call mutable shared state.
    unsigned n_threads =
        std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    if (full < 4096) n_threads = 1;
    std::atomic<long long> mismatches{0};
    std::vector<std::string> first_bad(n_threads);
    std::vector<std::thread> workers;
    const uint64_t chunk = full / n_threads + 1;
    for (unsigned w = 0; w < n_threads; ++w) {
      workers.emplace_back([&, w] {
        const uint64_t lo = 1 + w * chunk;
        const uint64_t hi = std::min(full, lo + chunk - 1);
        for (uint64_t mask = lo; mask <= hi; ++mask) {
          TupleSpace::Analysis a = ts.analyze(mask);
          bool oh = oracle.homogeneous(mask);
          bool ohm = oracle.hamming(mask);
          if (a.homogeneous != oh || a.hamming != ohm) {
            if (mismatches.fetch_add(1) == 0 || first_bad[w].empty()) {
              std::ostringstream os;
              os << "r=" << r << " mask=" << mask << ": library ("
                 << a.homogeneous << "," << a.hamming << ") oracle (" << oh
                 << "," << ohm << ")";
              first_bad[w] = os.str();
            }
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (mismatches.load() != 0) {
      std::string example;
      for (const auto& s : first_bad)
        if (!s.empty()) {
          example = s;
          break;
        }
      chk.check(false, "bulk sweep r=" + std::to_string(r) + ": " +
                           std::to_string(mismatches.load()) +
                           " mismatches, first " + example);
    }

    // Scalar predicates against the same oracle: exhaustively for r <= 2,
    // on a stride plus every oracle hamming mask for r = 3.
    std::vector<uint64_t> scalar_masks;
    if (r <= 2) {
      for (uint64_t mask = 1; mask <= full; ++mask) scalar_masks.push_back(mask);
    } else {
      for (uint64_t mask = 1; mask <= full; mask += 65537)
        scalar_masks.push_back(mask);
      for (uint64_t mask : oracle.hamming_masks)
        if (mask) scalar_masks.push_back(mask);
    }
    long long scalar_bad = 0;
    for (uint64_t mask : scalar_masks) {
      std::vector<std::vector<int>> tuples;
      for (int t = 0; t < oracle.tuple_count; ++t)
        if (mask >> t & 1) {
          std::vector<int> digits(r);
          int x = t;
          for (int i = r - 1; i >= 0; --i) {
            digits[i] = x % (k + 1);
            x /= k + 1;
          }
          tuples.push_back(digits);
        }
      JSet j(r, k, tuples);
      bool oh = oracle.homogeneous(mask);
      if (is_homogeneous(j) != oh) ++scalar_bad;
      if (oh && is_hamming(j) != oracle.hamming(mask)) ++scalar_bad;
    }
    chk.check(scalar_bad == 0, "scalar predicates r=" + std::to_string(r) +
                                   ": " + std::to_string(scalar_bad) +
                                   " mismatches");
  }

  // A non-homogeneous set must be rejected by is_hamming, not classified.
  bool threw = false;
  try {
    is_hamming(JSet(2, 2, {{0, 1}}));
  } catch (const NotHomogeneous&) {
    threw = true;
  }
  chk.check(threw, "is_hamming on a non-homogeneous set must throw");
}

// ---------------------------------------------------------------------------
// Criterion 9: constructing a family member and classifying it returns the
// descriptor it was built from; at the classified ranges the verdict names
// the family, at the 1/3 boundary it is BelowThreshold with the match kept
// as information.

void criterion_roundtrip(Checker& chk) {
  struct Case {
    FamilyDescriptor desc;
    Verdict verdict;
  };
  const std::vector<Case> cases = {
      {hamming_descriptor(1, 4), Verdict::GeneralisedHamming},
      {hamming_descriptor(2, 3), Verdict::BelowThreshold},
      {hamming_descriptor(2, 4), Verdict::GeneralisedHamming},
      {johnson_descriptor(6, 2, 1), Verdict::JohnsonFamily},
      {johnson_descriptor(6, 2, 2), Verdict::JohnsonFamily},
      {squashed_descriptor(8, 4, 1), Verdict::SquashedJohnsonFamily},
  };
  for (const Case& c : cases) {
    const std::string name = describe(c.desc);
    ClassificationResult res = classify(construct_family(c.desc));
    chk.check(res.verdict == c.verdict,
              name + ": expected verdict " + verdict_name(c.verdict) +
                  ", got " + verdict_name(res.verdict));
    chk.check(res.matched.has_value(), name + ": match missing");
    if (res.matched)
      chk.check(*res.matched == c.desc,
                name + ": matched " + describe(*res.matched) + " instead");
  }
  // K3 = H(1,3) sits exactly on the threshold: relative fixity 1/3.
  ClassificationResult res = classify(complete_graph(3));
  chk.check(res.verdict == Verdict::BelowThreshold,
            std::string("K3: expected BelowThreshold, got ") +
                verdict_name(res.verdict));
  chk.check(res.relfix.has_value() && *res.relfix == Rational(1, 3),
            "K3: relative fixity must be exactly 1/3");
}

// ---------------------------------------------------------------------------
// Criterion 10: every catalog instance is strongly regular and satisfies
// the counting identity (v - d - 1) mu = d (d - lambda - 1).

void criterion_srg_identity(Checker& chk) {
  for (const auto& [row, m] : catalog_instances()) {
    const std::string name = "row " + row + ", m=" + std::to_string(m);
    Digraph g = construct_catalog_row(row, m).graph;
    auto p = srg_parameters(g);
    chk.check(p.has_value(), name + ": not strongly regular");
    if (!p) continue;
    long long lhs = (long long)(p->v - p->d - 1) * p->mu;
    long long rhs = (long long)p->d * (p->d - p->lambda - 1);
    chk.check(lhs == rhs, name + ": identity fails, (v-d-1)mu=" +
                              std::to_string(lhs) + " vs d(d-lambda-1)=" +
                              std::to_string(rhs));
  }
}

// ---------------------------------------------------------------------------
// Criterion 11: the backtracking automorphism search agrees with the n!
// scan on 200 random digraphs with at most 7 vertices.

void criterion_random_aut(Checker& chk) {
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<int> size_dist(1, 7);
  std::bernoulli_distribution arc_dist(0.5);
  int mismatches = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int n = size_dist(rng);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (arc_dist(rng)) g.set_arc(u, v);
    uint64_t want = oracle::brute_aut_order(g);
    AutResult res = automorphism_group(g);
    if (res.order != want) ++mismatches;
  }
  chk.check(mismatches == 0,
            std::to_string(mismatches) + " of 200 random digraphs disagree");
}

// ---------------------------------------------------------------------------
// Criterion 12: the valency of H(r,4) grows linearly in r while the vertex
// count grows exponentially, so valency / ln n is the same for every r.

void criterion_growth(Checker& chk) {
  std::vector<FamilyDescriptor> specs;
  for (int r = 1; r <= 4; ++r) specs.push_back(hamming_descriptor(r, 4));
  std::vector<GrowthRow> rows = growth_report(specs);
  chk.equal(rows.size(), size_t{4}, "row count");
  long long n = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    const int r = int(i) + 1;
    n *= 4;
    chk.equal(rows[i].valency, 3 * r,
              "valency of H(" + std::to_string(r) + ",4)");
    chk.equal(rows[i].n, n, "vertex count of H(" + std::to_string(r) + ",4)");
    chk.check(std::abs(rows[i].ratio - 3.0 / std::log(4.0)) < 1e-12,
              "ratio of H(" + std::to_string(r) + ",4) must be 3 / ln 4");
  }
  for (size_t i = 1; i < rows.size(); ++i)
    chk.check(std::abs(rows[i].ratio - rows[0].ratio) < 1e-12,
              "ratios must be identical across r");
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0 means no stated limit
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "generalised Hamming graph H(2,4): brute-force fixity", 10,
       criterion_hamming_fixity},
      {2, "Johnson graph J(6,2,1): brute-force fixity", 30,
       criterion_johnson_fixity},
      {3, "squashed Johnson graph QJ(8,4,1): brute-force fixity", 300,
       criterion_squashed_fixity},
      {4, "catalog row i at q=2: parameters, fixity, classification", 120,
       criterion_row_i},
      {5, "catalog row ii at m=2: discrepancy surfaces as a record", 0,
       criterion_row_ii},
      {6, "orbital digraphs of S4 wr S2 match the merged products", 5,
       criterion_wreath_orbitals},
      {7, "product action primitivity across a 6 x 2 wreath grid", 30,
       criterion_primitivity_grid},
      {8, "index-set predicates vs subgroup-closure oracle, r <= 3", 60,
       criterion_jset_oracle},
      {9, "family members round-trip through the classifier", 0,
       criterion_roundtrip},
      {10, "strongly regular counting identity across the catalog", 0,
       criterion_srg_identity},
      {11, "automorphism order vs factorial scan on 200 random digraphs", 120,
       criterion_random_aut},
      {12, "valency growth of H(r,4): constant valency / ln n", 0,
       criterion_growth},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Checker chk;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(chk);
    } catch (const std::exception& e) {
      chk.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0)
      chk.check(secs < c.limit_seconds,
                "took " + std::to_string(secs) + "s, limit " +
                    std::to_string(c.limit_seconds) + "s");
    const bool pass = chk.failures.empty();
    if (!pass) ++failed;
    std::printf("criterion %2d: %s (%.1fs) %s\n", c.number,
                pass ? "PASS" : "FAIL", secs, c.title);
    for (const std::string& f : chk.failures)
      std::printf("    FAIL: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria passed\n",
              int(criteria.size()) - failed, criteria.size());
  return failed;
}
