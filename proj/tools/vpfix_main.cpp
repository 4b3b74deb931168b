// vpfix: construct the classified digraph families, measure automorphism
// groups and relative fixity, and check the closed-form values against
// brute force. Exit codes: 0 success, 1 usage or domain error, 2 budget
// exhausted, 3 verification produced a FAIL or DISCREPANCY record.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vpfix/digraph_aut.hpp"
#include "vpfix/errors.hpp"
#include "vpfix/families.hpp"
#include "vpfix/fixity.hpp"
#include "vpfix/io.hpp"
#include "vpfix/jset.hpp"
#include "vpfix/orbitals.hpp"
#include "vpfix/srg_catalog.hpp"
#include "vpfix/wreath.hpp"

using namespace vpfix;

namespace {

// All command output is buffered and flushed once, after the command has
// fully succeeded, so partial results never reach stdout.
struct Output {
  std::string text;
  int code = 0;
};

struct BudgetOpts {
  long long ms = 120'000;
  unsigned long long nodes = 50'000'000;
  unsigned long long cap = kDefaultElementCap;

  SearchBudget budget() const {
    return SearchBudget{std::chrono::milliseconds(ms), nodes};
  }
};

void add_budget_flags(CLI::App* cmd, BudgetOpts& b) {
  cmd->add_option("--search-budget-ms", b.ms,
                  "time budget for automorphism/isomorphism search")
      ->capture_default_str();
  cmd->add_option("--search-budget-nodes", b.nodes,
                  "node budget for automorphism/isomorphism search")
      ->capture_default_str();
  cmd->add_option("--element-cap", b.cap,
                  "cap on materialized group elements")
      ->capture_default_str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
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

// Range string "a..b" with 1 <= a <= b.
std::pair<int, int> parse_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw DomainError("range must be written a..b");
  try {
    int a = std::stoi(s.substr(0, dots));
    int b = std::stoi(s.substr(dots + 2));
    if (a < 1 || b < a) throw DomainError("range needs 1 <= a <= b");
    return {a, b};
  } catch (const std::exception&) {
    throw DomainError("range must be written a..b");
  }
}

void emit_records(Output& out, const std::vector<VerificationRecord>& recs,
                  bool csv) {
  if (csv) {
    out.text += to_csv(recs);
  } else {
    for (const auto& r : recs) {
      out.text += r.status + " " + r.subject + ": expected " + r.expected +
                  ", measured " + r.measured;
      if (!r.note.empty()) out.text += " (" + r.note + ")";
      out.text += "\n";
    }
  }
  for (const auto& r : recs)
    if (r.status != "PASS") out.code = 3;
}

struct ConstructOpts {
  int r = 1, m = 0, k = 0, i = 1, n = 0;
  std::string row, jset_path, out_path;
};

void write_graph(Output& out, const std::string& path, const Digraph& g) {
  write_digraph(path, g);
  out.text += "wrote " + path + ": n=" + std::to_string(g.vertex_count()) +
              " arcs=" + std::to_string(g.arc_count()) + "\n";
}

void add_construct(CLI::App& app, Output& out) {
  auto* c = app.add_subcommand(
      "construct", "build a family member and write it as a digraph file");
  c->require_subcommand(1);
  auto o = std::make_shared<ConstructOpts>();

  auto* h = c->add_subcommand("hamming",
                              "generalised Hamming graph H(r,m; J), unit "
                              "index set unless --jset is given");
  h->add_option("--r", o->r, "product depth")->capture_default_str();
  h->add_option("--m", o->m, "alphabet size")->required();
  h->add_option("--jset", o->jset_path, "index tuple set file (binary, sets r)");
  h->add_option("-o,--out", o->out_path, "output digraph file")->required();
  h->callback([o, &out] {
    FamilyDescriptor f =
        o->jset_path.empty()
            ? hamming_descriptor(o->r, o->m)
            : [&] {
                JSet j = read_jset(o->jset_path);
                return hamming_descriptor(j.r(), o->m, j);
              }();
    write_graph(out, o->out_path, construct_family(f));
  });

  auto* j = c->add_subcommand(
      "johnson", "distance-i Johnson graph J(m,k,i) or a merged product");
  j->add_option("--m", o->m, "ground set size")->required();
  j->add_option("--k", o->k, "subset size")->required();
  j->add_option("--i", o->i, "distance index")->capture_default_str();
  j->add_option("--jset", o->jset_path,
                "index tuple set file over distances 0..k (sets r)");
  j->add_option("-o,--out", o->out_path, "output digraph file")->required();
  j->callback([o, &out] {
    FamilyDescriptor f =
        o->jset_path.empty()
            ? johnson_descriptor(o->m, o->k, o->i)
            : [&] {
                JSet js = read_jset(o->jset_path);
                return johnson_descriptor(o->m, o->k, js.r(), js);
              }();
    write_graph(out, o->out_path, construct_family(f));
  });

  auto* s = c->add_subcommand(
      "squashed",
      "squashed Johnson graph QJ(2m,m,i) on half-partitions, half size m");
  s->add_option("--m", o->m, "half size (the graph has C(2m,m)/2 vertices)")
      ->required();
  s->add_option("--i", o->i, "distance index")->capture_default_str();
  s->add_option("--jset", o->jset_path,
                "index tuple set file over distances 0..floor(m/2) (sets r)");
  s->add_option("-o,--out", o->out_path, "output digraph file")->required();
  s->callback([o, &out] {
    FamilyDescriptor f =
        o->jset_path.empty()
            ? squashed_descriptor(2 * o->m, o->m, o->i)
            : [&] {
                JSet js = read_jset(o->jset_path);
                return squashed_descriptor(2 * o->m, o->m, js.r(), js);
              }();
    write_graph(out, o->out_path, construct_family(f));
  });

  auto* g = c->add_subcommand(
      "catalog", "strongly regular graph of a printed table row");
  g->add_option("--row", o->row, "table row id (i..viii, iv/v signed)")
      ->required();
  g->add_option("--m", o->m, "table parameter (field size q for row i)")
      ->required();
  g->add_option("--i", o->i, "orbital index: 1 the row graph, 2 its complement")
      ->capture_default_str();
  g->add_option("--jset", o->jset_path,
                "index tuple set file over {0,1,2} (sets r)");
  g->add_option("-o,--out", o->out_path, "output digraph file")->required();
  g->callback([o, &out] {
    FamilyDescriptor f =
        o->jset_path.empty()
            ? srg_descriptor(o->row, o->m, o->i)
            : [&] {
                JSet js = read_jset(o->jset_path);
                return srg_descriptor(o->row, o->m, js.r(), js);
              }();
    write_graph(out, o->out_path, construct_family(f));
  });

  auto* comp = c->add_subcommand("complete", "complete graph K_n");
  comp->add_option("--n", o->n, "vertex count")->required();
  comp->add_option("-o,--out", o->out_path, "output digraph file")->required();
  comp->callback([o, &out] {
    write_graph(out, o->out_path, complete_graph(o->n));
  });

  auto* lp = c->add_subcommand("loop", "loop graph L_n (the diagonal orbital)");
  lp->add_option("--n", o->n, "vertex count")->required();
  lp->add_option("-o,--out", o->out_path, "output digraph file")->required();
  lp->callback([o, &out] {
    write_graph(out, o->out_path, loop_graph(o->n));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vertex-primitive digraph families: construction, automorphisms, "
      "relative fixity, verification"};
  app.require_subcommand(1);
  Output out;

  add_construct(app, out);

  // aut
  {
    auto path = std::make_shared<std::string>();
    auto opath = std::make_shared<std::string>();
    auto b = std::make_shared<BudgetOpts>();
    auto* a = app.add_subcommand(
        "aut", "automorphism group of a digraph file (order and generators)");
    a->add_option("file", *path, "digraph file")->required();
    a->add_option("-o,--out", *opath, "write the group as a permgroup file");
    add_budget_flags(a, *b);
    a->callback([path, opath, b, &out] {
      AutResult r = automorphism_group(read_digraph(*path), b->budget());
      out.text += "aut_order=" + r.order.str() + "\n";
      if (opath->empty()) {
        out.text += format_perm_group(r.group);
      } else {
        write_perm_group(*opath, r.group);
        out.text += "wrote " + *opath + ": degree=" +
                    std::to_string(r.group.degree()) + " generators=" +
                    std::to_string(r.group.generators().size()) + "\n";
      }
    });
  }

  // fixity
  {
    auto path = std::make_shared<std::string>();
    auto b = std::make_shared<BudgetOpts>();
    auto* f = app.add_subcommand(
        "fixity", "brute-force relative fixity of a digraph file");
    f->add_option("file", *path, "digraph file")->required();
    add_budget_flags(f, *b);
    f->callback([path, b, &out] {
      FixityReport rep = fixity_brute(read_digraph(*path), b->budget(), b->cap);
      out.text += "n=" + std::to_string(rep.n) +
                  " aut_order=" + rep.aut_order.str() +
                  " mu=" + std::to_string(rep.mu) +
                  " relfix=" + rep.relfix.str() + "\n";
    });
  }

  // orbitals
  {
    auto gpath = std::make_shared<std::string>();
    auto prefix = std::make_shared<std::string>("orbital");
    auto b = std::make_shared<BudgetOpts>();
    auto* ob = app.add_subcommand(
        "orbitals", "orbital digraphs of a transitive permutation group");
    ob->add_option("--group", *gpath, "permgroup file")->required();
    ob->add_option("--out-prefix", *prefix,
                   "orbital i is written to <prefix><i>.dg")
        ->capture_default_str();
    add_budget_flags(ob, *b);
    ob->callback([gpath, prefix, b, &out] {
      PermutationGroup g = read_perm_group(*gpath, b->cap);
      std::vector<Digraph> obs = orbitals(g);
      for (size_t i = 0; i < obs.size(); ++i) {
        std::string path = *prefix + std::to_string(i) + ".dg";
        write_digraph(path, obs[i]);
        out.text += "orbital " + std::to_string(i) + ": " + path +
                    " arcs=" + std::to_string(obs[i].arc_count()) +
                    " self_paired=" + yesno(is_self_paired(obs[i])) + "\n";
      }
      out.text += "rank=" + std::to_string(obs.size()) + "\n";
    });
  }

  // wreath
  {
    auto inner = std::make_shared<std::string>();
    auto top = std::make_shared<std::string>();
    auto opath = std::make_shared<std::string>();
    auto b = std::make_shared<BudgetOpts>();
    auto* w = app.add_subcommand(
        "wreath", "product action of a wreath product K wr H");
    w->add_option("--inner", *inner, "permgroup file for K")->required();
    w->add_option("--top", *top, "permgroup file for H")->required();
    w->add_option("-o,--out", *opath, "output permgroup file")->required();
    add_budget_flags(w, *b);
    w->callback([inner, top, opath, b, &out] {
      WreathAction wa = wreath_product_action(read_perm_group(*inner, b->cap),
                                              read_perm_group(*top, b->cap),
                                              b->cap);
      write_perm_group(*opath, wa.group);
      out.text += "wrote " + *opath + ": degree=" +
                  std::to_string(wa.product_degree) + " generators=" +
                  std::to_string(wa.group.generators().size()) + "\n";
    });
  }

  // jset check
  {
    auto path = std::make_shared<std::string>();
    auto* js = app.add_subcommand("jset", "index tuple set utilities");
    js->require_subcommand(1);
    auto* jc = js->add_subcommand(
        "check", "report homogeneity and Hamming recognition");
    jc->add_option("file", *path, "jset file")->required();
    jc->callback([path, &out] {
      JSet j = read_jset(*path);
      out.text += "r=" + std::to_string(j.r()) +
                  " k=" + std::to_string(j.k()) +
                  " size=" + std::to_string(j.size()) +
                  " homogeneous=" + yesno(is_homogeneous(j)) +
                  " hamming=" + yesno(is_hamming(j)) + "\n";
    });
  }

  // classify
  {
    auto path = std::make_shared<std::string>();
    auto b = std::make_shared<BudgetOpts>();
    auto* cl = app.add_subcommand(
        "classify", "match a digraph against the classified families");
    cl->add_option("file", *path, "digraph file")->required();
    add_budget_flags(cl, *b);
    cl->callback([path, b, &out] {
      ClassificationResult r =
          classify(read_digraph(*path), b->budget(), b->cap);
      out.text += std::string("verdict=") + verdict_name(r.verdict) + "\n";
      if (r.matched) out.text += "matched=" + describe(*r.matched) + "\n";
      if (r.relfix) out.text += "relfix=" + r.relfix->str() + "\n";
      if (!r.match_quality.empty())
        out.text += "quality=" + r.match_quality + "\n";
      if (!r.advisory.empty()) out.text += "advisory=" + r.advisory + "\n";
    });
  }

  // catalog
  {
    auto row = std::make_shared<std::string>();
    auto m = std::make_shared<int>(0);
    auto* cat = app.add_subcommand(
        "catalog", "printed table lines as CSV (all rows, or one evaluated)");
    CLI::Option* orow =
        cat->add_option("--row", *row, "table row id (i..viii)");
    cat->add_option("--m", *m, "table parameter (field size q for row i)")
        ->needs(orow);
    orow->needs("--m");
    cat->callback([row, m, &out] {
      if (row->empty()) {
        out.text += "row,min_m,action\n";
        for (const auto& info : catalog_rows())
          out.text += info.row + "," + std::to_string(info.min_m) + "," +
                      csv_field(info.action) + "\n";
      } else {
        CatalogLine line = catalog_line(*row, *m);
        out.text += "row,m,v,d,lambda,mu,relfix\n";
        out.text += *row + "," + std::to_string(*m) + "," +
                    std::to_string(line.v) + "," + std::to_string(line.d) +
                    "," + std::to_string(line.lambda) + "," +
                    std::to_string(line.mu) + "," + line.relfix.str() + "\n";
      }
    });
  }

  // verify
  {
    auto o = std::make_shared<ConstructOpts>();
    auto b = std::make_shared<BudgetOpts>();
    auto csv = std::make_shared<bool>(false);
    auto* v = app.add_subcommand(
        "verify", "compare measured fixity and parameters with the formulas");
    v->require_subcommand(1);
    v->add_flag("--csv", *csv, "emit CSV records");
    v->fallthrough();
    add_budget_flags(v, *b);

    auto* vh = v->add_subcommand("hamming", "one generalised Hamming member");
    vh->add_option("--r", o->r, "product depth")->capture_default_str();
    vh->add_option("--m", o->m, "alphabet size")->required();
    vh->callback([o, b, csv, &out] {
      emit_records(out, {verify_family(hamming_descriptor(o->r, o->m),
                                       b->budget(), b->cap)},
                   *csv);
    });

    auto* vj = v->add_subcommand("johnson", "one Johnson member");
    vj->add_option("--m", o->m, "ground set size")->required();
    vj->add_option("--k", o->k, "subset size")->required();
    vj->add_option("--i", o->i, "distance index")->capture_default_str();
    vj->callback([o, b, csv, &out] {
      emit_records(out, {verify_family(johnson_descriptor(o->m, o->k, o->i),
                                       b->budget(), b->cap)},
                   *csv);
    });

    auto* vs = v->add_subcommand("squashed", "one squashed Johnson member");
    vs->add_option("--m", o->m, "half size")->required();
    vs->add_option("--i", o->i, "distance index")->capture_default_str();
    vs->callback([o, b, csv, &out] {
      emit_records(out,
                   {verify_family(squashed_descriptor(2 * o->m, o->m, o->i),
                                  b->budget(), b->cap)},
                   *csv);
    });

    auto* vg = v->add_subcommand("srg", "one catalog row against its printed fixity");
    vg->add_option("--row", o->row, "table row id")->required();
    vg->add_option("--m", o->m, "table parameter")->required();
    vg->callback([o, b, csv, &out] {
      emit_records(out, {verify_family(srg_descriptor(o->row, o->m),
                                       b->budget(), b->cap)},
                   *csv);
    });

    auto* vt = v->add_subcommand(
        "table1", "one catalog row, field by field against the construction");
    vt->add_option("--row", o->row, "table row id")->required();
    vt->add_option("--m", o->m, "table parameter")->required();
    vt->callback([o, b, csv, &out] {
      emit_records(out, check_catalog_row(o->row, o->m, b->budget(), b->cap),
                   *csv);
    });

    auto* va = v->add_subcommand(
        "all", "every desk-scale family instance and every table row");
    va->callback([b, csv, &out] {
      std::vector<VerificationRecord> recs;
      std::vector<FamilyDescriptor> fams = {
          hamming_descriptor(1, 4),    hamming_descriptor(1, 5),
          hamming_descriptor(2, 3),    hamming_descriptor(2, 4),
          johnson_descriptor(6, 2, 1), johnson_descriptor(6, 2, 2),
          squashed_descriptor(8, 4, 1), srg_descriptor("i", 2),
          srg_descriptor("ii", 2)};
      for (const auto& f : fams)
        recs.push_back(verify_family(f, b->budget(), b->cap));
      for (const auto& [row, m] : catalog_instances()) {
        std::vector<VerificationRecord> rr =
            check_catalog_row(row, m, b->budget(), b->cap);
        recs.insert(recs.end(), rr.begin(), rr.end());
      }
      emit_records(out, recs, *csv);
    });
  }

  // growth-report
  {
    auto fam = std::make_shared<std::string>();
    auto range = std::make_shared<std::string>();
    auto o = std::make_shared<ConstructOpts>();
    auto opath = std::make_shared<std::string>();
    auto* gr = app.add_subcommand(
        "growth-report", "valency against ln n across a family range, as CSV");
    gr->add_option("--family", *fam, "hamming | johnson | squashed")
        ->required()
        ->check(CLI::IsMember({"hamming", "johnson", "squashed"}));
    gr->add_option("--range", *range,
                   "a..b over r (hamming) or the ground half/size m")
        ->required();
    gr->add_option("--m", o->m, "alphabet size (hamming)");
    gr->add_option("--k", o->k, "subset size (johnson)");
    gr->add_option("--i", o->i, "distance index")->capture_default_str();
    gr->add_option("-o,--out", *opath, "write the CSV to a file");
    gr->callback([fam, range, o, opath, &out] {
      auto [a, bnd] = parse_range(*range);
      std::vector<FamilyDescriptor> specs;
      for (int x = a; x <= bnd; ++x) {
        if (*fam == "hamming") {
          if (o->m < 2) throw DomainError("hamming growth needs --m >= 2");
          specs.push_back(hamming_descriptor(x, o->m));
        } else if (*fam == "johnson") {
          if (o->k < 1) throw DomainError("johnson growth needs --k >= 1");
          specs.push_back(johnson_descriptor(x, o->k, o->i));
        } else {
          specs.push_back(squashed_descriptor(2 * x, x, o->i));
        }
      }
      std::string csvtext = to_csv(growth_report(specs));
      if (opath->empty()) {
        out.text += csvtext;
      } else {
        write_text_file_atomic(*opath, csvtext);
        out.text += "wrote " + *opath + ": rows=" +
                    std::to_string(specs.size()) + "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::fputs(out.text.c_str(), stdout);
  return out.code;
}
