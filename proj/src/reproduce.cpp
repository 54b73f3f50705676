#include "dsrg/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <map>
#include <thread>

#include "dsrg/cayley.hpp"
#include "dsrg/closure.hpp"
#include "dsrg/designs.hpp"
#include "dsrg/equiv.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"
#include "dsrg/search.hpp"

namespace dsrg {

bool CaseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok || c.informational; });
}

namespace {

std::string describe(const Verdict& v) {
  return v ? v.params->to_string() : "not a DSRG (" + v.reason + ")";
}

class CaseBuilder {
 public:
  CaseBuilder(std::string name, const ReproduceOptions& options) : options_(options) { report_.name = std::move(name); }

  void check(std::string label, std::string expected, std::string actual, bool ok) {
    report_.checks.push_back(Check{std::move(label), std::move(expected), std::move(actual), ok, false});
  }
  void info(std::string label, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    report_.checks.push_back(Check{std::move(label), std::move(expected), std::move(actual), ok, true});
  }
  void equal(std::string label, const std::string& expected, const std::string& actual) {
    check(std::move(label), expected, actual, expected == actual);
  }

  void verify_params(const std::string& what, const Digraph& g, const DsrgParams& expected) {
    const Verdict v = verify(g);
    equal("verify " + what, expected.to_string(), describe(v));
    if (v && *v.params != expected) {
      const Feasibility f = is_feasible(*v.params);
      info("computed parameters of " + what + " feasible", "yes",
           f.ok ? "yes (d=" + std::to_string(f.d) + ")" : "no (" + f.reason + ")");
    }
  }

  void feasibility(const DsrgParams& p) {
    const Feasibility f = is_feasible(p);
    check("feasibility of " + p.to_string(), "feasible", f.ok ? "feasible" : "infeasible (" + f.reason + ")", f.ok);
  }

  void closure(const std::string& what, const Digraph& g) {
    const CoherentConfig cfg = coherent_closure(g);
    const bool commutative = is_commutative(cfg);
    check("closure of " + what, "non-commutative, rank >= 6",
          std::string(commutative ? "commutative" : "non-commutative") + ", rank " + std::to_string(cfg.rank()),
          !commutative && cfg.rank() >= 6);
  }

  void classes(const std::string& what, const std::vector<Digraph>& graphs, std::size_t expected) {
    const auto cls = equivalence_classes(graphs);
    equal("equivalence classes among " + what, std::to_string(expected), std::to_string(cls.size()));
  }

  void emit(const Digraph& g) {
    if (options_.emit_dir.empty()) return;
    std::filesystem::create_directories(options_.emit_dir);
    const auto path = std::filesystem::path(options_.emit_dir) / (report_.name + "_" + std::to_string(++emitted_) + ".txt");
    write_file(path.string(), format_digraph(g));
  }

  CaseReport& report() { return report_; }
  const ReproduceOptions& options() const { return options_; }

 private:
  const ReproduceOptions& options_;
  CaseReport report_;
  std::size_t emitted_ = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Union of the orbitals of (1, j) over the seeds j (1-based).
Digraph orbital_union(const PermGroup& group, const std::vector<Point>& seeds) {
  Digraph g(group.degree());
  for (Point j : seeds) {
    if (j < 2 || j > group.degree()) throw InputError("dart seed (1," + std::to_string(j) + ") out of range");
    for (auto [x, y] : orbital(group, 0, j - 1)) g.add_arc(x, y);
  }
  return g;
}

void cayley_case(CaseBuilder& b, const std::string& group_name) {
  const bool wreath = group_name == "wreath-s2-z4";
  const FiniteGroup group = wreath ? wreath_s2_z4(WreathConvention::LeftActs) : metacyclic_39();
  std::map<std::string, Digraph> graphs;
  for (const auto& cd : fixtures::connection_sets()) {
    if (cd.group != group_name) continue;
    const ConnectionSet x = connection_set(group, cd.labels);
    b.equal("group-ring test " + cd.name, cd.expected.to_string(), describe(group_ring_test(group, x)));
    const Digraph g = cayley_digraph(group, x);
    b.verify_params("Cay(" + cd.name + ")", g, cd.expected);
    b.closure("Cay(" + cd.name + ")", g);
    b.emit(g);
    graphs.emplace(cd.name, g);
  }
  if (wreath) {
    const FiniteGroup opposite = wreath_s2_z4(WreathConvention::RightActs);
    std::vector<std::string> same;
    for (const auto& cd : fixtures::connection_sets()) {
      if (cd.group != group_name) continue;
      const bool agree = describe(group_ring_test(opposite, connection_set(opposite, cd.labels))) ==
                         describe(group_ring_test(group, connection_set(group, cd.labels)));
      same.push_back(cd.name + (agree ? " same" : " differs"));
    }
    b.info("group-ring verdicts under the opposite multiplication", "all same", join(same, ", "));
    b.classes("Cay(X2), Cay(X3), Cay(X4)", {graphs.at("X2"), graphs.at("X3"), graphs.at("X4")}, 3);
    b.classes("Cay(X5), Cay(X6)", {graphs.at("X5"), graphs.at("X6")}, 2);

    const auto fixed = fixtures::wreath_x2_candidate_erratum();
    const Digraph g2 = cayley_digraph(group, connection_set(group, fixed.labels));
    b.info("verify Cay(X2 with 031 replaced by 002)", fixed.expected.to_string(), describe(verify(g2)));
    b.info("equivalence classes among Cay(X2 corrected), Cay(X3), Cay(X4)", "3",
           std::to_string(equivalence_classes({g2, graphs.at("X3"), graphs.at("X4")}).size()));
  } else {
    b.classes("Cay(X7), Cay(X8)", {graphs.at("X7"), graphs.at("X8")}, 2);
  }
}

void appendix_case(CaseBuilder& b, const std::string& group_name) {
  const PermGroup group = fixtures::make_group(fixtures::appendix_group(group_name));
  std::map<DsrgParams, std::vector<Digraph>> by_params;
  for (const auto& u : fixtures::appendix_unions()) {
    if (u.group != group_name) continue;
    std::vector<std::string> seeds;
    for (Point j : u.seeds) seeds.push_back("(1," + std::to_string(j) + ")");
    const std::string what = "union of orbits of " + join(seeds, ",");
    const Digraph g = orbital_union(group, u.seeds);
    b.verify_params(what, g, u.expected);
    b.feasibility(u.expected);
    b.closure(what, g);
    b.emit(g);
    by_params[u.expected].push_back(g);
  }
  for (const auto& [params, graphs] : by_params)
    if (graphs.size() > 1) b.classes("the DSRG(" + params.to_string() + ") digraphs", graphs, graphs.size());
}

void design_931_case(CaseBuilder& b) {
  const BlockDesign d = validate_design(9, fixtures::design_931_blocks());
  b.equal("design parameters (v,b,k,r,lambda)", "9 12 3 4 1",
          std::to_string(d.v) + " " + std::to_string(d.b) + " " + std::to_string(d.k) + " " + std::to_string(d.r) +
              " " + std::to_string(d.lambda));
  std::vector<Permutation> gens;
  for (const auto& s : fixtures::design_931_generators()) gens.push_back(Permutation::from_cycles(s, 9));
  const PermGroup group(9, gens);
  b.equal("automorphism group order", "432", std::to_string(group_order(group)));
  b.equal("order of Aut of the Levi graph", "432", std::to_string(group_order(levi_automorphism_group(d))));
  const PipelineResult res = design_action_pipeline(group, {0, 1, 3}, ObjectKind::Set);
  b.equal("orbit of {1,2,4}: degree and rank", "72 16",
          std::to_string(res.action.domain.size()) + " " + std::to_string(res.scheme.rank()));
  SearchOptions opts;
  opts.jobs = b.options().jobs;
  const auto hits = search_scheme(res.scheme, opts);
  std::vector<std::string> found;
  std::vector<Digraph> graphs;
  bool verified = true;
  for (const auto& h : hits) {
    found.push_back(h.params.to_string());
    graphs.push_back(realize(res.scheme, h.candidate.classes));
    const Verdict v = verify(graphs.back());
    verified = verified && v && *v.params == h.params;
    b.emit(graphs.back());
  }
  found.erase(std::unique(found.begin(), found.end()), found.end());
  b.equal("parameter sets found by the search", "72 22 9 6 7", join(found, "; "));
  b.check("search hits pass adjacency verification", "all", verified ? "all" : "mismatch", verified);
  b.classes("the search hits", graphs, 2);
}

void fano_case(CaseBuilder& b) {
  const BlockDesign d = validate_design(7, fixtures::fano_lines());
  const LeviGraph levi = levi_graph(d);
  bool cubic = true;
  for (Point v = 0; v < levi.graph.order(); ++v) cubic = cubic && levi.graph.out_degree(v) == 3;
  b.check("Levi graph is cubic on 14 vertices", "yes", cubic && levi.graph.order() == 14 ? "yes" : "no",
          cubic && levi.graph.order() == 14);
  const CanonicalForm cf = canonical_form(levi.graph);
  const auto order = cf.aut_order();
  b.equal("order of Aut of the Levi graph", "336", order ? std::to_string(*order) : "overflow");
  // Two lines {1,2,3} and {1,4,5}, their intersection 1 and the point 2 on the
  // first line, as the 3-path 2 - {1,2,3} - 1 - {1,4,5} of Levi vertices.
  const PermGroup group(levi.graph.order(), cf.generators);
  const PipelineResult res = design_action_pipeline(group, {1, 7, 0, 8}, ObjectKind::Set);
  b.equal("configuration orbit: degree and rank", "84 25",
          std::to_string(res.action.domain.size()) + " " + std::to_string(res.scheme.rank()));
  SearchOptions opts;
  opts.jobs = b.options().jobs;
  const auto hits = search_scheme(res.scheme, opts);
  std::vector<std::string> found;
  for (const auto& h : hits) found.push_back(h.params.to_string());
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  const bool has = std::find(found.begin(), found.end(), "84 31 17 12 11") != found.end();
  b.check("search finds DSRG(84,31,17,12,11)", "present", has ? "present" : "absent", has);
  b.info("all parameter sets found", "", join(found, "; "));
}

void table_case(CaseBuilder& b) {
  CaseReport& r = b.report();
  r.conditional = true;
  if (b.options().catalogue_dir.empty()) {
    r.skipped = true;
    r.note = "needs converted catalogue files (--catalogue DIR)";
    return;
  }
  std::map<DsrgParams, std::vector<Digraph>> by_params;
  for (const auto& row : fixtures::catalogue_rows()) {
    const std::string label = "row " + std::to_string(row.row);
    const auto path = std::filesystem::path(b.options().catalogue_dir) /
                      ("as" + std::to_string(row.order) + "_" + std::to_string(row.catalogue_nr) + ".txt");
    if (!std::filesystem::exists(path)) {
      b.check(label + ": scheme file", path.string(), "missing", false);
      continue;
    }
    const CoherentConfig cfg = parse_scheme(read_file(path.string()));
    b.equal(label + ": order and rank", std::to_string(row.order) + " " + std::to_string(row.rank),
            std::to_string(cfg.order()) + " " + std::to_string(cfg.rank()));
    if (cfg.rank() != row.rank) continue;
    const UnionCandidate cand = make_candidate(cfg, row.classes);
    b.equal(label + ": tensor test", row.params.to_string(), describe(tensor_check(cfg, cand)));
    SearchOptions opts;
    opts.targets = {row.params};
    opts.all_unions = true;
    opts.jobs = b.options().jobs;
    const auto hits = search_scheme(cfg, opts);
    const bool found = std::any_of(hits.begin(), hits.end(), [&](const SearchHit& h) { return h.candidate.classes == cand.classes; });
    b.check(label + ": search finds the union", "found", found ? "found" : "absent", found);
    const Digraph g = realize(cfg, cand.classes);
    b.emit(g);
    by_params[row.params].push_back(g);
  }
  for (const auto& [params, graphs] : by_params)
    if (graphs.size() > 1) b.classes("the DSRG(" + params.to_string() + ") rows", graphs, graphs.size());
}

}  // namespace

const std::vector<std::string>& reproduce_case_names() {
  static const std::vector<std::string> names = {"prop32", "prop39", "h1",  "h2",    "h3",   "h4",    "h5",
                                                 "h6",     "h7",     "h8",  "h9",    "h10",  "h11",   "ex931",
                                                 "fano",   "table1"};
  return names;
}

CaseReport reproduce_case(const std::string& name, const ReproduceOptions& options) {
  CaseBuilder b(name, options);
  if (name == "prop32") {
    cayley_case(b, "wreath-s2-z4");
  } else if (name == "prop39") {
    cayley_case(b, "meta39");
  } else if (name.size() >= 2 && name[0] == 'h' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const int i = std::stoi(name.substr(1));
    if (i < 1 || i > 11) throw InputError("unknown case '" + name + "'");
    appendix_case(b, "H" + std::to_string(i));
  } else if (name == "ex931") {
    design_931_case(b);
  } else if (name == "fano") {
    fano_case(b);
  } else if (name == "table1") {
    table_case(b);
  } else {
    throw InputError("unknown case '" + name + "'");
  }
  return std::move(b.report());
}

std::vector<CaseReport> reproduce_cases(const std::vector<std::string>& names, const ReproduceOptions& options) {
  for (const auto& n : names)
    if (std::find(reproduce_case_names().begin(), reproduce_case_names().end(), n) == reproduce_case_names().end())
      throw InputError("unknown case '" + n + "'");
  std::vector<CaseReport> out(names.size());
  ReproduceOptions inner = options;
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, names.size()));
  if (jobs > 1) inner.jobs = 1;  // parallelism across cases
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) out[i] = reproduce_case(names[i], inner);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return out;
}

std::string format_report(const CaseReport& report, bool tsv) {
  std::string out;
  if (report.skipped) {
    out += tsv ? report.name + "\tSKIP\t" + report.note + "\t\t\n" : "[SKIP] " + report.name + ": " + report.note + "\n";
    return out;
  }
  for (const auto& c : report.checks) {
    const std::string status = c.informational ? "INFO" : (c.ok ? "PASS" : "FAIL");
    if (tsv) {
      out += report.name + "\t" + status + "\t" + c.label + "\t" + c.expected + "\t" + c.actual + "\n";
    } else if (c.informational) {
      out += "[INFO] " + report.name + ": " + c.label + ": " + c.actual + "\n";
    } else {
      out += "[" + status + "] " + report.name + ": " + c.label + ": expected " + c.expected + ", got " + c.actual + "\n";
    }
  }
  return out;
}

}  // namespace dsrg
