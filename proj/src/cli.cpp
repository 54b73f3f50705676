#include "dsrg/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <optional>
#include <ostream>

#include "dsrg/cayley.hpp"
#include "dsrg/closure.hpp"
#include "dsrg/designs.hpp"
#include "dsrg/equiv.hpp"
#include "dsrg/error.hpp"
#include "dsrg/io.hpp"
#include "dsrg/params.hpp"
#include "dsrg/reproduce.hpp"
#include "dsrg/scheme.hpp"
#include "dsrg/search.hpp"

namespace dsrg {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

long long parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError(what + ": bad integer '" + tok + "'");
}

DsrgParams parse_params(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 5) throw InputError("parameter set needs five integers 'n k t lambda mu', got '" + text + "'");
  return DsrgParams{parse_int(parts[0], "parameters"), parse_int(parts[1], "parameters"), parse_int(parts[2], "parameters"),
                    parse_int(parts[3], "parameters"), parse_int(parts[4], "parameters")};
}

// 1-based points to a 0-based object.
Object parse_seed(const std::string& text, std::size_t degree) {
  Object seed;
  for (const auto& tok : split_list(text)) {
    const long long p = parse_int(tok, "seed");
    if (p < 1 || static_cast<std::size_t>(p) > degree)
      throw InputError("seed point " + tok + " outside 1.." + std::to_string(degree));
    seed.push_back(static_cast<Point>(p - 1));
  }
  if (seed.empty()) throw InputError("empty seed");
  return seed;
}

ObjectKind parse_kind(const std::string& kind) {
  if (kind == "set") return ObjectKind::Set;
  if (kind == "tuple") return ObjectKind::Tuple;
  throw InputError("kind must be 'set' or 'tuple'");
}

std::string kind_label(const DsrgParams& p) {
  if (p.genuine()) return "genuine";
  return p.t == p.k ? "undirected" : "tournament";
}

std::string params_line(const DsrgParams& p, bool tsv) {
  if (!tsv) return p.to_string();
  return std::to_string(p.n) + "\t" + std::to_string(p.k) + "\t" + std::to_string(p.t) + "\t" +
         std::to_string(p.lambda) + "\t" + std::to_string(p.mu);
}

std::string hit_line(const SearchHit& h, bool tsv) {
  if (!tsv) return format_hit(h);
  std::string classes;
  for (std::size_t i = 0; i < h.candidate.classes.size(); ++i)
    classes += (i ? "," : "") + std::to_string(h.candidate.classes[i]);
  return params_line(h.params, true) + "\t" + classes;
}

struct SearchFlags {
  std::vector<std::string> targets;
  std::size_t max_rank = 25;
  bool all = false;
  std::size_t jobs = 1;
  std::string emit_dir;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--target", f.targets, "Parameter set 'n k t lambda mu' to look for (repeatable)");
  cmd->add_option("--max-rank", f.max_rank, "Largest scheme rank searched")->capture_default_str();
  cmd->add_flag("--all", f.all, "Report every union, not one per transpose/complement class");
  cmd->add_option("--emit-dir", f.emit_dir, "Write each hit as a digraph file into this directory");
}

int run_search(const CoherentConfig& cfg, const SearchFlags& f, bool tsv, std::ostream& out) {
  SearchOptions opts;
  for (const auto& t : f.targets) opts.targets.push_back(parse_params(t));
  opts.max_rank = f.max_rank;
  opts.all_unions = f.all;
  opts.jobs = f.jobs;
  const auto hits = search_scheme(cfg, opts);
  if (!f.emit_dir.empty()) std::filesystem::create_directories(f.emit_dir);
  std::size_t index = 0;
  for (const auto& h : hits) {
    out << hit_line(h, tsv) << "\n";
    if (!f.emit_dir.empty())
      write_file((std::filesystem::path(f.emit_dir) / ("hit_" + std::to_string(++index) + ".txt")).string(),
                 format_digraph(realize(cfg, h.candidate.classes)));
  }
  return kExitOk;
}

FiniteGroup named_group(const std::string& name) {
  if (name == "wreath-s2-z4") return wreath_s2_z4(WreathConvention::LeftActs);
  if (name == "wreath-s2-z4-opposite") return wreath_s2_z4(WreathConvention::RightActs);
  if (name == "meta39") return metacyclic_39();
  throw InputError("unknown group '" + name + "' (wreath-s2-z4, wreath-s2-z4-opposite, meta39)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed strongly regular graphs from association schemes and Cayley digraphs", "dsrg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::size_t jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  // feasible
  auto* feasible = app.add_subcommand("feasible", "List feasible parameter sets or check one");
  std::optional<long long> feas_n;
  bool feas_genuine = false, feas_half = false;
  std::string feas_check;
  feasible->add_option("--n", feas_n, "Order");
  feasible->add_flag("--genuine", feas_genuine, "Only 0 < t < k");
  feasible->add_flag("--half", feas_half, "Only 2k < n");
  feasible->add_option("--check", feas_check, "Check one parameter set 'n k t lambda mu'");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a digraph is a DSRG");
  std::string graph_file;
  verify_cmd->add_option("--graph", graph_file, "Digraph file")->required();

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "Coherent closure of a digraph");
  std::string closure_graph, closure_out;
  closure_cmd->add_option("--graph", closure_graph, "Digraph file")->required();
  closure_cmd->add_option("--out", closure_out, "Write the closure as a scheme file");

  // schurian
  auto* schurian_cmd = app.add_subcommand("schurian", "Coherent configuration of the 2-orbits of a group");
  std::string sch_group, sch_seed, sch_kind = "set", sch_out;
  schurian_cmd->add_option("--group", sch_group, "Group file")->required();
  schurian_cmd->add_option("--seed", sch_seed, "Act on the orbit of this point set/tuple (1-based)");
  schurian_cmd->add_option("--kind", sch_kind, "set or tuple")->capture_default_str();
  schurian_cmd->add_option("--out", sch_out, "Write the scheme file");

  // search
  auto* search_cmd = app.add_subcommand("search", "Search unions of classes for DSRGs");
  std::string search_scheme_file, search_group, search_seed, search_kind = "set";
  SearchFlags search_flags;
  auto* scheme_opt = search_cmd->add_option("--scheme", search_scheme_file, "Scheme file");
  auto* group_opt = search_cmd->add_option("--group", search_group, "Group file (search its Schurian scheme)");
  scheme_opt->excludes(group_opt);
  search_cmd->add_option("--seed", search_seed, "With --group: act on the orbit of this point set/tuple (1-based)");
  search_cmd->add_option("--kind", search_kind, "set or tuple")->capture_default_str();
  add_search_flags(search_cmd, search_flags);

  // cayley
  auto* cayley_cmd = app.add_subcommand("cayley", "Group-ring test and Cayley digraph");
  std::string cay_group, cay_table, cay_set, cay_out;
  auto* cg = cayley_cmd->add_option("--group", cay_group, "Built-in group: wreath-s2-z4, wreath-s2-z4-opposite, meta39");
  auto* ct = cayley_cmd->add_option("--table", cay_table, "Group table file (elements are labeled 1..order)");
  cg->excludes(ct);
  cayley_cmd->add_option("--set", cay_set, "Connection set: element labels separated by commas or spaces")->required();
  cayley_cmd->add_option("--out", cay_out, "Write the Cayley digraph");

  // pipeline
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Design -> induced action -> Schurian scheme -> search");
  std::string pipe_design, pipe_group, pipe_seed, pipe_kind = "set";
  PipelineCaps caps;
  SearchFlags pipe_flags;
  pipeline_cmd->add_option("--design", pipe_design, "Design file")->required();
  pipeline_cmd->add_option("--group", pipe_group,
                           "Group file acting on the points (degree v) or on the Levi vertices (degree v+b); "
                           "default: Aut of the Levi graph");
  pipeline_cmd->add_option("--seed", pipe_seed, "Seed points (1-based; blocks are v+1..v+b)")->required();
  pipeline_cmd->add_option("--kind", pipe_kind, "set or tuple")->capture_default_str();
  pipeline_cmd->add_option("--max-orbit", caps.max_orbit, "Largest orbit")->capture_default_str();
  add_search_flags(pipeline_cmd, pipe_flags);

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Partition digraphs up to isomorphism, reversal and complement");
  std::vector<std::string> equiv_files;
  equiv_cmd->add_option("--graphs", equiv_files, "Digraph files")->required();

  // reproduce
  auto* repro_cmd = app.add_subcommand("reproduce", "Rebuild the embedded constructions and check them");
  std::vector<std::string> cases;
  ReproduceOptions repro;
  repro_cmd->add_option("cases", cases, "Case names or 'all' (default)");
  repro_cmd->add_option("--catalogue", repro.catalogue_dir, "Directory of converted catalogue schemes");
  repro_cmd->add_option("--emit-dir", repro.emit_dir, "Write every constructed digraph here");
  repro_cmd->add_flag("--list", "List case names");

  std::vector<const char*> argv;
  argv.push_back("dsrg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const bool tsv = format == "tsv";

  try {
    if (*feasible) {
      if (!feas_check.empty()) {
        const DsrgParams p = parse_params(feas_check);
        const Feasibility f = is_feasible(p);
        if (f.ok) {
          out << p.to_string() << " feasible d=" << f.d << "\n";
          return kExitOk;
        }
        out << p.to_string() << " infeasible: " << f.reason << "\n";
        return kExitDomain;
      }
      if (!feas_n) throw InputError("feasible needs --n or --check");
      for (const auto& p : enumerate_feasible(*feas_n, feas_genuine, feas_half)) out << params_line(p, tsv) << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      const Verdict v = verify(parse_digraph(read_file(graph_file)));
      if (!v) {
        out << "not a DSRG: " << v.reason << "\n";
        return kExitDomain;
      }
      out << params_line(*v.params, tsv) << (tsv ? "\t" : " ") << kind_label(*v.params) << "\n";
      return kExitOk;
    }
    if (*closure_cmd) {
      const CoherentConfig cfg = coherent_closure(parse_digraph(read_file(closure_graph)));
      out << "rank " << cfg.rank() << (cfg.homogeneous() ? " homogeneous" : " heterogeneous")
          << (is_commutative(cfg) ? " commutative" : " non-commutative") << "\n";
      if (!closure_out.empty()) write_file(closure_out, export_scheme(cfg));
      return kExitOk;
    }
    if (*schurian_cmd) {
      PermGroup group = parse_group(read_file(sch_group));
      if (!sch_seed.empty())
        group = induced_action(group, parse_seed(sch_seed, group.degree()), parse_kind(sch_kind)).action;
      const CoherentConfig cfg = schurian(group);
      out << "degree " << cfg.order() << " rank " << cfg.rank() << (cfg.homogeneous() ? " homogeneous" : " heterogeneous")
          << (is_commutative(cfg) ? " commutative" : " non-commutative") << "\n";
      if (!sch_out.empty()) write_file(sch_out, export_scheme(cfg));
      return kExitOk;
    }
    if (*search_cmd) {
      search_flags.jobs = jobs;
      if (search_scheme_file.empty() && search_group.empty()) throw InputError("search needs --scheme or --group");
      if (!search_scheme_file.empty()) return run_search(parse_scheme(read_file(search_scheme_file)), search_flags, tsv, out);
      PermGroup group = parse_group(read_file(search_group));
      if (!search_seed.empty())
        group = induced_action(group, parse_seed(search_seed, group.degree()), parse_kind(search_kind)).action;
      return run_search(schurian(group), search_flags, tsv, out);
    }
    if (*cayley_cmd) {
      if (cay_group.empty() && cay_table.empty()) throw InputError("cayley needs --group or --table");
      const FiniteGroup group = cay_table.empty() ? named_group(cay_group) : parse_group_table(read_file(cay_table));
      const ConnectionSet x = connection_set(group, split_list(cay_set));
      const Verdict ring = group_ring_test(group, x);
      const Digraph g = cayley_digraph(group, x);
      if (!cay_out.empty()) write_file(cay_out, format_digraph(g));
      const Verdict adj = verify(g);
      if (ring.params != adj.params)
        throw Error("internal: group-ring test and adjacency verification disagree");
      if (!ring) {
        out << "not a DSRG: " << ring.reason << "\n";
        return kExitDomain;
      }
      out << params_line(*ring.params, tsv) << (tsv ? "\t" : " ") << kind_label(*ring.params) << "\n";
      return kExitOk;
    }
    if (*pipeline_cmd) {
      pipe_flags.jobs = jobs;
      caps.max_rank = pipe_flags.max_rank;
      const BlockDesign design = parse_design(read_file(pipe_design));
      PermGroup group = levi_automorphism_group(design);
      if (!pipe_group.empty()) {
        group = parse_group(read_file(pipe_group));
        if (group.degree() != design.v && group.degree() != design.v + design.b)
          throw InputError("group degree must be v or v+b");
        if (group.degree() == design.v) group = extend_to_levi(design, group);
      }
      const Object seed = parse_seed(pipe_seed, design.v + design.b);
      const PipelineResult res = design_action_pipeline(group, seed, parse_kind(pipe_kind), caps);
      out << "orbit " << res.action.domain.size() << " rank " << res.scheme.rank()
          << (is_commutative(res.scheme) ? " commutative" : " non-commutative") << "\n";
      return run_search(res.scheme, pipe_flags, tsv, out);
    }
    if (*equiv_cmd) {
      std::vector<Digraph> graphs;
      for (const auto& f : equiv_files) graphs.push_back(parse_digraph(read_file(f)));
      const auto classes = equivalence_classes(graphs);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const Verdict v = verify(graphs[classes[c].front()]);
        std::string members;
        for (std::size_t i : classes[c]) members += (members.empty() ? "" : (tsv ? "," : " ")) + equiv_files[i];
        const std::string params = v ? v.params->to_string() : "not a DSRG";
        if (tsv)
          out << (c + 1) << "\t" << members << "\t" << params << "\n";
        else
          out << "class " << (c + 1) << ": " << members << " | " << params << "\n";
      }
      return kExitOk;
    }
    if (*repro_cmd) {
      if (repro_cmd->count("--list")) {
        for (const auto& n : reproduce_case_names()) out << n << "\n";
        return kExitOk;
      }
      if (cases.empty() || (cases.size() == 1 && cases[0] == "all")) cases = reproduce_case_names();
      repro.jobs = jobs;
      const auto reports = reproduce_cases(cases, repro);
      bool ok = true;
      for (const auto& r : reports) {
        out << format_report(r, tsv);
        ok = ok && r.passed();
      }
      return ok ? kExitOk : kExitDomain;
    }
  } catch (const AxiomError& e) {
    err << "dsrg: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InputError& e) {
    err << "dsrg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "dsrg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dsrg: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace dsrg
