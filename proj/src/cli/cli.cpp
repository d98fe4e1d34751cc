#include "schedalg/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "schedalg/algebra/boolean.hpp"
#include "schedalg/algebra/laws.hpp"
#include "schedalg/analyses/cpath.hpp"
#include "schedalg/analyses/flow.hpp"
#include "schedalg/analyses/spath.hpp"
#include "schedalg/analyses/wcrt.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/analysis.hpp"
#include "schedalg/semantics/satisfaction.hpp"

namespace schedalg {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json matrix_json(const TropicalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json io_json(const IOInterface& io) {
  json j{{"inputs", json::array()}, {"outputs", json::array()}, {"matrix", matrix_json(io.matrix())}};
  for (const auto& t : io.inputs()) j["inputs"].push_back(to_string(t));
  for (const auto& t : io.outputs()) j["outputs"].push_back(to_string(t));
  return j;
}

std::vector<std::string> interface_atoms(const std::vector<Type>& ts) {
  std::set<std::string> s;
  for (const auto& t : ts)
    for (const auto& a : atoms_of(t)) s.insert(a);
  return {s.begin(), s.end()};
}

struct Settings {
  std::string format = "plain";
  std::string universe;
  std::optional<std::uint64_t> grid;
};

// Each handler returns the exit status and writes a plain line set or a json
// object.
struct Reply {
  int status = 0;
  std::vector<std::string> lines;
  json data = json::object();
};

Universe universe_for(const Settings& s, std::vector<std::string> default_vars) {
  Universe u;
  u.vars = std::move(default_vars);
  if (s.grid) u.bound_grid = *s.grid;
  return s.universe.empty() ? u : parse_universe_spec(s.universe, u);
}

Reply do_check(const std::string& file, const std::string& itext) {
  Vocabulary v;
  const Schedule s = parse_schedule(read_file(file), v);
  const Interface i = parse_interface(itext);
  Reply r;
  std::optional<Activation> bad;
  for (const auto& a : s)
    if (!satisfies(a, i, v)) {
      bad = a;
      break;
    }
  r.status = bad ? 1 : 0;
  r.lines.push_back(std::string("satisfied: ") + (bad ? "no" : "yes"));
  if (bad) r.lines.push_back("violated by: " + to_string(*bad, v));
  r.data = {{"satisfied", !bad}, {"activations", s.size()}};
  if (bad) r.data["violated_by"] = to_string(*bad, v);
  return r;
}

Reply do_tighten(const std::string& file, const std::string& ttext, const Settings& st) {
  Vocabulary v;
  const Schedule s = parse_schedule(read_file(file), v);
  const Type t = parse_type(ttext);
  for (const auto& a : atoms_of(t)) v.add(a);
  Universe u;
  u.vars = v.names();
  u.bound_grid = st.grid.value_or(8);
  const auto res = tighten(s, t, u);
  Reply r;
  r.status = res.boundable() ? 0 : 1;
  r.data = {{"boundable", res.boundable()}, {"worst_case", res.worst_case()}, {"minimal", json::array()},
            {"grid", u.bound_grid}};
  if (!res.boundable()) r.lines.push_back("no bound up to " + std::to_string(u.bound_grid) + " or +inf");
  for (const auto& b : res.minimal) {
    r.lines.push_back("minimal: " + to_string(b) + " : " + to_string(t));
    r.data["minimal"].push_back(to_string(b));
  }
  if (res.worst_case()) r.lines.push_back("worst-case: " + to_string(res.minimal.front()));
  return r;
}

Reply do_refine(const std::string& a, const std::string& b, const Settings& st) {
  const Interface i1 = parse_interface(a), i2 = parse_interface(b);
  const Universe u = universe_for(st, interface_atoms({i1.type(), i2.type()}));
  Oracle o(u);
  const auto w = o.refinement_witness(i1, i2);
  const std::string scope = "bounded-universe: " + describe(u);
  Reply r;
  r.status = w ? 1 : 0;
  r.lines.push_back(std::string("refines: ") + (w ? "no" : "yes") + " (" + scope + ")");
  if (w) r.lines.push_back("witness: " + to_string(*w, u.vocabulary()));
  r.data = {{"refines", !w}, {"scope", scope}};
  if (w) r.data["witness"] = to_string(*w, u.vocabulary());
  return r;
}

Reply do_laws(const std::vector<std::string>& patterns, const Settings& st, std::size_t instances,
              std::uint32_t seed) {
  LawOptions opts;
  if (!st.universe.empty()) opts.universe = parse_universe_spec(st.universe, opts.universe);
  if (st.grid) opts.grid = delay_grid(*st.grid);
  opts.instances = instances;
  opts.seed = seed;
  std::vector<std::string> ids;
  for (const auto& p : patterns.empty() ? std::vector<std::string>{"all"} : patterns)
    for (const auto& id : select_laws(p))
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  Reply r;
  r.data = {{"scope", "bounded-universe: " + describe(opts.universe)}, {"laws", json::array()}};
  std::size_t bad = 0;
  for (const auto& id : ids) {
    const auto rep = law_check(id, opts);
    if (!rep.ok()) ++bad;
    std::string line = std::string(rep.ok() ? "ok   " : "FAIL ") + rep.id + ": " + rep.statement + "; " +
                       (rep.holds ? "no counterexample in " + std::to_string(rep.checked) + " instances"
                                  : "counterexample after " + std::to_string(rep.checked) + " instances");
    if (rep.counterexample) line += "\n     " + *rep.counterexample;
    r.lines.push_back(line);
    json j{{"id", rep.id},       {"statement", rep.statement}, {"expected", rep.expected},
           {"holds", rep.holds}, {"checked", rep.checked},     {"ok", rep.ok()}};
    if (rep.counterexample) j["counterexample"] = *rep.counterexample;
    r.data["laws"].push_back(j);
  }
  r.lines.push_back(std::to_string(ids.size() - bad) + "/" + std::to_string(ids.size()) + " as expected (" +
                    r.data["scope"].get<std::string>() + ")");
  r.status = bad ? 1 : 0;
  return r;
}

Reply do_flow(const std::string& file, std::optional<std::size_t> depth) {
  const auto g = load_graph(file);
  Reply r;
  const ExtNat f = max_throughput(g);
  r.lines.push_back("throughput: " + to_string(f));
  r.data = {{"throughput", to_string(f)}};
  if (depth) {
    const auto x = flow_expansion(g, *depth);
    r.data["expansion"] = {{"depth", *depth}, {"bound", to_string(x.bound)}, {"paths", json::array()}};
    for (const auto& p : x.paths) {
      std::string s;
      for (const auto& n : p.nodes) s += (s.empty() ? "" : "-") + n;
      r.lines.push_back("path " + s + ": " + to_string(p.bound));
      r.data["expansion"]["paths"].push_back({{"nodes", p.nodes}, {"bound", to_string(p.bound)}});
    }
    r.lines.push_back("bound at depth " + std::to_string(*depth) + ": " + to_string(x.bound));
  }
  return r;
}

Reply do_spath(const std::string& file, const std::string& src, const std::string& dst, const std::string& merge) {
  auto g = load_graph(file);
  if (!merge.empty()) g = merge_controls(g, parse_merge_spec(merge));
  auto rename = [&](const std::string& x) {
    for (const auto& cls : parse_merge_spec(merge.empty() ? "" : merge))
      if (std::find(cls.begin(), cls.end(), x) != cls.end())
        for (const auto& n : g.nodes)
          if (std::find(cls.begin(), cls.end(), n) != cls.end()) return n;
    return x;
  };
  const ExtNat d = shortest_path(g, rename(src), rename(dst));
  Reply r;
  r.lines.push_back("distance: " + to_string(d));
  r.data = {{"distance", to_string(d)}, {"src", src}, {"dst", dst}};
  if (!merge.empty()) r.data["merge"] = merge;
  return r;
}

Reply do_cpath(const std::string& file) {
  const auto g = load_graph(file);
  const ExtNat d = critical_path(g);
  Reply r;
  r.lines.push_back("critical path: " + to_string(d) + " (final node " + final_node(g) + ")");
  r.data = {{"critical_path", to_string(d)}, {"final", final_node(g)}};
  return r;
}

void add_io_lines(std::vector<std::string>& lines, const std::string& title, const IOInterface& io) {
  lines.push_back(title);
  std::istringstream s(to_string(io));
  for (std::string l; std::getline(s, l);) lines.push_back("  " + l);
}

Reply do_wcrt(const std::string& file, bool steps) {
  const auto m = load_ckag(file);
  const auto rep = wcrt_analyze(m);
  Reply r;
  if (steps) {
    for (const auto& s : rep.steps)
      if (s.name != m.name) add_io_lines(r.lines, s.name, s.io);
    for (const auto& n : rep.notes) r.lines.push_back("note: " + n);
  }
  add_io_lines(r.lines, "module " + m.name, rep.result);
  r.data = {{"module", m.name}, {"result", io_json(rep.result)}};
  if (steps) {
    r.data["steps"] = json::array();
    for (const auto& s : rep.steps) r.data["steps"].push_back({{"name", s.name}, {"io", io_json(s.io)}});
    r.data["notes"] = rep.notes;
  }
  return r;
}

}  // namespace

Universe parse_universe_spec(const std::string& spec, Universe base) {
  std::string s = spec;
  if (s.rfind("universe", 0) == 0) s = s.substr(8);
  std::istringstream in(s);
  for (std::string field; in >> field;) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad universe field '" + field + "'");
    const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "vars") {
      base.vars.clear();
      std::istringstream vs(val);
      for (std::string v; std::getline(vs, v, ',');)
        if (!v.empty()) base.vars.push_back(v);
    } else if (key == "len" || key == "grid") {
      std::size_t used = 0;
      unsigned long n = 0;
      try {
        n = std::stoul(val, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != val.size()) throw std::invalid_argument("bad number in '" + field + "'");
      (key == "len" ? base.max_len : base.bound_grid) = n;
    } else {
      throw std::invalid_argument("unknown universe field '" + key + "'");
    }
  }
  return base;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scheduling interface algebra: checks, laws and analyses", "schedalg"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Settings st;
  app.add_option("--format", st.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--universe", st.universe, "e.g. \"vars=A,B,C len=4\"");
  app.add_option("--grid", st.grid, "delay cap for bounds");

  std::string file, text, text2, src, dst, merge;
  std::vector<std::string> patterns;
  std::size_t instances = LawOptions{}.instances;
  std::uint32_t seed = LawOptions{}.seed;
  std::optional<std::size_t> depth;
  bool steps = false;

  auto* check = app.add_subcommand("check", "does every activation of a schedule satisfy an interface");
  check->add_option("schedule", file)->required();
  check->add_option("interface", text)->required();
  auto* tighten_cmd = app.add_subcommand("tighten", "minimal bounds of a type for a schedule");
  tighten_cmd->add_option("schedule", file)->required();
  tighten_cmd->add_option("type", text)->required();
  auto* refine = app.add_subcommand("refine", "does the first interface refine the second");
  refine->add_option("first", text)->required();
  refine->add_option("second", text2)->required();
  auto* laws = app.add_subcommand("laws", "check catalogued laws");
  laws->add_option("ids", patterns, "ids or family patterns like ineq.*");
  laws->add_option("--instances", instances);
  laws->add_option("--seed", seed);
  auto* flow = app.add_subcommand("flow", "maximal throughput of a network");
  flow->add_option("graph", file)->required();
  flow->add_option("--depth", depth, "also unfold the flow type to this path length");
  auto* spath = app.add_subcommand("spath", "shortest distance between two nodes");
  spath->add_option("graph", file)->required();
  spath->add_option("src", src)->required();
  spath->add_option("dst", dst)->required();
  spath->add_option("--merge", merge, "identify controls, e.g. C=B,U=V");
  auto* cpath = app.add_subcommand("cpath", "critical path of a task network");
  cpath->add_option("graph", file)->required();
  auto* wcrt = app.add_subcommand("wcrt", "worst-case reaction time interface of a module");
  wcrt->add_option("ckag", file)->required();
  wcrt->add_flag("--steps", steps, "print every intermediate interface");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Reply r;
  try {
    if (*check) r = do_check(file, text);
    else if (*tighten_cmd) r = do_tighten(file, text, st);
    else if (*refine) r = do_refine(text, text2, st);
    else if (*laws) r = do_laws(patterns, st, instances, seed);
    else if (*flow) r = do_flow(file, depth);
    else if (*spath) r = do_spath(file, src, dst, merge);
    else if (*cpath) r = do_cpath(file);
    else r = do_wcrt(file, steps);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (st.format == "json") {
    out << r.data.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
  return r.status;
}

}  // namespace schedalg
