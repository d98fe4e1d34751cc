#include "schedalg/analyses/wcrt.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schedalg/algebra/boolean.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

namespace {

const ExtNat kNeg = ExtNat::neg_inf();

Type atom(const std::string& s) { return Type::atom(s); }
std::string in_of(const std::string& s) { return "in." + s; }
std::string out_of(const std::string& s) { return "out." + s; }

std::vector<Type> atoms(const std::vector<std::string>& names) {
  std::vector<Type> out;
  for (const auto& n : names) out.push_back(atom(n));
  return out;
}

TropicalMatrix blank(std::size_t rows, std::size_t cols) { return TropicalMatrix(rows, cols, Semiring::MaxPlus); }

std::size_t position(const std::vector<std::string>& v, const std::string& x) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

using Valuation = std::map<std::string, bool>;

bool enabled(const CkagEdge& e, const Valuation* v) {
  if (!e.guard || !v) return true;
  auto it = v->find(e.guard->signal);
  return it == v->end() || it->second == e.guard->present;
}

std::vector<const CkagEdge*> edges_from(const CkagModule& m, const std::string& id) {
  std::vector<const CkagEdge*> out;
  for (const auto& e : m.edges)
    if (e.src == id) out.push_back(&e);
  return out;
}

std::vector<const CkagEdge*> edges_into(const CkagModule& m, const std::string& id) {
  std::vector<const CkagEdge*> out;
  for (const auto& e : m.edges)
    if (e.dst == id) out.push_back(&e);
  return out;
}

bool same_owner(const CkagModule& m, const std::string& a, const std::string& b) {
  return m.thread_of(a) == m.thread_of(b);
}

// ---- fork/join sections ----

struct Section {
  std::string fork;
  std::string join;
  std::vector<const CkagThread*> threads;
  std::vector<std::string> entries;  // fork edge label per thread
  std::vector<std::string> exits;    // join edge label per thread
};

Section section_of(const CkagModule& m, const std::string& fork) {
  Section s;
  s.fork = fork;
  for (const CkagEdge* e : edges_from(m, fork)) {
    const CkagThread* t = m.thread_of(e->dst);
    if (!t || same_owner(m, fork, e->dst)) throw std::invalid_argument("fork " + fork + " must start threads");
    s.threads.push_back(t);
    s.entries.push_back(e->label);
  }
  if (s.threads.empty()) throw std::invalid_argument("fork " + fork + " starts no thread");
  for (const CkagThread* t : s.threads) {
    std::vector<const CkagEdge*> leaving;
    for (const auto& n : t->nodes)
      for (const CkagEdge* e : edges_from(m, n))
        if (m.thread_of(e->dst) != t) leaving.push_back(e);
    if (leaving.size() != 1) throw std::invalid_argument("thread " + t->name + " must reach its join by exactly one edge");
    const std::string& j = leaving.front()->dst;
    if (m.node(j).kind != NodeKind::Join) throw std::invalid_argument("thread " + t->name + " leaves to a non-join node");
    if (!s.join.empty() && s.join != j) throw std::invalid_argument("threads of fork " + fork + " end in different joins");
    if (!same_owner(m, fork, j)) throw std::invalid_argument("join " + j + " is not beside fork " + fork);
    s.join = j;
    s.exits.push_back(leaving.front()->label);
  }
  return s;
}

std::set<std::string> owned_nodes(const CkagModule& m, const CkagThread* t) {
  std::set<std::string> out;
  for (const auto& n : m.nodes)
    if (m.thread_of(n.id) == t) out.insert(n.id);
  return out;
}

bool thread_has_states(const CkagModule& m, const CkagThread* t);

bool section_has_states(const CkagModule& m, const Section& s) {
  for (const CkagThread* t : s.threads)
    if (thread_has_states(m, t)) return true;
  return false;
}

bool thread_has_states(const CkagModule& m, const CkagThread* t) {
  for (const auto& id : owned_nodes(m, t)) {
    const NodeKind k = m.node(id).kind;
    if (k == NodeKind::Pause || k == NodeKind::Halt) return true;
    if (k == NodeKind::Fork && section_has_states(m, section_of(m, id))) return true;
  }
  return false;
}

ExtNat cost_of(const CkagModule& m, const CkagNode& n) {
  if (n.cost) return *n.cost;
  if (n.kind == NodeKind::Fork) return ExtNat(section_of(m, n.id).threads.size() + 1);
  return ExtNat(1);
}

// ---- regions ----

struct Region {
  const CkagThread* thread = nullptr;  // nullptr: top level
  std::set<std::string> nodes;
  std::string entry_label;
  std::string entry_node;
  std::string exit_label;
  std::string exit_node;
  bool virtual_ports = false;  // module entry/exit are not edges
  std::vector<std::string> states;  // in node order
};

Region make_region(const CkagModule& m, const std::string& thread) {
  Region r;
  if (thread.empty()) {
    r.nodes = owned_nodes(m, nullptr);
    r.entry_label = m.entry_label;
    r.entry_node = m.entry_node;
    r.exit_label = m.exit_label;
    r.exit_node = m.exit_node;
    r.virtual_ports = true;
    if (!r.nodes.count(r.entry_node) || !r.nodes.count(r.exit_node))
      throw std::invalid_argument("module entry and exit must be top-level nodes");
  } else {
    r.thread = &m.thread(thread);
    r.nodes = owned_nodes(m, r.thread);
    for (const auto& id : r.nodes)
      for (const CkagEdge* e : edges_into(m, id))
        if (!r.nodes.count(e->src)) {
          if (!r.entry_label.empty()) throw std::invalid_argument("thread " + thread + " has two entries");
          r.entry_label = e->label;
          r.entry_node = id;
        }
    for (const auto& id : r.nodes)
      for (const CkagEdge* e : edges_from(m, id))
        if (!r.nodes.count(e->dst)) {
          r.exit_label = e->label;
          r.exit_node = id;
        }
    if (r.entry_label.empty() || r.exit_label.empty())
      throw std::invalid_argument("thread " + thread + " needs one entry and one exit edge");
  }
  for (const auto& n : m.nodes) {
    if (!r.nodes.count(n.id)) continue;
    if (n.kind == NodeKind::Pause || n.kind == NodeKind::Halt) r.states.push_back(n.id);
    if (n.kind == NodeKind::Join) {
      // The join is a state of its section when some thread can pause.
      for (const auto& f : m.nodes)
        if (f.kind == NodeKind::Fork && r.nodes.count(f.id)) {
          Section s = section_of(m, f.id);
          if (s.join == n.id && section_has_states(m, s)) r.states.push_back(n.id);
        }
    }
  }
  return r;
}

// A pseudo node: block is outputs x inputs.
struct Step {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  TropicalMatrix block{0, 0, Semiring::MaxPlus};
};

std::vector<std::string> in_labels(const CkagModule& m, const Region& r, const std::string& id) {
  std::vector<std::string> out;
  if (r.virtual_ports && id == r.entry_node) out.push_back(r.entry_label);
  for (const CkagEdge* e : edges_into(m, id)) out.push_back(e->label);
  return out;
}

std::vector<const CkagEdge*> out_edges(const CkagModule& m, const std::string& id, bool noninst) {
  std::vector<const CkagEdge*> out;
  for (const CkagEdge* e : edges_from(m, id))
    if (e->noninst == noninst) out.push_back(e);
  return out;
}

// Every input to every output at the node's cost, unless the output edge is
// guarded off.
Step uniform_step(std::vector<std::string> ins, const std::vector<const CkagEdge*>& outs,
                  std::vector<std::string> extra_outs, ExtNat cost, const Valuation* v) {
  Step s;
  s.inputs = std::move(ins);
  std::vector<bool> open;
  for (const CkagEdge* e : outs) {
    s.outputs.push_back(e->label);
    open.push_back(enabled(*e, v));
  }
  for (auto& o : extra_outs) {
    s.outputs.push_back(o);
    open.push_back(true);
  }
  s.block = blank(s.outputs.size(), s.inputs.size());
  for (std::size_t r = 0; r < s.outputs.size(); ++r)
    for (std::size_t c = 0; c < s.inputs.size(); ++c)
      if (open[r]) s.block.set(r, c, cost);
  return s;
}

struct SectionResult {
  std::vector<WcrtStep> steps;
  std::vector<std::string> notes;
  IOInterface composite{{}, {}, blank(0, 0)};  // fork inputs + out.J -> join exit + in.J
};

SectionResult analyze_section(const CkagModule& m, const Section& s, const Region& parent);

RegionResult compute_region(const CkagModule& m, const Region& r, const RegionOptions& opts,
                            std::vector<WcrtStep>* trace, std::vector<std::string>* notes);

IOInterface region_for_valuation(const CkagModule& m, const Region& r, const RegionOptions& opts, const Valuation* v,
                                 std::vector<WcrtStep>* trace, std::vector<std::string>* notes) {
  std::vector<Step> steps;
  for (const auto& n : m.nodes) {
    if (!r.nodes.count(n.id)) continue;
    const ExtNat c = cost_of(m, n);
    std::vector<std::string> exit_extra;
    if (r.virtual_ports && n.id == r.exit_node) exit_extra.push_back(r.exit_label);
    switch (n.kind) {
      case NodeKind::Pause:
        steps.push_back(uniform_step({out_of(n.id)}, out_edges(m, n.id, true), {}, c, v));
        steps.push_back(uniform_step(in_labels(m, r, n.id), out_edges(m, n.id, false), {in_of(n.id)}, c, v));
        break;
      case NodeKind::Halt: {
        auto ins = in_labels(m, r, n.id);
        ins.push_back(out_of(n.id));
        steps.push_back(uniform_step(ins, {}, {in_of(n.id)}, c, v));
        break;
      }
      case NodeKind::Join:
        break;  // inside its section
      case NodeKind::Fork: {
        const Section sec = section_of(m, n.id);
        SectionResult sr = analyze_section(m, sec, r);
        if (trace) trace->insert(trace->end(), sr.steps.begin(), sr.steps.end());
        if (notes) notes->insert(notes->end(), sr.notes.begin(), sr.notes.end());
        Step st;
        for (const auto& t : sr.composite.inputs()) st.inputs.push_back(to_string(t));
        for (const auto& t : sr.composite.outputs()) st.outputs.push_back(to_string(t));
        st.block = sr.composite.matrix();
        steps.push_back(std::move(st));
        break;
      }
      default:
        steps.push_back(uniform_step(in_labels(m, r, n.id), out_edges(m, n.id, false), exit_extra, c, v));
        break;
    }
  }

  std::vector<std::string> inputs{r.entry_label};
  for (const auto& x : opts.extra_inputs)
    if (std::find(inputs.begin(), inputs.end(), x) == inputs.end()) inputs.push_back(x);
  for (const auto& s : r.states) inputs.push_back(out_of(s));

  // Topological order over labels; ties keep node order.
  std::map<std::string, std::size_t> producer;
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (const auto& o : steps[i].outputs)
      if (!producer.emplace(o, i).second) throw std::invalid_argument("label " + o + " produced twice");
  std::vector<std::size_t> indeg(steps.size(), 0);
  std::vector<std::vector<std::size_t>> succ(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (const auto& x : steps[i].inputs) {
      auto p = producer.find(x);
      if (p != producer.end()) {
        succ[p->second].push_back(i);
        ++indeg[i];
      } else if (std::find(inputs.begin(), inputs.end(), x) == inputs.end()) {
        throw std::invalid_argument("label " + x + " enters the region from outside");
      }
    }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (indeg[i] == 0) ready.insert(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    for (auto j : succ[i])
      if (--indeg[j] == 0) ready.insert(j);
  }
  if (order.size() != steps.size()) throw std::invalid_argument("instantaneous cycle in the control flow");

  IOInterface x = IOInterface::identity(atoms(inputs));
  std::vector<std::string> live = inputs;
  for (auto i : order) {
    const Step& st = steps[i];
    std::vector<std::string> next;
    for (const auto& l : live)
      if (std::find(st.inputs.begin(), st.inputs.end(), l) == st.inputs.end()) next.push_back(l);
    for (const auto& o : st.outputs)
      if (std::find(next.begin(), next.end(), o) == next.end()) next.push_back(o);
    TropicalMatrix mm = blank(next.size(), live.size());
    for (std::size_t c = 0; c < live.size(); ++c) {
      const std::size_t k = position(st.inputs, live[c]);
      if (k == st.inputs.size()) {
        mm.set(position(next, live[c]), c, ExtNat(0));
        continue;
      }
      for (std::size_t o = 0; o < st.outputs.size(); ++o) {
        const std::size_t row = position(next, st.outputs[o]);
        mm.set(row, c, max(mm.at(row, c), st.block.at(o, k)));
      }
    }
    for (const auto& need : st.inputs)
      if (position(live, need) == live.size()) throw std::invalid_argument("label " + need + " is not available");
    x = io_compose(x, IOInterface(atoms(live), atoms(next), mm));
    live = std::move(next);
  }

  std::vector<std::string> outs{r.exit_label};
  for (const auto& s : r.states) outs.push_back(in_of(s));
  std::vector<std::size_t> rows;
  for (const auto& o : outs) {
    const std::size_t k = position(live, o);
    if (k == live.size()) throw std::invalid_argument("region never produces " + o);
    rows.push_back(k);
  }
  for (const auto& l : live)
    if (position(outs, l) == outs.size() && position(inputs, l) == inputs.size())
      throw std::invalid_argument("label " + l + " leads nowhere");
  std::vector<std::size_t> cols(inputs.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return io_project(x, cols, rows);
}

std::vector<std::string> region_signals(const CkagModule& m, const Region& r) {
  std::set<std::string> s;
  for (const auto& e : m.edges)
    if (e.guard && r.nodes.count(e.src)) s.insert(e.guard->signal);
  return {s.begin(), s.end()};
}

// Per region input: can control entering there meet a guarded edge within
// the instant? A fork section is crossed to its join.
std::vector<bool> guard_reach(const CkagModule& m, const Region& r, const RegionOptions& opts) {
  auto guarded_from = [&](std::vector<std::string> todo) {
    std::set<std::string> seen;
    while (!todo.empty()) {
      const std::string id = todo.back();
      todo.pop_back();
      if (!seen.insert(id).second) continue;
      const CkagNode& n = m.node(id);
      if (n.kind == NodeKind::Halt) continue;
      if (n.kind == NodeKind::Fork) {
        todo.push_back(section_of(m, id).join);
        continue;
      }
      for (const CkagEdge* e : out_edges(m, id, false)) {
        if (e->guard) return true;
        if (r.nodes.count(e->dst)) todo.push_back(e->dst);
      }
    }
    return false;
  };
  auto consumer = [&](const std::string& label) {
    if (label == r.entry_label) return r.entry_node;
    for (const auto& e : m.edges)
      if (e.label == label) return e.dst;
    throw std::invalid_argument("unknown label " + label);
  };
  std::vector<bool> out{guarded_from({consumer(r.entry_label)})};
  for (const auto& x : opts.extra_inputs)
    if (x != r.entry_label) out.push_back(guarded_from({consumer(x)}));
  for (const auto& s : r.states) {
    std::vector<std::string> start;
    bool direct = false;
    if (m.node(s).kind == NodeKind::Pause)
      for (const CkagEdge* e : out_edges(m, s, true)) {
        direct = direct || e->guard.has_value();
        start.push_back(e->dst);
      }
    else if (m.node(s).kind == NodeKind::Join)
      start.push_back(s);
    out.push_back(direct || guarded_from(start));
  }
  return out;
}

Type literal(const std::string& sig, bool present) {
  return present ? atom(sig) : Type::negation(atom(sig));
}

RegionResult compute_region(const CkagModule& m, const Region& r, const RegionOptions& opts,
                            std::vector<WcrtStep>* trace, std::vector<std::string>* notes) {
  const auto sigs = opts.use_guards ? region_signals(m, r) : std::vector<std::string>{};
  if (sigs.size() > 8) throw std::invalid_argument("region tests more than 8 signals");
  if (sigs.empty()) {
    IOInterface io = region_for_valuation(m, r, opts, nullptr, trace, notes);
    return {io, io, io, {}, {}};
  }
  // One pass per valuation. Sections are traced once.
  std::vector<IOInterface> per;
  std::vector<Valuation> vals;
  for (std::uint32_t bits = 0; bits < (1u << sigs.size()); ++bits) {
    Valuation v;
    // Most significant signal first, present before absent.
    for (std::size_t i = 0; i < sigs.size(); ++i) v[sigs[i]] = ((bits >> (sigs.size() - 1 - i)) & 1) == 0;
    vals.push_back(v);
    per.push_back(region_for_valuation(m, r, opts, &v, bits == 0 ? trace : nullptr, bits == 0 ? notes : nullptr));
  }
  TropicalMatrix mx = per.front().matrix();
  for (const auto& p : per) mx = mat_join(mx, p.matrix());
  IOInterface io(per.front().inputs(), per.front().outputs(), mx);

  RegionResult res{io, io, io, sigs, {}};
  std::vector<Type> cases;
  for (const auto& v : vals) {
    std::vector<Type> lits;
    for (const auto& s : sigs) lits.push_back(literal(s, v.at(s)));
    cases.push_back(conj_all(lits));
  }
  const auto reach = guard_reach(m, r, opts);
  // Split from the right so earlier indices stay valid.
  for (std::size_t c = io.inputs().size(); c-- > 0;) {
    if (!reach[c]) continue;
    bool varies = false;
    for (const auto& p : per)
      for (std::size_t row = 0; row < io.outputs().size(); ++row)
        varies = varies || p.matrix().at(row, c) != per.front().matrix().at(row, c);
    TropicalMatrix cols = blank(io.outputs().size(), per.size());
    for (std::size_t k = 0; k < per.size(); ++k)
      for (std::size_t row = 0; row < io.outputs().size(); ++row) cols.set(row, k, per[k].matrix().at(row, c));
    res.refined = io_split(res.refined, c, cases, cols);
    if (varies) res.split = io_split(res.split, c, cases, cols);
    std::vector<Type> parts;
    for (const auto& cs : cases) parts.push_back(Type::conj(io.inputs()[c], cs));
    res.obligations.insert(res.obligations.begin(), ProofObligation{oplus_all(parts), io.inputs()[c]});
  }
  return res;
}

// Bundles the states of a region into out.<name> / in.<name>.
IOInterface bundle_states(const IOInterface& io, std::size_t first_state_col, std::size_t first_state_row,
                          const std::string& name, std::vector<std::string>* notes) {
  IOInterface cur = io;
  std::vector<std::size_t> cols, rows;
  for (std::size_t c = first_state_col; c < io.inputs().size(); ++c) cols.push_back(c);
  for (std::size_t r = first_state_row; r < io.outputs().size(); ++r) rows.push_back(r);
  if (cols.empty()) return cur;
  auto b1 = io_bundle(cur, cols, atom(out_of(name)));
  auto b2 = io_bundle_outputs(b1.io, rows, atom(in_of(name)));
  if (notes) {
    notes->push_back(to_string(b1.obligation.replacement) + " := " + to_string(b1.obligation.merged));
    notes->push_back(to_string(b2.obligation.replacement) + " := " + to_string(b2.obligation.merged));
  }
  return b2.io;
}

std::string show_valuation_obligation(const ProofObligation& p, const std::vector<std::string>& sigs) {
  std::string s = "obligation " + to_string(p) + " holds assuming";
  for (std::size_t i = 0; i < sigs.size(); ++i) s += (i ? ", " : " ") + sigs[i] + " (+) !" + sigs[i];
  return s;
}

void check_obligations(const RegionResult& rr, std::vector<std::string>* notes) {
  for (const auto& p : rr.obligations) {
    std::vector<Type> stable;
    for (const auto& s : rr.signals) stable.push_back(Type::oplus(atom(s), Type::negation(atom(s))));
    std::vector<std::string> vars = rr.signals;
    for (const auto& a : atoms_of(p.replacement)) vars.push_back(a);
    Universe u;
    u.vars = vars;
    u.max_len = 2;
    u.bound_grid = 2;
    const bool ok = discharge(p, u, conj_all(stable));
    if (!ok) throw std::logic_error("split obligation fails: " + to_string(p));
    if (notes) notes->push_back(show_valuation_obligation(p, rr.signals) + " (bounded-universe: " + describe(u) + ")");
  }
}

SectionResult analyze_section(const CkagModule& m, const Section& s, const Region& parent) {
  SectionResult out;
  const std::size_t k = s.threads.size();
  std::vector<bool> stateful(k);
  for (std::size_t i = 0; i < k; ++i) stateful[i] = thread_has_states(m, s.threads[i]);

  // Thread interfaces: [entry, out_i] -> [exit, in_i].
  std::vector<IOInterface> inst;
  std::vector<std::vector<std::size_t>> depth_choice(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& name = s.threads[i]->name;
    const Region r = make_region(m, name);
    std::vector<WcrtStep> nested;
    const RegionResult rr = compute_region(m, r, {}, &nested, &out.notes);
    out.steps.insert(out.steps.end(), nested.begin(), nested.end());
    check_obligations(rr, &out.notes);
    IOInterface t = bundle_states(rr.io, 1, 1, name, stateful[i] ? &out.notes : nullptr);
    if (!rr.obligations.empty()) {
      out.steps.push_back({name + ".refined", rr.refined});
      out.steps.push_back({name + ".split", rr.split});
    }
    out.steps.push_back({name, t});

    bool others = false;
    for (std::size_t j = 0; j < k; ++j) others = others || (j != i && stateful[j]);
    if (stateful[i]) depth_choice[i].push_back(1);
    if (others) {
      // Trivial pass [0] : exit -> O exit, so the thread can idle at its
      // exit while another resumes.
      std::vector<Type> ins = t.inputs();
      ins.push_back(t.outputs()[0]);
      TropicalMatrix mm = blank(t.outputs().size(), ins.size());
      for (std::size_t rr2 = 0; rr2 < t.outputs().size(); ++rr2)
        for (std::size_t c = 0; c < t.inputs().size(); ++c) mm.set(rr2, c, t.matrix().at(rr2, c));
      mm.set(0, ins.size() - 1, ExtNat(0));
      t = IOInterface(ins, t.outputs(), mm);
      depth_choice[i].push_back(ins.size() - 1);
    }
    std::vector<Type> outs_i = t.outputs();
    out.notes.push_back("Sync(" + name + ") = " + to_string(Type::negation(oplus_all(outs_i))));
    out.steps.push_back({name + "'", t});
    inst.push_back(t);
  }

  IOInterface kr = inst[0];
  std::string kname = s.threads[0]->name + "'";
  for (std::size_t i = 1; i < k; ++i) {
    kr = io_kron(kr, inst[i]);
    kname += " (x) " + s.threads[i]->name + "'";
  }
  out.steps.push_back({kname, kr});

  // Surface: every thread at its entry. Depth: every thread resumed or idle
  // at its exit, at least one resumed.
  std::vector<std::size_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = inst[i].inputs().size();
  auto flat = [&](const std::vector<std::size_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * radix[i] + digits[i];
    return idx;
  };
  std::vector<std::size_t> keep{flat(std::vector<std::size_t>(k, 0))};
  bool any_depth = true;
  for (std::size_t i = 0; i < k; ++i) any_depth = any_depth && !depth_choice[i].empty();
  if (any_depth) {
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<std::size_t> digits(k);
      bool resumed = false;
      for (std::size_t i = 0; i < k; ++i) {
        digits[i] = depth_choice[i][pick[i]];
        resumed = resumed || (stateful[i] && digits[i] == 1);
      }
      if (resumed) keep.push_back(flat(digits));
      std::size_t i = k;
      while (i-- > 0) {
        if (++pick[i] < depth_choice[i].size()) break;
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  std::vector<std::size_t> all_rows(kr.outputs().size());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  const IOInterface gh = io_project(kr, keep, all_rows);
  std::string gname;
  for (const auto* t : s.threads) gname += t->name;
  out.steps.push_back({gname, gh});

  const bool has_state = std::find(parent.states.begin(), parent.states.end(), s.join) != parent.states.end();
  const CkagNode& fork = m.node(s.fork);
  const CkagNode& join = m.node(s.join);

  std::vector<std::string> fin = in_labels(m, parent, s.fork);
  if (has_state) fin.push_back(out_of(s.join));
  TropicalMatrix fm = blank(gh.inputs().size(), fin.size());
  const std::size_t entry_cols = has_state ? fin.size() - 1 : fin.size();
  for (std::size_t c = 0; c < entry_cols; ++c) fm.set(0, c, cost_of(m, fork));
  if (has_state)
    for (std::size_t r = 1; r < gh.inputs().size(); ++r) fm.set(r, fin.size() - 1, ExtNat(0));
  const IOInterface fork_io(atoms(fin), gh.inputs(), fm);
  out.steps.push_back({"fork(" + s.fork + ")", fork_io});

  std::vector<std::string> jout;
  for (const CkagEdge* e : edges_from(m, s.join)) jout.push_back(e->label);
  if (parent.virtual_ports && s.join == parent.exit_node) jout.push_back(parent.exit_label);
  if (jout.size() != 1) throw std::invalid_argument("join " + s.join + " needs exactly one exit");
  if (has_state) jout.push_back(in_of(s.join));
  // Output combos follow the same mixed radix: digit 0 is a thread's exit.
  std::vector<std::size_t> oradix(k);
  for (std::size_t i = 0; i < k; ++i) oradix[i] = inst[i].outputs().size();
  TropicalMatrix jm = blank(jout.size(), gh.outputs().size());
  for (std::size_t c = 0; c < gh.outputs().size(); ++c) {
    std::size_t rest = c;
    bool all_exit = true;
    for (std::size_t i = k; i-- > 0;) {
      all_exit = all_exit && rest % oradix[i] == 0;
      rest /= oradix[i];
    }
    if (all_exit)
      jm.set(0, c, cost_of(m, join));
    else if (has_state)
      jm.set(1, c, cost_of(m, join));
  }
  const IOInterface join_io(gh.outputs(), atoms(jout), jm);
  out.steps.push_back({"join(" + s.join + ")", join_io});

  out.composite = io_compose(io_compose(fork_io, gh), join_io);
  return out;
}

}  // namespace

PauseInterfaces pause_interfaces(const CkagModule& m, const std::string& id) {
  const CkagNode& n = m.node(id);
  if (n.kind != NodeKind::Pause) throw std::invalid_argument(id + " is not a pause");
  const Region r = make_region(m, m.thread_of(id) ? m.thread_of(id)->name : "");
  const ExtNat c = cost_of(m, n);
  auto to_io = [](const Step& s) { return IOInterface(atoms(s.inputs), atoms(s.outputs), s.block); };
  return {to_io(uniform_step(in_labels(m, r, id), out_edges(m, id, false), {in_of(id)}, c, nullptr)),
          to_io(uniform_step({out_of(id)}, out_edges(m, id, true), {}, c, nullptr))};
}

IOInterface node_interface(const CkagModule& m, const std::string& id) {
  const CkagNode& n = m.node(id);
  const std::string owner = m.thread_of(id) ? m.thread_of(id)->name : "";
  const Region r = make_region(m, owner);
  const ExtNat c = cost_of(m, n);
  auto to_io = [](const Step& s) { return IOInterface(atoms(s.inputs), atoms(s.outputs), s.block); };
  switch (n.kind) {
    case NodeKind::Pause:
      return pause_interfaces(m, id).enter;
    case NodeKind::Halt: {
      auto ins = in_labels(m, r, id);
      ins.push_back(out_of(id));
      return to_io(uniform_step(ins, {}, {in_of(id)}, c, nullptr));
    }
    case NodeKind::Fork:
    case NodeKind::Join: {
      for (const auto& f : m.nodes) {
        if (f.kind != NodeKind::Fork || !r.nodes.count(f.id)) continue;
        const Section s = section_of(m, f.id);
        if (s.fork != id && s.join != id) continue;
        const auto sr = analyze_section(m, s, r);
        const std::string want = (n.kind == NodeKind::Fork ? "fork(" : "join(") + id + ")";
        for (const auto& st : sr.steps)
          if (st.name == want) return st.io;
      }
      throw std::invalid_argument(std::string(to_string(n.kind)) + " " + id + " has no partner");
    }
    default: {
      std::vector<std::string> extra;
      if (r.virtual_ports && id == r.exit_node) extra.push_back(r.exit_label);
      return to_io(uniform_step(in_labels(m, r, id), out_edges(m, id, false), extra, c, nullptr));
    }
  }
}

RegionResult region_wcrt(const CkagModule& m, const std::string& thread, const RegionOptions& opts) {
  m.validate();
  return compute_region(m, make_region(m, thread), opts, nullptr, nullptr);
}

const IOInterface* WcrtReport::find(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s.io;
  return nullptr;
}

WcrtReport wcrt_analyze(const CkagModule& m) {
  m.validate();
  WcrtReport rep{{}, IOInterface({}, {}, blank(0, 0)), {}};
  const Region r = make_region(m, "");
  const RegionResult rr = compute_region(m, r, {}, &rep.steps, &rep.notes);
  check_obligations(rr, &rep.notes);
  if (!rr.obligations.empty()) {
    rep.steps.push_back({m.name + ".refined", rr.refined});
    rep.steps.push_back({m.name + ".split", rr.split});
  }
  rep.result = bundle_states(rr.io, 1, 1, m.name, r.states.empty() ? nullptr : &rep.notes);
  rep.steps.push_back({m.name, rep.result});
  return rep;
}

IOInterface wcrt_compose(const CkagModule& m) { return wcrt_analyze(m).result; }

// ---- brute force ----

namespace {

class PathSearch {
 public:
  PathSearch(const CkagModule& m, std::vector<std::string> outs)
      : m_(m), outs_(std::move(outs)), best_(outs_.size(), kNeg) {}

  std::vector<ExtNat> run_entry() {
    visit(m_.entry_node, false, ExtNat(0));
    return best_;
  }
  std::vector<ExtNat> run_resume(const std::string& s) {
    visit(s, true, ExtNat(0));
    return best_;
  }

 private:
  void record(const std::string& label, ExtNat d) {
    const std::size_t k = position(outs_, label);
    best_[k] = max(best_[k], d);
  }

  void follow(const CkagEdge& e, ExtNat d) {
    if (e.guard) {
      auto it = val_.find(e.guard->signal);
      if (it != val_.end()) {
        if (it->second != e.guard->present) return;
        visit(e.dst, false, d);
        return;
      }
      val_[e.guard->signal] = e.guard->present;
      visit(e.dst, false, d);
      val_.erase(e.guard->signal);
      return;
    }
    visit(e.dst, false, d);
  }

  void visit(const std::string& id, bool resumed, ExtNat d) {
    const CkagNode& n = m_.node(id);
    d = d + (n.cost ? *n.cost : ExtNat(1));
    if (n.kind == NodeKind::Halt) return record(in_of(id), d);
    if (n.kind == NodeKind::Pause && !resumed) record(in_of(id), d);
    if (id == m_.exit_node && n.kind != NodeKind::Pause) record(m_.exit_label, d);
    for (const CkagEdge* e : edges_from(m_, id))
      if (e->noninst == (n.kind == NodeKind::Pause && resumed)) follow(*e, d);
  }

  const CkagModule& m_;
  std::vector<std::string> outs_;
  std::vector<ExtNat> best_;
  Valuation val_;
};

}  // namespace

IOInterface wcrt_brute_force(const CkagModule& m) {
  m.validate();
  if (!m.threads.empty()) throw std::invalid_argument("brute force handles sequential modules only");
  for (const auto& n : m.nodes)
    if (n.kind == NodeKind::Fork || n.kind == NodeKind::Join)
      throw std::invalid_argument("brute force handles sequential modules only");
  std::vector<std::string> ins{m.entry_label}, outs{m.exit_label}, states;
  for (const auto& n : m.nodes)
    if (n.kind == NodeKind::Pause || n.kind == NodeKind::Halt) states.push_back(n.id);
  for (const auto& s : states) {
    ins.push_back(out_of(s));
    outs.push_back(in_of(s));
  }
  TropicalMatrix mm = blank(outs.size(), ins.size());
  for (std::size_t c = 0; c < ins.size(); ++c) {
    PathSearch ps(m, outs);
    const auto col = c == 0 ? ps.run_entry() : ps.run_resume(states[c - 1]);
    for (std::size_t r = 0; r < outs.size(); ++r) mm.set(r, c, col[r]);
  }
  return IOInterface(atoms(ins), atoms(outs), mm);
}

CkagModule random_sequential_module(std::uint32_t seed, std::size_t n) {
  if (n < 2) throw std::invalid_argument("random module needs at least two nodes");
  std::mt19937 rng(seed);
  auto below = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto id = [](std::size_t i) { return "v" + std::to_string(i); };
  const std::vector<std::string> signals{"I", "J"};
  CkagModule m;
  m.name = "R";
  std::size_t label = 0;
  auto next_label = [&] { return "L" + std::to_string(label++); };
  // Short hops make paths reconverge on repeated tests of the same signal.
  auto forward = [&](std::size_t i) { return i + 1 + below(std::min<std::size_t>(3, n - 1 - i)); };
  for (std::size_t i = 0; i < n; ++i) {
    NodeKind k = NodeKind::Emit;
    if (i + 1 < n && i > 0) {
      switch (below(8)) {
        case 0: case 1: case 2: k = NodeKind::Present; break;
        case 3: k = NodeKind::Pause; break;
        case 4: k = NodeKind::Halt; break;
        case 5: k = NodeKind::Goto; break;
        case 6: k = NodeKind::Nothing; break;
        default: k = NodeKind::Emit; break;
      }
    }
    m.nodes.push_back({id(i), k, ExtNat(1 + below(3))});
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    switch (m.nodes[i].kind) {
      case NodeKind::Halt:
        break;
      case NodeKind::Present: {
        const std::string& s = signals[below(4) == 0 ? 1 : 0];
        m.edges.push_back({id(i), id(forward(i)), next_label(), false, Guard{s, true}});
        m.edges.push_back({id(i), id(forward(i)), next_label(), false, Guard{s, false}});
        break;
      }
      case NodeKind::Pause: {
        if (below(2)) {
          std::optional<Guard> g;
          if (below(2)) g = Guard{signals[below(signals.size())], true};
          m.edges.push_back({id(i), id(forward(i)), next_label(), false, g});
        }
        m.edges.push_back({id(i), id(below(n)), next_label(), true, std::nullopt});
        break;
      }
      default:
        m.edges.push_back({id(i), id(forward(i)), next_label(), false, std::nullopt});
        break;
    }
  }
  m.entry_label = "S0";
  m.entry_node = id(0);
  m.exit_node = id(n - 1);
  m.exit_label = "X0";
  m.validate();
  return m;
}

StepTypes sequential_step_types(const std::string& s1, const std::string& s2) {
  return {Type::implies(atom(out_of(s1)), Type::delay(atom(in_of(s2)))),
          Type::oplus(Type::negation(atom(in_of(s1))), atom(out_of(s2)))};
}

}  // namespace schedalg
