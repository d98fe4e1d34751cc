#include "schedalg/algebra/io_interface.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "schedalg/algebra/boolean.hpp"
#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/analysis.hpp"

namespace schedalg {

namespace {

std::string join(const std::vector<Type>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? "; " : "") + to_string(ts[i]);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on ';' outside brackets.
std::vector<std::string_view> split_controls(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ';' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (!trim(s.substr(start)).empty() || !out.empty()) out.push_back(trim(s.substr(start)));
  return out;
}

Type canonical_control(const Type& t) {
  if (is_boolean(t) && atoms_of(t).size() <= 12) return simplify_boolean(t);
  return t;
}

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " out of range");
}

}  // namespace

IOInterface::IOInterface(std::vector<Type> inputs, std::vector<Type> outputs, TropicalMatrix matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
  for (const auto* list : {&inputs_, &outputs_})
    for (const Type& t : *list)
      if (!is_pure(t)) throw ClassError("IO control is not pure: " + to_string(t));
  if (matrix_.semiring() != Semiring::MaxPlus) throw std::invalid_argument("IO timing matrices are max-plus");
  if (matrix_.rows() != outputs_.size() || matrix_.cols() != inputs_.size())
    throw std::invalid_argument("timing matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + " but the interface has " +
                                std::to_string(outputs_.size()) + " outputs and " + std::to_string(inputs_.size()) +
                                " inputs");
}

IOInterface IOInterface::identity(const std::vector<Type>& controls) {
  return IOInterface(controls, controls, TropicalMatrix::identity(controls.size(), Semiring::MaxPlus));
}

Type IOInterface::type() const {
  std::vector<Type> outs;
  for (const Type& o : outputs_) outs.push_back(Type::delay(o));
  return Type::implies(disj_all(inputs_), oplus_all(outs));
}

Interface IOInterface::to_interface() const {
  const Type t = type();
  if (is_pure(t)) return Interface(canonical_bound(t), t);
  if (inputs_.empty()) {
    // false -> ... : any bound will do; use -inf throughout.
    return Interface(decode_bound(std::vector<ExtNat>(outputs_.size(), ExtNat::neg_inf()), t), t);
  }
  return Interface(decode_bound(matrix_.entries(), t), t);
}

std::string to_string(const IOInterface& io) {
  return "inputs: " + join(io.inputs()) + "\noutputs: " + join(io.outputs()) + "\nmatrix: " + to_string(io.matrix());
}

IOInterface parse_io_interface(std::string_view text) {
  std::optional<std::vector<Type>> ins, outs;
  std::optional<std::string> mat;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw std::runtime_error("IO interface line without a field name: " + std::string(line));
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));
    if (key == "inputs" || key == "outputs") {
      std::vector<Type> ts;
      for (auto part : split_controls(rest)) ts.push_back(parse_type(part));
      (key == "inputs" ? ins : outs) = std::move(ts);
    } else if (key == "matrix") {
      mat = std::string(rest);
    } else {
      throw std::runtime_error("unknown IO interface field '" + std::string(key) + "'");
    }
  }
  if (!ins || !outs || !mat) throw std::runtime_error("IO interface needs inputs, outputs and matrix fields");
  if (trim(*mat) == "[]") return IOInterface(*ins, *outs, TropicalMatrix(outs->size(), ins->size(), Semiring::MaxPlus));
  return IOInterface(*ins, *outs, TropicalMatrix::parse(*mat, Semiring::MaxPlus));
}

bool same_control(const Type& a, const Type& b) { return a == b || canonical_control(a) == canonical_control(b); }

IOInterface io_compose(const IOInterface& a, const IOInterface& b) {
  if (a.outputs().size() != b.inputs().size())
    throw ControlMismatch("cannot compose: " + std::to_string(a.outputs().size()) + " outputs feed " +
                          std::to_string(b.inputs().size()) + " inputs");
  for (std::size_t i = 0; i < a.outputs().size(); ++i)
    if (!same_control(a.outputs()[i], b.inputs()[i]))
      throw ControlMismatch("cannot compose: output " + to_string(a.outputs()[i]) + " vs input " +
                            to_string(b.inputs()[i]));
  // An input of b with an all -inf column never holds. An a option routed
  // there is only met by the activation ending, so every output inherits
  // its delay (the tight sequential rule) rather than dropping the path.
  TropicalMatrix m = mat_mul(b.matrix(), a.matrix());
  for (std::size_t j = 0; j < b.inputs().size(); ++j) {
    bool dead = true;
    for (std::size_t r = 0; r < b.outputs().size() && dead; ++r) dead = b.matrix().at(r, j).is_neg_inf();
    if (!dead) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, max(m.at(r, c), a.matrix().at(j, c)));
  }
  return IOInterface(a.inputs(), b.outputs(), std::move(m));
}

IOInterface io_kron(const IOInterface& a, const IOInterface& b) {
  std::vector<Type> ins, outs;
  for (const Type& x : a.inputs())
    for (const Type& y : b.inputs()) ins.push_back(Type::conj(x, y));
  for (const Type& x : a.outputs())
    for (const Type& y : b.outputs()) outs.push_back(Type::conj(x, y));
  return IOInterface(std::move(ins), std::move(outs), kron(a.matrix(), b.matrix()));
}

IOInterface io_project(const IOInterface& a, const std::vector<std::size_t>& keep_inputs,
                       const std::vector<std::size_t>& keep_outputs) {
  std::vector<Type> ins, outs;
  for (auto i : keep_inputs) {
    check_index(i, a.inputs().size(), "input");
    ins.push_back(a.inputs()[i]);
  }
  for (auto k : keep_outputs) {
    check_index(k, a.outputs().size(), "output");
    outs.push_back(a.outputs()[k]);
  }
  return IOInterface(std::move(ins), std::move(outs), a.matrix().select(keep_outputs, keep_inputs));
}

std::string to_string(const ProofObligation& p) { return to_string(p.merged) + " == " + to_string(p.replacement); }

bool discharge(const ProofObligation& p, const Universe& u, const std::optional<Type>& assumption) {
  Type l = p.merged, r = p.replacement;
  if (assumption) {
    l = Type::conj(l, *assumption);
    r = Type::conj(r, *assumption);
  }
  return equivalent(Interface(canonical_bound(l), l), Interface(canonical_bound(r), r), u);
}

namespace {

// Shared by the row and column variants, on the transposed matrix for rows.
void merge_lines(std::vector<Type>& labels, TropicalMatrix& m, const std::vector<std::size_t>& group,
                 const Type& new_control, ProofObligation& ob) {
  if (group.empty()) throw std::invalid_argument("empty bundle");
  if (!is_pure(new_control)) throw ClassError("bundle control is not pure: " + to_string(new_control));
  std::set<std::size_t> g;
  std::vector<Type> old;
  for (auto i : group) {
    check_index(i, labels.size(), "bundle");
    if (!g.insert(i).second) throw std::invalid_argument("bundle index repeated");
    old.push_back(labels[i]);
  }
  ob = {oplus_all(old), new_control};
  const std::size_t first = group.front();
  std::vector<Type> new_labels;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (g.count(i) && i != first) continue;
    keep.push_back(i);
    new_labels.push_back(i == first ? new_control : labels[i]);
  }
  TropicalMatrix out(m.rows(), keep.size(), m.semiring());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      ExtNat v = m.at(r, keep[j]);
      if (keep[j] == first)
        for (auto i : group) v = max(v, m.at(r, i));
      out.set(r, j, v);
    }
  labels = std::move(new_labels);
  m = std::move(out);
}

}  // namespace

Bundled io_bundle(const IOInterface& a, const std::vector<std::size_t>& group, const Type& new_control) {
  std::vector<Type> ins = a.inputs();
  TropicalMatrix m = a.matrix();
  ProofObligation ob;
  merge_lines(ins, m, group, new_control, ob);
  return {IOInterface(std::move(ins), a.outputs(), std::move(m)), ob};
}

Bundled io_bundle_outputs(const IOInterface& a, const std::vector<std::size_t>& group, const Type& new_control) {
  std::vector<Type> outs = a.outputs();
  TropicalMatrix m = a.matrix().transpose();
  ProofObligation ob;
  merge_lines(outs, m, group, new_control, ob);
  return {IOInterface(a.inputs(), std::move(outs), m.transpose()), ob};
}

IOInterface io_split(const IOInterface& a, std::size_t index, const std::vector<Type>& cases,
                     const TropicalMatrix& columns) {
  check_index(index, a.inputs().size(), "split");
  if (cases.empty()) throw std::invalid_argument("split needs at least one case");
  if (columns.rows() != a.outputs().size() || columns.cols() != cases.size())
    throw std::invalid_argument("split columns must be " + std::to_string(a.outputs().size()) + "x" +
                                std::to_string(cases.size()));
  std::vector<Type> ins;
  std::vector<std::pair<bool, std::size_t>> src;  // (from columns?, index)
  for (std::size_t i = 0; i < a.inputs().size(); ++i) {
    if (i != index) {
      ins.push_back(a.inputs()[i]);
      src.push_back({false, i});
      continue;
    }
    for (std::size_t c = 0; c < cases.size(); ++c) {
      ins.push_back(cases[c].op() == Op::True ? a.inputs()[i] : Type::conj(a.inputs()[i], cases[c]));
      src.push_back({true, c});
    }
  }
  TropicalMatrix m(a.outputs().size(), ins.size(), Semiring::MaxPlus);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < ins.size(); ++j)
      m.set(r, j, src[j].first ? columns.at(r, src[j].second) : a.matrix().at(r, src[j].second));
  return IOInterface(std::move(ins), a.outputs(), std::move(m));
}

}  // namespace schedalg
