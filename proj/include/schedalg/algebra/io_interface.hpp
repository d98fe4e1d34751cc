#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schedalg/kernel/type.hpp"
#include "schedalg/semantics/universe.hpp"
#include "schedalg/tropical/matrix.hpp"

namespace schedalg {

// Normal form T : (z1 | ... | zm) -> O x1 (+) ... (+) O xn with pure controls
// and a max-plus timing matrix of n rows and m columns.
class IOInterface {
 public:
  // Throws ClassError for impure controls, std::invalid_argument on shape errors.
  IOInterface(std::vector<Type> inputs, std::vector<Type> outputs, TropicalMatrix matrix);

  static IOInterface identity(const std::vector<Type>& controls);

  const std::vector<Type>& inputs() const { return inputs_; }
  const std::vector<Type>& outputs() const { return outputs_; }
  const TropicalMatrix& matrix() const { return matrix_; }

  Type type() const;
  Interface to_interface() const;

  bool operator==(const IOInterface& o) const = default;

 private:
  std::vector<Type> inputs_;
  std::vector<Type> outputs_;
  TropicalMatrix matrix_;
};

// inputs: a; b
// outputs: c
// matrix: [1, 2]
std::string to_string(const IOInterface& io);
IOInterface parse_io_interface(std::string_view text);

// Controls match syntactically after Boolean simplification.
bool same_control(const Type& a, const Type& b);

// a then b: b.matrix * a.matrix, except that an input of b that never holds
// (all -inf column) passes a's delay to every output. Throws ControlMismatch unless a's outputs match b's inputs.
IOInterface io_compose(const IOInterface& a, const IOInterface& b);
// Pairwise conjunctions of controls; input (i, k) sits at column i * |b.inputs| + k.
IOInterface io_kron(const IOInterface& a, const IOInterface& b);
// Keeps the listed columns and rows in the given order. Throws std::out_of_range.
IOInterface io_project(const IOInterface& a, const std::vector<std::size_t>& keep_inputs,
                       const std::vector<std::size_t>& keep_outputs);

// `replacement` must be equivalent to `merged`, the sum of the old controls.
// Bundling records this instead of checking it.
struct ProofObligation {
  Type merged;
  Type replacement;
};
std::string to_string(const ProofObligation& p);
// Checks the obligation over u, both sides conjoined with `assumption` if given.
bool discharge(const ProofObligation& p, const Universe& u, const std::optional<Type>& assumption = std::nullopt);

struct Bundled {
  IOInterface io;
  ProofObligation obligation;
};
// Replaces the grouped columns by their entrywise max, placed at the first
// grouped position and labelled new_control.
Bundled io_bundle(const IOInterface& a, const std::vector<std::size_t>& group, const Type& new_control);
// The same on output rows.
Bundled io_bundle_outputs(const IOInterface& a, const std::vector<std::size_t>& group, const Type& new_control);

// Replaces input `index` by one column per case, labelled (old & case), with
// the refined delays taken from `columns` (|outputs| x |cases|).
IOInterface io_split(const IOInterface& a, std::size_t index, const std::vector<Type>& cases,
                     const TropicalMatrix& columns);

}  // namespace schedalg
