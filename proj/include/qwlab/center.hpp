#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"

namespace qwlab {

/// x C y iff x join y = y join x. Throws std::out_of_range on bad indices.
bool commutes(const Model& m, Elem x, Elem y);

struct ClosureCheck {
  std::string operation;  // "0", "1", "*", "->", "join", "meet"
  bool holds = true;
  /// Central arguments whose result falls outside the center.
  std::optional<std::vector<Elem>> witness;
};

struct CenterResult {
  Square<std::uint8_t> commute;
  /// Central elements in input order.
  std::vector<Elem> center;
  /// Pass when every closure check and W1..W4 hold on the restriction;
  /// PrereqFailed when the input is not IOM (commute and center are still
  /// filled, nothing else is).
  Status subalgebra = Status::Pass;
  std::vector<ClosureCheck> closure;
  /// The center as an algebra in its own right, re-indexed in input order.
  /// Absent unless the center is closed under ->.
  std::optional<FiniteAlgebra> restriction;
  /// W1..W4 on the restriction; witnesses use indices of the original model.
  std::vector<CheckOutcome> wajsberg;

  bool is_whole_carrier() const { return static_cast<int>(center.size()) == commute.size(); }
};

CenterResult center(const Model& m);

/// On IOM input, for every pair the three conditions
///   x join y = y join x,  x meet y = y meet x,  (x -> y) -> (x meet y) = x
/// are either all true or all false.
struct CommutationReport {
  Status status = Status::Pass;
  /// Pairs where the conditions disagree, with the three truth values.
  struct Violation {
    Elem x, y;
    bool joins_commute, meets_commute, recovers;
  };
  std::vector<Violation> violations;
};

CommutationReport check_commutation_equivalences(const Model& m);

}  // namespace qwlab
