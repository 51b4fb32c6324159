#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"

namespace qwlab {

/// x (+) y := x* -> y, defined exactly when x <=Q y*.
struct PartialOpTable {
  int size = 0;
  Elem zero = 0;
  Elem unit = 0;
  Square<std::uint8_t> defined;
  Square<Elem> value;  // -1 where undefined

  bool is_defined(Elem x, Elem y) const { return defined(x, y) != 0; }
  Elem at(Elem x, Elem y) const { return value(x, y); }
};

/// Throws PreconditionError unless m is an involutive BE algebra.
PartialOpTable build_effect(const Model& m);

enum class EffectAxiom { E1, E2, E3, E4 };
std::string_view to_string(EffectAxiom a);

struct EffectOutcome {
  EffectAxiom axiom;
  Status status = Status::Pass;
  /// E1, E2: the least failing (x, y) or (x, y, z). E3: (x) when no
  /// supplement exists, (x, y1, y2) when two exist. E4: (x).
  std::optional<std::vector<Elem>> witness;
  /// "undefined where required", "defined but unequal", "no supplement",
  /// "not unique" or "sum with 1 defined for nonzero x"; empty on success.
  std::string kind;
};

/// E1 commutativity, E2 associativity, E3 orthosupplement, E4 zero-one law.
std::vector<EffectOutcome> check_effect_axioms(const PartialOpTable& p);

/// The unique y with x (+) y = 1, if exactly one exists.
std::optional<Elem> orthosupplement(const PartialOpTable& p, Elem x);

}  // namespace qwlab
