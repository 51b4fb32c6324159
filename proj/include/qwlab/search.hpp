#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"
#include "qwlab/terms.hpp"

namespace qwlab {

/// Enumeration ranges over involutive BE algebras laid out with zero at
/// index 0 and unit at index n-1 (a single element when n = 1).
struct EnumerationConfig {
  int size = 1;
  std::optional<ClassId> class_filter;
  bool iso_reject = true;
  /// Maximum number of search nodes; BudgetExhausted when exceeded.
  std::optional<std::uint64_t> node_limit;
};

/// Least row-major flattening of the -> table over all relabelings that send
/// zero to 0 and unit to n-1. Equal iff isomorphic by a constant-preserving
/// bijection.
std::vector<Elem> canonical_form(const FiniteAlgebra& a);

/// The algebra whose table is canonical_form(a), with standard names.
FiniteAlgebra canonical_algebra(const FiniteAlgebra& a);

/// Calls `visit` for each model in ascending flattened-table order; stops
/// early when `visit` returns false. Returns the number of search nodes.
std::uint64_t enumerate_each(const EnumerationConfig& cfg,
                             const std::function<bool(const FiniteAlgebra&)>& visit);

std::vector<FiniteAlgebra> enumerate(const EnumerationConfig& cfg);
std::size_t count(const EnumerationConfig& cfg);

struct Counterexample {
  FiniteAlgebra model;
  std::vector<std::string> variables;
  std::vector<Elem> assignment;
};

/// Smallest, then canonically least, model of `cls` of size <= max_size on
/// which `s` fails, with the least failing assignment.
std::optional<Counterexample> find_counterexample(const Statement& s, ClassId cls, int max_size,
                                                  std::optional<std::uint64_t> node_limit = {});

}  // namespace qwlab
