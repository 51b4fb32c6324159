#pragma once

#include <span>
#include <string>
#include <vector>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"

namespace qwlab {

struct ClassificationReport {
  /// One outcome per class, in all_classes() order.
  std::vector<ClassOutcome> classes;
  bool leq_antisymmetric = false;
  bool implicative = false;
  bool commutative = false;
  /// Broken arrows of the class inclusion order. Nonempty means a bug.
  std::vector<std::string> inconsistencies;

  const ClassOutcome& outcome(ClassId id) const;
  bool member(ClassId id) const { return outcome(id).member; }
};

ClassificationReport classify(const Model& m);

struct TheoremViolation {
  std::size_t model;   // index into the supplied collection
  std::string theorem; // short description of the failed implication
};

struct MetaTheoremReport {
  std::size_t models_checked = 0;
  std::size_t assertions_checked = 0;
  std::vector<TheoremViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the inter-class theorems model by model. Every model must be an
/// involutive BE algebra; otherwise throws PreconditionError naming the index.
MetaTheoremReport verify_meta_theorems(std::span<const Model> models);

}  // namespace qwlab
