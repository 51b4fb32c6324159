#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwlab/algebra.hpp"

namespace qwlab {

// clang-format off
enum class AxiomId {
  BE1, BE2, BE3, BE4, BOUNDED, INVOLUTIVE, BCK1, BCK4,
  W1, W2, W3, W4, COMMUTATIVE, PIMPL,
  QW, QW1, QW2, QW2P, QW3, QW3P, IOM, IOMP, IOMPP,
  // Product side: evaluated on the odot-image, require INVOLUTIVE.
  PU, PCOMM, PASS, M_L, M_RE, PQMV, PMV, POM, DELTA_M, M_PIMPL, G, M_PABS_I,
  // Supplement-algebra axioms over the derived total oplus.
  S1, S2, S3, S4, S5, S6, S7,
};

enum class ClassId {
  BE, BOUNDED_BE, INVOLUTIVE_BE, QW, PRE_W, META_W, IOM, WAJSBERG, IMPLICATIVE,
  IOM_LATTICE, QMV, PRE_MV, META_MV, OM_ALG, OM_SOFTLATTICE, OM_WIDELATTICE,
};
// clang-format on

enum class Status { Pass, Fail, PrereqFailed };

std::string_view to_string(Status s);

struct AxiomInfo {
  AxiomId id;
  std::string_view name;     // e.g. "QW2P"
  std::string_view formula;  // human-readable statement, variables x, y, z
  int arity;                 // number of universally quantified variables
  bool product_side;         // quantifies over the odot-image
};

/// Every axiom, in enum order.
const std::vector<AxiomInfo>& axiom_catalogue();
const AxiomInfo& info(AxiomId id);
std::string_view to_string(AxiomId id);
/// Case-insensitive; accepts '-' or '_' separators and a trailing prime
/// notation such as QW2' for QW2P. Returns nullopt for unknown ids.
std::optional<AxiomId> parse_axiom_id(std::string_view text);

const std::vector<ClassId>& all_classes();
std::string_view to_string(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view text);
/// Conjunction of axioms defining the class, in check order.
const std::vector<AxiomId>& class_axioms(ClassId id);

struct CheckOutcome {
  AxiomId axiom;
  Status status;
  /// Present iff status is Fail: the lexicographically least falsifying tuple,
  /// variables in x, y, z order.
  std::optional<std::vector<Elem>> witness;
  /// Present iff status is PrereqFailed.
  std::optional<AxiomId> prereq;

  bool passed() const noexcept { return status == Status::Pass; }
};

CheckOutcome check_axiom(const Model& m, AxiomId id);

/// Re-evaluates the axiom on a single assignment. Used to confirm witnesses.
bool axiom_holds_at(const Model& m, AxiomId id, std::span<const Elem> values);

struct ClassOutcome {
  ClassId cls;
  bool member;
  /// First failed conjunct when not a member.
  std::optional<CheckOutcome> first_failure;
};

ClassOutcome check_class(const Model& m, ClassId id);

}  // namespace qwlab
