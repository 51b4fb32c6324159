#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"

namespace qwlab {

enum class TermKind { Var, Zero, One, Star, Bin };
enum class BinOp { Imp, Join, Meet, Odot, Oplus };

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Term over the signature ->, *, join, meet, odot, oplus, 0, 1.
/// Equality is structural and ignores source positions.
struct Term {
  TermKind kind = TermKind::Zero;
  BinOp op = BinOp::Imp;
  std::string name;
  std::vector<Term> args;
  SourcePos pos;

  static Term var(std::string name, SourcePos pos = {});
  static Term zero(SourcePos pos = {});
  static Term one(SourcePos pos = {});
  static Term star(Term t, SourcePos pos = {});
  static Term bin(BinOp op, Term lhs, Term rhs, SourcePos pos = {});

  friend bool operator==(const Term& a, const Term& b);
};

enum class Relation { Eq, Leq, LeqQ };

struct Atom {
  Relation rel = Relation::Eq;
  Term lhs;
  Term rhs;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// premises |- conclusion, all variables universally quantified.
struct Statement {
  std::vector<Atom> premises;
  Atom conclusion;

  friend bool operator==(const Statement&, const Statement&) = default;
};

/// Grammar (UTF-8; ASCII shown):
///   statement := [atom {"," atom} "|-"] atom
///   atom      := term ("=" | "<=" | "<=Q") term
///   term      := mid ["->" term]                      right associative
///   mid       := post {op post}   op in /\ \/ (*) (+), one kind per chain
///   post      := prim {"*"}
///   prim      := ident | 0 | 1 | "(" term ")" | "star(" term ")"
/// Word aliases meet, join, odot, oplus and the symbols of the usual
/// notation are accepted. Throws ParseError with line and column.
Statement parse_statement(std::string_view text);
Term parse_term(std::string_view text);

std::string render(const Term& t);
std::string render(const Atom& a);
std::string render(const Statement& s);

/// Sorted, duplicate-free.
std::vector<std::string> free_variables(const Term& t);
std::vector<std::string> free_variables(const Statement& s);

using Env = std::map<std::string, Elem, std::less<>>;

/// Throws EvaluationError if a variable of t is unbound in env.
Elem eval(const Model& m, const Term& t, const Env& env);
bool holds(const Model& m, const Atom& a, const Env& env);

struct StatementOutcome {
  Status status = Status::Pass;
  /// Quantified variables in assignment order (sorted by name).
  std::vector<std::string> variables;
  /// Least assignment satisfying every premise but not the conclusion.
  std::optional<std::vector<Elem>> witness;
};

StatementOutcome check_statement(const Model& m, const Statement& s);

}  // namespace qwlab
