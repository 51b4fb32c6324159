#pragma once

#include <string>
#include <vector>

#include "qwlab/axioms.hpp"
#include "qwlab/terms.hpp"

namespace qwlab {

struct FixtureItem {
  std::string id;    // "<group>/<n>", stable across releases
  std::string text;  // source form, parseable by parse_statement
  Statement statement;
};

/// A family of statements that hold in every model of `hypothesis`.
struct FixtureGroup {
  std::string key;
  ClassId hypothesis;
  std::vector<FixtureItem> items;
};

/// Every group, in a fixed order. Parsed once and cached.
const std::vector<FixtureGroup>& all_fixtures();

/// Groups whose hypothesis is implied by membership in `cls`, i.e. every
/// statement returned must hold on any model of `cls`.
std::vector<const FixtureGroup*> fixture_suite(ClassId cls);

/// True when every model of `sub` is a model of `super` (reflexive).
bool class_implies(ClassId sub, ClassId super);

}  // namespace qwlab
