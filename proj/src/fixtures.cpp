#include "qwlab/fixtures.hpp"

#include <algorithm>
#include <utility>

namespace qwlab {

namespace {

// Commutation premises, spelled out so fixtures stay plain text.
#define CXY "x \\/ y = y \\/ x"
#define CYZ "y \\/ z = z \\/ y"
#define CXZ "x \\/ z = z \\/ x"
#define C3 CXY ", " CYZ ", " CXZ " |- "

struct RawGroup {
  const char* key;
  ClassId hypothesis;
  std::vector<const char*> items;
};

const std::vector<RawGroup>& raw_groups() {
  static const std::vector<RawGroup> groups = {
      {"be-basics", ClassId::BE,
       {
           "x -> (y -> x) = 1",
           "x <= (x -> y) -> y",
       }},
      {"bounded-basics", ClassId::BOUNDED_BE,
       {
           "x -> y* = y -> x*",
           "x <= x**",
       }},
      {"involutive-basics", ClassId::INVOLUTIVE_BE,
       {
           "x* -> y = y* -> x",
           "x* -> y* = y -> x",
           "(x -> y)* -> z = x -> (y* -> z)",
           "x -> (y -> z) = (x -> y*)* -> z",
           "(x* -> y)* -> (x* -> y) = (x* -> x)* -> (y* -> y)",
           "x** = x",
       }},
      {"meet-join", ClassId::INVOLUTIVE_BE,
       {
           "x <=Q y |- x = y /\\ x",
           "x <=Q y |- y = x \\/ y",
           "x <=Q x",
           "x <=Q y, y <=Q x |- x = y",
           "x /\\ y = (x* \\/ y*)*",
           "x \\/ y = (x* /\\ y*)*",
           "x <=Q y |- x <= y",
           "0 <=Q x",
           "x <=Q 1",
           "0 /\\ x = 0",
           "x /\\ 0 = 0",
           "1 /\\ x = x",
           "x /\\ 1 = x",
           "(x /\\ y) -> z = (y -> x) -> (y -> z)",
           "z -> (x \\/ y) = (x -> y) -> (z -> y)",
           "x /\\ y <= x",
           "x /\\ y <= y",
           "x <= x \\/ y",
           "y <= x \\/ y",
           "x /\\ (y /\\ x) = y /\\ x",
           "x /\\ (x /\\ y) = x /\\ y",
       }},
      {"meet-join-ext", ClassId::INVOLUTIVE_BE,
       {
           "x <=Q z, y <=Q z, z -> x = z -> y |- x = y",
           "(x -> (y -> z)) -> x* = ((y -> z) /\\ x)*",
           "x -> ((y -> x*)* \\/ z) = y \\/ (x -> z)",
           "((y -> x) /\\ z) -> x = y \\/ (z -> x)",
           "x <=Q y |- (y -> x) (*) y = x",
           "x -> (z (*) y*) = ((z -> y) (*) x)*",
           "(x \\/ y) /\\ y = y",
           "(x /\\ y) \\/ y = y",
           "z /\\ x = (x -> (x -> z)*)*",
           "(x /\\ (y /\\ z))* = ((z -> x) /\\ (z -> y)) -> z*",
           "(x /\\ y)* -> (y -> x)* = y \\/ (y -> x)*",
           "x (*) y = y (*) x",
           "x (+) x* = 1",
           "x /\\ y = (x (+) y*) (*) y",
       }},
      {"iom-order", ClassId::IOM,
       {
           "x /\\ (x* -> y) = x",
           "x /\\ (y -> x) = x",
           "x \\/ (x -> y)* = x",
           "x /\\ (y \\/ x) = x",
           "x \\/ (y /\\ x) = x",
           "x <=Q y |- y \\/ x = y",
           "x <=Q y |- y* <=Q x*",
           "x <=Q y |- y -> z <=Q x -> z",
           "x <=Q y |- z -> x <=Q z -> y",
           "x <=Q y |- x /\\ z <=Q y /\\ z",
           "x <=Q y |- x \\/ z <=Q y \\/ z",
           "x /\\ ((y -> x) /\\ (z -> x)) = x",
           "x \\/ ((y* -> x*)* \\/ (z* -> x*)*) = x",
           "(x \\/ y) -> (x -> y)* = y*",
       }},
      {"iom-identities", ClassId::IOM,
       {
           "(x -> y) \\/ y = x -> y",
           "(x -> y) -> (y /\\ x) = x",
           "x -> (y /\\ x) = x -> y",
           "(z -> y) \\/ (z -> (x /\\ y)) = z -> y",
           "(x -> y)* /\\ x = (x -> y)*",
           "x <= y |- y /\\ x = x",
           "y /\\ x = x |- x <= y",
           "x <=Q y, y <= x |- x = y",
           "x /\\ y <=Q y",
           "y <=Q x \\/ y",
           "(x \\/ y) -> y = x -> y",
           "x /\\ y <=Q x -> y",
           "y /\\ x <=Q x -> y",
       }},
      {"iom-lattice-laws", ClassId::IOM,
       {
           "(x /\\ y) /\\ y = x /\\ y",
           "x \\/ (y /\\ x) = x",
           "x /\\ (y \\/ x) = x",
           "x /\\ y <=Q y",
           "y <=Q x \\/ y",
           "(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z",
           "(x \\/ y) \\/ (y \\/ z) = (x \\/ y) \\/ z",
           "x <=Q y, y <=Q z |- x <=Q z",
           "(x -> y) \\/ (x -> (z /\\ y)) = x -> y",
           "(x -> y) \\/ ((z -> x) -> y) = x -> y",
           "(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y",
           "z /\\ ((y* -> z) /\\ (x* -> y)) = z /\\ (x* -> y)",
           "x \\/ (x -> y)* = x",
           "(z \\/ x) -> (y \\/ x) = z -> (y \\/ x)",
       }},
      {"implicative", ClassId::IMPLICATIVE,
       {
           "x* -> x = x",
           "x -> x* = x*",
           "x -> (x -> y) = x -> y",
           "x -> (y -> x)* = x*",
           "x -> (y -> x*) = y -> x*",
           "(y -> x*) -> x = x",
       }},
      {"wajsberg", ClassId::WAJSBERG,
       {
           "x -> (x /\\ y) = x -> y",
           "x -> ((x /\\ y) /\\ x) = x -> y",
           "x /\\ (x* -> y) = x",
           "(x -> y) -> (x /\\ y) = x",
           "(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y",
           "(x -> y)* /\\ x = (x -> y)*",
           "(x /\\ y) /\\ y = x /\\ y",
           "x /\\ y <=Q y",
           "y <=Q x \\/ y",
           "(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z",
           "(x /\\ y) /\\ z = y /\\ (x /\\ z)",
           "x -> (y /\\ z) = (x -> y) /\\ (x -> z)",
           "x <= y |- x <=Q y",
       }},
      {"commutation", ClassId::IOM,
       {
           CXY " |- x /\\ y = y /\\ x",
           "x /\\ y = y /\\ x |- " CXY,
           "x /\\ y = y /\\ x |- (x -> y) -> (x /\\ y) = x",
           "(x -> y) -> (x /\\ y) = x |- x /\\ y = y /\\ x",
       }},
      {"commutation-basics", ClassId::IOM,
       {
           CXY " |- x* \\/ y* = y* \\/ x*",
           "x <=Q y |- " CXY,
           "y <=Q x |- " CXY,
           "(x /\\ y)* \\/ (x -> y)* = (x -> y)* \\/ (x /\\ y)*",
           "x \\/ x = x",
       }},
      {"central-join", ClassId::IOM,
       {
           CXY ", " CXZ " |- (x \\/ y) \\/ z = y \\/ (x \\/ z)",
           C3 "(x \\/ y) \\/ z = z \\/ (x \\/ y)",
           C3 "y \\/ z <=Q y \\/ (z \\/ x)",
       }},
      {"central-distributivity", ClassId::IOM,
       {
           CYZ " |- (y \\/ z) -> x <=Q (y -> x) /\\ (z -> x)",
           C3 "(y -> x) /\\ (z -> x) <= (y \\/ z) -> x",
           C3 "(y \\/ z) -> x = (y -> x) /\\ (z -> x)",
           C3 "x -> (y /\\ z) = (x -> y) /\\ (x -> z)",
       }},
  };
  return groups;
}

#undef CXY
#undef CYZ
#undef CXZ
#undef C3

// Direct edges of the class inclusion order; class_implies closes them.
const std::vector<std::pair<ClassId, ClassId>>& inclusions() {
  static const std::vector<std::pair<ClassId, ClassId>> edges = {
      {ClassId::BOUNDED_BE, ClassId::BE},
      {ClassId::INVOLUTIVE_BE, ClassId::BOUNDED_BE},
      {ClassId::QW, ClassId::PRE_W},
      {ClassId::QW, ClassId::IOM},
      {ClassId::PRE_W, ClassId::META_W},
      {ClassId::META_W, ClassId::INVOLUTIVE_BE},
      {ClassId::IOM, ClassId::INVOLUTIVE_BE},
      {ClassId::IMPLICATIVE, ClassId::INVOLUTIVE_BE},
      {ClassId::WAJSBERG, ClassId::QW},
      {ClassId::IOM_LATTICE, ClassId::IMPLICATIVE},
      {ClassId::IOM_LATTICE, ClassId::QW},
      {ClassId::QMV, ClassId::QW},
      {ClassId::QW, ClassId::QMV},
      {ClassId::PRE_MV, ClassId::PRE_W},
      {ClassId::PRE_W, ClassId::PRE_MV},
      {ClassId::META_MV, ClassId::META_W},
      {ClassId::META_W, ClassId::META_MV},
      {ClassId::OM_ALG, ClassId::IOM},
      {ClassId::IOM, ClassId::OM_ALG},
      {ClassId::OM_SOFTLATTICE, ClassId::OM_ALG},
      {ClassId::OM_WIDELATTICE, ClassId::OM_ALG},
  };
  return edges;
}

}  // namespace

bool class_implies(ClassId sub, ClassId super) {
  std::vector<ClassId> frontier{sub};
  std::vector<ClassId> seen{sub};
  while (!frontier.empty()) {
    const ClassId c = frontier.back();
    frontier.pop_back();
    if (c == super) return true;
    for (const auto& [from, to] : inclusions()) {
      if (from == c && std::find(seen.begin(), seen.end(), to) == seen.end()) {
        seen.push_back(to);
        frontier.push_back(to);
      }
    }
  }
  return false;
}

const std::vector<FixtureGroup>& all_fixtures() {
  static const std::vector<FixtureGroup> groups = [] {
    std::vector<FixtureGroup> out;
    for (const auto& raw : raw_groups()) {
      FixtureGroup g{raw.key, raw.hypothesis, {}};
      int n = 0;
      for (const char* text : raw.items) {
        g.items.push_back({g.key + "/" + std::to_string(++n), text, parse_statement(text)});
      }
      out.push_back(std::move(g));
    }
    return out;
  }();
  return groups;
}

std::vector<const FixtureGroup*> fixture_suite(ClassId cls) {
  std::vector<const FixtureGroup*> out;
  for (const auto& g : all_fixtures()) {
    if (class_implies(cls, g.hypothesis)) out.push_back(&g);
  }
  return out;
}

}  // namespace qwlab
