#include <doctest.h>

#include <set>

#include "qwlab/classify.hpp"
#include "qwlab/fixtures.hpp"
#include "qwlab/search.hpp"
#include "qwlab/terms.hpp"
#include "support.hpp"

using namespace qwlab;

TEST_CASE("fixture ids are unique and parse back") {
  std::set<std::string> ids;
  std::size_t total = 0;
  for (const auto& g : all_fixtures()) {
    CHECK_FALSE(g.items.empty());
    for (const auto& item : g.items) {
      ++total;
      CHECK(item.id.rfind(g.key + "/", 0) == 0);
      ids.insert(item.id);
      CHECK(parse_statement(item.text) == item.statement);
    }
  }
  CHECK(ids.size() == total);
  CHECK(&all_fixtures() == &all_fixtures());
}

TEST_CASE("class inclusion") {
  CHECK(class_implies(ClassId::QW, ClassId::PRE_W));
  CHECK(class_implies(ClassId::QW, ClassId::IOM));
  CHECK(class_implies(ClassId::PRE_W, ClassId::META_W));
  CHECK(class_implies(ClassId::WAJSBERG, ClassId::QW));
  CHECK(class_implies(ClassId::IOM_LATTICE, ClassId::IMPLICATIVE));
  CHECK(class_implies(ClassId::IOM, ClassId::BE));
  CHECK(class_implies(ClassId::QMV, ClassId::QW));
  CHECK(class_implies(ClassId::QW, ClassId::QMV));
  CHECK_FALSE(class_implies(ClassId::IOM, ClassId::META_W));
  CHECK_FALSE(class_implies(ClassId::META_W, ClassId::PRE_W));
  CHECK_FALSE(class_implies(ClassId::BE, ClassId::BOUNDED_BE));
  for (ClassId c : all_classes()) CHECK(class_implies(c, c));
}

TEST_CASE("class inclusion agrees with membership on small models") {
  const auto models = testing_support::models_up_to(5);
  for (const Model& m : models) {
    const auto report = classify(m);
    for (ClassId sub : all_classes()) {
      for (ClassId super : all_classes()) {
        if (class_implies(sub, super) && report.member(sub)) CHECK(report.member(super));
      }
    }
  }
}

TEST_CASE("suites select the implied hypotheses") {
  auto keys = [](ClassId c) {
    std::set<std::string> out;
    for (const auto* g : fixture_suite(c)) out.insert(g->key);
    return out;
  };
  const auto qw = keys(ClassId::QW);
  CHECK(qw.count("iom-order"));
  CHECK(qw.count("involutive-basics"));
  CHECK_FALSE(qw.count("wajsberg"));
  CHECK_FALSE(qw.count("implicative"));
  CHECK(keys(ClassId::BE) == std::set<std::string>{"be-basics"});
  CHECK(keys(ClassId::WAJSBERG).count("wajsberg"));
}

TEST_CASE("every fixture holds on every model of its hypothesis up to size 6") {
  std::vector<Model> models = testing_support::models_up_to(6);
  for (const auto& a : testing_support::reference_algebras()) models.emplace_back(a);
  std::size_t checked = 0;
  for (const auto& g : all_fixtures()) {
    for (const Model& m : models) {
      if (!check_class(m, g.hypothesis).member) continue;
      for (const auto& item : g.items) {
        ++checked;
        const auto out = check_statement(m, item.statement);
        INFO(item.id << ": " << item.text);
        CHECK(out.status == Status::Pass);
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("literal misprints are refuted while the corrected forms survive") {
  const Statement literal_order = parse_statement("x \\/ ((y* -> x*)* \\/ (z* -> x*)) = x");
  const Statement literal_ident = parse_statement("(z -> y) \\/ (z -> x) = z -> y");
  const Statement swapped_meet = parse_statement("(z -> y) \\/ (z -> (y /\\ x)) = z -> y");
  CHECK(find_counterexample(literal_order, ClassId::IOM, 6).has_value());
  CHECK(find_counterexample(literal_ident, ClassId::IOM, 6).has_value());
  CHECK(find_counterexample(swapped_meet, ClassId::IOM, 6).has_value());
  CHECK_FALSE(find_counterexample(
                  parse_statement("x \\/ ((y* -> x*)* \\/ (z* -> x*)*) = x"), ClassId::IOM, 6)
                  .has_value());
  CHECK_FALSE(find_counterexample(parse_statement("(z -> y) \\/ (z -> (x /\\ y)) = z -> y"),
                                  ClassId::IOM, 6)
                  .has_value());
}
