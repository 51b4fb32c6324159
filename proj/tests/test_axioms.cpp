#include <doctest.h>

#include <functional>

#include "qwlab/axioms.hpp"
#include "support.hpp"

using namespace qwlab;
using testing_support::els;

namespace {

// First tuple in lexicographic order on which `holds` is false.
std::optional<std::vector<Elem>> least_failure(int n, int arity,
                                               const std::function<bool(const std::vector<Elem>&)>& holds) {
  std::vector<Elem> t(static_cast<std::size_t>(arity), 0);
  while (true) {
    if (!holds(t)) return t;
    int k = arity - 1;
    while (k >= 0 && ++t[k] == n) t[k--] = 0;
    if (k < 0) return std::nullopt;
  }
}

bool passes(const Model& m, AxiomId id) { return check_axiom(m, id).passed(); }

}  // namespace

TEST_CASE("catalogue covers every axiom id exactly once and in order") {
  const auto& cat = axiom_catalogue();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(static_cast<std::size_t>(cat[i].id) == i);
    CHECK(parse_axiom_id(cat[i].name) == cat[i].id);
    CHECK_FALSE(cat[i].formula.empty());
  }
  CHECK(cat.back().id == AxiomId::S7);
}

TEST_CASE("axiom and class ids parse leniently") {
  CHECK(parse_axiom_id("qw2'") == AxiomId::QW2P);
  CHECK(parse_axiom_id("iom''") == AxiomId::IOMPP);
  CHECK(parse_axiom_id("m-pabs-i") == AxiomId::M_PABS_I);
  CHECK_FALSE(parse_axiom_id("QW9").has_value());
  CHECK(parse_class_id("pre-w") == ClassId::PRE_W);
  CHECK(parse_class_id("iom") == ClassId::IOM);
  CHECK(parse_class_id("be") == ClassId::BE);
  CHECK_FALSE(parse_class_id("lattice").has_value());
}

TEST_CASE("reference witnesses") {
  const FiniteAlgebra prew = testing_support::prew6();
  const FiniteAlgebra iom = testing_support::iom6();
  const FiniteAlgebra qw = testing_support::qw6();

  const CheckOutcome qw2 = check_axiom(Model(prew), AxiomId::QW2);
  CHECK(qw2.status == Status::Fail);
  CHECK(*qw2.witness == els(prew, {"a", "0", "b"}));

  const CheckOutcome qw1 = check_axiom(Model(iom), AxiomId::QW1);
  CHECK(*qw1.witness == els(iom, {"d", "a"}));
  const CheckOutcome qw3 = check_axiom(Model(iom), AxiomId::QW3);
  CHECK(*qw3.witness == els(iom, {"a", "d"}));

  const CheckOutcome bck4 = check_axiom(Model(qw), AxiomId::BCK4);
  CHECK(*bck4.witness == els(qw, {"a", "c"}));

  for (const auto& a : testing_support::reference_algebras()) {
    CHECK(passes(Model(a), AxiomId::BE2));
  }
}

TEST_CASE("class membership of the reference algebras") {
  CHECK(check_class(Model(testing_support::qw6()), ClassId::QW).member);
  CHECK(check_class(Model(testing_support::prew6()), ClassId::PRE_W).member);
  CHECK(check_class(Model(testing_support::metaw6()), ClassId::META_W).member);
  const ClassOutcome iom = check_class(Model(testing_support::metaw6()), ClassId::IOM);
  CHECK_FALSE(iom.member);
  CHECK(iom.first_failure->axiom == AxiomId::QW2);
}

TEST_CASE("witnesses are least and re-falsify their formula") {
  auto models = testing_support::models_up_to(5);
  for (const auto& a : testing_support::reference_algebras()) models.emplace_back(a);
  for (const Model& m : models) {
    for (const auto& ax : axiom_catalogue()) {
      const CheckOutcome o = check_axiom(m, ax.id);
      if (o.status == Status::PrereqFailed) continue;
      const auto expected = least_failure(m.size(), ax.arity, [&](const std::vector<Elem>& t) {
        return axiom_holds_at(m, ax.id, t);
      });
      CHECK(o.witness == expected);
      CHECK(o.passed() == !expected.has_value());
    }
  }
}

TEST_CASE("axiom checks agree with direct evaluation") {
  for (const Model& m : testing_support::models_up_to(5)) {
    const oracle::Raw r = testing_support::to_raw(m.algebra());
    const int n = r.n;
    auto all2 = [&](auto f) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!f(x, y)) return false;
      return true;
    };
    auto all3 = [&](auto f) {
      for (int z = 0; z < n; ++z)
        if (!all2([&](int x, int y) { return f(x, y, z); })) return false;
      return true;
    };
    CHECK(passes(m, AxiomId::QW1) ==
          all2([&](int x, int y) { return r.imp[x][r.meet(x, y)] == r.imp[x][y]; }));
    CHECK(passes(m, AxiomId::QW2) == all3([&](int x, int y, int z) {
            return r.imp[x][r.meet(y, r.meet(z, x))] == r.meet(r.imp[x][y], r.imp[x][z]);
          }));
    CHECK(passes(m, AxiomId::QW3) ==
          all2([&](int x, int y) { return r.imp[r.meet(x, y)][r.meet(y, x)] == r.unit; }));
    CHECK(passes(m, AxiomId::COMMUTATIVE) ==
          all2([&](int x, int y) { return r.join(x, y) == r.join(y, x); }));
    CHECK(passes(m, AxiomId::PIMPL) ==
          all2([&](int x, int y) { return r.imp[r.imp[x][y]][x] == x; }));
  }
}

TEST_CASE("equivalent formulations agree on every involutive BE algebra up to size 6") {
  for (const Model& m : testing_support::models_up_to(6)) {
    const bool qw = passes(m, AxiomId::QW);
    const bool qw1 = passes(m, AxiomId::QW1);
    const bool qw2 = passes(m, AxiomId::QW2);
    const bool qw3 = passes(m, AxiomId::QW3);
    CHECK(qw == (qw1 && qw2));
    CHECK(qw3 == passes(m, AxiomId::QW3P));
    CHECK(qw2 == passes(m, AxiomId::QW2P));
    CHECK(passes(m, AxiomId::IOM) == passes(m, AxiomId::IOMP));
    CHECK(passes(m, AxiomId::IOM) == passes(m, AxiomId::IOMPP));
    CHECK(passes(m, AxiomId::IOM) == qw2);
    CHECK(qw == passes(m, AxiomId::PQMV));
    CHECK(qw1 == passes(m, AxiomId::PMV));
    CHECK(qw2 == passes(m, AxiomId::POM));
    CHECK(qw3 == passes(m, AxiomId::DELTA_M));
    CHECK(passes(m, AxiomId::PIMPL) == passes(m, AxiomId::M_PIMPL));
    // BCK1 is W2 with variables renamed; neither holds in every model.
    CHECK(passes(m, AxiomId::BCK1) == passes(m, AxiomId::W2));
    for (AxiomId id : {AxiomId::PU, AxiomId::PCOMM, AxiomId::PASS, AxiomId::M_L, AxiomId::M_RE,
                       AxiomId::S1, AxiomId::S2, AxiomId::S3, AxiomId::S4, AxiomId::S5,
                       AxiomId::S6, AxiomId::S7}) {
      INFO(to_string(id));
      CHECK(passes(m, id));
    }
  }
}

TEST_CASE("product-side axioms report a failed prerequisite on non-involutive input") {
  const FiniteAlgebra bad =
      FiniteAlgebra::from_rows({"0", "a", "1"}, 2, 0, {{2, 2, 2}, {0, 2, 2}, {0, 1, 2}});
  const Model m(bad);
  for (AxiomId id : {AxiomId::PQMV, AxiomId::POM, AxiomId::M_RE, AxiomId::G}) {
    const CheckOutcome o = check_axiom(m, id);
    CHECK(o.status == Status::PrereqFailed);
    CHECK(o.prereq == AxiomId::INVOLUTIVE);
    CHECK_FALSE(o.witness.has_value());
  }
  CHECK(check_axiom(m, AxiomId::INVOLUTIVE).status == Status::Fail);
  CHECK(check_class(m, ClassId::BOUNDED_BE).member);
  CHECK_FALSE(check_class(m, ClassId::INVOLUTIVE_BE).member);
}
