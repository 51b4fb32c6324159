#include <doctest.h>

#include "qwlab/algebra.hpp"
#include "qwlab/error.hpp"
#include "support.hpp"

using namespace qwlab;
using testing_support::el;

TEST_CASE("derived operations on the six-element quantum-Wajsberg algebra") {
  const FiniteAlgebra a = testing_support::qw6();
  const Model m(a);
  CHECK(m.star(el(a, "a")) == el(a, "d"));
  CHECK(m.star(a.zero()) == a.unit());
  CHECK(m.star(a.unit()) == a.zero());
  CHECK(m.join(el(a, "a"), el(a, "c")) == el(a, "c"));
  CHECK(m.join(el(a, "c"), el(a, "a")) == el(a, "a"));
  CHECK(m.meet(el(a, "b"), el(a, "c")) == el(a, "b"));
}

TEST_CASE("meet of d and a is zero in the implicative-orthomodular example") {
  const FiniteAlgebra a = testing_support::iom6();
  CHECK(Model(a).meet(el(a, "d"), el(a, "a")) == a.zero());
}

TEST_CASE("derived tables agree with the brute-force definitions") {
  for (const Model& m : testing_support::models_up_to(5)) {
    const oracle::Raw raw = testing_support::to_raw(m.algebra());
    for (Elem x = 0; x < m.size(); ++x) {
      CHECK(m.star(x) == raw.star(x));
      for (Elem y = 0; y < m.size(); ++y) {
        CHECK(m.join(x, y) == raw.join(x, y));
        CHECK(m.meet(x, y) == raw.meet(x, y));
        CHECK(m.odot(x, y) == raw.star(raw.imp[x][raw.star(y)]));
        CHECK(m.oplus(x, y) == raw.imp[raw.star(x)][y]);
        CHECK(m.leq(x, y) == (raw.imp[x][y] == raw.unit));
        CHECK(m.leq_q(x, y) == (raw.meet(x, y) == x));
      }
    }
  }
}

TEST_CASE("order and lattice-like laws on every small involutive BE algebra") {
  for (const Model& m : testing_support::models_up_to(5)) {
    const Elem one = m.unit(), zero = m.zero();
    for (Elem x = 0; x < m.size(); ++x) {
      CHECK(m.meet(x, one) == x);
      CHECK(m.meet(one, x) == x);
      CHECK(m.meet(x, zero) == zero);
      CHECK(m.meet(zero, x) == zero);
      CHECK(m.oplus(x, m.star(x)) == one);
      CHECK(m.leq_q(x, x));
      for (Elem y = 0; y < m.size(); ++y) {
        CHECK(m.join(x, y) == m.star(m.meet(m.star(x), m.star(y))));
        CHECK(m.meet(x, y) == m.star(m.join(m.star(x), m.star(y))));
        // Meet rebuilt from the total supplement and the product.
        CHECK(m.odot(m.oplus(x, m.star(y)), y) == m.meet(x, y));
        if (m.leq_q(x, y)) CHECK(m.leq(x, y));
        if (x != y && m.leq_q(x, y)) CHECK_FALSE(m.leq_q(y, x));
      }
    }
  }
}

TEST_CASE("derive_ops is deterministic") {
  const FiniteAlgebra a = testing_support::prew6();
  CHECK(derive_ops(a) == derive_ops(a));
}

TEST_CASE("product transform on the quantum-Wajsberg example") {
  const FiniteAlgebra a = testing_support::qw6();
  const MBEAlgebra p = phi_to_mbe(a);
  CHECK(p.prod(el(a, "a"), el(a, "b")) == a.zero());
  for (Elem x = 0; x < a.size(); ++x) CHECK(p.prod(x, a.unit()) == x);
  CHECK(psi_to_be(p) == a);
}

TEST_CASE("the two transforms are mutually inverse") {
  for (const Model& m : testing_support::models_up_to(5)) {
    const MBEAlgebra p = phi_to_mbe(m.algebra());
    CHECK(psi_to_be(p) == m.algebra());
    CHECK(phi_to_mbe(psi_to_be(p)) == p);
  }
  const FiniteAlgebra one({"1"}, 0, 0, Square<Elem>(1, 0));
  CHECK(psi_to_be(phi_to_mbe(one)).size() == 1);
}

TEST_CASE("well-formedness is enforced at construction") {
  SUBCASE("out-of-range entry names the cell") {
    try {
      FiniteAlgebra::from_rows({"0", "1"}, 1, 0, {{1, 1}, {7, 1}});
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("(1, 0)") != std::string::npos);
    }
  }
  SUBCASE("duplicate names") {
    CHECK_THROWS_AS(FiniteAlgebra::from_rows({"a", "a"}, 1, 0, {{1, 1}, {0, 1}}),
                    ValidationError);
  }
  SUBCASE("unit and zero must differ on larger carriers") {
    CHECK_THROWS_AS(FiniteAlgebra::from_rows({"0", "1"}, 1, 1, {{1, 1}, {0, 1}}),
                    ValidationError);
  }
  SUBCASE("ragged rows") {
    CHECK_THROWS_AS(FiniteAlgebra::from_rows({"0", "1"}, 1, 0, {{1, 1}, {0}}), ValidationError);
  }
  SUBCASE("range-checked accessors") {
    const Model m(testing_support::qw6());
    CHECK_THROWS_AS(m.meet_at(0, 6), std::out_of_range);
    CHECK_THROWS_AS(m.star_at(-1), std::out_of_range);
    CHECK(m.meet_at(0, 5) == 0);
  }
}

TEST_CASE("transforms refuse inputs outside their domain") {
  // 0 -> x = 1, a* = 0, so a** = 1 != a.
  const FiniteAlgebra bad =
      FiniteAlgebra::from_rows({"0", "a", "1"}, 2, 0, {{2, 2, 2}, {0, 2, 2}, {0, 1, 2}});
  try {
    phi_to_mbe(bad);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("INVOLUTIVE") != std::string::npos);
  }
  const MBEAlgebra p({"0", "a", "1"}, 2, 0, Square<Elem>(3, 0), {2, 2, 0});
  CHECK_THROWS_AS(psi_to_be(p), PreconditionError);
}
