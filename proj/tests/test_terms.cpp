#include <doctest.h>

#include <random>

#include "qwlab/error.hpp"
#include "qwlab/fixtures.hpp"
#include "qwlab/terms.hpp"
#include "support.hpp"

using namespace qwlab;
using testing_support::el;

namespace {

Term random_term(std::mt19937& rng, int depth) {
  static const char* vars[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 10);
  const int k = pick(rng);
  if (k <= 2) return Term::var(vars[k]);
  if (k == 3) return Term::zero();
  if (k == 4) return Term::one();
  if (k == 5) return Term::star(random_term(rng, depth - 1));
  return Term::bin(static_cast<BinOp>(k - 6), random_term(rng, depth - 1),
                   random_term(rng, depth - 1));
}

// Statement truth by plain nested loops over eval, the reference for the
// compiled checker.
bool holds_everywhere(const Model& m, const Statement& s) {
  const auto vars = free_variables(s);
  std::vector<Elem> vals(vars.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == vars.size()) {
      Env env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = vals[i];
      for (const auto& p : s.premises) {
        if (!holds(m, p, env)) return true;
      }
      return holds(m, s.conclusion, env);
    }
    for (Elem v = 0; v < m.size(); ++v) {
      vals[k] = v;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("parsing identities and quasi-identities") {
  const Statement w3 = parse_statement("(x -> y) -> y = (y -> x) -> x");
  CHECK(w3.premises.empty());
  CHECK(w3.conclusion.rel == Relation::Eq);
  CHECK(free_variables(w3) == std::vector<std::string>{"x", "y"});

  const Statement q = parse_statement("x <=Q y |- (y -> x) ⊙ y = x");
  REQUIRE(q.premises.size() == 1);
  CHECK(q.premises[0].rel == Relation::LeqQ);
  CHECK(q.conclusion.lhs.op == BinOp::Odot);

  const Statement be4 = parse_statement("x -> (y -> z) = y -> (x -> z)");
  CHECK(be4.conclusion.lhs == parse_term("x -> y -> z"));
}

TEST_CASE("operator precedence and associativity") {
  CHECK(parse_term("x -> y -> z") == Term::bin(BinOp::Imp, Term::var("x"),
                                                Term::bin(BinOp::Imp, Term::var("y"),
                                                          Term::var("z"))));
  CHECK(parse_term("x /\\ y /\\ z") ==
        Term::bin(BinOp::Meet, Term::bin(BinOp::Meet, Term::var("x"), Term::var("y")),
                  Term::var("z")));
  CHECK(parse_term("x* -> y") ==
        Term::bin(BinOp::Imp, Term::star(Term::var("x")), Term::var("y")));
  CHECK(parse_term("x /\\ y -> z").op == BinOp::Imp);
  CHECK(parse_term("(x \\/ y)**") == Term::star(Term::star(parse_term("x \\/ y"))));
}

TEST_CASE("alternative spellings") {
  CHECK(parse_term("x meet y") == parse_term("x /\\ y"));
  CHECK(parse_term("x ⋒ y") == parse_term("x /\\ y"));
  CHECK(parse_term("x ⊓ y") == parse_term("x /\\ y"));
  CHECK(parse_term("x join y") == parse_term("x \\/ y"));
  CHECK(parse_term("x ⊔ y") == parse_term("x ⊎ y"));
  CHECK(parse_term("x odot y") == parse_term("x (*) y"));
  CHECK(parse_term("x oplus y") == parse_term("x ⊕ y"));
  CHECK(parse_term("x → y") == parse_term("x -> y"));
  CHECK(parse_term("star(x -> y)") == parse_term("(x -> y)*"));
  CHECK(parse_statement("x ≤ y ⊢ x ≤_Q y") == parse_statement("x <= y |- x <=Q y"));
  // Q followed by identifier characters is a variable, not a relation suffix.
  CHECK(parse_statement("x <= Qz").conclusion.rhs == Term::var("Qz"));
}

TEST_CASE("syntax errors carry positions") {
  auto position = [](const char* text) {
    try {
      parse_statement(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(position("x /\\ y \\/ z = x") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(position("x % y = x") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(position("x -> = y") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(position("x = y\n  = z") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(position("(x = y") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("x, y = y") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK_THROWS_AS(parse_statement("x = y, y = x"), ParseError);
  CHECK_THROWS_AS(parse_term("12"), ParseError);
}

TEST_CASE("rendering reparses to the same tree") {
  for (const auto& g : all_fixtures()) {
    for (const auto& item : g.items) {
      CHECK(parse_statement(render(item.statement)) == item.statement);
    }
  }
  std::mt19937 rng(20241018);
  for (int i = 0; i < 500; ++i) {
    const Term t = random_term(rng, 5);
    CHECK(parse_term(render(t)) == t);
  }
}

TEST_CASE("evaluation") {
  const FiniteAlgebra a = testing_support::qw6();
  const Model m(a);
  CHECK(eval(m, parse_term("x -> y"), {{"x", el(a, "a")}, {"y", el(a, "b")}}) == el(a, "c"));
  CHECK(eval(m, parse_term("x /\\ y"), {{"x", el(a, "b")}, {"y", el(a, "c")}}) == el(a, "b"));
  CHECK(eval(m, parse_term("1"), {}) == a.unit());
  CHECK_THROWS_AS(eval(m, parse_term("x -> w"), {{"x", 0}}), EvaluationError);
}

TEST_CASE("evaluation is compositional") {
  std::mt19937 rng(7);
  const auto models = testing_support::models_up_to(5);
  for (int i = 0; i < 300; ++i) {
    const Model& m = models[rng() % models.size()];
    const Term t = random_term(rng, 4);
    Env env{{"x", static_cast<Elem>(rng() % m.size())},
            {"y", static_cast<Elem>(rng() % m.size())},
            {"z", static_cast<Elem>(rng() % m.size())}};
    if (t.kind == TermKind::Bin) {
      const Elem l = eval(m, t.args[0], env), r = eval(m, t.args[1], env);
      const Elem expect = t.op == BinOp::Imp    ? m.imp(l, r)
                          : t.op == BinOp::Join ? m.join(l, r)
                          : t.op == BinOp::Meet ? m.meet(l, r)
                          : t.op == BinOp::Odot ? m.odot(l, r)
                                                : m.oplus(l, r);
      CHECK(eval(m, t, env) == expect);
    } else if (t.kind == TermKind::Star) {
      CHECK(eval(m, t, env) == m.star(eval(m, t.args[0], env)));
    }
  }
}

TEST_CASE("statement checking") {
  const FiniteAlgebra qw = testing_support::qw6();
  const StatementOutcome w3 = check_statement(Model(qw), parse_statement("(x -> y) -> y = (y -> x) -> x"));
  CHECK(w3.status == Status::Fail);
  CHECK(*w3.witness == testing_support::els(qw, {"a", "c"}));

  const Model iom(testing_support::iom6());
  CHECK(check_statement(iom, parse_statement("x <=Q y |- (y -> x) -> x = y")).status == Status::Pass);
  for (const auto& a : testing_support::reference_algebras()) {
    CHECK(check_statement(Model(a), parse_statement("x** = x")).status == Status::Pass);
  }
  // Closed statements quantify over nothing.
  CHECK(check_statement(iom, parse_statement("0* = 1")).status == Status::Pass);
  CHECK(check_statement(iom, parse_statement("0 = 1")).witness == std::vector<Elem>{});
}

TEST_CASE("compiled checker agrees with nested-loop evaluation") {
  std::mt19937 rng(99);
  const auto models = testing_support::models_up_to(4);
  for (int i = 0; i < 200; ++i) {
    Statement s;
    s.conclusion = {static_cast<Relation>(rng() % 3), random_term(rng, 3), random_term(rng, 3)};
    if (i % 3 == 0) s.premises.push_back({Relation::LeqQ, Term::var("x"), Term::var("y")});
    for (const Model& m : models) {
      CHECK((check_statement(m, s).status == Status::Pass) == holds_everywhere(m, s));
    }
  }
}
