#include "qwlab/effect.hpp"

#include "qwlab/error.hpp"

namespace qwlab {

std::string_view to_string(EffectAxiom a) {
  switch (a) {
    case EffectAxiom::E1: return "E1";
    case EffectAxiom::E2: return "E2";
    case EffectAxiom::E3: return "E3";
    case EffectAxiom::E4: return "E4";
  }
  return "?";
}

PartialOpTable build_effect(const Model& m) {
  const ClassOutcome base = check_class(m, ClassId::INVOLUTIVE_BE);
  if (!base.member) {
    throw PreconditionError("effect view requires an involutive BE algebra; axiom " +
                            std::string(to_string(base.first_failure->axiom)) + " fails");
  }
  const int n = m.size();
  PartialOpTable p{n, m.zero(), m.unit(), Square<std::uint8_t>(n, 0), Square<Elem>(n, -1)};
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (m.leq_q(x, m.star(y))) {
        p.defined(x, y) = 1;
        p.value(x, y) = m.oplus(x, y);
      }
    }
  }
  return p;
}

namespace {

EffectOutcome fail(EffectAxiom a, std::vector<Elem> w, std::string kind) {
  return {a, Status::Fail, std::move(w), std::move(kind)};
}

EffectOutcome check_e1(const PartialOpTable& p) {
  for (Elem x = 0; x < p.size; ++x) {
    for (Elem y = 0; y < p.size; ++y) {
      if (p.is_defined(x, y) != p.is_defined(y, x)) {
        return fail(EffectAxiom::E1, {x, y}, "undefined where required");
      }
      if (p.is_defined(x, y) && p.at(x, y) != p.at(y, x)) {
        return fail(EffectAxiom::E1, {x, y}, "defined but unequal");
      }
    }
  }
  return {EffectAxiom::E1, Status::Pass, std::nullopt, {}};
}

// If y (+) z and x (+) (y (+) z) exist then x (+) y and (x (+) y) (+) z exist
// and the two sums agree.
EffectOutcome check_e2(const PartialOpTable& p) {
  for (Elem x = 0; x < p.size; ++x) {
    for (Elem y = 0; y < p.size; ++y) {
      for (Elem z = 0; z < p.size; ++z) {
        if (!p.is_defined(y, z)) continue;
        const Elem yz = p.at(y, z);
        if (!p.is_defined(x, yz)) continue;
        if (!p.is_defined(x, y) || !p.is_defined(p.at(x, y), z)) {
          return fail(EffectAxiom::E2, {x, y, z}, "undefined where required");
        }
        if (p.at(p.at(x, y), z) != p.at(x, yz)) {
          return fail(EffectAxiom::E2, {x, y, z}, "defined but unequal");
        }
      }
    }
  }
  return {EffectAxiom::E2, Status::Pass, std::nullopt, {}};
}

EffectOutcome check_e3(const PartialOpTable& p) {
  for (Elem x = 0; x < p.size; ++x) {
    std::vector<Elem> sup;
    for (Elem y = 0; y < p.size && sup.size() < 2; ++y) {
      if (p.is_defined(x, y) && p.at(x, y) == p.unit) sup.push_back(y);
    }
    if (sup.empty()) return fail(EffectAxiom::E3, {x}, "no supplement");
    if (sup.size() > 1) return fail(EffectAxiom::E3, {x, sup[0], sup[1]}, "not unique");
  }
  return {EffectAxiom::E3, Status::Pass, std::nullopt, {}};
}

EffectOutcome check_e4(const PartialOpTable& p) {
  for (Elem x = 0; x < p.size; ++x) {
    if (p.is_defined(x, p.unit) && x != p.zero) {
      return fail(EffectAxiom::E4, {x}, "sum with 1 defined for nonzero x");
    }
  }
  return {EffectAxiom::E4, Status::Pass, std::nullopt, {}};
}

}  // namespace

std::vector<EffectOutcome> check_effect_axioms(const PartialOpTable& p) {
  return {check_e1(p), check_e2(p), check_e3(p), check_e4(p)};
}

std::optional<Elem> orthosupplement(const PartialOpTable& p, Elem x) {
  std::optional<Elem> found;
  for (Elem y = 0; y < p.size; ++y) {
    if (p.is_defined(x, y) && p.at(x, y) == p.unit) {
      if (found) return std::nullopt;
      found = y;
    }
  }
  return found;
}

}  // namespace qwlab
