#include "qwlab/center.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwlab {

bool commutes(const Model& m, Elem x, Elem y) {
  return m.join_at(x, y) == m.join_at(y, x);
}

namespace {

bool is_iom(const Model& m) { return check_class(m, ClassId::IOM).member; }

template <class Op>
ClosureCheck closed_binary(const char* name, const std::vector<Elem>& z,
                           const std::vector<bool>& in, Op op) {
  ClosureCheck c{name, true, std::nullopt};
  for (Elem x : z) {
    for (Elem y : z) {
      if (!in[op(x, y)]) {
        c.holds = false;
        c.witness = std::vector<Elem>{x, y};
        return c;
      }
    }
  }
  return c;
}

}  // namespace

CenterResult center(const Model& m) {
  const int n = m.size();
  CenterResult r;
  r.commute = Square<std::uint8_t>(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) r.commute(x, y) = m.join(x, y) == m.join(y, x);
  }
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Elem x = 0; x < n; ++x) {
    bool all = true;
    for (Elem y = 0; y < n && all; ++y) all = r.commute(x, y) != 0;
    if (all) {
      r.center.push_back(x);
      in[x] = true;
    }
  }

  if (!is_iom(m)) {
    r.subalgebra = Status::PrereqFailed;
    return r;
  }

  const auto& z = r.center;
  r.closure.push_back({"0", in[m.zero()], std::nullopt});
  r.closure.push_back({"1", in[m.unit()], std::nullopt});
  {
    ClosureCheck c{"*", true, std::nullopt};
    for (Elem x : z) {
      if (!in[m.star(x)]) {
        c.holds = false;
        c.witness = std::vector<Elem>{x};
        break;
      }
    }
    r.closure.push_back(c);
  }
  r.closure.push_back(closed_binary("->", z, in, [&](Elem x, Elem y) { return m.imp(x, y); }));
  r.closure.push_back(closed_binary("join", z, in, [&](Elem x, Elem y) { return m.join(x, y); }));
  r.closure.push_back(closed_binary("meet", z, in, [&](Elem x, Elem y) { return m.meet(x, y); }));

  const bool closed = std::all_of(r.closure.begin(), r.closure.end(),
                                  [](const ClosureCheck& c) { return c.holds; });
  if (r.closure[0].holds && r.closure[1].holds && r.closure[3].holds) {
    const int k = static_cast<int>(z.size());
    std::vector<Elem> local(static_cast<std::size_t>(n), -1);
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) {
      local[z[i]] = i;
      names.push_back(m.algebra().name(z[i]));
    }
    Square<Elem> imp(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) imp(i, j) = local[m.imp(z[i], z[j])];
    }
    r.restriction.emplace(std::move(names), local[m.unit()], local[m.zero()], std::move(imp));
    const Model sub(*r.restriction);
    for (AxiomId id : {AxiomId::W1, AxiomId::W2, AxiomId::W3, AxiomId::W4}) {
      CheckOutcome o = check_axiom(sub, id);
      if (o.witness) {
        for (Elem& e : *o.witness) e = z[e];
      }
      r.wajsberg.push_back(std::move(o));
    }
  }
  const bool wajsberg = r.restriction &&
                        std::all_of(r.wajsberg.begin(), r.wajsberg.end(),
                                    [](const CheckOutcome& o) { return o.passed(); });
  r.subalgebra = closed && wajsberg ? Status::Pass : Status::Fail;
  return r;
}

CommutationReport check_commutation_equivalences(const Model& m) {
  CommutationReport r;
  if (!is_iom(m)) {
    r.status = Status::PrereqFailed;
    return r;
  }
  const int n = m.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const bool a = m.join(x, y) == m.join(y, x);
      const bool b = m.meet(x, y) == m.meet(y, x);
      const bool c = m.imp(m.imp(x, y), m.meet(x, y)) == x;
      if (a != b || b != c) r.violations.push_back({x, y, a, b, c});
    }
  }
  r.status = r.violations.empty() ? Status::Pass : Status::Fail;
  return r;
}

}  // namespace qwlab
