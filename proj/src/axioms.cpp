#include "qwlab/axioms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace qwlab {

namespace {

// Product-side view of an algebra: only the odot table, star and constants.
// Derived operations are recomputed from these so that product-side axioms
// never read the implication-side tables.
class ProductView {
 public:
  explicit ProductView(const FiniteAlgebra& a) : m_(phi_unchecked(a)) {}

  Elem one() const { return m_.unit(); }
  Elem zero() const { return m_.zero(); }
  Elem s(Elem x) const { return m_.star(x); }
  Elem p(Elem x, Elem y) const { return m_.prod(x, y); }
  Elem plus(Elem x, Elem y) const { return s(p(s(x), s(y))); }
  Elem join(Elem x, Elem y) const { return plus(p(x, s(y)), y); }
  Elem meet(Elem x, Elem y) const { return p(plus(x, s(y)), y); }

 private:
  MBEAlgebra m_;
};

struct Ctx {
  const Model& m;
  const ProductView* pv;

  Elem one() const { return m.unit(); }
  Elem zero() const { return m.zero(); }
  Elem i(Elem x, Elem y) const { return m.imp(x, y); }
  Elem s(Elem x) const { return m.star(x); }
  Elem j(Elem x, Elem y) const { return m.join(x, y); }
  Elem mt(Elem x, Elem y) const { return m.meet(x, y); }
  Elem o(Elem x, Elem y) const { return m.oplus(x, y); }
};

using Pred = bool (*)(const Ctx&, const Elem*);

struct Entry {
  AxiomInfo info;
  Pred holds;
};

// clang-format off
const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
    {{AxiomId::BE1, "BE1", "x -> x = 1", 1, false},
     [](const Ctx& c, const Elem* v) { return c.i(v[0], v[0]) == c.one(); }},
    {{AxiomId::BE2, "BE2", "x -> 1 = 1", 1, false},
     [](const Ctx& c, const Elem* v) { return c.i(v[0], c.one()) == c.one(); }},
    {{AxiomId::BE3, "BE3", "1 -> x = x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.i(c.one(), v[0]) == v[0]; }},
    {{AxiomId::BE4, "BE4", "x -> (y -> z) = y -> (x -> z)", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(v[0], c.i(v[1], v[2])) == c.i(v[1], c.i(v[0], v[2]));
     }},
    {{AxiomId::BOUNDED, "BOUNDED", "0 <= x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.i(c.zero(), v[0]) == c.one(); }},
    {{AxiomId::INVOLUTIVE, "INVOLUTIVE", "x** = x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.s(c.s(v[0])) == v[0]; }},
    {{AxiomId::BCK1, "BCK1", "(x -> y) -> ((y -> z) -> (x -> z)) = 1", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(c.i(v[0], v[1]), c.i(c.i(v[1], v[2]), c.i(v[0], v[2]))) == c.one();
     }},
    {{AxiomId::BCK4, "BCK4", "x -> y = 1, y -> x = 1 |- x = y", 2, false},
     [](const Ctx& c, const Elem* v) {
       return !(c.i(v[0], v[1]) == c.one() && c.i(v[1], v[0]) == c.one()) || v[0] == v[1];
     }},
    {{AxiomId::W1, "W1", "1 -> x = x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.i(c.one(), v[0]) == v[0]; }},
    {{AxiomId::W2, "W2", "(y -> z) -> ((z -> x) -> (y -> x)) = 1", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(c.i(v[1], v[2]), c.i(c.i(v[2], v[0]), c.i(v[1], v[0]))) == c.one();
     }},
    {{AxiomId::W3, "W3", "(x -> y) -> y = (y -> x) -> x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.j(v[0], v[1]) == c.j(v[1], v[0]); }},
    {{AxiomId::W4, "W4", "(x* -> y*) -> (y -> x) = 1", 2, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(c.i(c.s(v[0]), c.s(v[1])), c.i(v[1], v[0])) == c.one();
     }},
    {{AxiomId::COMMUTATIVE, "COMMUTATIVE", "x \\/ y = y \\/ x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.j(v[0], v[1]) == c.j(v[1], v[0]); }},
    {{AxiomId::PIMPL, "PIMPL", "(x -> y) -> x = x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.i(c.i(v[0], v[1]), v[0]) == v[0]; }},
    {{AxiomId::QW, "QW", "x -> ((x /\\ y) /\\ (z /\\ x)) = (x -> y) /\\ (x -> z)", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(v[0], c.mt(c.mt(v[0], v[1]), c.mt(v[2], v[0]))) ==
              c.mt(c.i(v[0], v[1]), c.i(v[0], v[2]));
     }},
    {{AxiomId::QW1, "QW1", "x -> (x /\\ y) = x -> y", 2, false},
     [](const Ctx& c, const Elem* v) { return c.i(v[0], c.mt(v[0], v[1])) == c.i(v[0], v[1]); }},
    {{AxiomId::QW2, "QW2", "x -> (y /\\ (z /\\ x)) = (x -> y) /\\ (x -> z)", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(v[0], c.mt(v[1], c.mt(v[2], v[0]))) == c.mt(c.i(v[0], v[1]), c.i(v[0], v[2]));
     }},
    {{AxiomId::QW2P, "QW2P", "x -> (y /\\ (x -> z)*) = (x -> y) /\\ (x -> (x -> z)*)", 3, false},
     [](const Ctx& c, const Elem* v) {
       const Elem w = c.s(c.i(v[0], v[2]));
       return c.i(v[0], c.mt(v[1], w)) == c.mt(c.i(v[0], v[1]), c.i(v[0], w));
     }},
    {{AxiomId::QW3, "QW3", "(x /\\ y) -> (y /\\ x) = 1", 2, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(c.mt(v[0], v[1]), c.mt(v[1], v[0])) == c.one();
     }},
    {{AxiomId::QW3P, "QW3P", "(x \\/ y) -> (y \\/ x) = 1", 2, false},
     [](const Ctx& c, const Elem* v) {
       return c.i(c.j(v[0], v[1]), c.j(v[1], v[0])) == c.one();
     }},
    {{AxiomId::IOM, "IOM", "x /\\ (x* -> y) = x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.mt(v[0], c.i(c.s(v[0]), v[1])) == v[0]; }},
    {{AxiomId::IOMP, "IOMP", "x /\\ (y -> x) = x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.mt(v[0], c.i(v[1], v[0])) == v[0]; }},
    {{AxiomId::IOMPP, "IOMPP", "x \\/ (x -> y)* = x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.j(v[0], c.s(c.i(v[0], v[1]))) == v[0]; }},

    {{AxiomId::PU, "PU", "1 (*) x = x = x (*) 1", 1, true},
     [](const Ctx& c, const Elem* v) {
       return c.pv->p(c.pv->one(), v[0]) == v[0] && c.pv->p(v[0], c.pv->one()) == v[0];
     }},
    {{AxiomId::PCOMM, "PCOMM", "x (*) y = y (*) x", 2, true},
     [](const Ctx& c, const Elem* v) { return c.pv->p(v[0], v[1]) == c.pv->p(v[1], v[0]); }},
    {{AxiomId::PASS, "PASS", "x (*) (y (*) z) = (x (*) y) (*) z", 3, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       return p.p(v[0], p.p(v[1], v[2])) == p.p(p.p(v[0], v[1]), v[2]);
     }},
    {{AxiomId::M_L, "M_L", "x (*) 0 = 0", 1, true},
     [](const Ctx& c, const Elem* v) { return c.pv->p(v[0], c.pv->zero()) == c.pv->zero(); }},
    {{AxiomId::M_RE, "M_RE", "x (*) x* = 0", 1, true},
     [](const Ctx& c, const Elem* v) {
       return c.pv->p(v[0], c.pv->s(v[0])) == c.pv->zero();
     }},
    {{AxiomId::PQMV, "PQMV", "x (*) ((x* \\/ y) \\/ (z \\/ x*)) = (x (*) y) \\/ (x (*) z)", 3, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       const Elem xs = p.s(v[0]);
       return p.p(v[0], p.join(p.join(xs, v[1]), p.join(v[2], xs))) ==
              p.join(p.p(v[0], v[1]), p.p(v[0], v[2]));
     }},
    {{AxiomId::PMV, "PMV", "x (*) (x* \\/ y) = x (*) y", 2, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       return p.p(v[0], p.join(p.s(v[0]), v[1])) == p.p(v[0], v[1]);
     }},
    {{AxiomId::POM, "POM", "x \\/ (x (*) y) = x", 2, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       return p.join(v[0], p.p(v[0], v[1])) == v[0];
     }},
    {{AxiomId::DELTA_M, "DELTA_M", "(x /\\ y) (*) (y /\\ x)* = 0", 2, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       return p.p(p.meet(v[0], v[1]), p.s(p.meet(v[1], v[0]))) == p.zero();
     }},
    {{AxiomId::M_PIMPL, "M_PIMPL", "((x (*) y*)* (*) x*)* = x", 2, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       return p.s(p.p(p.s(p.p(v[0], p.s(v[1]))), p.s(v[0]))) == v[0];
     }},
    {{AxiomId::G, "G", "x (*) x = x", 1, true},
     [](const Ctx& c, const Elem* v) { return c.pv->p(v[0], v[0]) == v[0]; }},
    {{AxiomId::M_PABS_I, "M_PABS_I", "x (*) (((x (+) x) (+) x) (+) y) = x", 2, true},
     [](const Ctx& c, const Elem* v) {
       const auto& p = *c.pv;
       const Elem x = v[0];
       return p.p(x, p.plus(p.plus(p.plus(x, x), x), v[1])) == x;
     }},

    {{AxiomId::S1, "S1", "x (+) y = y (+) x", 2, false},
     [](const Ctx& c, const Elem* v) { return c.o(v[0], v[1]) == c.o(v[1], v[0]); }},
    {{AxiomId::S2, "S2", "x (+) (y (+) z) = (x (+) y) (+) z", 3, false},
     [](const Ctx& c, const Elem* v) {
       return c.o(v[0], c.o(v[1], v[2])) == c.o(c.o(v[0], v[1]), v[2]);
     }},
    {{AxiomId::S3, "S3", "x (+) x* = 1", 1, false},
     [](const Ctx& c, const Elem* v) { return c.o(v[0], c.s(v[0])) == c.one(); }},
    {{AxiomId::S4, "S4", "x (+) 0 = x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.o(v[0], c.zero()) == v[0]; }},
    {{AxiomId::S5, "S5", "x** = x", 1, false},
     [](const Ctx& c, const Elem* v) { return c.s(c.s(v[0])) == v[0]; }},
    {{AxiomId::S6, "S6", "0* = 1", 0, false},
     [](const Ctx& c, const Elem*) { return c.s(c.zero()) == c.one(); }},
    {{AxiomId::S7, "S7", "x (+) 1 = 1", 1, false},
     [](const Ctx& c, const Elem* v) { return c.o(v[0], c.one()) == c.one(); }},
  };
  return table;
}
// clang-format on

const Entry& entry(AxiomId id) {
  const auto& t = entries();
  const auto idx = static_cast<std::size_t>(id);
  if (idx >= t.size() || t[idx].info.id != id) throw std::invalid_argument("unknown axiom id");
  return t[idx];
}

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 1);
  for (char ch : text) {
    if (ch == '-' || ch == ' ') ch = '_';
    if (ch == '\'') {
      out += 'P';
      continue;
    }
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return out;
}

// Odometer over n^k tuples in lexicographic order; calls fn until it
// returns false. Returns true when fn never returned false.
template <class Fn>
bool for_each_tuple(int n, int k, Fn&& fn) {
  std::array<Elem, 8> v{};
  while (true) {
    if (!fn(v.data())) return false;
    int pos = k - 1;
    while (pos >= 0 && ++v[pos] == n) v[pos--] = 0;
    if (pos < 0) return true;
  }
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::PrereqFailed:
      return "PREREQ_FAILED";
  }
  return "?";
}

const std::vector<AxiomInfo>& axiom_catalogue() {
  static const std::vector<AxiomInfo> infos = [] {
    std::vector<AxiomInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const AxiomInfo& info(AxiomId id) { return entry(id).info; }

std::string_view to_string(AxiomId id) { return entry(id).info.name; }

std::optional<AxiomId> parse_axiom_id(std::string_view text) {
  const std::string key = normalize(text);
  for (const auto& e : entries()) {
    if (e.info.name == key) return e.info.id;
  }
  return std::nullopt;
}

const std::vector<ClassId>& all_classes() {
  static const std::vector<ClassId> v = {
      ClassId::BE,          ClassId::BOUNDED_BE,     ClassId::INVOLUTIVE_BE, ClassId::QW,
      ClassId::PRE_W,       ClassId::META_W,         ClassId::IOM,           ClassId::WAJSBERG,
      ClassId::IMPLICATIVE, ClassId::IOM_LATTICE,    ClassId::QMV,           ClassId::PRE_MV,
      ClassId::META_MV,     ClassId::OM_ALG,         ClassId::OM_SOFTLATTICE,
      ClassId::OM_WIDELATTICE,
  };
  return v;
}

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::BE: return "BE";
    case ClassId::BOUNDED_BE: return "BOUNDED_BE";
    case ClassId::INVOLUTIVE_BE: return "INVOLUTIVE_BE";
    case ClassId::QW: return "QW";
    case ClassId::PRE_W: return "PRE_W";
    case ClassId::META_W: return "META_W";
    case ClassId::IOM: return "IOM";
    case ClassId::WAJSBERG: return "WAJSBERG";
    case ClassId::IMPLICATIVE: return "IMPLICATIVE";
    case ClassId::IOM_LATTICE: return "IOM_LATTICE";
    case ClassId::QMV: return "QMV";
    case ClassId::PRE_MV: return "PRE_MV";
    case ClassId::META_MV: return "META_MV";
    case ClassId::OM_ALG: return "OM_ALG";
    case ClassId::OM_SOFTLATTICE: return "OM_SOFTLATTICE";
    case ClassId::OM_WIDELATTICE: return "OM_WIDELATTICE";
  }
  return "?";
}

std::optional<ClassId> parse_class_id(std::string_view text) {
  const std::string key = normalize(text);
  for (ClassId c : all_classes()) {
    if (to_string(c) == key) return c;
  }
  // Short spellings accepted on the command line.
  if (key == "PREW") return ClassId::PRE_W;
  if (key == "METAW") return ClassId::META_W;
  if (key == "W") return ClassId::WAJSBERG;
  if (key == "INVOLUTIVE") return ClassId::INVOLUTIVE_BE;
  if (key == "BOUNDED") return ClassId::BOUNDED_BE;
  return std::nullopt;
}

const std::vector<AxiomId>& class_axioms(ClassId id) {
  using A = AxiomId;
  static const std::vector<A> be = {A::BE1, A::BE2, A::BE3, A::BE4};
  static const std::vector<A> bounded = {A::BE1, A::BE2, A::BE3, A::BE4, A::BOUNDED};
  static const std::vector<A> base = {A::BE1, A::BE2, A::BE3, A::BE4, A::BOUNDED, A::INVOLUTIVE};
  static const auto with = [](std::initializer_list<A> extra) {
    std::vector<A> v = base;
    v.insert(v.end(), extra);
    return v;
  };
  // Involutive m-BE structure on the odot-image precedes each product-side
  // defining axiom.
  static const auto with_m = [](std::initializer_list<A> extra) {
    std::vector<A> v = base;
    v.insert(v.end(), {A::PU, A::PCOMM, A::PASS, A::M_L, A::M_RE});
    v.insert(v.end(), extra);
    return v;
  };
  static const std::vector<A> qw = with({A::QW1, A::QW2});
  static const std::vector<A> pre_w = with({A::QW1});
  static const std::vector<A> meta_w = with({A::QW3});
  static const std::vector<A> iom = with({A::QW2});
  static const std::vector<A> wajsberg = with({A::COMMUTATIVE});
  static const std::vector<A> implicative = with({A::PIMPL});
  static const std::vector<A> iom_lattice = with({A::QW2, A::PIMPL});
  static const std::vector<A> qmv = with_m({A::PQMV});
  static const std::vector<A> pre_mv = with_m({A::PMV});
  static const std::vector<A> meta_mv = with_m({A::DELTA_M});
  static const std::vector<A> om_alg = with_m({A::POM});
  static const std::vector<A> om_soft = with_m({A::POM, A::G});
  static const std::vector<A> om_wide = with_m({A::POM, A::M_PABS_I});
  switch (id) {
    case ClassId::BE: return be;
    case ClassId::BOUNDED_BE: return bounded;
    case ClassId::INVOLUTIVE_BE: return base;
    case ClassId::QW: return qw;
    case ClassId::PRE_W: return pre_w;
    case ClassId::META_W: return meta_w;
    case ClassId::IOM: return iom;
    case ClassId::WAJSBERG: return wajsberg;
    case ClassId::IMPLICATIVE: return implicative;
    case ClassId::IOM_LATTICE: return iom_lattice;
    case ClassId::QMV: return qmv;
    case ClassId::PRE_MV: return pre_mv;
    case ClassId::META_MV: return meta_mv;
    case ClassId::OM_ALG: return om_alg;
    case ClassId::OM_SOFTLATTICE: return om_soft;
    case ClassId::OM_WIDELATTICE: return om_wide;
  }
  throw std::invalid_argument("unknown class id");
}

CheckOutcome check_axiom(const Model& m, AxiomId id) {
  const Entry& e = entry(id);
  std::optional<ProductView> pv;
  if (e.info.product_side) {
    const Ctx plain{m, nullptr};
    const bool involutive = for_each_tuple(m.size(), 1, [&](const Elem* v) {
      return entry(AxiomId::INVOLUTIVE).holds(plain, v);
    });
    if (!involutive) return {id, Status::PrereqFailed, std::nullopt, AxiomId::INVOLUTIVE};
    pv.emplace(m.algebra());
  }
  const Ctx ctx{m, pv ? &*pv : nullptr};
  std::vector<Elem> witness;
  const bool ok = for_each_tuple(m.size(), e.info.arity, [&](const Elem* v) {
    if (e.holds(ctx, v)) return true;
    witness.assign(v, v + e.info.arity);
    return false;
  });
  if (ok) return {id, Status::Pass, std::nullopt, std::nullopt};
  return {id, Status::Fail, std::move(witness), std::nullopt};
}

bool axiom_holds_at(const Model& m, AxiomId id, std::span<const Elem> values) {
  const Entry& e = entry(id);
  if (static_cast<int>(values.size()) != e.info.arity) {
    throw std::invalid_argument("axiom " + std::string(e.info.name) + " takes " +
                                std::to_string(e.info.arity) + " values");
  }
  for (Elem v : values) {
    if (v < 0 || v >= m.size()) throw std::out_of_range("element index out of range");
  }
  std::optional<ProductView> pv;
  if (e.info.product_side) pv.emplace(m.algebra());
  const Ctx ctx{m, pv ? &*pv : nullptr};
  std::array<Elem, 8> buf{};
  std::copy(values.begin(), values.end(), buf.begin());
  return e.holds(ctx, buf.data());
}

ClassOutcome check_class(const Model& m, ClassId id) {
  for (AxiomId a : class_axioms(id)) {
    CheckOutcome out = check_axiom(m, a);
    if (!out.passed()) return {id, false, std::move(out)};
  }
  return {id, true, std::nullopt};
}

}  // namespace qwlab
