#include "qwlab/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "qwlab/center.hpp"
#include "qwlab/error.hpp"

namespace qwlab {

const ClassOutcome& ClassificationReport::outcome(ClassId id) const {
  for (const auto& c : classes) {
    if (c.cls == id) return c;
  }
  throw std::out_of_range("class not present in report");
}

namespace {

struct Arrow {
  ClassId from;
  ClassId to;
};

// Inclusions that must hold on every algebra, by definition or by theorem.
constexpr Arrow kArrows[] = {
    {ClassId::QW, ClassId::PRE_W},           {ClassId::QW, ClassId::IOM},
    {ClassId::PRE_W, ClassId::META_W},       {ClassId::QW, ClassId::META_W},
    {ClassId::WAJSBERG, ClassId::QW},        {ClassId::IOM_LATTICE, ClassId::IOM},
    {ClassId::INVOLUTIVE_BE, ClassId::BOUNDED_BE}, {ClassId::BOUNDED_BE, ClassId::BE},
    {ClassId::QMV, ClassId::QW},             {ClassId::QW, ClassId::QMV},
    {ClassId::PRE_MV, ClassId::PRE_W},       {ClassId::PRE_W, ClassId::PRE_MV},
    {ClassId::META_MV, ClassId::META_W},     {ClassId::META_W, ClassId::META_MV},
    {ClassId::OM_ALG, ClassId::IOM},         {ClassId::IOM, ClassId::OM_ALG},
    {ClassId::OM_SOFTLATTICE, ClassId::OM_ALG}, {ClassId::OM_WIDELATTICE, ClassId::OM_ALG},
};

// Closed conditions characterizing Wajsberg algebras among IOM algebras.
bool join_absorbs_and_cancels(const Model& m) {
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem y = 0; y < m.size(); ++y) {
      if (!m.leq_q(x, m.join(x, y))) return false;
      if (m.imp(m.join(x, y), x) != m.imp(y, x)) return false;
    }
  }
  return true;
}

bool leq_equals_leq_q(const Model& m) { return m.ops().leq == m.ops().leq_q; }

}  // namespace

ClassificationReport classify(const Model& m) {
  ClassificationReport r;
  for (ClassId c : all_classes()) r.classes.push_back(check_class(m, c));
  r.leq_antisymmetric = check_axiom(m, AxiomId::BCK4).passed();
  r.implicative = check_axiom(m, AxiomId::PIMPL).passed();
  r.commutative = check_axiom(m, AxiomId::COMMUTATIVE).passed();

  for (const Arrow& a : kArrows) {
    if (r.member(a.from) && !r.member(a.to)) {
      r.inconsistencies.push_back(std::string(to_string(a.from)) + " member but not " +
                                  std::string(to_string(a.to)));
    }
  }
  if (r.implicative && r.member(ClassId::INVOLUTIVE_BE)) {
    const bool iom = r.member(ClassId::IOM);
    if (iom != r.member(ClassId::QW) || iom != r.member(ClassId::PRE_W)) {
      r.inconsistencies.push_back("implicative but IOM, QW, PRE_W disagree");
    }
  }
  return r;
}

MetaTheoremReport verify_meta_theorems(std::span<const Model> models) {
  MetaTheoremReport rep;
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (!check_class(models[i], ClassId::INVOLUTIVE_BE).member) {
      throw PreconditionError("model " + std::to_string(i) +
                              " is not an involutive BE algebra");
    }
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    const Model& m = models[i];
    const ClassificationReport c = classify(m);
    const bool qw = c.member(ClassId::QW);
    const bool pre_w = c.member(ClassId::PRE_W);
    const bool meta_w = c.member(ClassId::META_W);
    const bool iom = c.member(ClassId::IOM);
    const bool w = c.member(ClassId::WAJSBERG);
    const bool anti = c.leq_antisymmetric;

    auto expect = [&](bool holds, const char* what) {
      ++rep.assertions_checked;
      if (!holds) rep.violations.push_back({i, what});
    };
    for (const auto& msg : c.inconsistencies) {
      rep.violations.push_back({i, "inclusion order: " + msg});
    }
    expect(!pre_w || meta_w, "PRE_W implies META_W");
    expect(!qw || meta_w, "QW implies META_W");
    expect(!iom || (qw == meta_w), "within IOM, QW iff META_W");
    if (c.implicative) {
      expect(iom == qw && qw == pre_w, "implicative: IOM iff QW iff PRE_W");
      expect(!iom || meta_w, "implicative: IOM implies META_W");
    }
    expect(!w || (qw && pre_w && iom && meta_w), "WAJSBERG implies QW, PRE_W, IOM, META_W");
    if (pre_w) expect(w == anti, "within PRE_W, WAJSBERG iff <= antisymmetric");
    if (meta_w) expect(w == anti, "within META_W, WAJSBERG iff <= antisymmetric");
    if (qw) expect(w == anti, "within QW, WAJSBERG iff <= antisymmetric");
    if (pre_w) {
      bool leq_gives_leq_q = true;
      for (Elem x = 0; x < m.size() && leq_gives_leq_q; ++x) {
        for (Elem y = 0; y < m.size(); ++y) {
          if (m.leq(x, y) && !m.leq_q(x, y)) {
            leq_gives_leq_q = false;
            break;
          }
        }
      }
      expect(w == leq_gives_leq_q, "within PRE_W, WAJSBERG iff <= implies <=Q");
    }
    if (iom) {
      expect(w == join_absorbs_and_cancels(m),
             "within IOM, WAJSBERG iff x <=Q x join y and (x join y) -> x = y -> x");
    }
    expect(!w || leq_equals_leq_q(m), "WAJSBERG implies <= equals <=Q");
    if (qw) {
      expect(w == center(m).is_whole_carrier(), "within QW, WAJSBERG iff center is everything");
    }
    ++rep.models_checked;
  }
  return rep;
}

}  // namespace qwlab
