#include "qwlab/algebra.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwlab/axioms.hpp"
#include "qwlab/error.hpp"

namespace qwlab {

namespace {

void validate_carrier(const std::vector<std::string>& names, Elem unit, Elem zero, int n,
                      const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + ": carrier must be nonempty");
  if (static_cast<int>(names.size()) != n) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(n) +
                          " element names, got " + std::to_string(names.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) throw ValidationError(std::string(what) + ": empty element name");
    if (!seen.insert(name).second) {
      throw ValidationError(std::string(what) + ": duplicate element name '" + name + "'");
    }
  }
  if (unit < 0 || unit >= n) throw ValidationError(std::string(what) + ": unit out of range");
  if (zero < 0 || zero >= n) throw ValidationError(std::string(what) + ": zero out of range");
  if (n > 1 && unit == zero) {
    throw ValidationError(std::string(what) + ": unit and zero coincide on a carrier of size " +
                          std::to_string(n));
  }
}

void validate_table(const Square<Elem>& t, const std::vector<std::string>& names,
                    const char* what) {
  const int n = t.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem v = t(x, y);
      if (v < 0 || v >= n) {
        throw ValidationError(std::string(what) + ": cell (" + names[x] + ", " + names[y] +
                              ") holds out-of-range index " + std::to_string(v));
      }
    }
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> names, Elem unit, Elem zero,
                             Square<Elem> imp)
    : names_(std::move(names)), unit_(unit), zero_(zero), imp_(std::move(imp)) {
  validate_carrier(names_, unit_, zero_, imp_.size(), "algebra");
  validate_table(imp_, names_, "implication table");
}

FiniteAlgebra FiniteAlgebra::from_rows(std::vector<std::string> names, Elem unit, Elem zero,
                                       const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  Square<Elem> t(n, 0);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n) {
      throw ValidationError("implication table: row " + std::to_string(x) + " has " +
                            std::to_string(rows[x].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (int y = 0; y < n; ++y) t(x, y) = rows[x][y];
  }
  return FiniteAlgebra(std::move(names), unit, zero, std::move(t));
}

std::vector<std::string> FiniteAlgebra::standard_names(int n) {
  if (n == 1) return {"1"};
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  names.emplace_back("0");
  for (int i = 1; i + 1 < n; ++i) {
    // a..z, then e27, e28, ... for unusually large carriers.
    names.push_back(i <= 26 ? std::string(1, static_cast<char>('a' + i - 1))
                            : "e" + std::to_string(i));
  }
  names.emplace_back("1");
  return names;
}

std::optional<Elem> FiniteAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

DerivedOps derive_ops(const FiniteAlgebra& a) {
  const int n = a.size();
  DerivedOps d;
  d.star.resize(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) d.star[x] = a.imp(x, a.zero());

  d.join = Square<Elem>(n, 0);
  d.meet = Square<Elem>(n, 0);
  d.odot = Square<Elem>(n, 0);
  d.oplus = Square<Elem>(n, 0);
  d.leq = Square<std::uint8_t>(n, 0);
  d.leq_q = Square<std::uint8_t>(n, 0);
  const auto& s = d.star;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      d.join(x, y) = a.imp(a.imp(x, y), y);
      d.meet(x, y) = s[a.imp(a.imp(s[x], s[y]), s[y])];
      d.odot(x, y) = s[a.imp(x, s[y])];
      d.oplus(x, y) = a.imp(s[x], y);
      d.leq(x, y) = a.imp(x, y) == a.unit() ? 1 : 0;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) d.leq_q(x, y) = d.meet(x, y) == x ? 1 : 0;
  }
  return d;
}

Model::Model(FiniteAlgebra a) : alg_(std::move(a)), ops_(derive_ops(alg_)) {}

void Model::require(Elem x) const {
  if (x < 0 || x >= size()) {
    throw std::out_of_range("element index " + std::to_string(x) + " outside [0, " +
                            std::to_string(size()) + ")");
  }
}

Elem Model::star_at(Elem x) const {
  require(x);
  return star(x);
}

Elem Model::join_at(Elem x, Elem y) const {
  require(x);
  require(y);
  return join(x, y);
}

Elem Model::meet_at(Elem x, Elem y) const {
  require(x);
  require(y);
  return meet(x, y);
}

Elem Model::odot_at(Elem x, Elem y) const {
  require(x);
  require(y);
  return odot(x, y);
}

Elem Model::oplus_at(Elem x, Elem y) const {
  require(x);
  require(y);
  return oplus(x, y);
}

MBEAlgebra::MBEAlgebra(std::vector<std::string> names, Elem unit, Elem zero, Square<Elem> prod,
                       std::vector<Elem> star)
    : names_(std::move(names)),
      unit_(unit),
      zero_(zero),
      prod_(std::move(prod)),
      star_(std::move(star)) {
  const int n = prod_.size();
  validate_carrier(names_, unit_, zero_, n, "m-algebra");
  validate_table(prod_, names_, "product table");
  if (static_cast<int>(star_.size()) != n) {
    throw ValidationError("star table: expected " + std::to_string(n) + " entries");
  }
  for (int x = 0; x < n; ++x) {
    if (star_[x] < 0 || star_[x] >= n) {
      throw ValidationError("star table: entry for " + names_[x] + " out of range");
    }
  }
}

MBEAlgebra phi_unchecked(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<Elem> s(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) s[x] = a.imp(x, a.zero());
  Square<Elem> prod(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) prod(x, y) = s[a.imp(x, s[y])];
  }
  return MBEAlgebra(a.names(), a.unit(), a.zero(), std::move(prod), std::move(s));
}

MBEAlgebra phi_to_mbe(const FiniteAlgebra& a) {
  const Model m(a);
  const ClassOutcome base = check_class(m, ClassId::INVOLUTIVE_BE);
  if (!base.member) {
    const CheckOutcome& failed = *base.first_failure;
    std::string msg = "transform requires an involutive BE algebra; axiom " +
                      std::string(to_string(failed.axiom)) + " fails";
    if (failed.witness && !failed.witness->empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < failed.witness->size(); ++i) {
        if (i) msg += ", ";
        msg += a.name((*failed.witness)[i]);
      }
      msg += ")";
    }
    throw PreconditionError(msg);
  }
  return phi_unchecked(a);
}

FiniteAlgebra psi_to_be(const MBEAlgebra& m) {
  const int n = m.size();
  for (Elem x = 0; x < n; ++x) {
    if (m.star(m.star(x)) != x) {
      throw PreconditionError("transform requires an involutive star; x** != x at x = " +
                              m.names()[x]);
    }
  }
  Square<Elem> imp(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) imp(x, y) = m.star(m.prod(x, m.star(y)));
  }
  return FiniteAlgebra(m.names(), m.unit(), m.zero(), std::move(imp));
}

}  // namespace qwlab
