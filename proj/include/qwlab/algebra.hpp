#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwlab {

/// Index of an element of a finite carrier, in the order the elements were
/// declared. Names are presentation-only.
using Elem = int;

/// Dense n x n table addressed as (row, column).
template <class T>
class Square {
 public:
  Square() = default;
  Square(int n, T fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const noexcept { return n_; }
  T operator()(Elem x, Elem y) const { return cells_[index(x, y)]; }
  T& operator()(Elem x, Elem y) { return cells_[index(x, y)]; }
  const std::vector<T>& cells() const noexcept { return cells_; }

  friend bool operator==(const Square&, const Square&) = default;

 private:
  std::size_t index(Elem x, Elem y) const {
    return static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y);
  }

  int n_ = 0;
  std::vector<T> cells_;
};

/// A carrier with designated constants 1 (unit) and 0 (zero) and the
/// implication table imp(x, y) = x -> y. No axiom is assumed.
class FiniteAlgebra {
 public:
  /// Validates shape, index ranges, name uniqueness and unit != zero (unless
  /// n = 1). Throws ValidationError naming the offending cell or name.
  FiniteAlgebra(std::vector<std::string> names, Elem unit, Elem zero, Square<Elem> imp);

  static FiniteAlgebra from_rows(std::vector<std::string> names, Elem unit, Elem zero,
                                 const std::vector<std::vector<Elem>>& rows);

  /// Elements named 0, a, b, ..., 1 with zero first and unit last (a single
  /// element is named 1). This is the layout produced by enumeration.
  static std::vector<std::string> standard_names(int n);

  int size() const noexcept { return imp_.size(); }
  Elem unit() const noexcept { return unit_; }
  Elem zero() const noexcept { return zero_; }
  Elem imp(Elem x, Elem y) const { return imp_(x, y); }
  const Square<Elem>& imp_table() const noexcept { return imp_; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem x) const { return names_.at(static_cast<std::size_t>(x)); }
  std::optional<Elem> find(std::string_view name) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  Elem unit_;
  Elem zero_;
  Square<Elem> imp_;
};

/// Tables derived from the implication. All are total on any well-formed
/// algebra; they carry their intended meaning only on involutive BE algebras.
struct DerivedOps {
  std::vector<Elem> star;      // x* = x -> 0
  Square<Elem> join;           // (x -> y) -> y
  Square<Elem> meet;           // ((x* -> y*) -> y*)*
  Square<Elem> odot;           // (x -> y*)*
  Square<Elem> oplus;          // x* -> y
  Square<std::uint8_t> leq;    // x -> y = 1
  Square<std::uint8_t> leq_q;  // x = x meet y

  friend bool operator==(const DerivedOps&, const DerivedOps&) = default;
};

DerivedOps derive_ops(const FiniteAlgebra& a);

/// An algebra bundled with its eagerly computed derived tables. Immutable.
class Model {
 public:
  explicit Model(FiniteAlgebra a);

  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  const DerivedOps& ops() const noexcept { return ops_; }
  int size() const noexcept { return alg_.size(); }
  Elem unit() const noexcept { return alg_.unit(); }
  Elem zero() const noexcept { return alg_.zero(); }

  // Unchecked accessors for hot loops.
  Elem imp(Elem x, Elem y) const { return alg_.imp(x, y); }
  Elem star(Elem x) const { return ops_.star[static_cast<std::size_t>(x)]; }
  Elem join(Elem x, Elem y) const { return ops_.join(x, y); }
  Elem meet(Elem x, Elem y) const { return ops_.meet(x, y); }
  Elem odot(Elem x, Elem y) const { return ops_.odot(x, y); }
  Elem oplus(Elem x, Elem y) const { return ops_.oplus(x, y); }
  bool leq(Elem x, Elem y) const { return ops_.leq(x, y) != 0; }
  bool leq_q(Elem x, Elem y) const { return ops_.leq_q(x, y) != 0; }

  // Range-checked accessors; throw std::out_of_range.
  Elem star_at(Elem x) const;
  Elem join_at(Elem x, Elem y) const;
  Elem meet_at(Elem x, Elem y) const;
  Elem odot_at(Elem x, Elem y) const;
  Elem oplus_at(Elem x, Elem y) const;

 private:
  void require(Elem x) const;

  FiniteAlgebra alg_;
  DerivedOps ops_;
};

/// The product signature (X, odot, *, 1) with designated 0.
class MBEAlgebra {
 public:
  MBEAlgebra(std::vector<std::string> names, Elem unit, Elem zero, Square<Elem> prod,
             std::vector<Elem> star);

  int size() const noexcept { return prod_.size(); }
  Elem unit() const noexcept { return unit_; }
  Elem zero() const noexcept { return zero_; }
  Elem prod(Elem x, Elem y) const { return prod_(x, y); }
  Elem star(Elem x) const { return star_[static_cast<std::size_t>(x)]; }
  const Square<Elem>& prod_table() const noexcept { return prod_; }
  const std::vector<Elem>& star_table() const noexcept { return star_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const MBEAlgebra&, const MBEAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  Elem unit_;
  Elem zero_;
  Square<Elem> prod_;
  std::vector<Elem> star_;
};

/// x odot y := (x -> y*)*. Refuses algebras that are not involutive BE
/// algebras with a PreconditionError carrying the failed axiom and witness.
MBEAlgebra phi_to_mbe(const FiniteAlgebra& a);

/// x -> y := (x odot y*)*. Refuses a star that is not an involution.
FiniteAlgebra psi_to_be(const MBEAlgebra& m);

/// The unchecked product table of the transform, for internal evaluation of
/// product-side axioms on an algebra whose star is already known to be
/// involutive.
MBEAlgebra phi_unchecked(const FiniteAlgebra& a);

}  // namespace qwlab
