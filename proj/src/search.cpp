#include "qwlab/search.hpp"

#include <algorithm>
#include <numeric>

#include "qwlab/error.hpp"

namespace qwlab {

std::vector<Elem> canonical_form(const FiniteAlgebra& a) {
  const int n = a.size();
  if (n == 1) return {a.imp(0, 0)};
  std::vector<Elem> others;
  for (Elem x = 0; x < n; ++x) {
    if (x != a.zero() && x != a.unit()) others.push_back(x);
  }
  // pi maps old index to new index; others[i] receives 1 + i.
  std::vector<Elem> pi(static_cast<std::size_t>(n));
  std::vector<Elem> best;
  std::vector<Elem> cur(static_cast<std::size_t>(n) * n);
  std::vector<Elem> inv(static_cast<std::size_t>(n));
  do {
    pi[a.zero()] = 0;
    pi[a.unit()] = n - 1;
    for (std::size_t i = 0; i < others.size(); ++i) pi[others[i]] = static_cast<Elem>(i + 1);
    for (Elem x = 0; x < n; ++x) inv[pi[x]] = x;
    // Build row-major, bailing out as soon as the prefix exceeds best.
    bool worse = false;
    bool better = best.empty();
    for (Elem i = 0; i < n && !worse; ++i) {
      for (Elem j = 0; j < n; ++j) {
        const Elem v = pi[a.imp(inv[i], inv[j])];
        cur[static_cast<std::size_t>(i) * n + j] = v;
        if (!better) {
          const Elem b = best[static_cast<std::size_t>(i) * n + j];
          if (v > b) {
            worse = true;
            break;
          }
          if (v < b) better = true;
        }
      }
    }
    if (!worse && better) best = cur;
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

FiniteAlgebra canonical_algebra(const FiniteAlgebra& a) {
  const int n = a.size();
  const std::vector<Elem> flat = canonical_form(a);
  Square<Elem> t(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) t(x, y) = flat[static_cast<std::size_t>(x) * n + y];
  }
  return FiniteAlgebra(FiniteAlgebra::standard_names(n), n - 1, 0, std::move(t));
}

namespace {

constexpr Elem kUnset = -1;

class Search {
 public:
  Search(const EnumerationConfig& cfg, const std::function<bool(const FiniteAlgebra&)>& visit)
      : cfg_(cfg), visit_(visit), n_(cfg.size), unit_(cfg.size - 1), t_(n_, kUnset) {
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        if (x == 0 || y == unit_ || x == y) {
          t_(x, y) = unit_;
        } else if (x == unit_) {
          t_(x, y) = y;
        } else {
          free_.push_back({x, y});
        }
      }
    }
  }

  std::uint64_t run() {
    if (n_ == 1) {
      ++nodes_;
      emit();
      return nodes_;
    }
    descend(0);
    return nodes_;
  }

 private:
  struct Cell {
    Elem r, c;
  };

  bool set(Elem x, Elem y) const { return t_(x, y) != kUnset; }

  // Exchange law at (r, y, z), checked only once every referenced cell is set.
  // Any instance whose last assigned cell lies in row r is of this form up
  // to swapping its first two arguments, under which the law is symmetric.
  bool exchange_ok(Elem r) const {
    for (Elem y = 0; y < n_; ++y) {
      for (Elem z = 0; z < n_; ++z) {
        const Elem yz = t_(y, z);
        const Elem rz = t_(r, z);
        if (yz == kUnset || rz == kUnset) continue;
        const Elem lhs = t_(r, yz);
        const Elem rhs = t_(y, rz);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
      }
    }
    return true;
  }

  // Column 0 holds r*. A non-constant r needs r* non-constant and r** = r.
  bool involution_ok(Elem r) const {
    const Elem s = t_(r, 0);
    if (s == 0 || s == unit_) return false;
    const Elem ss = t_(s, 0);
    return ss == kUnset || ss == r;
  }

  bool descend(std::size_t k) {
    if (cfg_.node_limit && nodes_ >= *cfg_.node_limit) {
      throw BudgetExhausted("search node budget of " + std::to_string(*cfg_.node_limit) +
                                " exhausted at size " + std::to_string(n_),
                            emitted_);
    }
    ++nodes_;
    if (k == free_.size()) return emit();
    const auto [r, c] = free_[k];
    for (Elem v = 0; v < n_; ++v) {
      t_(r, c) = v;
      if (c == 0 && !involution_ok(r)) continue;
      if (!exchange_ok(r)) continue;
      if (!descend(k + 1)) {
        t_(r, c) = kUnset;
        return false;
      }
    }
    t_(r, c) = kUnset;
    return true;
  }

  bool emit() {
    Square<Elem> table = t_;
    if (n_ == 1) table(0, 0) = 0;
    FiniteAlgebra a(FiniteAlgebra::standard_names(n_), unit_, 0, std::move(table));
    if (cfg_.iso_reject && canonical_form(a) != a.imp_table().cells()) return true;
    const Model m(a);
    // Pruning is partial; the full base check is the ground truth.
    if (!check_class(m, ClassId::INVOLUTIVE_BE).member) return true;
    if (cfg_.class_filter && !check_class(m, *cfg_.class_filter).member) return true;
    ++emitted_;
    return visit_(a);
  }

  const EnumerationConfig& cfg_;
  const std::function<bool(const FiniteAlgebra&)>& visit_;
  int n_;
  Elem unit_;
  Square<Elem> t_;
  std::vector<Cell> free_;
  std::uint64_t nodes_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace

std::uint64_t enumerate_each(const EnumerationConfig& cfg,
                             const std::function<bool(const FiniteAlgebra&)>& visit) {
  if (cfg.size < 1) throw ValidationError("enumeration size must be at least 1");
  return Search(cfg, visit).run();
}

std::vector<FiniteAlgebra> enumerate(const EnumerationConfig& cfg) {
  std::vector<FiniteAlgebra> out;
  enumerate_each(cfg, [&](const FiniteAlgebra& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::size_t count(const EnumerationConfig& cfg) {
  std::size_t k = 0;
  enumerate_each(cfg, [&](const FiniteAlgebra&) {
    ++k;
    return true;
  });
  return k;
}

std::optional<Counterexample> find_counterexample(const Statement& s, ClassId cls, int max_size,
                                                  std::optional<std::uint64_t> node_limit) {
  for (int n = 1; n <= max_size; ++n) {
    std::optional<Counterexample> found;
    EnumerationConfig cfg{n, cls, true, node_limit};
    enumerate_each(cfg, [&](const FiniteAlgebra& a) {
      const StatementOutcome o = check_statement(Model(a), s);
      if (o.status != Status::Fail) return true;
      found = Counterexample{a, o.variables, *o.witness};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace qwlab
