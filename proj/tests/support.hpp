#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "qwlab/algebra.hpp"
#include "qwlab/io.hpp"
#include "qwlab/search.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) {
  return std::string(QWLAB_DATA_DIR) + "/" + name;
}

/// The four six-element reference algebras shipped in data/.
inline qwlab::FiniteAlgebra qw6() { return qwlab::load_algebra(data_path("qw6.alg")); }
inline qwlab::FiniteAlgebra prew6() { return qwlab::load_algebra(data_path("prew6.alg")); }
inline qwlab::FiniteAlgebra iom6() { return qwlab::load_algebra(data_path("iom6.alg")); }
inline qwlab::FiniteAlgebra metaw6() { return qwlab::load_algebra(data_path("metaw6.alg")); }

inline std::vector<qwlab::FiniteAlgebra> reference_algebras() {
  return {qw6(), prew6(), iom6(), metaw6()};
}

inline qwlab::Elem el(const qwlab::FiniteAlgebra& a, const std::string& name) {
  return *a.find(name);
}

inline std::vector<qwlab::Elem> els(const qwlab::FiniteAlgebra& a,
                                    std::initializer_list<const char*> names) {
  std::vector<qwlab::Elem> out;
  for (const char* n : names) out.push_back(el(a, n));
  return out;
}

/// All involutive BE algebras up to isomorphism, sizes 1..max_size.
inline std::vector<qwlab::Model> models_up_to(int max_size) {
  std::vector<qwlab::Model> out;
  for (int n = 1; n <= max_size; ++n) {
    for (auto& a : qwlab::enumerate({n, std::nullopt, true, std::nullopt})) out.emplace_back(a);
  }
  return out;
}

inline oracle::Raw to_raw(const qwlab::FiniteAlgebra& a) {
  oracle::Raw r{a.size(), a.zero(), a.unit(), {}};
  r.imp.assign(static_cast<std::size_t>(a.size()), std::vector<int>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) r.imp[x][y] = a.imp(x, y);
  }
  return r;
}

inline qwlab::FiniteAlgebra from_raw(const oracle::Raw& r) {
  return qwlab::FiniteAlgebra::from_rows(qwlab::FiniteAlgebra::standard_names(r.n), r.unit,
                                         r.zero, r.imp);
}

}  // namespace testing_support
