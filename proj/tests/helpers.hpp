#pragma once

#include <vector>

#include <doctest.h>

#include "ulamk/core.hpp"

namespace ulamk::test {

inline Instance make(const RawTuple& s, const RawTuple& t) { return validate_instance(s, t); }

inline Instance figure1() {
  return make({{4, 3, 1, 6, 2, 5}, {6, 5, 3, 4, 1, 2}}, {{5, 3, 1, 4, 6, 2}, {6, 3, 5, 1, 2, 4}});
}

inline Instance identity_pair(std::size_t n, std::size_t k = 1) {
  std::vector<Permutation> dims(k, Permutation::identity(n));
  return Instance(PermutationTuple(dims), PermutationTuple(dims));
}

inline Instance reversal3() { return make({{1, 2, 3}}, {{3, 2, 1}}); }

/// One conflict pair {1,2}.
inline Instance swap12() { return make({{1, 2, 3}, {1, 2, 3}}, {{2, 1, 3}, {1, 2, 3}}); }

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ulamk::Error");
  return Errc::IoError;
}

inline PermutationTuple tuple(const RawTuple& raw) {
  std::vector<Permutation> dims;
  for (const auto& row : raw) dims.emplace_back(std::vector<Label>(row.begin(), row.end()));
  return PermutationTuple(dims);
}

}  // namespace ulamk::test
