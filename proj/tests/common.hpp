#ifndef NFORGE_TESTS_COMMON_HPP_
#define NFORGE_TESTS_COMMON_HPP_

#include <string>

#include "nforge/relation.hpp"

#ifndef NFORGE_FIXTURES_DIR
#define NFORGE_FIXTURES_DIR "fixtures"
#endif

namespace testing {

inline std::string fixture(const std::string& name) {
  return std::string(NFORGE_FIXTURES_DIR) + "/" + name;
}

// 0 below the antichain {1, 2}; the worked three-point example.
inline nforge::QuasiOrder antichain() {
  return nforge::QuasiOrder::from_pairs(nforge::Universe(3),
                                        {{0, 1}, {0, 2}});
}

// Equivalence with classes {0,1} and {2}.
inline nforge::QuasiOrder equivalence_01_2() {
  return nforge::QuasiOrder::from_pairs(nforge::Universe(3),
                                        {{0, 1}, {1, 0}});
}

// Two-point chain 0 < 1.
inline nforge::QuasiOrder chain2() {
  return nforge::QuasiOrder::from_pairs(nforge::Universe(2), {{0, 1}});
}

inline nforge::PointSet pts(nforge::Universe u, std::initializer_list<int> xs) {
  return nforge::PointSet::of(u, xs);
}

}  // namespace testing

#endif  // NFORGE_TESTS_COMMON_HPP_
