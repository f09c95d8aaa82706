#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kneser/construct.hpp"
#include "kneser/decomposition.hpp"

namespace corpus {

using Named = std::pair<std::string, kneser::Triangulation>;

inline std::vector<Named> summands() {
  return {{"bd4", kneser::boundary_4simplex()},
          {"rp3", kneser::projective_space()},
          {"l52", kneser::lens_space_5_2()}};
}

/// Closed orientable triangulations exercised by the enumeration checks.
inline std::vector<Named> closed() {
  using namespace kneser;
  const auto bd4 = boundary_4simplex();
  const auto rp3 = projective_space();
  return {
      {"bd4", bd4},
      {"rp3", rp3},
      {"l31", lens_space_3_1()},
      {"l52", lens_space_5_2()},
      {"bd4_simplified", simplify(bd4)},
      {"rp3_subdivided", validate(one_four_move(rp3.table(), 0), Requirements::closed_orientable())},
      {"bd4#bd4", connected_sum(bd4, bd4)},
      {"bd4#rp3", connected_sum(bd4, rp3)},
      {"rp3#rp3", connected_sum(rp3, rp3)},
  };
}

inline std::vector<std::pair<std::string, std::string>> pairs() {
  return {{"bd4", "bd4"}, {"bd4", "rp3"}, {"rp3", "rp3"}, {"bd4", "l52"}, {"rp3", "l52"}, {"l52", "l52"}};
}

inline kneser::Triangulation summand(const std::string& name) {
  for (auto& [n, t] : summands())
    if (n == name) return t;
  return kneser::boundary_4simplex();
}

}  // namespace corpus
