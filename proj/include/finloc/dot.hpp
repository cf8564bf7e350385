#ifndef FINLOC_DOT_HPP
#define FINLOC_DOT_HPP

#include <string>
#include <utility>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/sublocale.hpp"

namespace finloc {

/// Covering pairs (lower, upper) of a finite order given by `leq` on n nodes.
template <class Leq>
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(std::size_t n,
                                                                Leq leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b))
        continue;
      bool covers = true;
      for (std::size_t c = 0; c < n && covers; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b))
          covers = false;
      if (covers)
        out.emplace_back(a, b);
    }
  return out;
}

/// Hasse diagram of the frame, bottom to top.
std::string frame_to_dot(const Frame &frame);

/// Hasse diagram of S(L) under inclusion. Throws TooLarge over the cap.
std::string sublocales_to_dot(const Frame &frame,
                              const EnumerationLimits &limits = {});

} // namespace finloc

#endif
