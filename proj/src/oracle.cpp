#include "listcolor/oracle.hpp"

#include <cmath>
#include <vector>

#include "listcolor/errors.hpp"

namespace listcolor {

bool brute_force_colorable(const Graph& g, const ListAssignment& lists, double max_product) {
  const int n = g.order();
  if (std::pow(static_cast<double>(lists.k()), n) > max_product)
    throw GuardExceeded("brute force product space exceeds guard");
  if (n == 0) return true;
  std::vector<int> digit(n, 0);
  for (;;) {
    bool proper = true;
    for (const auto& e : g.edges())
      if (lists.list(e.u)[digit[e.u]] == lists.list(e.v)[digit[e.v]]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int i = 0;
    while (i < n && ++digit[i] == lists.k()) digit[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace listcolor
