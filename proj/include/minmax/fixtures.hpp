#pragma once

#include "minmax/instance.hpp"

namespace minmax {

// Path v1 - v2 - v3 with both edge lengths 4, a server at v1, unit-weight
// clients at v2 and v3, every edge eligible. The smallest instance whose
// optimum (one new server at the midpoint of [v2, v3], cmax 2) is easy to
// check by hand.
Instance make_path3(int k = 1);

// Chain s1 - c1 - c2 - s2 with segment lengths a^2+a+b, a+1, a+1 and weights
// w(c1) = 1, w(c2) = a. The single-server optimum sits between the clients at
// distance a from c1 with cmax = a, while placing on the worst client yields
// a^2 + a; the ratio a+1 makes the approximation bound tight.
Instance make_fig3(double alpha, double beta, int k = 1);

} // namespace minmax
