"""
Product bounds under an intertwining hypothesis
===============================================

When |X| Y = Y* |X|, the numerical radius of XY is controlled by r(Y) and
off-diagonal operator matrices built from powers of |X| and |X*|.  Diagonal
pairs make every bound tight; random pairs show the slack.
"""

import numpy as np

from numrad.bounds import PowerPair, check_mixed_schwarz, check_product_s2, mixed_schwarz_nonnormal_counterexample
from numrad.generators import GenSpec, gen_intertwined_pair, stream_rng

pp = PowerPair(s=0.5, p=1.0, alpha=2.0, beta=2.0)

# X = diag(1, 2), Y = diag(3, 4): w(XY) = 8 and every right-hand side is 8
for r in check_product_s2(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]), pp):
    print(f"{r.bound_id:24s} lhs={r.lhs:.6f} rhs={r.rhs:.6f} margin={r.margin:.1e}")

# random pairs from three constructions; relative margins stay nonnegative
for mode in ("hermitian", "polar", "nonnormal"):
    worst = min(
        min(r.margin / r.scale for r in check_product_s2(*gen_intertwined_pair(GenSpec(4), mode, stream_rng(0, mode, k)), pp))
        for k in range(50)
    )
    print(f"{mode:10s} smallest relative margin over 50 pairs: {worst:.3e}")

# the two-vector form of the mixed Schwarz inequality needs a normal Y once s > 1/2:
# X = diag(1, eps), Y = X^{-1} [[0, 1], [1, 0]] intertwine, yet x = e2, y = e1 break it
X, Y, x, y = mixed_schwarz_nonnormal_counterexample(0.01)
for s in (0.5, 0.75, 0.999):
    r = check_mixed_schwarz(X, Y, x, y, s)
    print(f"s={s:<5}  lhs={r.lhs:.4f}  rhs={r.rhs:.4f}  holds={r.holds}")
# with x = y, the only case the product bounds rely on, it holds
print("x = y:", check_mixed_schwarz(X, Y, x, x, 0.999).holds)
