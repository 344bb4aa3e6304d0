"""Tour of the exact truncated-power-series kernel.

Every coefficient is a Fraction; nothing is ever rounded.  A series knows
its truncation order, and mixing two orders keeps the shorter one, so you
always know how many coefficients you can trust.
"""

from fractions import Fraction as F

from umbra import TruncatedSeries as S

# A series is just its coefficients c_0, c_1, ... of t^0, t^1, ...
geometric = S([1, 1, 1, 1, 1, 1])          # 1/(1-t) through t^5
print("1/(1-t)        :", geometric)

# Reciprocals solve a triangular system exactly.
print("its reciprocal :", geometric.reciprocal())          # 1 - t

# The classic: invert 1 + t and get the alternating geometric series.
print("1/(1+t)        :", S([1, 1], order=5).reciprocal())

# exp works on any series with zero constant term.
t = S.t(6)
print("e^t            :", t.exp())
print("e^(t^2/4)      :", S.monomial(2, 6, F(1, 4)).exp())

# Composition and compositional inverse.  f = t + t^2 has the inverse
# with Catalan-number coefficients (alternating signs).
f = S([0, 1, 1], order=6)
fbar = f.comp_inverse()
print("f = t + t^2    :", f)
print("f-bar          :", fbar)
print("f-bar o f      :", fbar.compose(f))   # back to plain t

# Arithmetic truncates to the shorter operand.
short = S([1, 2], order=1)
print("mixed orders   :", (geometric * short).trunc_order, "(= min(5, 1))")
