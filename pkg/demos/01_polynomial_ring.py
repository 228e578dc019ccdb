"""Tour of the exact arithmetic layer: Gaussian integers and bivariate
polynomials, substitution, and point evaluation.

Run: python3 demos/01_polynomial_ring.py
"""

from fibhess import BivarPoly, GaussianInt, i_pow
from fibhess.ring import ONE, X, Y

# Gaussian integers are exact; the imaginary unit cycles with period 4.
i = GaussianInt(0, 1)
print("i^2 =", i * i)
print("powers of i:", [str(i_pow(k)) for k in range(8)])

# Polynomials stay canonical: no zero terms, deterministic term order.
p = (X + Y) * (X - Y)
print("(x+y)(x-y) =", p)

q = Y + X**4
print("q =", q)
print("q with y -> 1:", q.substitute(X, ONE))
print("q with x -> 2x, y -> -1:", q.substitute(X.scale(2), -ONE))

# Evaluation is exact at Gaussian-integer points.
r = BivarPoly({(1, 1): 2, (5, 0): 1})  # 2xy + x^5
print("r =", r, " r(1,1) =", r.eval_at(1, 1), " r(3,-2) =", r.eval_at(3, -2))
