"""The built-in polynomial families and their number sequences.

Each family is defined by a Sheffer pair (g, f): the members come out of
the generating identity (1/g(fbar)) e^{y fbar(t)}.  Higher-order variants
raise the kernel to the r-th power; the Frobenius-Euler family adds a
rational parameter lambda != 1 and collapses to Euler at lambda = -1.
"""

from fractions import Fraction as F

from umbra import (
    bernoulli,
    euler,
    family_number,
    family_poly,
    frobenius_euler,
    hermite,
    hermite_poly_via_operator,
)

print("Hermite members (physicists' convention):")
for n in range(6):
    print(f"  H_{n}(x) =", family_poly(hermite(), n))

print("\nThe same members by the operator route e^(-t^2/4) (2x)^n:")
for n in range(4):
    print(f"  H_{n}(x) =", hermite_poly_via_operator(n))

print("\nClassical Bernoulli and Euler members:")
for n in range(4):
    print(f"  B_{n}(x) =", family_poly(bernoulli(1), n))
for n in range(4):
    print(f"  E_{n}(x) =", family_poly(euler(1), n))

print("\nOrder raises the kernel power: order-3 Bernoulli member 2:")
print("  ", family_poly(bernoulli(3), 2))

print("\nFrobenius-Euler at lambda = 1/2 vs lambda = -1 (the Euler case):")
print("  n=2, lambda=1/2 :", family_poly(frobenius_euler(1, F(1, 2)), 2))
print("  n=2, lambda=-1  :", family_poly(frobenius_euler(1, F(-1)), 2))
print("  n=2, Euler      :", family_poly(euler(1), 2))

print("\nNumber sequences (members evaluated at 0):")
print("  Hermite :", [str(family_number(hermite(), n)) for n in range(7)])
print("  Bernoulli:", [str(family_number(bernoulli(1), n)) for n in range(7)])
print("  Euler    :", [str(family_number(euler(1), n)) for n in range(7)])
