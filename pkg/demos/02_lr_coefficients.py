"""Littlewood-Richardson coefficients by direct tableau enumeration,
with the certificates drawn, plus the independent polynomial cross-check.

Run:  python demos/02_lr_coefficients.py
"""

from tensorcube import (
    SkewShape,
    lr_coefficient,
    lr_via_polynomials,
)
from tensorcube.tableaux import ascii_diagram, enumerate_lr_tableaux, word

lam, mu, nu = (3, 2, 1), (4, 3, 2, 1), (6, 4, 4, 2)
c = lr_coefficient(lam, mu, nu)
print(f"c[{lam} + {mu} -> {nu}] = {c}")
print()

print("the three fillings that realize it:")
for t in enumerate_lr_tableaux(SkewShape(nu, lam), mu):
    print(ascii_diagram(t))
    print(f"  reading word: {word(t)}")
    print()

print("cross-check by multiplying Schur polynomials and re-expanding:")
small = ((2, 1), (2, 1), (3, 2, 1))
print(f"  tableau count   {small}: {lr_coefficient(*small)}")
print(f"  polynomial route {small}: {lr_via_polynomials(*small)}")

print()
print("a positive coefficient needs matching size and containment:")
for triple in [((1,), (1,), (3,)), ((2, 2), (1,), (3, 1, 1))]:
    print(f"  c{triple} = {lr_coefficient(*triple)}")
