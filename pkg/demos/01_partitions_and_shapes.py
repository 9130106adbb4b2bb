"""Partitions, the text grammar, conjugation, and shape families.

Run:  python demos/01_partitions_and_shapes.py
"""

from tensorcube import (
    Partition,
    classify,
    enumerate_partitions,
    parse,
    render,
)
from tensorcube.tableaux import SkewShape, shape_diagram

print("== the text grammar ==")
lam = parse("4^2,3,1^2")
print(f'parse("4^2,3,1^2") -> {tuple(lam)}')
print(f"render back        -> {render(lam)!r}")
print(f"size {lam.size}, length {lam.length}")

print()
print("== conjugation flips the diagram ==")
print(shape_diagram(SkewShape(lam, ())))
print("   ... conjugates to ...")
print(shape_diagram(SkewShape(lam.conjugate(), ())))

print()
print("== every partition of 6, reverse-lexicographic ==")
for p in enumerate_partitions(6):
    families = sorted(f.describe() for f in classify(p))
    tag = f"   <- {', '.join(families)}" if families else ""
    print(f"{render(p):12}{tag}")

print()
print("== the four families at a glance ==")
for text in ("6,4^2,2^2", "7,5,3,1", "6,1^4", "3^3"):
    p = parse(text)
    print(f"{text:12} -> {sorted(f.describe() for f in classify(p))}")
