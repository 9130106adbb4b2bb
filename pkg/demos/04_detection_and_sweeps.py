"""The tensor-cube detection predicate, constructive witnesses with their
certificate tableaux, and the two exhaustive verification sweeps.

Run:  python demos/04_detection_and_sweeps.py
"""

from tensorcube import (
    detects,
    render,
    verify_even_theorem,
    verify_odd_theorem,
)
from tensorcube.tableaux import ascii_diagram, word

print("== verdicts across the four families ==")
for lam in [(6, 4, 4, 2, 2), (7, 5, 3, 1), (6, 1, 1, 1, 1), (3, 3)]:
    v = detects(lam)
    fams = ", ".join(sorted(f.describe() for f in v.families)) or "none"
    print(f"  {render(v.weight):12} N={v.multiplicity:<6} "
          f"detected={str(v.detected).lower():5} families: {fams}")

print()
print("== a witness carries three checkable certificates ==")
v = detects((7, 5, 3, 1))
w = v.witness
print(f"  alpha={render(w.alpha)}  beta={render(w.beta)}  gamma={render(w.gamma)}")
for cert in w.certificates:
    print(f"  shape {render(cert.shape.outer)} minus {render(cert.shape.inner)},"
          f" word {word(cert)}")
    print("\n".join("    " + line for line in ascii_diagram(cert).splitlines()))

print()
print("== an even size outside every family can still be detected ==")
v = detects((4, 3, 2, 1))
print(f"  {render(v.weight)}: N={v.multiplicity}, detected={v.detected},"
      f" witness={v.witness}")

print()
print("== odd sizes never are ==")
report = verify_odd_theorem(9)
print(f"  checked {report.checked} weights of odd size <= 9:"
      f" {len(report.failures)} failures")

report = verify_even_theorem(10)
print(f"  checked {report.checked} weights of even size <= 10:"
      f" {len(report.failures)} failures")
print(f"  per-family coverage: {report.family_tallies}")
