"""Tensor product structure constants shared by the odd orthogonal,
symplectic and even orthogonal families.

The constant pairing three partitions is a sum, over triangles of half-size
partitions, of products of three Littlewood-Richardson coefficients. It is
fully symmetric in its three labels, vanishes unless the total size is even,
and restricts to a single LR coefficient in top degree. The decomposition
routine filters the expansion by rank and flags the stable range.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .lr import checked, lr_coefficient_memo
from .partitions import Partition, enumerate_partitions, render


@lru_cache(maxsize=None)
def _subpartitions(bound: Partition, size: int) -> tuple[Partition, ...]:
    """Partitions of ``size`` fitting inside ``bound``, reverse-lex order."""
    found: list[Partition] = []

    def descend(i: int, remaining: int, largest: int, prefix: tuple) -> None:
        if remaining == 0:
            found.append(Partition(prefix))
            return
        if i == len(bound):
            return
        for part in range(min(bound[i], largest, remaining), 0, -1):
            descend(i + 1, remaining - part, part, prefix + (part,))

    descend(0, size, size if size else 1, ())
    return tuple(found)


def _meet(lam: Partition, mu: Partition) -> Partition:
    """Componentwise minimum: the largest shape inside both."""
    return Partition(min(a, b) for a, b in zip(lam, mu))


def _triple_sum(lam: Partition, mu: Partition, nu: Partition,
                alpha_sizes: Iterable[int], tight: bool) -> int:
    """Sum of c(a,b -> lam) * c(a,g -> mu) * c(b,g -> nu) over candidate
    triangles.

    ``tight`` restricts b and g to shapes that could still pair into ``nu``
    (the production path); the loose path keeps every candidate allowed by
    the first two factors and evaluates the third factor honestly, which is
    what the parity tests exercise."""
    total = 0
    alpha_bound = _meet(lam, mu)
    beta_bound = _meet(lam, nu) if tight else lam
    gamma_bound = _meet(mu, nu) if tight else mu
    for asize in alpha_sizes:
        bsize = lam.size - asize
        gsize = mu.size - asize
        if bsize < 0 or gsize < 0:
            continue
        for alpha in _subpartitions(alpha_bound, asize):
            betas = []
            for beta in _subpartitions(beta_bound, bsize):
                cab = lr_coefficient_memo(alpha, beta, lam)
                if cab:
                    betas.append((beta, cab))
            if not betas:
                continue
            for gamma in _subpartitions(gamma_bound, gsize):
                cag = lr_coefficient_memo(alpha, gamma, mu)
                if not cag:
                    continue
                for beta, cab in betas:
                    cbg = lr_coefficient_memo(beta, gamma, nu)
                    if cbg:
                        term = checked(checked(cab * cag) * cbg)
                        total = checked(total + term)
    return total


def nl_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Structure constant pairing the three labels.

    Returns 0 immediately when the total size is odd; the shortcut agrees
    with the full sum (the suite confirms this by running the sum without
    it, see :func:`nl_coefficient_full`)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    twice = lam.size + mu.size - nu.size
    if twice < 0 or twice % 2:
        return 0
    return _triple_sum(lam, mu, nu, (twice // 2,), tight=True)


def nl_coefficient_full(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Same value as :func:`nl_coefficient`, no parity shortcut: every
    triangle allowed by the first two factors is visited and the third factor
    is evaluated on each."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return _triple_sum(lam, mu, nu, range(min(lam.size, mu.size) + 1), tight=False)


def nl_sum_support(lam: Iterable[int], mu: Iterable[int],
                   nu: Iterable[int]) -> list[tuple[Partition, Partition, Partition]]:
    """The triangles (alpha, beta, gamma) with all three factors positive, in
    deterministic reverse-lex nesting order; empty when the forced sizes go
    negative or the total size is odd."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    twice = lam.size + mu.size - nu.size
    if twice < 0 or twice % 2:
        return []
    asize = twice // 2
    bsize = lam.size - asize
    gsize = mu.size - asize
    if bsize < 0 or gsize < 0:
        return []
    out = []
    for alpha in _subpartitions(_meet(lam, mu), asize):
        for beta in _subpartitions(_meet(lam, nu), bsize):
            if not lr_coefficient_memo(alpha, beta, lam):
                continue
            for gamma in _subpartitions(_meet(mu, nu), gsize):
                if lr_coefficient_memo(alpha, gamma, mu) and lr_coefficient_memo(beta, gamma, nu):
                    out.append((alpha, beta, gamma))
    return out


_FAMILIES = ("B", "C", "D")


@dataclass(frozen=True)
class GroupSpec:
    """One of the three classical families, by letter, with its rank.

    Family D is restricted to even rank so that all the modules involved
    stay self-dual."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"family must be one of B, C, D, got {self.family!r}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.family == "D" and self.rank % 2:
            raise ValueError(f"family D requires an even rank, got {self.rank}")

    @property
    def max_weight_length(self) -> int:
        """Longest partition usable as an input highest weight."""
        return self.rank - 1 if self.family == "D" else self.rank


@dataclass(frozen=True, eq=True)
class DecompositionResult:
    """Multiplicity map for a product of two irreducibles.

    ``terms`` are the admissible output weights (reverse-lex within each
    degree, degrees descending). For family D, weights that use all ``rank``
    rows are reported in ``inadmissible`` rather than dropped or trusted.
    ``stable`` is set when the input lengths sum to at most the rank, which
    keeps every output weight inside the rank filter."""

    group: GroupSpec
    left: Partition
    right: Partition
    terms: dict
    inadmissible: dict
    stable: bool

    def to_json(self) -> dict:
        return {
            "group": {"family": self.group.family, "rank": self.group.rank},
            "lambda": render(self.left),
            "mu": render(self.right),
            "terms": [{"nu": render(nu), "mult": m} for nu, m in self.terms.items()],
            "inadmissible": [{"nu": render(nu), "mult": m} for nu, m in self.inadmissible.items()],
            "stable": self.stable,
        }


def tensor_decompose(lam: Iterable[int], mu: Iterable[int],
                     group: GroupSpec) -> DecompositionResult:
    """Decompose the product of the irreducibles labelled ``lam`` and ``mu``.

    Inputs must fit the rank (family D additionally needs the last weight
    coordinate zero, i.e. length at most rank-1). Candidate outputs run over
    sizes of the right parity with length at most the rank and first part at
    most the sum of first parts; the multiplicities do not depend on the
    family, only the rank filtering does."""
    lam, mu = Partition(lam), Partition(mu)
    limit = group.max_weight_length
    for name, p in (("lambda", lam), ("mu", mu)):
        if len(p) > limit:
            if group.family == "D":
                raise ValueError(
                    f"{name} has {len(p)} parts; family D of rank {group.rank} needs the "
                    f"last weight coordinate zero, so at most {limit} parts")
            raise ValueError(f"{name} has {len(p)} parts, more than rank {group.rank}")
    n = group.rank
    first = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    terms: dict[Partition, int] = {}
    inadmissible: dict[Partition, int] = {}
    for size in range(lam.size + mu.size, -1, -2):
        if size and not first:
            continue
        for nu in enumerate_partitions(size, max_length=n, max_part=first if size else None):
            value = nl_coefficient(lam, mu, nu)
            if not value:
                continue
            if group.family == "D" and len(nu) == n:
                inadmissible[nu] = value
            else:
                terms[nu] = value
    stable = len(lam) + len(mu) <= n
    return DecompositionResult(group, lam, mu, terms, inadmissible, stable)
