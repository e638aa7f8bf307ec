"""Partitions, Ferrers geometry, (k+1)-cores and the core/bounded bijection.

Partitions are plain tuples of weakly decreasing positive integers, empty
tuple for the empty partition.  Cells are 0-indexed pairs (row, col) with
row counted from the bottom and col from the left, so the residue of a cell
is (col - row) mod (k+1) with zeros on the main diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

Cell = tuple[int, int]


def check_partition(parts) -> tuple[int, ...]:
    """Normalize an iterable to a partition tuple, rejecting bad input."""
    lam = tuple(int(v) for v in parts)
    if any(v <= 0 for v in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {lam}")
    return lam


def degree(lam: tuple[int, ...]) -> int:
    return sum(lam)


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Column lengths of lam; an involution."""
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v > j) for j in range(lam[0]))


def contains(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True iff mu fits inside lam row by row."""
    if len(mu) > len(lam):
        return False
    return all(lam[i] >= mu[i] for i in range(len(mu)))


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """Dominance order: equal degree and partial sums of lam weakly exceed mu's."""
    if degree(lam) != degree(mu):
        return False
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def cells(lam: tuple[int, ...]) -> list[Cell]:
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def hook_length(lam: tuple[int, ...], cell: Cell) -> int:
    """Arm + leg + 1 of a cell that must lie inside lam."""
    i, j = cell
    if not (0 <= i < len(lam) and 0 <= j < lam[i]):
        raise ValueError(f"cell {cell} outside shape {lam}")
    arm = lam[i] - j - 1
    leg = sum(1 for r in range(i + 1, len(lam)) if lam[r] > j)
    return arm + leg + 1


def main_hook(lam: tuple[int, ...]) -> int:
    """Hook length of the corner cell (0,0); 0 for the empty shape."""
    if not lam:
        return 0
    return lam[0] + len(lam) - 1


def addable_corners(lam: tuple[int, ...]) -> list[Cell]:
    """Cells addable to lam keeping a partition shape, bottom row first."""
    out = []
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i]:
            out.append((i, lam[i]))
    out.append((len(lam), 0))
    return out


def removable_corners(lam: tuple[int, ...]) -> list[Cell]:
    """Cells whose removal keeps a partition shape, bottom row first."""
    out = []
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i + 1] < lam[i]:
            out.append((i, lam[i] - 1))
    return out


def extremal_cells(lam: tuple[int, ...]) -> list[Cell]:
    """Cells (i,j) of lam with (i+1,j+1) outside lam."""
    out = []
    for i, row in enumerate(lam):
        above = lam[i + 1] if i + 1 < len(lam) else 0
        out.extend((i, j) for j in range(row) if j >= above - 1)
    return out


def add_cells(lam: tuple[int, ...], new: list[Cell]) -> tuple[int, ...]:
    rows = list(lam)
    for i, j in sorted(new):
        if i == len(rows):
            rows.append(0)
        if j != rows[i]:
            raise ValueError(f"cannot add cell ({i},{j}) to {lam}")
        rows[i] += 1
    return check_partition(rows)


def skew_cells(gamma: tuple[int, ...], rho: tuple[int, ...]) -> list[Cell]:
    """Cells of gamma/rho; rho must be contained in gamma."""
    if not contains(gamma, rho):
        raise ValueError(f"{rho} is not contained in {gamma}")
    out = []
    for i, row in enumerate(gamma):
        lo = rho[i] if i < len(rho) else 0
        out.extend((i, j) for j in range(lo, row))
    return out


def is_horizontal_strip(gamma: tuple[int, ...], rho: tuple[int, ...]) -> bool:
    """True iff every column of gamma/rho has at most one cell."""
    if not contains(gamma, rho):
        raise ValueError(f"{rho} is not contained in {gamma}")
    # one cell per column at most <=> gamma_{i} <= rho_{i-1} for every upper row
    for i in range(1, len(gamma)):
        lo = rho[i - 1] if i - 1 < len(rho) else 0
        if gamma[i] > lo:
            return False
    return True


def residue(cell: Cell, k: int) -> int:
    """(col - row) mod (k+1)."""
    i, j = cell
    return (j - i) % (k + 1)


def is_core(lam: tuple[int, ...], k: int) -> bool:
    """True iff no cell of lam has hook length exactly k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    conj = conjugate(lam)
    p = k + 1
    for i, row in enumerate(lam):
        for j in range(row):
            if (row - j) + (conj[j] - i) - 1 == p:
                return False
    return True


def is_k_bounded(lam: tuple[int, ...], k: int) -> bool:
    return not lam or lam[0] <= k


@dataclass(frozen=True)
class Core:
    """A (k+1)-core: partition shape with no hook of length k+1.

    Construction validates the hook condition, so a Core value is always a
    genuine core of its level.
    """

    shape: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "shape", check_partition(self.shape))
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not is_core(self.shape, self.k):
            raise ValueError(f"{self.shape} is not a {self.k + 1}-core")

    @property
    def level(self) -> int:
        return self.k + 1

    def residue(self, cell: Cell) -> int:
        return residue(cell, self.k)

    def addable_corners(self) -> list[tuple[Cell, int]]:
        """Addable cells with their residues, bottom row first."""
        return [(c, self.residue(c)) for c in addable_corners(self.shape)]

    def removable_corners(self) -> list[tuple[Cell, int]]:
        return [(c, self.residue(c)) for c in removable_corners(self.shape)]

    def extremal_cells(self) -> list[tuple[Cell, int]]:
        return [(c, self.residue(c)) for c in extremal_cells(self.shape)]

    def addable_of_residue(self, i: int) -> list[Cell]:
        return [c for c in addable_corners(self.shape) if self.residue(c) == i % self.level]

    def removable_of_residue(self, i: int) -> list[Cell]:
        return [c for c in removable_corners(self.shape) if self.residue(c) == i % self.level]

    def add_residue(self, i: int) -> "Core":
        """Add every addable i-corner; identity when there is none."""
        new = self.addable_of_residue(i)
        if not new:
            return self
        return Core(add_cells(self.shape, new), self.k)

    def to_bounded(self) -> tuple[int, ...]:
        """The bijection onto k-bounded partitions: delete all hooks above k."""
        return core_to_bounded(self.shape, self.k)

    @staticmethod
    def from_bounded(lam: tuple[int, ...], k: int) -> "Core":
        return bounded_to_core(check_partition(lam), k)

    def conjugate(self) -> "Core":
        return Core(conjugate(self.shape), self.k)

    def size(self) -> int:
        """Degree of the k-bounded image, i.e. the number of k-bounded hooks."""
        return degree(self.to_bounded())


@cache
def core_to_bounded(shape: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Row lengths surviving after deleting all cells of hook length > k."""
    if not is_core(shape, k):
        raise ValueError(f"{shape} is not a {k + 1}-core")
    conj = conjugate(shape)
    rows = []
    for i, row in enumerate(shape):
        rows.append(sum(1 for j in range(row) if (row - j) + (conj[j] - i) - 1 <= k))
    lam = tuple(v for v in rows if v > 0)
    # the survivors of a core always read as a partition
    assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)), shape
    return lam


@cache
def bounded_to_core(lam: tuple[int, ...], k: int) -> Core:
    """Inverse bijection, built by adding residue corners along lam's word.

    The residues of lam are read right to left, top row down; applying the
    corner-adding operators in that order to the empty core rebuilds the
    (k+1)-core whose k-bounded image is lam.
    """
    if not is_k_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    core = Core((), k)
    for i in reversed(residue_word(lam, k)):
        core = core.add_residue(i)
    return core


def residue_word(lam: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Residues of the cells of lam, rows top to bottom, right to left.

    The rightmost letter corresponds to the cell (0,0) and is applied first
    when the word is evaluated.
    """
    letters = []
    for i in range(len(lam) - 1, -1, -1):
        letters.extend(residue((i, j), k) for j in range(lam[i] - 1, -1, -1))
    return tuple(letters)


def k_conjugate(lam: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Bounded image of the conjugated core; an involution on k-bounded shapes."""
    return bounded_to_core(lam, k).conjugate().to_bounded()


def k_bounded_partitions(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-bounded partitions of n, lexicographically decreasing."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, k, ())
    return out


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n (no part bound)."""
    return k_bounded_partitions(n, n if n else 1)


def k_bounded_up_to(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-bounded partitions of degree <= n, by increasing degree."""
    return [lam for d in range(n + 1) for lam in k_bounded_partitions(d, k)]
