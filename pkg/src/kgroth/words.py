"""Residue words, corner-adding evaluation, cyclically decreasing blocks.

A word is a finite sequence of residues in [0, k].  Words are stored in
display order: the rightmost letter acts first when the word is evaluated
on the empty core, matching the convention that reduced words are read
off a shape from the top row down, right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .partitions import (
    Core,
    Cell,
    check_partition,
    contains,
    degree,
    is_k_bounded,
    residue_word,
)


class DeadWordError(Exception):
    """Raised when a letter finds neither an addable nor a removable corner.

    Distinct from ValueError so callers can tell valid-but-vanishing words
    apart from malformed input.
    """


@dataclass(frozen=True)
class ResidueWord:
    """A word over residues [0, k]; rightmost letter applied first."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if any(not 0 <= v <= self.k for v in self.letters):
            raise ValueError(f"letters must lie in [0, {self.k}]: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.letters)

    @staticmethod
    def parse(text: str, k: int) -> "ResidueWord":
        parts = text.split()
        return ResidueWord(tuple(int(v) for v in parts), k)


def word_of_partition(lam, k: int) -> ResidueWord:
    """The canonical reduced word of the grassmannian element attached to lam.

    Reads the residues of lam's own diagram from the top row down, right to
    left; evaluating it on the empty core produces the core image of lam.
    """
    lam = check_partition(lam)
    if not is_k_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    return ResidueWord(residue_word(lam, k), k)


def evaluate_steps(word: ResidueWord):
    """Yield (letter, core_after, cells_receiving_letter) per evaluation step.

    A step either adds all addable i-corners (the new cells receive the
    letter) or, failing that, marks all removable i-corners.  If neither
    kind of corner exists the word is dead.
    """
    core = Core((), word.k)
    for pos, i in enumerate(reversed(word.letters)):
        added = core.addable_of_residue(i)
        if added:
            core = core.add_residue(i)
            yield i, core, tuple(sorted(added))
            continue
        marked = core.removable_of_residue(i)
        if not marked:
            raise DeadWordError(
                f"letter {i} at step {pos + 1} of {word}: no addable or removable {i}-corner on {core.shape}"
            )
        yield i, core, tuple(sorted(marked))


def evaluate(word: ResidueWord) -> Core:
    """Apply the corner-adding operators rightmost letter first to the empty core."""
    core = Core((), word.k)
    for _, core, _ in evaluate_steps(word):
        pass
    return core


def is_alive(word: ResidueWord) -> bool:
    try:
        evaluate(word)
    except DeadWordError:
        return False
    return True


def standard_tableau_of_word(word: ResidueWord):
    """The standard affine set-valued filling encoding an alive word.

    Step x writes the letter x into every cell that step touches; dead
    words raise DeadWordError.
    """
    from .tableaux import SetValuedFilling

    cellmap: dict[Cell, set[int]] = {}
    shape: tuple[int, ...] = ()
    for x, (_, core, touched) in enumerate(evaluate_steps(word), start=1):
        shape = core.shape
        for c in touched:
            cellmap.setdefault(c, set()).add(x)
    return SetValuedFilling(shape, {c: frozenset(s) for c, s in cellmap.items()})


def is_cyclically_decreasing(word: ResidueWord) -> bool:
    """No repeats, and j appears before j-1 (mod k+1) whenever both occur."""
    letters = word.letters
    if len(set(letters)) != len(letters):
        return False
    pos = {v: idx for idx, v in enumerate(letters)}
    p = word.k + 1
    for j in letters:
        below = (j - 1) % p
        if below in pos and pos[j] > pos[below]:
            return False
    return True


def cyclically_decreasing_word(residues, k: int) -> ResidueWord:
    """Canonical cyclically decreasing word on a proper subset of [0, k].

    The subset splits into maximal cyclic runs; each run is emitted from its
    top residue downwards, runs ordered by their starting residue.  Any
    other admissible order differs only by commutations.
    """
    p = k + 1
    s = set(int(v) % p for v in residues)
    if len(s) != len(tuple(residues)):
        raise ValueError(f"residues must be distinct: {residues}")
    if len(s) == p:
        raise ValueError("a cyclically decreasing word uses a proper subset of residues")
    starts = sorted(v for v in s if (v - 1) % p not in s)
    letters: list[int] = []
    for start in starts:
        run = [start]
        while (run[-1] + 1) % p in s:
            run.append((run[-1] + 1) % p)
        letters.extend(reversed(run))
    return ResidueWord(tuple(letters), k)


def apply_block(core: Core, residues, k: int | None = None) -> tuple[Core, tuple[Cell, ...]]:
    """Apply the cyclically decreasing block on a residue set, tracking cells.

    Returns the new core together with every cell the block's letter landed
    in (new cells for addable steps, existing corners for removable steps).
    Raises DeadWordError when some letter finds no corner.
    """
    if k is None:
        k = core.k
    word = cyclically_decreasing_word(residues, k)
    touched: list[Cell] = []
    for i in reversed(word.letters):
        added = core.addable_of_residue(i)
        if added:
            touched.extend(added)
            core = core.add_residue(i)
            continue
        marked = core.removable_of_residue(i)
        if not marked:
            raise DeadWordError(f"block {sorted(residues)}: letter {i} finds no corner on {core.shape}")
        touched.extend(marked)
    return core, tuple(sorted(touched))


@dataclass(frozen=True)
class Factorization:
    """A decomposition into cyclically decreasing blocks of prescribed lengths.

    blocks[x] is the block consumed at step x+1; evaluating the blocks in
    ascending index order on the empty core reaches the target.
    """

    blocks: tuple[ResidueWord, ...]
    k: int

    def word(self) -> ResidueWord:
        letters: list[int] = []
        for block in reversed(self.blocks):
            letters.extend(block.letters)
        return ResidueWord(tuple(letters), self.k)

    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b.letters) for b in self.blocks)


def alpha_factorizations(lam, alpha, k: int) -> list[Factorization]:
    """All factorizations of lam's grassmannian element with block sizes alpha.

    Blocks are subsets of [0, k] (each subset carries a unique cyclically
    decreasing element); a tuple of subsets qualifies when every letter finds
    a corner and the final core is the core image of lam.  Zero parts of
    alpha are skipped.
    """
    lam = check_partition(lam)
    if not is_k_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    sizes = [int(a) for a in alpha if int(a) != 0]
    if any(a < 0 or a > k for a in sizes):
        raise ValueError(f"composition must be k-bounded and nonnegative: {alpha}")
    target = Core.from_bounded(lam, k)
    results: list[Factorization] = []

    def rec(pos: int, core: Core, chosen: tuple[ResidueWord, ...]):
        if pos == len(sizes):
            if core.shape == target.shape:
                results.append(Factorization(chosen, k))
            return
        for subset in combinations(range(k + 1), sizes[pos]):
            try:
                nxt, _ = apply_block(core, subset, k)
            except DeadWordError:
                continue
            if not contains(target.shape, nxt.shape):
                continue
            if nxt.size() > degree(lam):
                continue
            rec(pos + 1, nxt, chosen + (cyclically_decreasing_word(subset, k),))

    rec(0, Core((), k), ())
    results.sort(key=lambda f: tuple(b.letters for b in f.blocks))
    return results


@dataclass(frozen=True)
class GrassmannianElement:
    """An affine grassmannian element, represented canonically by its core."""

    core: Core

    @property
    def k(self) -> int:
        return self.core.k

    @property
    def length(self) -> int:
        return self.core.size()

    def canonical_word(self) -> ResidueWord:
        return word_of_partition(self.core.to_bounded(), self.k)

    @staticmethod
    def from_partition(lam, k: int) -> "GrassmannianElement":
        return GrassmannianElement(Core.from_bounded(check_partition(lam), k))

    @staticmethod
    def from_word(word: ResidueWord) -> "GrassmannianElement":
        return GrassmannianElement(evaluate(word))
