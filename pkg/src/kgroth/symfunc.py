"""Graded integer symmetric-function arithmetic over the m, h, e, s bases.

Coefficients are exact Python integers.  A SymFunc is a finitely supported
map from partitions to integers tagged with a basis; deg_max carries the
truncation bound of inherently infinite expansions (None means exact).
Monomial-basis elements may additionally be tagged with a level k, in which
case they live in the quotient by the span of monomials with a part above k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import check_partition, degree, partitions_of
from .tableaux import count_semistandard

BASES = ("m", "h", "e", "s")


@dataclass(frozen=True, eq=False)
class SymFunc:
    basis: str
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)
    deg_max: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.k is not None and self.basis != "m":
            raise ValueError("only monomial-basis elements live in the quotient")
        clean: dict[tuple[int, ...], int] = {}
        for key, c in self.coeffs.items():
            lam = check_partition(key)
            c = int(c)
            if c == 0:
                continue
            if self.deg_max is not None and degree(lam) > self.deg_max:
                continue
            if self.k is not None and lam and lam[0] > self.k:
                continue
            clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {a: b for a, b in clean.items() if b})

    # -- inspection ---------------------------------------------------------

    def coeff(self, lam) -> int:
        return self.coeffs.get(check_partition(lam), 0)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.coeffs.items(), key=lambda t: (degree(t[0]), t[0]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_degree(self) -> int:
        return max((degree(lam) for lam in self.coeffs), default=0)

    def min_degree(self) -> int:
        return min((degree(lam) for lam in self.coeffs), default=0)

    def homogeneous(self, d: int) -> "SymFunc":
        part = {lam: c for lam, c in self.coeffs.items() if degree(lam) == d}
        return SymFunc(self.basis, part, self.deg_max, self.k)

    def truncate(self, deg_max: int | None) -> "SymFunc":
        bound = _min_bound(self.deg_max, deg_max)
        return SymFunc(self.basis, self.coeffs, bound, self.k)

    def __eq__(self, other) -> bool:
        # deg_max is bookkeeping, not part of the value
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.basis, self.k, tuple(self.terms())))

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for lam, c in self.terms():
            name = f"{self.basis}{list(lam)}"
            bits.append(f"{'+' if c >= 0 else '-'} {abs(c) if abs(c) != 1 else ''}{name}")
        text = " ".join(bits).lstrip("+ ")
        if self.deg_max is not None:
            text += f"  (deg<={self.deg_max})"
        return text

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError(f"cannot add {self.basis}- and {other.basis}-expansions")
        k = _merge_levels(self.k, other.k)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, out, _min_bound(self.deg_max, other.deg_max), k)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {a: -b for a, b in self.coeffs.items()}, self.deg_max, self.k)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return SymFunc(
                self.basis, {a: scalar * b for a, b in self.coeffs.items()}, self.deg_max, self.k
            )
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError(f"cannot multiply {self.basis}- and {other.basis}-expansions")
        k = _merge_levels(self.k, other.k)
        bound = _min_bound(self.deg_max, other.deg_max)
        out: dict[tuple[int, ...], int] = {}
        if self.basis in ("h", "e"):
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    key = tuple(sorted(a + b, reverse=True))
                    if bound is not None and degree(key) > bound:
                        continue
                    out[key] = out.get(key, 0) + ca * cb
        elif self.basis == "m":
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    if bound is not None and degree(a) + degree(b) > bound:
                        continue
                    for key, mult in _m_mult(a, b).items():
                        out[key] = out.get(key, 0) + ca * cb * mult
        else:  # schur: route through the monomial basis
            prod = convert(self, "m") * convert(other, "m")
            return convert(prod.truncate(bound), "s")
        return SymFunc(self.basis, out, bound, k)


def _min_bound(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _merge_levels(a: int | None, b: int | None) -> int | None:
    if a is not None and b is not None and a != b:
        raise ValueError(f"incompatible levels k={a} and k={b}")
    return a if a is not None else b


def h(lam=(), coeff: int = 1, deg_max: int | None = None) -> SymFunc:
    return SymFunc("h", {check_partition(lam): coeff}, deg_max)


def e(lam=(), coeff: int = 1, deg_max: int | None = None) -> SymFunc:
    return SymFunc("e", {check_partition(lam): coeff}, deg_max)


def m(lam=(), coeff: int = 1, deg_max: int | None = None, k: int | None = None) -> SymFunc:
    return SymFunc("m", {check_partition(lam): coeff}, deg_max, k)


def s(lam=(), coeff: int = 1, deg_max: int | None = None) -> SymFunc:
    return SymFunc("s", {check_partition(lam): coeff}, deg_max)


def zero(basis: str = "h") -> SymFunc:
    return SymFunc(basis, {})


# ---------------------------------------------------------------------------
# monomial multiplication


def distinct_permutations(values: tuple[int, ...]):
    """All distinct orderings of a multiset of integers."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    n = len(values)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                out.append(v)
                yield from rec()
                out.pop()
                counts[v] += 1

    yield from rec()


@cache
def _m_mult(lam: tuple[int, ...], mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Coefficients of m_lam * m_mu: pairs of exponent vectors summing sorted."""
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    n = len(lam) + len(mu)
    lam_pad = lam + (0,) * (n - len(lam))
    mu_pad = mu + (0,) * (n - len(mu))
    out: dict[tuple[int, ...], int] = {}
    for a in distinct_permutations(lam_pad):
        for b in distinct_permutations(mu_pad):
            v = tuple(x + y for x, y in zip(a, b))
            if any(v[i] < v[i + 1] for i in range(n - 1)):
                continue
            key = tuple(x for x in v if x)
            out[key] = out.get(key, 0) + 1
    return out


# ---------------------------------------------------------------------------
# transition coefficients


@cache
def _matrix_count(rows: tuple[int, ...], cols: tuple[int, ...], zero_one: bool) -> int:
    """Matrices with given row/column sums; 0/1 entries when zero_one."""
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    first, rest = rows[0], rows[1:]
    total = 0

    def rec(j: int, remaining: int, left: tuple[int, ...]):
        nonlocal total
        if j == len(cols):
            if remaining == 0:
                canon = tuple(sorted((v for v in left if v), reverse=True))
                total += _matrix_count(rest, canon, zero_one)
            return
        hi = min(remaining, cols[j], 1 if zero_one else remaining)
        for v in range(hi + 1):
            rec(j + 1, remaining - v, left + (cols[j] - v,))

    rec(0, first, ())
    return total


@cache
def _h_in_m(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {
        mu: c
        for mu in partitions_of(degree(lam))
        if (c := _matrix_count(lam, mu, False))
    }


@cache
def _e_in_m(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {
        mu: c
        for mu in partitions_of(degree(lam))
        if (c := _matrix_count(lam, mu, True))
    }


@cache
def _s_in_m(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {
        mu: c
        for mu in partitions_of(degree(lam))
        if (c := count_semistandard(lam, mu))
    }


@cache
def _e_r_in_h(r: int) -> dict[tuple[int, ...], int]:
    """Newton recurrence: e_r = sum_{i>=1} (-1)^(i-1) h_i e_{r-i}."""
    if r == 0:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    for i in range(1, r + 1):
        sign = -1 if i % 2 == 0 else 1
        for key, c in _e_r_in_h(r - i).items():
            merged = tuple(sorted(key + (i,), reverse=True))
            out[merged] = out.get(merged, 0) + sign * c
    return {a: b for a, b in out.items() if b}


def _h_product(factors: list[dict[tuple[int, ...], int]]) -> dict[tuple[int, ...], int]:
    acc: dict[tuple[int, ...], int] = {(): 1}
    for fac in factors:
        nxt: dict[tuple[int, ...], int] = {}
        for a, ca in acc.items():
            for b, cb in fac.items():
                key = tuple(sorted(a + b, reverse=True))
                nxt[key] = nxt.get(key, 0) + ca * cb
        acc = nxt
    return {a: b for a, b in acc.items() if b}


@cache
def _e_in_h(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return _h_product([_e_r_in_h(r) for r in lam])


@cache
def _s_in_h(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Jacobi-Trudi: determinant of complete functions, expanded exactly."""
    n = len(lam)
    if n == 0:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    for perm, sign in _signed_permutations(n):
        idx = []
        ok = True
        for i in range(n):
            v = lam[i] + perm[i] - i
            if v < 0:
                ok = False
                break
            if v > 0:
                idx.append(v)
        if not ok:
            continue
        key = tuple(sorted(idx, reverse=True))
        out[key] = out.get(key, 0) + sign
    return {a: b for a, b in out.items() if b}


def _signed_permutations(n: int):
    def rec(remaining: list[int], acc: list[int], sign: int):
        if not remaining:
            yield tuple(acc), sign
            return
        for idx, v in enumerate(remaining):
            yield from rec(remaining[:idx] + remaining[idx + 1 :], acc + [v], sign * (-1) ** idx)

    yield from rec(list(range(n)), [], 1)


@cache
def _m_inverse_matrix(d: int, target: str) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """m_lam expanded in the target basis, for every partition of d."""
    forward = {"h": _h_in_m, "e": _e_in_m, "s": _s_in_m}[target]
    parts = partitions_of(d)
    n = len(parts)
    index = {lam: i for i, lam in enumerate(parts)}
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, lam in enumerate(parts):
        for mu, c in forward(lam).items():
            mat[i][index[mu]] = Fraction(c)
    inv = _invert(mat)
    out = {}
    for j, mu in enumerate(parts):
        row = {}
        for i, lam in enumerate(parts):
            v = inv[j][i]
            if v:
                if v.denominator != 1:
                    raise ArithmeticError("transition inverse must be integral")
                row[lam] = int(v)
        out[mu] = row
    return out


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def convert(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis among m, h, e, s; truncation bound is preserved."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target and (target != "m" or f.k is None):
        return f
    if f.k is not None and target != "m":
        raise ValueError("a quotient element has no well-defined lift; convert before projecting")
    if target == "m":
        table = {"h": _h_in_m, "e": _e_in_m, "s": _s_in_m, "m": None}[f.basis]
        out: dict[tuple[int, ...], int] = {}
        if table is None:
            out = dict(f.coeffs)
        else:
            for lam, c in f.coeffs.items():
                for mu, t in table(lam).items():
                    out[mu] = out.get(mu, 0) + c * t
        return SymFunc("m", out, f.deg_max, f.k)
    if f.basis == "m":
        out = {}
        for lam, c in f.coeffs.items():
            for mu, t in _m_inverse_matrix(degree(lam), target)[lam].items():
                out[mu] = out.get(mu, 0) + c * t
        return SymFunc(target, out, f.deg_max)
    if target == "h":
        table = {"e": _e_in_h, "s": _s_in_h}[f.basis]
        out = {}
        for lam, c in f.coeffs.items():
            for mu, t in table(lam).items():
                out[mu] = out.get(mu, 0) + c * t
        return SymFunc("h", out, f.deg_max)
    if target == "e":
        # omega duality: the e-expansion of h_lam mirrors the h-expansion of
        # e_lam, and the e-expansion of s_lam is the h-expansion of s_lam'
        if f.basis == "h":
            out = {}
            for lam, c in f.coeffs.items():
                for mu, t in _e_in_h(lam).items():
                    out[mu] = out.get(mu, 0) + c * t
            return SymFunc("e", out, f.deg_max)
        return convert(convert(f, "m"), "e")
    # target == 's'
    return convert(convert(f, "m"), "s")


def project_bounded(f: SymFunc, k: int) -> SymFunc:
    """Image in the quotient: monomial terms with a part above k vanish."""
    g = convert(f, "m")
    return SymFunc("m", g.coeffs, g.deg_max, k)


def hall_inner(f: SymFunc, g: SymFunc) -> int:
    """Hall pairing via <h_lam, m_mu> = delta; exact on sufficient truncations."""
    fh = convert(f, "h")
    gm = g if g.basis == "m" else convert(g, "m")
    if not fh.coeffs:
        return 0
    need = fh.max_degree()
    if gm.deg_max is not None and gm.deg_max < need:
        raise ValueError(
            f"pairing needs the m-side up to degree {need}, only {gm.deg_max} available"
        )
    return sum(c * gm.coeffs.get(lam, 0) for lam, c in fh.coeffs.items())


def binomial(n: int, j: int) -> int:
    """Falling-factorial binomial, defined for any integer n; 0 for j < 0."""
    if j < 0:
        return 0
    num = 1
    for t in range(j):
        num *= n - t
    val, rem = divmod(num, factorial(j))
    assert rem == 0
    return val
