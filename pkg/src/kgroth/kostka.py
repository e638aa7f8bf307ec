"""Affine set-valued Kostka numbers: memoized columns, bulk matrices, cache.

The numbers count tableaux of a given shape and weight; one dynamic-programming
sweep per weight produces a whole column at once.  Bulk matrices are persisted
as versioned JSON, written atomically so concurrent readers never see a torn
file.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from functools import cache

from .partitions import check_partition, degree, is_k_bounded, k_bounded_up_to
from .tableaux import kostka_column

FORMAT_VERSION = 1


@cache
def _column(mu: tuple[int, ...], k: int, deg_max: int) -> dict[tuple[int, ...], int]:
    return kostka_column(mu, k, deg_max)


def affine_kostka(lam, mu, k: int) -> int:
    """The affine set-valued Kostka number for shape lam and weight mu.

    The weight is sorted into a partition first; rearranging it never changes
    the count, which the symmetry suite checks composition by composition.
    """
    lam = check_partition(lam)
    mu = tuple(sorted((int(a) for a in mu if int(a)), reverse=True))
    if not is_k_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    if any(a < 0 or a > k for a in mu):
        raise ValueError(f"weight must be k-bounded and nonnegative: {mu}")
    if degree(lam) > sum(mu):
        return 0
    for (kk, bound), matrix in _MEMO.items():
        if kk == k and bound >= sum(mu):
            return matrix.entries.get((lam, mu), 0)
    return _column(mu, k, degree(lam)).get(lam, 0)


@dataclass(frozen=True)
class KostkaMatrix:
    """All affine set-valued Kostka numbers with k-bounded indices up to deg_max."""

    k: int
    deg_max: int
    entries: dict[tuple[tuple[int, ...], tuple[int, ...]], int]

    def entry(self, lam, mu) -> int:
        return self.entries.get((check_partition(lam), check_partition(mu)), 0)

    def shapes(self) -> list[tuple[int, ...]]:
        return k_bounded_up_to(self.deg_max, self.k)


_MEMO: dict[tuple[int, int], KostkaMatrix] = {}


def build_affine_kostka(k: int, deg_max: int, cache_dir: str | None = None) -> KostkaMatrix:
    """Build (or load) the matrix of entries with |lam| <= |mu| <= deg_max."""
    if deg_max < 0:
        raise ValueError("deg_max must be nonnegative")
    key = (k, deg_max)
    matrix = _MEMO.get(key)
    if matrix is None and cache_dir:
        matrix = _load(k, deg_max, cache_dir)
    if matrix is None:
        entries: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for mu in k_bounded_up_to(deg_max, k):
            for lam, count in _column(mu, k, degree(mu)).items():
                if count:
                    entries[(lam, mu)] = count
        matrix = KostkaMatrix(k, deg_max, entries)
    _MEMO[key] = matrix
    if cache_dir and not os.path.exists(_cache_path(k, deg_max, cache_dir)):
        _save(matrix, cache_dir)
    return matrix


def _cache_path(k: int, deg_max: int, cache_dir: str) -> str:
    return os.path.join(cache_dir, f"affine_kostka_k{k}_d{deg_max}_v{FORMAT_VERSION}.json")


def _load(k: int, deg_max: int, cache_dir: str) -> KostkaMatrix | None:
    path = _cache_path(k, deg_max, cache_dir)
    try:
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("format_version") != FORMAT_VERSION or data.get("k") != k:
        return None
    entries = {
        (tuple(lam), tuple(mu)): int(v) for lam, mu, v in data.get("entries", [])
    }
    return KostkaMatrix(k, deg_max, entries)


def _save(matrix: KostkaMatrix, cache_dir: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(matrix.k, matrix.deg_max, cache_dir)
    payload = {
        "format_version": FORMAT_VERSION,
        "k": matrix.k,
        "deg_max": matrix.deg_max,
        "entries": [
            [list(lam), list(mu), v]
            for (lam, mu), v in sorted(matrix.entries.items())
        ],
    }
    # write-then-rename keeps readers away from partial files
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def default_cache_dir() -> str | None:
    """Resolve the cache directory from the environment; None disables caching."""
    env = os.environ.get("KGROTH_CACHE_DIR")
    if env:
        return env
    return None
