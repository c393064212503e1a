"""Two-directional Wronskian determinants and the tau-function family.

The n-th tau function is the determinant of the n x n matrix whose (i, j)
entry is L_plus^i L_minus^j applied to the seed, built here with one operator
application per entry.  Determinants are evaluated by fraction-free one-step
elimination (divisions exact in the Laurent ring) with plain cofactor
expansion kept as an independent oracle.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Literal

from .laurent import (
    LaurentPoly,
    Monomial,
    ONE,
    ZERO,
    ExactDivisionError,
    exact_divide,
    parse,
    serialize,
)
from .operators import l_minus, l_plus
from .report import CheckReport

_HALF = Fraction(1, 2)


def build_psi() -> LaurentPoly:
    """Seed t*(x-y)/2 + (1/t)*(x+y)/2, i.e. t*v + u/t."""
    return LaurentPoly(
        {
            Monomial(1, 1, 0): _HALF,
            Monomial(1, 0, 1): -_HALF,
            Monomial(-1, 1, 0): _HALF,
            Monomial(-1, 0, 1): _HALF,
        }
    )


@dataclass(frozen=True)
class SymMatrix:
    """Immutable square matrix of Laurent polynomials."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        for row in self.entries:
            if len(row) != len(self.entries):
                raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]


def wronskian_matrix(seed: LaurentPoly, n: int) -> SymMatrix:
    """n x n matrix with entry(i, j) = L_plus^i L_minus^j seed.

    Row 0 is built by repeated L_minus from the seed and each later row by
    one L_plus per entry, so construction costs O(n^2) operator applications.
    """
    if n < 1:
        raise ValueError("matrix dimension must be at least 1")
    rows = [[seed]]
    for j in range(1, n):
        rows[0].append(l_minus(rows[0][j - 1]))
    for i in range(1, n):
        rows.append([l_plus(e) for e in rows[i - 1]])
    return SymMatrix(tuple(tuple(row) for row in rows))


def minor(m: SymMatrix, rows: Iterable[int], cols: Iterable[int]) -> SymMatrix:
    """Submatrix with the given 0-based rows and columns deleted."""
    drop_rows = set(rows)
    drop_cols = set(cols)
    if len(drop_rows) != len(drop_cols):
        raise ValueError("must delete equally many rows and columns")
    for idx in drop_rows | drop_cols:
        if not 0 <= idx < m.dim:
            raise IndexError(f"index {idx} out of range for dim {m.dim}")
    kept = tuple(
        tuple(m.entries[i][j] for j in range(m.dim) if j not in drop_cols)
        for i in range(m.dim)
        if i not in drop_rows
    )
    return SymMatrix(kept)


def leading_minor(m: SymMatrix, k: int) -> SymMatrix:
    if not 0 < k <= m.dim:
        raise ValueError(f"leading minor size {k} out of range")
    return SymMatrix(tuple(row[:k] for row in m.entries[:k]))


class DeterminantError(RuntimeError):
    """Internal inconsistency: an elimination division that must be exact failed."""


def det_cofactor(m: SymMatrix) -> LaurentPoly:
    """Cofactor expansion with memoized minors; the reference algorithm."""
    if m.dim == 0:
        return ONE
    cache: dict[tuple[int, ...], LaurentPoly] = {(): ONE}

    def rec(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        got = cache.get(cols)
        if got is not None:
            return got
        total = ZERO
        for pos, col in enumerate(cols):
            entry = m.entries[row][col]
            if entry.is_zero:
                continue
            sub = rec(row + 1, cols[:pos] + cols[pos + 1 :])
            piece = entry * sub
            total = total + piece if pos % 2 == 0 else total - piece
        cache[cols] = total
        return total

    return rec(0, tuple(range(m.dim)))


def det_fraction_free(m: SymMatrix) -> LaurentPoly:
    """One-step fraction-free elimination (Bareiss).

    Every division is by the previous pivot and is exact over an integral
    domain; a division failure therefore raises DeterminantError rather than
    a user-facing error.
    """
    n = m.dim
    if n == 0:
        return ONE
    a = [list(row) for row in m.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            for r in range(k + 1, n):
                if not a[r][k].is_zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                if num.is_zero:
                    a[i][j] = ZERO
                    continue
                try:
                    a[i][j] = exact_divide(num, prev)
                except ExactDivisionError as exc:
                    raise DeterminantError(
                        f"inexact pivot division at step {k}"
                    ) from exc
            a[i][k] = ZERO
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign > 0 else -result


Algo = Literal["fraction_free", "cofactor"]


def determinant(m: SymMatrix, algo: Algo = "fraction_free") -> LaurentPoly:
    if algo == "fraction_free":
        return det_fraction_free(m)
    if algo == "cofactor":
        return det_cofactor(m)
    raise ValueError(f"unknown determinant algorithm {algo!r}")


def leading_principal_minors(m: SymMatrix) -> list[LaurentPoly] | None:
    """All leading principal minor determinants from one elimination pass.

    The pivot entering step k of fraction-free elimination is exactly the
    (k+1)-dimensional leading principal minor, so a single pass yields the
    whole sequence.  Returns None when a pivot vanishes (a row swap would
    invalidate the harvest); callers then fall back to per-minor work.
    """
    n = m.dim
    a = [list(row) for row in m.entries]
    out: list[LaurentPoly] = []
    prev = ONE
    for k in range(n - 1):
        pivot = a[k][k]
        if pivot.is_zero:
            return None
        out.append(pivot)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                if num.is_zero:
                    a[i][j] = ZERO
                    continue
                try:
                    a[i][j] = exact_divide(num, prev)
                except ExactDivisionError as exc:
                    raise DeterminantError(
                        f"inexact pivot division at step {k}"
                    ) from exc
        prev = pivot
    out.append(a[n - 1][n - 1])
    return out


@dataclass
class TauFamily:
    """Cached tau, g and f sequences for lattice sites 0..n_max.

    g_n equals tau_n; f_n is the (n-1)-dimensional Wronskian determinant of
    the once-shifted seed L_plus L_minus psi, with f_1 = 1 (empty determinant)
    and f_0 = 0 (the semi-infinite lattice cuts the chain below site zero).
    """

    n_max: int
    tau: list[LaurentPoly]
    g: list[LaurentPoly]
    f: list[LaurentPoly]

    @classmethod
    def build(cls, n_max: int, algo: Algo = "fraction_free") -> "TauFamily":
        if n_max < 1:
            raise ValueError("n_max must be at least 1")
        psi = build_psi()
        tau = [ONE] + cls._minor_sequence(wronskian_matrix(psi, n_max), algo)
        f: list[LaurentPoly] = [ZERO, ONE]
        if n_max >= 2:
            shifted = l_plus(l_minus(psi))
            f += cls._minor_sequence(wronskian_matrix(shifted, n_max - 1), algo)
        return cls(n_max=n_max, tau=tau, g=list(tau), f=f)

    @staticmethod
    def _minor_sequence(matrix: SymMatrix, algo: Algo) -> list[LaurentPoly]:
        if algo == "fraction_free":
            harvested = leading_principal_minors(matrix)
            if harvested is not None:
                return harvested
        return [
            determinant(leading_minor(matrix, k), algo)
            for k in range(1, matrix.dim + 1)
        ]

    # -- cache file: one '<key> n=<k>: <polynomial>' line per entry ---------

    def save(self, path: str | Path) -> None:
        lines = []
        for key, seq in (("tau", self.tau), ("g", self.g), ("f", self.f)):
            for k, poly in enumerate(seq):
                lines.append(f"{key} n={k}: {serialize(poly)}")
        Path(path).write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "TauFamily":
        pattern = re.compile(r"^(tau|g|f) n=(\d+): (.*)$")
        found: dict[str, dict[int, LaurentPoly]] = {"tau": {}, "g": {}, "f": {}}
        text = Path(path).read_text()
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            match = pattern.match(line)
            if match is None:
                raise ValueError(f"{path}:{lineno}: malformed cache line")
            key, k, body = match.group(1), int(match.group(2)), match.group(3)
            found[key][k] = parse(body)
        n_max = max(found["tau"], default=-1)
        if n_max < 1:
            raise ValueError(f"{path}: cache holds no tau entries")
        for key in ("tau", "g", "f"):
            missing = [k for k in range(n_max + 1) if k not in found[key]]
            if missing:
                raise ValueError(f"{path}: missing {key} entries for n={missing}")
        return cls(
            n_max=n_max,
            tau=[found["tau"][k] for k in range(n_max + 1)],
            g=[found["g"][k] for k in range(n_max + 1)],
            f=[found["f"][k] for k in range(n_max + 1)],
        )


def jacobi_residual(n: int, algo: Algo = "fraction_free") -> LaurentPoly:
    """Sylvester minor identity residual on the (n+1) x (n+1) seed Wronskian.

    With 1-based minor notation D[i; j] deleting row i and column j, the
    residual is D[n;n] D[n+1;n+1] - D[n+1;n] D[n;n+1] - D * D[{n,n+1};{n,n+1}].
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = wronskian_matrix(build_psi(), n + 1)
    r, s = n - 1, n  # 0-based positions of rows/cols n and n+1
    d = determinant(m, algo)
    d_rr = determinant(minor(m, {r}, {r}), algo)
    d_ss = determinant(minor(m, {s}, {s}), algo)
    d_sr = determinant(minor(m, {s}, {r}), algo)
    d_rs = determinant(minor(m, {r}, {s}), algo)
    d_both = determinant(minor(m, {r, s}, {r, s}), algo)
    return d_rr * d_ss - d_sr * d_rs - d * d_both


def jacobi_identity_check(n: int, algo: Algo = "fraction_free") -> CheckReport:
    started = time.perf_counter()
    residual = jacobi_residual(n, algo)
    elapsed = time.perf_counter() - started
    if residual.is_zero:
        return CheckReport("jacobi", n, elapsed=elapsed)
    mono, coeff = residual.leading_term()
    return CheckReport(
        "jacobi",
        n,
        status="fail",
        witness=serialize(LaurentPoly({mono: coeff})),
        term_count=residual.term_count,
        elapsed=elapsed,
    )
