"""Lower-Hessenberg matrix container and the four banded builders.

All four families share one layout: x on the diagonal, a constant on the
superdiagonal, and a single y-carrying sub-band at offset p below the
diagonal.  They differ only in the two constants:

    family   superdiagonal   band entry
    W        i               i^p * y
    M        -1              y
    H        -i              i^p * y
    K        1               y

Determinants of W and M, and permanents of H and K, all produce the same
polynomial sequence.
"""

from __future__ import annotations

from .ring import ONE, X, Y, BivarPoly, GI_I, ZERO, i_pow


class ShapeError(ValueError):
    """Raised when an entry grid is not lower Hessenberg."""


class HessenbergMatrix:
    """Immutable square lower-Hessenberg matrix over BivarPoly.

    ``band``, when given, records that the only nonzero sub-diagonal band
    sits at offset ``band`` below the main diagonal; evaluators may use it
    as a fast path but never rely on it for correctness.
    """

    __slots__ = ("_entries", "_n", "_band")

    def __init__(self, entries, band: int | None = None):
        rows = [tuple(row) for row in entries]
        n = len(rows)
        if n == 0:
            raise ShapeError("matrix order must be at least 1")
        for row in rows:
            if len(row) != n:
                raise ShapeError("matrix must be square")
        for i in range(n):
            for j in range(n):
                e = rows[i][j]
                if not isinstance(e, BivarPoly):
                    raise TypeError("entries must be BivarPoly")
                if j - i > 1 and not e.is_zero():
                    raise ShapeError(
                        f"entry ({i + 1},{j + 1}) above the superdiagonal is nonzero"
                    )
                if band is not None and i > j and i - j != band and not e.is_zero():
                    raise ShapeError(
                        f"entry ({i + 1},{j + 1}) off the recorded band {band} is nonzero"
                    )
        if band is not None and band < 0:
            raise ValueError("band offset must be nonnegative")
        self._entries = tuple(rows)
        self._n = n
        self._band = band

    @property
    def n(self) -> int:
        return self._n

    @property
    def band(self) -> int | None:
        return self._band

    def __getitem__(self, ij: tuple[int, int]) -> BivarPoly:
        """Entry at 0-based (row, col)."""
        i, j = ij
        return self._entries[i][j]

    def rows(self) -> tuple[tuple[BivarPoly, ...], ...]:
        return self._entries

    def scale_row(self, i: int, c) -> "HessenbergMatrix":
        """Copy with every entry of 0-based row i multiplied by c."""
        rows = [list(r) for r in self._entries]
        rows[i] = [e.scale(c) for e in rows[i]]
        return HessenbergMatrix(rows, band=self._band)

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self._entries
        )


def _build_banded(p: int, n: int, superdiag: BivarPoly, band_entry: BivarPoly) -> HessenbergMatrix:
    if p < 1:
        raise ValueError(f"band offset p must be >= 1, got {p}")
    if n < 1:
        raise ValueError(f"matrix order n must be >= 1, got {n}")
    rows = []
    for i in range(n):
        row = [ZERO] * n
        row[i] = X
        if i + 1 < n:
            row[i + 1] = superdiag
        if i - p >= 0:
            row[i - p] = band_entry
        rows.append(row)
    return HessenbergMatrix(rows, band=p)


def build_w(p: int, n: int) -> HessenbergMatrix:
    """W family: superdiagonal i, band entry i^p * y."""
    return _build_banded(p, n, BivarPoly.constant(GI_I), Y.scale(i_pow(p)))


def build_m(p: int, n: int) -> HessenbergMatrix:
    """M family: superdiagonal -1, band entry y."""
    return _build_banded(p, n, -ONE, Y)


def build_h(p: int, n: int) -> HessenbergMatrix:
    """H family: superdiagonal -i, band entry i^p * y."""
    return _build_banded(p, n, BivarPoly.constant(-GI_I), Y.scale(i_pow(p)))


def build_k(p: int, n: int) -> HessenbergMatrix:
    """K family: superdiagonal 1, band entry y."""
    return _build_banded(p, n, ONE, Y)
