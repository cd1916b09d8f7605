"""Dense matrices over the max-plus semiring and generalized permutation matrices.

`TropMatrix` is an immutable rectangular array of `Trop` scalars with the
max-plus product (A ⊗ B)_ij = max_k(a_ik + b_kj) and the dual min-plus
product.  `GenPermMatrix` stores a permutation σ together with finite row
weights w_i (the finite entry of row i sits in column σ(i)); these are the
only invertible max-plus matrices, so composition, inversion and congruence
PᵗAP stay O(n)/O(n²) and exact.

The Kronecker product A ⊠ B, column-major vec and the transpose permutation
T with T·vec(Y) = vec(Yᵗ) live here as well; they reduce matrix equations of
the form D Y = Yᵗ D to two-sided systems over vec(Y).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import perms
from .semiring import EPS, Trop, as_trop, t_add, t_min, t_mul


class TropMatrix:
    """Immutable dense matrix over T = Q ∪ {ε}."""

    __slots__ = ("_entries", "_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(as_trop(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix dimensions must be at least 1x1")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged rows in matrix literal")
        self._entries = entries
        self._rows = len(entries)
        self._cols = width

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls([[Trop(0) if i == j else EPS for j in range(n)] for i in range(n)])

    @classmethod
    def all_eps(cls, rows: int, cols: int) -> "TropMatrix":
        return cls([[EPS] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "TropMatrix":
        vals = [as_trop(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else EPS for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, ij: tuple[int, int]) -> Trop:
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Trop, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[Trop, ...]:
        return tuple(row[j] for row in self._entries)

    def entries(self) -> tuple[tuple[Trop, ...], ...]:
        return self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._entries)
        return "TropMatrix(%dx%d: %s)" % (self._rows, self._cols, body)

    def is_finite(self) -> bool:
        return all(x.is_finite for row in self._entries for x in row)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self._rows)
            for j in range(i + 1, self._rows)
        )

    def is_skew_symmetric(self) -> bool:
        """a_ij = ε whenever a_ji ≠ ε (forces an ε diagonal)."""
        if not self.is_square:
            return False
        for i in range(self._rows):
            for j in range(self._rows):
                if self._entries[j][i].is_finite and self._entries[i][j].is_finite:
                    return False
        return True

    @property
    def T(self) -> "TropMatrix":
        return TropMatrix(
            [[self._entries[i][j] for i in range(self._rows)] for j in range(self._cols)]
        )

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        """Max-plus product: entry (i,j) = max_k (a_ik + b_kj), ε summands dropped."""
        if not isinstance(other, TropMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ValueError(
                "dimension mismatch: %dx%d @ %dx%d"
                % (self._rows, self._cols, other._rows, other._cols)
            )
        out = []
        for i in range(self._rows):
            arow = self._entries[i]
            orow = []
            for j in range(other._cols):
                best = None
                for k in range(self._cols):
                    a = arow[k]._value
                    if a is None:
                        continue
                    b = other._entries[k][j]._value
                    if b is None:
                        continue
                    s = a + b
                    if best is None or s > best:
                        best = s
                orow.append(EPS if best is None else Trop(best))
            out.append(orow)
        return TropMatrix(out)

    def min_mul(self, other: "TropMatrix") -> "TropMatrix":
        """Min-plus product (A ⊗' B)_ij = min_k (a_ik + b_kj); ε stays absorbing."""
        if self._cols != other._rows:
            raise ValueError("dimension mismatch in min-plus product")
        out = []
        for i in range(self._rows):
            orow = []
            for j in range(other._cols):
                acc = None
                for k in range(self._cols):
                    term = t_mul(self._entries[i][k], other._entries[k][j])
                    acc = term if acc is None else t_min(acc, term)
                orow.append(acc)
            out.append(orow)
        return TropMatrix(out)

    def t_sum(self, other: "TropMatrix") -> "TropMatrix":
        """Entrywise ⊕ (max)."""
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("dimension mismatch in entrywise sum")
        return TropMatrix(
            [
                [t_add(self._entries[i][j], other._entries[i][j]) for j in range(self._cols)]
                for i in range(self._rows)
            ]
        )

    def scalar_mul(self, c) -> "TropMatrix":
        """λ ⊗ A: add λ to every entry (all-ε result for λ = ε)."""
        c = as_trop(c)
        return TropMatrix(
            [[t_mul(c, x) for x in row] for row in self._entries]
        )

    def power(self, k: int) -> "TropMatrix":
        if not self.is_square:
            raise ValueError("powers need a square matrix")
        if k < 0:
            raise ValueError("negative tropical powers are not defined here")
        acc = TropMatrix.identity(self._rows)
        for _ in range(k):
            acc = acc @ self
        return acc

    def to_lists(self) -> list[list[Trop]]:
        return [list(row) for row in self._entries]


def kron(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Kronecker product A ⊠ B: block (i,j) is a_ij ⊗ B."""
    out = []
    for i in range(a.rows):
        for bi in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a[i, j]
                for bj in range(b.cols):
                    row.append(t_mul(aij, b[bi, bj]))
            out.append(row)
    return TropMatrix(out)


def vec(y: TropMatrix) -> tuple[Trop, ...]:
    """Column-major vectorisation: [[x1,x3],[x2,x4]] ↦ (x1,x2,x3,x4)."""
    return tuple(y[i, j] for j in range(y.cols) for i in range(y.rows))


def unvec(values: Sequence, rows: int) -> TropMatrix:
    vals = [as_trop(v) for v in values]
    if rows <= 0 or len(vals) % rows:
        raise ValueError("vector length %d is not a multiple of %d rows" % (len(vals), rows))
    cols = len(vals) // rows
    return TropMatrix([[vals[j * rows + i] for j in range(cols)] for i in range(rows)])


def vec_index(n: int, i: int, j: int) -> int:
    """Position of entry (i,j) of an n×n matrix inside vec (0-based)."""
    return j * n + i


class GenPermMatrix:
    """Generalized permutation matrix: finite weight w_i at (i, σ(i)), ε elsewhere."""

    __slots__ = ("_n", "_sigma", "_weights")

    def __init__(self, sigma: Sequence[int], weights: Sequence | None = None):
        self._sigma = perms.check_permutation(sigma)
        self._n = len(self._sigma)
        if weights is None:
            self._weights = (Fraction(0),) * self._n
        else:
            ws = tuple(Fraction(w) for w in weights)
            if len(ws) != self._n:
                raise ValueError("need one finite weight per row")
            self._weights = ws

    @classmethod
    def identity(cls, n: int) -> "GenPermMatrix":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def sigma(self) -> tuple[int, ...]:
        return self._sigma

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self._weights

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenPermMatrix):
            return NotImplemented
        return self._sigma == other._sigma and self._weights == other._weights

    def __hash__(self) -> int:
        return hash((self._sigma, self._weights))

    def __repr__(self) -> str:
        return "GenPermMatrix(sigma=%r, weights=%r)" % (self._sigma, self._weights)

    def dense(self) -> TropMatrix:
        rows = []
        for i in range(self._n):
            row = [EPS] * self._n
            row[self._sigma[i]] = Trop(self._weights[i])
            rows.append(row)
        return TropMatrix(rows)

    def transpose(self) -> "GenPermMatrix":
        inv = perms.invert(self._sigma)
        return GenPermMatrix(inv, [self._weights[inv[j]] for j in range(self._n)])

    def inverse(self) -> "GenPermMatrix":
        inv = perms.invert(self._sigma)
        return GenPermMatrix(inv, [-self._weights[inv[j]] for j in range(self._n)])

    def __matmul__(self, other: "GenPermMatrix") -> "GenPermMatrix":
        """Composition matching the dense product: dense(P @ Q) = dense(P) ⊗ dense(Q)."""
        if not isinstance(other, GenPermMatrix):
            return NotImplemented
        if self._n != other._n:
            raise ValueError("dimension mismatch in gen-perm composition")
        sigma = perms.compose(self._sigma, other._sigma)
        weights = [
            self._weights[i] + other._weights[self._sigma[i]] for i in range(self._n)
        ]
        return GenPermMatrix(sigma, weights)

    def congruence(self, a: TropMatrix) -> TropMatrix:
        """PᵗAP, via the entry formula (PᵗAP)_{σ(i)σ(j)} = a_ij + w_i + w_j."""
        if not a.is_square or a.rows != self._n:
            raise ValueError("dimension mismatch in congruence")
        out: list[list[Trop]] = [[EPS] * self._n for _ in range(self._n)]
        for i in range(self._n):
            for j in range(self._n):
                x = a[i, j]
                if x.is_finite:
                    out[self._sigma[i]][self._sigma[j]] = Trop(
                        x.value + self._weights[i] + self._weights[j]
                    )
        return TropMatrix(out)


def genperm_congruence(p: GenPermMatrix, a: TropMatrix) -> TropMatrix:
    return p.congruence(a)


def vec_transpose_perm(n: int) -> GenPermMatrix:
    """The permutation matrix T with T ⊗ vec(Y) = vec(Yᵗ) for n×n Y, zero weights.

    Fixed points are the diagonal positions k·n + k (0-based), one per k.
    """
    sigma = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            sigma[vec_index(n, i, j)] = vec_index(n, j, i)
    return GenPermMatrix(sigma)
