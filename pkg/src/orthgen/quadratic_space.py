"""Split quadratic spaces and exact matrix arithmetic over them.

The odd space of rank n has coordinates (x0, u1..un, v1..vn), stored
0-based: the center x0 at index 0, u_i at index i, v_i at index n + i.
Its bilinear form is phi(x, y) = 2*x0*y0 + sum_i (x_ui*y_vi + x_vi*y_ui),
with quadratic form q(x) = x0^2 + sum_i x_ui*x_vi, so phi(x, x) = 2*q(x).
The even space drops the center coordinate and shifts everything down
by one.  Matrices and vectors hold raw ring payloads; indexing hands
back Scalars.
"""

from __future__ import annotations

from .errors import (
    IndexOutOfRange,
    JSONFormatError,
    NotAUnit,
    NotMonomial,
    NotTOShape,
    NotUnipotent,
    RingMismatch,
    UnsupportedRing,
)
from .rings import IdealDescriptor, Ring, Scalar, residue_ring, ring_from_string

__all__ = [
    "Matrix",
    "Vector",
    "SplitVector",
    "FormContext",
    "is_orthogonal",
    "orthogonal_inverse",
    "monomial_pattern",
    "unitriangular_inverse",
    "matrix_inverse_local",
    "matrices_congruent",
    "matrix_in_ideal",
    "matrix_residue",
    "matrix_lift",
    "one_perp",
    "even_part",
]


class Vector:
    """Column vector of ring payloads."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring: Ring, comps, copy: bool = True) -> None:
        self.ring = ring
        self.comps = list(comps) if copy else comps

    @classmethod
    def zero(cls, ring: Ring, dim: int) -> "Vector":
        return cls(ring, [ring.zero] * dim, copy=False)

    @classmethod
    def basis(cls, ring: Ring, dim: int, idx: int) -> "Vector":
        if not 0 <= idx < dim:
            raise IndexOutOfRange(f"index {idx} outside 0..{dim - 1}")
        comps = [ring.zero] * dim
        comps[idx] = ring.one
        return cls(ring, comps, copy=False)

    @classmethod
    def from_scalars(cls, ring: Ring, items) -> "Vector":
        comps = []
        for x in items:
            if isinstance(x, Scalar):
                if x.ring != ring:
                    raise RingMismatch(f"{x.ring.descriptor} vs {ring.descriptor}")
                comps.append(x.payload)
            else:
                comps.append(ring.from_int(x))
        return cls(ring, comps, copy=False)

    def __len__(self) -> int:
        return len(self.comps)

    def __getitem__(self, idx: int) -> Scalar:
        return Scalar(self.ring, self.comps[idx])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Vector)
            and other.ring == self.ring
            and other.comps == self.comps
        )

    def __repr__(self) -> str:
        return "(" + ", ".join(self.ring.show(c) for c in self.comps) + ")"

    def copy(self) -> "Vector":
        return Vector(self.ring, self.comps)

    def __add__(self, other: "Vector") -> "Vector":
        R = self.ring
        if other.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {other.ring.descriptor}")
        return Vector(R, [R.add(a, b) for a, b in zip(self.comps, other.comps)], copy=False)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        R = self.ring
        return Vector(R, [R.neg(a) for a in self.comps], copy=False)

    def scale(self, x: Scalar) -> "Vector":
        R = self.ring
        if x.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {x.ring.descriptor}")
        p = x.payload
        return Vector(R, [R.mul(p, a) for a in self.comps], copy=False)

    def dot(self, other: "Vector") -> Scalar:
        R = self.ring
        if other.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {other.ring.descriptor}")
        acc = R.zero
        for a, b in zip(self.comps, other.comps):
            acc = R.add(acc, R.mul(a, b))
        return Scalar(R, acc)

    def outer(self, other: "Vector") -> "Matrix":
        """self as a column times other as a row."""
        R = self.ring
        if other.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {other.ring.descriptor}")
        rows = []
        for a in self.comps:
            if R.is_zero(a):
                rows.append([R.zero] * len(other.comps))
            else:
                rows.append([R.mul(a, b) for b in other.comps])
        return Matrix(R, rows, copy=False)

    def is_zero(self) -> bool:
        R = self.ring
        return all(R.is_zero(c) for c in self.comps)


class SplitVector:
    """Odd-space column given by its blocks (v0, vprime, vdprime)."""

    __slots__ = ("ring", "v0", "vp", "vdp")

    def __init__(self, ring: Ring, v0, vp, vdp, copy: bool = True) -> None:
        if len(vp) != len(vdp) or not vp:
            raise IndexOutOfRange("vp and vdp must be nonempty blocks of equal length")
        self.ring = ring
        self.v0 = v0
        self.vp = list(vp) if copy else vp
        self.vdp = list(vdp) if copy else vdp

    @property
    def n(self) -> int:
        return len(self.vp)

    @classmethod
    def from_scalars(cls, ring: Ring, v0, vp, vdp) -> "SplitVector":
        def pay(x):
            if isinstance(x, Scalar):
                if x.ring != ring:
                    raise RingMismatch(f"{x.ring.descriptor} vs {ring.descriptor}")
                return x.payload
            return ring.from_int(x)

        return cls(ring, pay(v0), [pay(x) for x in vp], [pay(x) for x in vdp], copy=False)

    @classmethod
    def from_vector(cls, ctx: "FormContext", v: Vector) -> "SplitVector":
        if not ctx.odd or len(v) != ctx.dim:
            raise IndexOutOfRange("split blocks need an odd context of matching size")
        n = ctx.n
        return cls(v.ring, v.comps[0], v.comps[1 : n + 1], v.comps[n + 1 :])

    def to_vector(self, ctx: "FormContext") -> Vector:
        if not ctx.odd or ctx.n != self.n:
            raise IndexOutOfRange("split blocks need an odd context of matching size")
        return Vector(self.ring, [self.v0] + self.vp + self.vdp)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SplitVector)
            and other.ring == self.ring
            and self.ring.eq(other.v0, self.v0)
            and len(other.vp) == len(self.vp)
            and all(self.ring.eq(a, b) for a, b in zip(other.vp, self.vp))
            and all(self.ring.eq(a, b) for a, b in zip(other.vdp, self.vdp))
        )

    def __repr__(self) -> str:
        sh = self.ring.show
        return (
            f"({sh(self.v0)} | "
            + ", ".join(sh(c) for c in self.vp)
            + " | "
            + ", ".join(sh(c) for c in self.vdp)
            + ")"
        )

    def to_json(self) -> dict:
        R = self.ring
        return {
            "n": self.n,
            "v0": R.to_json(self.v0),
            "vp": [R.to_json(x) for x in self.vp],
            "vdp": [R.to_json(x) for x in self.vdp],
        }

    @classmethod
    def from_json(cls, ring: Ring, obj) -> "SplitVector":
        if not isinstance(obj, dict):
            raise JSONFormatError("split vector must be an object")
        try:
            n = obj["n"]
            v0 = ring.from_json(obj["v0"])
            vp = [ring.from_json(x) for x in obj["vp"]]
            vdp = [ring.from_json(x) for x in obj["vdp"]]
        except (KeyError, TypeError) as exc:
            raise JSONFormatError(f"bad split vector: {exc}") from exc
        if len(vp) != n or len(vdp) != n:
            raise JSONFormatError("block lengths disagree with n")
        return cls(ring, v0, vp, vdp, copy=False)


class Matrix:
    """Square matrix of ring payloads with exact arithmetic."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring: Ring, rows, copy: bool = True) -> None:
        self.ring = ring
        self.rows = [list(r) for r in rows] if copy else rows
        self.dim = len(self.rows)

    @classmethod
    def identity(cls, ring: Ring, dim: int) -> "Matrix":
        rows = [[ring.zero] * dim for _ in range(dim)]
        for i in range(dim):
            rows[i][i] = ring.one
        return cls(ring, rows, copy=False)

    @classmethod
    def zeros(cls, ring: Ring, dim: int) -> "Matrix":
        return cls(ring, [[ring.zero] * dim for _ in range(dim)], copy=False)

    @classmethod
    def from_scalars(cls, ring: Ring, rows) -> "Matrix":
        out = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, Scalar):
                    if x.ring != ring:
                        raise RingMismatch(f"{x.ring.descriptor} vs {ring.descriptor}")
                    row.append(x.payload)
                else:
                    row.append(ring.from_int(x))
            out.append(row)
        d = len(out)
        if any(len(r) != d for r in out):
            raise IndexOutOfRange("matrix rows must all have the full dimension")
        return cls(ring, out, copy=False)

    def copy(self) -> "Matrix":
        return Matrix(self.ring, [r[:] for r in self.rows], copy=False)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return Scalar(self.ring, self.rows[i][j])

    def set(self, i: int, j: int, x) -> None:
        if isinstance(x, Scalar):
            if x.ring != self.ring:
                raise RingMismatch(f"{x.ring.descriptor} vs {self.ring.descriptor}")
            self.rows[i][j] = x.payload
        else:
            self.rows[i][j] = self.ring.from_int(x)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and other.ring == self.ring
            and other.rows == self.rows
        )

    def __repr__(self) -> str:
        R = self.ring
        body = "\n".join(
            "[" + ", ".join(R.show(c) for c in row) + "]" for row in self.rows
        )
        return f"Matrix({R.descriptor}, dim={self.dim})\n{body}"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        R = self.ring
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {other.ring.descriptor}")
        if other.dim != self.dim:
            raise IndexOutOfRange(f"dimension mismatch {self.dim} vs {other.dim}")
        d = self.dim
        brows = other.rows
        out = []
        for i in range(d):
            arow = self.rows[i]
            orow = [R.zero] * d
            for k in range(d):
                a = arow[k]
                if R.is_zero(a):
                    continue
                brow = brows[k]
                for j in range(d):
                    b = brow[j]
                    if not R.is_zero(b):
                        orow[j] = R.add(orow[j], R.mul(a, b))
            out.append(orow)
        return Matrix(R, out, copy=False)

    def __add__(self, other: "Matrix") -> "Matrix":
        R = self.ring
        if other.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {other.ring.descriptor}")
        return Matrix(
            R,
            [[R.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            copy=False,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        R = self.ring
        return Matrix(R, [[R.neg(a) for a in r] for r in self.rows], copy=False)

    def scale(self, x: Scalar) -> "Matrix":
        R = self.ring
        if x.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {x.ring.descriptor}")
        p = x.payload
        return Matrix(R, [[R.mul(p, a) for a in r] for r in self.rows], copy=False)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [list(col) for col in zip(*self.rows)], copy=False)

    def is_identity(self) -> bool:
        R = self.ring
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if i == j:
                    if not R.eq(a, R.one):
                        return False
                elif not R.is_zero(a):
                    return False
        return True

    def row(self, i: int) -> Vector:
        return Vector(self.ring, self.rows[i])

    def col(self, j: int) -> Vector:
        return Vector(self.ring, [r[j] for r in self.rows], copy=False)

    def apply(self, v: Vector) -> Vector:
        R = self.ring
        if v.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {v.ring.descriptor}")
        out = []
        for row in self.rows:
            acc = R.zero
            for a, b in zip(row, v.comps):
                if not (R.is_zero(a) or R.is_zero(b)):
                    acc = R.add(acc, R.mul(a, b))
            out.append(acc)
        return Vector(R, out, copy=False)

    def row_add(self, target: int, source: int, coeff) -> None:
        """row[target] += coeff * row[source], coeff a raw payload."""
        R = self.ring
        if R.is_zero(coeff):
            return
        trow = self.rows[target]
        srow = self.rows[source]
        for j in range(self.dim):
            s = srow[j]
            if not R.is_zero(s):
                trow[j] = R.add(trow[j], R.mul(coeff, s))

    def col_add(self, target: int, source: int, coeff) -> None:
        """col[target] += coeff * col[source], coeff a raw payload."""
        R = self.ring
        if R.is_zero(coeff):
            return
        for row in self.rows:
            s = row[source]
            if not R.is_zero(s):
                row[target] = R.add(row[target], R.mul(coeff, s))

    def det(self) -> Scalar:
        """Division-free determinant (Berkowitz), valid over any commutative ring."""
        R = self.ring
        d = self.dim
        if d == 0:
            return Scalar(R, R.one)
        a = self.rows
        # poly holds the characteristic polynomial of the leading principal
        # block, highest coefficient first.
        poly = [R.one, R.neg(a[0][0])]
        for i in range(1, d):
            row = a[i][:i]
            col = [a[r][i] for r in range(i)]
            s = [a[i][i]]
            vec = col
            for _ in range(i):
                dot = R.zero
                for x, y in zip(row, vec):
                    dot = R.add(dot, R.mul(x, y))
                s.append(dot)
                vec = [
                    _dotrow(R, a[r][:i], vec) for r in range(i)
                ]
            new = [R.zero] * (i + 2)
            for q in range(i + 1):
                pq = poly[q]
                if R.is_zero(pq):
                    continue
                new[q] = R.add(new[q], pq)
                for k, sk in enumerate(s):
                    if q + 1 + k <= i + 1:
                        new[q + 1 + k] = R.add(new[q + 1 + k], R.neg(R.mul(sk, pq)))
            poly = new
        val = poly[d]
        if d % 2:
            val = R.neg(val)
        return Scalar(R, val)

    def to_json(self):
        R = self.ring
        return {
            "ring": R.descriptor,
            "dim": self.dim,
            "entries": [[R.to_json(a) for a in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        if not isinstance(obj, dict) or set(obj) != {"ring", "dim", "entries"}:
            raise JSONFormatError(f"bad matrix object: keys {sorted(obj)!r}" if isinstance(obj, dict) else "matrix must be an object")
        try:
            ring = ring_from_string(obj["ring"])
        except (UnsupportedRing, TypeError) as exc:
            raise JSONFormatError(f"bad matrix ring: {exc}") from None
        dim = obj["dim"]
        entries = obj["entries"]
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise JSONFormatError("dim must be a positive integer")
        if not isinstance(entries, list) or len(entries) != dim:
            raise JSONFormatError("entries must have dim rows")
        rows = []
        for r in entries:
            if not isinstance(r, list) or len(r) != dim:
                raise JSONFormatError("entries must have dim columns per row")
            rows.append([ring.from_json(x) for x in r])
        return cls(ring, rows, copy=False)


def _dotrow(R: Ring, xs, ys):
    acc = R.zero
    for x, y in zip(xs, ys):
        acc = R.add(acc, R.mul(x, y))
    return acc


class FormContext:
    """Index bookkeeping for the split space of rank n, odd or even."""

    __slots__ = ("n", "odd", "dim")

    def __init__(self, n: int, odd: bool = True) -> None:
        if not isinstance(n, int) or n < 1:
            raise IndexOutOfRange(f"rank must be a positive integer, got {n!r}")
        self.n = n
        self.odd = odd
        self.dim = 2 * n + 1 if odd else 2 * n

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"hyperbolic index {i} outside 1..{self.n}")

    def u(self, i: int) -> int:
        self._check(i)
        return i if self.odd else i - 1

    def v(self, i: int) -> int:
        self._check(i)
        return self.n + i if self.odd else self.n + i - 1

    def delta(self, idx: int) -> int:
        """The involution fixing the center and swapping u_i with v_i."""
        n = self.n
        if self.odd:
            if idx == 0:
                return 0
            return idx + n if idx <= n else idx - n
        return idx + n if idx < n else idx - n

    def gram(self, ring: Ring) -> Matrix:
        m = Matrix.zeros(ring, self.dim)
        if self.odd:
            m.rows[0][0] = ring.from_int(2)
        for i in range(1, self.n + 1):
            m.rows[self.u(i)][self.v(i)] = ring.one
            m.rows[self.v(i)][self.u(i)] = ring.one
        return m

    def phi(self, x: Vector, y: Vector) -> Scalar:
        R = x.ring
        if y.ring != R:
            raise RingMismatch(f"{R.descriptor} vs {y.ring.descriptor}")
        acc = R.zero
        if self.odd:
            acc = R.mul(R.from_int(2), R.mul(x.comps[0], y.comps[0]))
        for i in range(1, self.n + 1):
            ui, vi = self.u(i), self.v(i)
            acc = R.add(acc, R.mul(x.comps[ui], y.comps[vi]))
            acc = R.add(acc, R.mul(x.comps[vi], y.comps[ui]))
        return Scalar(R, acc)

    def quad(self, x: Vector) -> Scalar:
        R = x.ring
        acc = R.zero
        if self.odd:
            acc = R.mul(x.comps[0], x.comps[0])
        for i in range(1, self.n + 1):
            acc = R.add(acc, R.mul(x.comps[self.u(i)], x.comps[self.v(i)]))
        return Scalar(R, acc)

    def tilde(self, x: Vector) -> Vector:
        """The row vector x^T * gram, returned as a Vector."""
        R = x.ring
        out = [R.zero] * self.dim
        if self.odd:
            out[0] = R.mul(R.from_int(2), x.comps[0])
        for i in range(1, self.n + 1):
            ui, vi = self.u(i), self.v(i)
            out[ui] = x.comps[vi]
            out[vi] = x.comps[ui]
        return Vector(R, out, copy=False)


def is_orthogonal(M: Matrix, ctx: FormContext) -> bool:
    """Does M preserve the bilinear form: M^T * gram * M == gram."""
    if M.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix dim {M.dim} does not match form dim {ctx.dim}")
    G = ctx.gram(M.ring)
    return M.transpose() @ G @ M == G


def orthogonal_inverse(M: Matrix, ctx: FormContext) -> Matrix:
    """Inverse of an orthogonal matrix: gram^-1 * M^T * gram, by entry shuffles."""
    R = M.ring
    if M.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix dim {M.dim} does not match form dim {ctx.dim}")
    d = ctx.dim
    two = R.from_int(2)
    half = R.half
    rows = []
    for i in range(d):
        si = ctx.delta(i)
        row = []
        for j in range(d):
            e = M.rows[ctx.delta(j)][si]
            if ctx.odd and i == 0 and j != 0:
                e = R.mul(half, e)
            elif ctx.odd and j == 0 and i != 0:
                e = R.mul(two, e)
            row.append(e)
        rows.append(row)
    return Matrix(R, rows, copy=False)


def monomial_pattern(M: Matrix):
    """Column -> row map of the unique unit entry per line, else NotMonomial."""
    R = M.ring
    d = M.dim
    sigma = []
    used_rows = set()
    for j in range(d):
        hits = [i for i in range(d) if not R.is_zero(M.rows[i][j])]
        if len(hits) != 1:
            raise NotMonomial(f"column {j} has {len(hits)} nonzero entries")
        i = hits[0]
        if i in used_rows:
            raise NotMonomial(f"row {i} holds two nonzero entries")
        if not R.is_unit(M.rows[i][j]):
            raise NotMonomial(f"entry ({i}, {j}) is not a unit")
        used_rows.add(i)
        sigma.append(i)
    return sigma


def unitriangular_inverse(M: Matrix) -> Matrix:
    """Inverse of a unitriangular matrix via the terminating Neumann series."""
    R = M.ring
    d = M.dim
    upper = all(R.is_zero(M.rows[i][j]) for i in range(d) for j in range(i))
    lower = all(R.is_zero(M.rows[i][j]) for i in range(d) for j in range(i + 1, d))
    diag_one = all(R.eq(M.rows[i][i], R.one) for i in range(d))
    if not (diag_one and (upper or lower)):
        raise NotUnipotent("matrix is not unitriangular")
    ident = Matrix.identity(R, d)
    negn = ident - M
    acc = ident
    term = ident
    for _ in range(d - 1):
        term = term @ negn
        acc = acc + term
    return acc


def matrix_inverse_local(M: Matrix) -> Matrix:
    """Gauss-Jordan inverse using unit pivots only.

    Over a local ring this succeeds exactly when M is invertible; over
    other rings it may raise NotAUnit even for invertible input.
    """
    R = M.ring
    d = M.dim
    a = [row[:] for row in M.rows]
    b = [row[:] for row in Matrix.identity(R, d).rows]
    for col in range(d):
        piv = None
        for r in range(col, d):
            if R.is_unit(a[r][col]):
                piv = r
                break
        if piv is None:
            raise NotAUnit(f"no unit pivot available in column {col}")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = R.inv(a[col][col])
        a[col] = [R.mul(inv, x) for x in a[col]]
        b[col] = [R.mul(inv, x) for x in b[col]]
        for r in range(d):
            if r == col:
                continue
            f = a[r][col]
            if R.is_zero(f):
                continue
            nf = R.neg(f)
            a[r] = [R.add(x, R.mul(nf, y)) for x, y in zip(a[r], a[col])]
            b[r] = [R.add(x, R.mul(nf, y)) for x, y in zip(b[r], b[col])]
    return Matrix(R, b, copy=False)


def matrix_in_ideal(M: Matrix, ideal: IdealDescriptor) -> bool:
    R = M.ring
    return all(ideal.member(R, a) for row in M.rows for a in row)


def matrices_congruent(A: Matrix, B: Matrix, ideal: IdealDescriptor) -> bool:
    """Entrywise membership of A - B in the ideal."""
    if A.ring != B.ring:
        raise RingMismatch(f"{A.ring.descriptor} vs {B.ring.descriptor}")
    if A.dim != B.dim:
        raise IndexOutOfRange(f"dimension mismatch {A.dim} vs {B.dim}")
    return matrix_in_ideal(A - B, ideal)


def matrix_residue(M: Matrix) -> Matrix:
    """Entrywise reduction of a matrix over a local scalar ring mod its maximal ideal."""
    R = M.ring
    S = residue_ring(R)
    if S == R:
        return M.copy()
    if R.kind == "Zpk":
        p = R.p
        rows = [[a % p for a in row] for row in M.rows]
    else:
        rows = [[a[0] for a in row] for row in M.rows]
    return Matrix(S, rows, copy=False)


def matrix_lift(ring: Ring, M: Matrix) -> Matrix:
    """Entrywise canonical lift from the residue field back to ring."""
    if M.ring != residue_ring(ring):
        raise RingMismatch(f"{M.ring.descriptor} is not the residue field of {ring.descriptor}")
    if ring.kind in ("Q", "Fp"):
        return M.copy()
    if ring.kind == "Zpk":
        rows = [row[:] for row in M.rows]
    else:
        pad = (ring.base.zero,) * (ring.e - 1)
        rows = [[(a,) + pad for a in row] for row in M.rows]
    return Matrix(ring, rows, copy=False)


def one_perp(M: Matrix) -> Matrix:
    """Lift an even-space matrix to the odd space, acting trivially on the center."""
    R = M.ring
    d = M.dim
    if d % 2:
        raise IndexOutOfRange(f"even-space matrix must have even dimension, got {d}")
    rows = [[R.zero] * (d + 1) for _ in range(d + 1)]
    rows[0][0] = R.one
    for i in range(d):
        rows[i + 1][1:] = M.rows[i]
    return Matrix(R, rows, copy=False)


def even_part(M: Matrix) -> Matrix:
    """Inverse of one_perp; requires a trivial center row and column."""
    R = M.ring
    d = M.dim
    if d % 2 == 0 or d < 3:
        raise IndexOutOfRange(f"odd-space matrix must have odd dimension >= 3, got {d}")
    if not R.eq(M.rows[0][0], R.one):
        raise NotTOShape("center entry is not 1")
    for j in range(1, d):
        if not (R.is_zero(M.rows[0][j]) and R.is_zero(M.rows[j][0])):
            raise NotTOShape("center row or column is not trivial")
    return Matrix(R, [row[1:] for row in M.rows[1:]])
