"""Constructive factorizations of odd orthogonal matrices.

The central routine is tmt_decompose, which drives an orthogonal matrix
over a field to a monomial core by multiplying standard letters on both
sides, then returns the two letter words whose product with the core
reproduces the input exactly.  The elimination is a deterministic pair
peeling: for each hyperbolic pair in turn, the corresponding short
column is reduced to a single entry by row operations coming from F1,
F3, F4 letters, and the pivot row is then cleared by the transposed
column operations.  Isotropy of the rows and columns of an orthogonal
matrix makes the final entry of each line vanish for free, and once all
pairs are peeled the leftover matrix is forced to be monomial.

The other factorizations are closed-form: unipotent blocks map to F3
words column by column (no cross terms appear when the columns are
taken outermost first), alternating blocks to F4 or F5 words over the
upper triangle, and the block-triangular shapes combine the two.

Over a local scalar ring, local_decompose reduces mod the maximal
ideal, decomposes the residue, lifts the letters canonically, and
certifies the remaining factor as orthogonal and congruent to the
identity.  The Laurent-ring operations (theta conjugation and the
certificate checker) close the loop for polynomial matrices.
"""

from __future__ import annotations

from .errors import (
    BadIndex,
    BadSign,
    DecompositionError,
    HypothesisViolated,
    IndexOutOfRange,
    JSONFormatError,
    NonElementaryLetter,
    NotAUnit,
    NotAUnitResidue,
    NotAlternating,
    NotMonomial,
    NotOrthogonal,
    NotTOShape,
    NotUnipotent,
    RingMismatch,
    UnsupportedRing,
)
from .generators import (
    F_FAMILIES,
    GenLabel,
    Word,
    diag_orthogonal,
    eval_word,
    letter_matrix,
    perm_matrix,
    theta,
    word_from_json,
    word_to_json,
)
from .quadratic_space import (
    FormContext,
    Matrix,
    Vector,
    is_orthogonal,
    matrices_congruent,
    matrix_residue,
    monomial_pattern,
    orthogonal_inverse,
    unitriangular_inverse,
)
from .rings import (
    IdealDescriptor,
    LaurentRing,
    PolynomialRing,
    Ring,
    Scalar,
    laurent_of_poly,
    lift_scalar,
    residue_ring,
)
from .transvections import TransvectionSpec, is_alternating, transvection, transvection_matrix

__all__ = [
    "TmtDecomposition",
    "LocalDecomposition",
    "HorrocksInstance",
    "factor_unipotent",
    "factor_alt",
    "factor_to",
    "tmt_decompose",
    "mo_split",
    "lift_mod",
    "local_decompose",
    "theta_conjugate",
    "check_horrocks_instance",
]


def _require_odd(ctx: FormContext) -> None:
    if not ctx.odd:
        raise BadIndex("factorization lives in the odd space")


def _validate_tower_word(word: Word) -> None:
    """Letters must generate the triangular subgroup: F1, F3, F4 freely,
    F2 only at parameter one half."""
    R = word.ring
    half = Scalar(R, R.half)
    for letter in word.letters:
        fam = letter.family
        if fam in ("F1", "F3", "F4"):
            continue
        if fam == "F2" and letter.param == half:
            continue
        raise NotTOShape(f"letter {fam} breaks the triangular tower")


class TmtDecomposition:
    """tau1 * mu * tau2 with tower words around a monomial core."""

    __slots__ = ("tau1", "mu", "tau2")

    def __init__(self, tau1: Word, mu: Matrix, tau2: Word) -> None:
        if tau1.ring != mu.ring or tau2.ring != mu.ring:
            raise RingMismatch("decomposition parts must share one ring")
        if tau1.ctx.dim != mu.dim or tau2.ctx.dim != mu.dim:
            raise IndexOutOfRange("word contexts do not match the core size")
        _validate_tower_word(tau1)
        _validate_tower_word(tau2)
        self.tau1 = tau1
        self.mu = mu
        self.tau2 = tau2

    def recompose(self) -> Matrix:
        return eval_word(self.tau1) @ self.mu @ eval_word(self.tau2)

    def to_json(self) -> dict:
        return {
            "tau1": word_to_json(self.tau1),
            "mu": self.mu.to_json(),
            "tau2": word_to_json(self.tau2),
        }

    @classmethod
    def from_json(cls, obj) -> "TmtDecomposition":
        if not isinstance(obj, dict) or not {"tau1", "mu", "tau2"} <= set(obj):
            raise JSONFormatError("decomposition needs 'tau1', 'mu', 'tau2'")
        return cls(
            word_from_json(obj["tau1"]),
            Matrix.from_json(obj["mu"]),
            word_from_json(obj["tau2"]),
        )


class LocalDecomposition:
    """tau1 * mu * tau2 * residual with the residual congruent to I."""

    __slots__ = ("tau1", "mu", "tau2", "residual")

    def __init__(self, tau1: Word, mu: Matrix, tau2: Word, residual: Matrix) -> None:
        if tau1.ring != mu.ring or tau2.ring != mu.ring or residual.ring != mu.ring:
            raise RingMismatch("decomposition parts must share one ring")
        if tau1.ctx.dim != mu.dim or tau2.ctx.dim != mu.dim or residual.dim != mu.dim:
            raise IndexOutOfRange("word contexts do not match the core size")
        self.tau1 = tau1
        self.mu = mu
        self.tau2 = tau2
        self.residual = residual

    def recompose(self) -> Matrix:
        return eval_word(self.tau1) @ self.mu @ eval_word(self.tau2) @ self.residual

    def to_json(self) -> dict:
        return {
            "tau1": word_to_json(self.tau1),
            "mu": self.mu.to_json(),
            "tau2": word_to_json(self.tau2),
            "residual": self.residual.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "LocalDecomposition":
        if not isinstance(obj, dict) or not {"tau1", "mu", "tau2", "residual"} <= set(obj):
            raise JSONFormatError("decomposition needs 'tau1', 'mu', 'tau2', 'residual'")
        return cls(
            word_from_json(obj["tau1"]),
            Matrix.from_json(obj["mu"]),
            word_from_json(obj["tau2"]),
            Matrix.from_json(obj["residual"]),
        )


# --- block factorizations ---------------------------------------------------


def factor_unipotent(gamma: Matrix, upper: bool, ctx: FormContext) -> Word:
    """F3 word evaluating to the block diag(1, gamma, (gamma^T)^-1).

    Entries are read off literally: taking columns outermost first
    (right-to-left above the diagonal, left-to-right below) makes all
    cross terms vanish, so each letter carries one matrix entry.
    """
    _require_odd(ctx)
    R = gamma.ring
    n = ctx.n
    if gamma.dim != n:
        raise IndexOutOfRange(f"block must have size {n}, got {gamma.dim}")
    for i in range(n):
        if not R.eq(gamma.rows[i][i], R.one):
            raise NotUnipotent("diagonal must be all ones")
        for j in range(i) if upper else range(i + 1, n):
            if not R.is_zero(gamma.rows[i][j]):
                raise NotUnipotent("entries on the wrong side of the diagonal")
    letters = []
    cols = range(n, 1, -1) if upper else range(1, n)
    for j in cols:
        rows = range(1, j) if upper else range(j + 1, n + 1)
        for i in rows:
            z = gamma.rows[i - 1][j - 1]
            if not R.is_zero(z):
                letters.append(GenLabel("F3", i, j, Scalar(R, z)))
    return Word(ctx, R, letters)


def factor_alt(a: Matrix, upper: bool, ctx: FormContext) -> Word:
    """F4 (upper) or F5 (lower) word for an alternating off-diagonal block.

    Only pairs i < j are emitted; each letter plants z at (i, j) and -z
    at (j, i), covering both triangles at once.
    """
    _require_odd(ctx)
    R = a.ring
    n = ctx.n
    if a.dim != n:
        raise IndexOutOfRange(f"block must have size {n}, got {a.dim}")
    if not is_alternating(a):
        raise NotAlternating("block must be alternating")
    fam = "F4" if upper else "F5"
    letters = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            z = a.rows[i - 1][j - 1]
            if not R.is_zero(z):
                letters.append(GenLabel(fam, i, j, Scalar(R, z)))
    return Word(ctx, R, letters)


def _blocks(alpha: Matrix, ctx: FormContext):
    n = ctx.n
    R = alpha.ring

    def block(rows, cols):
        return Matrix(R, [[alpha.rows[r][c] for c in cols] for r in rows], copy=False)

    us = [ctx.u(i) for i in range(1, n + 1)]
    vs = [ctx.v(i) for i in range(1, n + 1)]
    return block(us, us), block(us, vs), block(vs, us), block(vs, vs)


def _is_zero_block(m: Matrix) -> bool:
    R = m.ring
    return all(R.is_zero(a) for row in m.rows for a in row)


def _is_unitriangular(m: Matrix, upper: bool) -> bool:
    R = m.ring
    d = m.dim
    for i in range(d):
        if not R.eq(m.rows[i][i], R.one):
            return False
        for j in range(i) if upper else range(i + 1, d):
            if not R.is_zero(m.rows[i][j]):
                return False
    return True


def factor_to(alpha: Matrix, ctx: FormContext) -> Word:
    """Letter word for a triangular block shape, upper or lower variant.

    Upper: alpha = diag(1, gamma, (gamma^T)^-1) followed by an upper
    alternating block, with gamma upper unitriangular.  Lower: the
    mirrored shape with the alternating block in front.
    """
    _require_odd(ctx)
    R = alpha.ring
    if alpha.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix must have size {ctx.dim}")
    if not R.eq(alpha.rows[0][0], R.one):
        raise NotTOShape("center entry must be 1")
    for t in range(1, ctx.dim):
        if not (R.is_zero(alpha.rows[0][t]) and R.is_zero(alpha.rows[t][0])):
            raise NotTOShape("center row and column must be trivial")
    uu, uv, vu, vv = _blocks(alpha, ctx)
    eye = Matrix.identity(R, ctx.n)

    if _is_zero_block(vu) and _is_unitriangular(uu, upper=True):
        if uu.transpose() @ vv != eye:
            raise NotTOShape("lower block is not the inverse transpose")
        a = unitriangular_inverse(uu) @ uv
        if not is_alternating(a):
            raise NotAlternating("gamma^-1 * delta must be alternating")
        word = factor_unipotent(uu, True, ctx)
        return Word(ctx, R, list(word.letters) + list(factor_alt(a, True, ctx).letters))

    if _is_zero_block(uv) and _is_unitriangular(uu, upper=False):
        if uu.transpose() @ vv != eye:
            raise NotTOShape("lower block is not the inverse transpose")
        a = vu @ unitriangular_inverse(uu)
        if not is_alternating(a):
            raise NotAlternating("delta * gamma^-1 must be alternating")
        word = factor_alt(a, False, ctx)
        return Word(ctx, R, list(word.letters) + list(factor_unipotent(uu, False, ctx).letters))

    raise NotTOShape("matrix does not fit either triangular shape")


# --- field decomposition -----------------------------------------------------


def _div(R: Ring, t, s):
    return R.mul(t, R.inv(s))


def tmt_decompose(alpha: Matrix, ctx: FormContext) -> TmtDecomposition:
    """Two tower words and a monomial core recomposing alpha exactly.

    Works over the rational or a prime field.  Each hyperbolic pair is
    peeled in turn: the short column is reduced to one entry by left
    letters, the pivot row cleared by right letters; isotropy of both
    lines kills the paired entry for free, and positions already
    finished can never be repopulated.  The leftover core is monomial
    because its remaining lines are forced by orthogonality.
    """
    _require_odd(ctx)
    R = alpha.ring
    if R.kind not in ("Q", "Fp"):
        raise UnsupportedRing(f"decomposition needs a field, got {R.descriptor}")
    if ctx.n < 3:
        raise IndexOutOfRange("rank must be at least 3")
    if alpha.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix must have size {ctx.dim}")
    if not is_orthogonal(alpha, ctx):
        raise NotOrthogonal("input does not preserve the form")

    n = ctx.n
    beta = alpha.copy()
    left_ops: list[GenLabel] = []
    right_ops: list[GenLabel] = []

    def left(label: GenLabel) -> None:
        nonlocal beta
        left_ops.append(label)
        beta = letter_matrix(ctx, R, label) @ beta

    def right(label: GenLabel) -> None:
        nonlocal beta
        right_ops.append(label)
        beta = beta @ letter_matrix(ctx, R, label)

    free = set(range(1, n + 1))
    for k in range(1, n + 1):
        uk = ctx.u(k)
        col = [beta.rows[r][uk] for r in range(ctx.dim)]
        lower = [m for m in sorted(free) if not R.is_zero(col[ctx.v(m)])]
        if lower:
            m = lower[0]
            s = col[ctx.v(m)]
            for j in sorted(free):
                t = beta.rows[ctx.v(j)][uk]
                if j != m and not R.is_zero(t):
                    left(GenLabel("F3", m, j, Scalar(R, _div(R, t, s))))
            t = beta.rows[0][uk]
            if not R.is_zero(t):
                left(GenLabel("F1", m, None, Scalar(R, R.neg(_div(R, t, s)))))
            for j in sorted(free):
                t = beta.rows[ctx.u(j)][uk]
                if j != m and not R.is_zero(t):
                    left(GenLabel("F4", j, m, Scalar(R, R.neg(_div(R, t, s)))))
            pivot = ctx.v(m)
        else:
            upper = [m for m in sorted(free) if not R.is_zero(col[ctx.u(m)])]
            if not upper:
                raise DecompositionError(f"column {k} vanished on the free pairs")
            m = upper[0]
            s = col[ctx.u(m)]
            for j in sorted(free):
                t = beta.rows[ctx.u(j)][uk]
                if j != m and not R.is_zero(t):
                    left(GenLabel("F3", j, m, Scalar(R, R.neg(_div(R, t, s)))))
            pivot = ctx.u(m)
        # Column isotropy clears the paired slot and the center.
        if any(
            not R.is_zero(beta.rows[r][uk]) for r in range(ctx.dim) if r != pivot
        ):
            raise DecompositionError(f"column {k} kept a stray entry")

        s = beta.rows[pivot][uk]
        for j in range(1, n + 1):
            t = beta.rows[pivot][ctx.u(j)]
            if j != k and not R.is_zero(t):
                right(GenLabel("F3", k, j, Scalar(R, R.neg(_div(R, t, s)))))
        t = beta.rows[pivot][0]
        if not R.is_zero(t):
            right(GenLabel("F1", k, None, Scalar(R, _div(R, t, R.mul(R.from_int(2), s)))))
        for j in range(1, n + 1):
            t = beta.rows[pivot][ctx.v(j)]
            if j != k and not R.is_zero(t):
                right(GenLabel("F4", k, j, Scalar(R, R.neg(_div(R, t, s)))))
        if any(
            not R.is_zero(beta.rows[pivot][c]) for c in range(ctx.dim) if c != uk
        ):
            raise DecompositionError(f"pivot row for column {k} kept a stray entry")
        free.discard(m)

    monomial_pattern(beta)  # forced; NotMonomial here means a logic error
    tau1 = Word(ctx, R, [op.inverse() for op in left_ops])
    tau2 = Word(ctx, R, [op.inverse() for op in reversed(right_ops)])
    return TmtDecomposition(tau1, beta, tau2)


def mo_split(mu: Matrix, ctx: FormContext):
    """Split a monomial orthogonal matrix as permutation times diagonal."""
    _require_odd(ctx)
    R = mu.ring
    if mu.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix must have size {ctx.dim}")
    pattern = monomial_pattern(mu)
    image = tuple(pattern[s] + 1 for s in range(ctx.dim))
    sigma = perm_matrix(ctx, R, image)
    d0 = Scalar(R, mu.rows[pattern[0]][0])
    d = [Scalar(R, mu.rows[pattern[ctx.u(i)]][ctx.u(i)]) for i in range(1, ctx.n + 1)]
    diag = diag_orthogonal(ctx, d0, d)
    if sigma @ diag != mu:
        raise NotOrthogonal("monomial matrix is not orthogonal")
    return sigma, diag


# --- lifting along a local ring's reduction ---------------------------------


def _lift_word(word: Word, ring: Ring) -> Word:
    S = residue_ring(ring)
    if word.ring != S:
        raise RingMismatch(f"word ring {word.ring.descriptor} is not the residue of {ring.descriptor}")
    _validate_tower_word(word)
    half_s = Scalar(S, S.half)
    letters = []
    for letter in word.letters:
        if letter.family == "F2" and letter.param == half_s:
            z = Scalar(ring, ring.half)
        else:
            z = lift_scalar(ring, letter.param)
        letters.append(GenLabel(letter.family, letter.i, letter.j, z, letter.exp))
    return Word(word.ctx, ring, letters)


def _lift_perm(m: Matrix, ring: Ring, ctx: FormContext) -> Matrix:
    S = m.ring
    pattern = monomial_pattern(m)
    for j in range(m.dim):
        if not S.eq(m.rows[pattern[j]][j], S.one):
            raise NotMonomial("permutation entries must be 1")
    image = tuple(pattern[s] + 1 for s in range(m.dim))
    return perm_matrix(ctx, ring, image)


def _lift_diag(m: Matrix, ring: Ring, ctx: FormContext) -> Matrix:
    S = m.ring
    for i in range(m.dim):
        for j in range(m.dim):
            if i != j and not S.is_zero(m.rows[i][j]):
                raise NotMonomial("matrix is not diagonal")
    d0_res = m.rows[0][0]
    if S.eq(d0_res, S.one):
        d0 = Scalar(ring, ring.one)
    elif S.eq(d0_res, S.neg(S.one)):
        d0 = Scalar(ring, ring.neg(ring.one))
    else:
        raise BadSign("center entry of a diagonal must be +1 or -1")
    d = []
    for i in range(1, ctx.n + 1):
        lifted = lift_scalar(ring, Scalar(S, m.rows[ctx.u(i)][ctx.u(i)]))
        try:
            ring.inv(lifted.payload)
        except NotAUnit as exc:
            raise NotAUnitResidue(f"diagonal entry {i} does not lift to a unit") from exc
        d.append(lifted)
    return diag_orthogonal(ctx, d0, d)


def lift_mod(x, kind: str, ring: Ring, ideal: IdealDescriptor):
    """Canonical preimage over ring of a residue-level word or matrix.

    kind selects the shape: "to-word" lifts letters (F2's half maps to
    the half upstairs), "perm" and "diag" lift matrices by pattern and
    entries, "monomial" splits first and lifts both parts.
    """
    if ideal.kind != "max":
        raise UnsupportedRing("lifting is along the maximal ideal")
    ideal.validate_for(ring)
    if kind == "to-word":
        if not isinstance(x, Word):
            raise BadIndex("kind 'to-word' expects a Word")
        return _lift_word(x, ring)
    if not isinstance(x, Matrix):
        raise BadIndex(f"kind {kind!r} expects a Matrix")
    if x.ring != residue_ring(ring):
        raise RingMismatch(f"matrix ring {x.ring.descriptor} is not the residue of {ring.descriptor}")
    if x.dim % 2 == 0:
        raise IndexOutOfRange("odd-space matrix expected")
    ctx = FormContext((x.dim - 1) // 2)
    if kind == "perm":
        return _lift_perm(x, ring, ctx)
    if kind == "diag":
        return _lift_diag(x, ring, ctx)
    if kind == "monomial":
        sigma, diag = mo_split(x, ctx)
        return _lift_perm(sigma, ring, ctx) @ _lift_diag(diag, ring, ctx)
    raise BadIndex(f"unknown lift kind {kind!r}")


def local_decompose(alpha: Matrix, ctx: FormContext) -> LocalDecomposition:
    """Decompose over a local scalar ring up to a congruence-one residual.

    Reduces mod the maximal ideal, decomposes the residue over the
    field, lifts the words and the core canonically, and returns the
    quotient of alpha by the lifted product as the residual factor.
    """
    R = alpha.ring
    residue_ring(R)  # UnsupportedRing for non-local scalar rings
    if alpha.dim != ctx.dim:
        raise IndexOutOfRange(f"matrix must have size {ctx.dim}")
    if not is_orthogonal(alpha, ctx):
        raise NotOrthogonal("input does not preserve the form")
    ideal = IdealDescriptor("max")
    reduced = tmt_decompose(matrix_residue(alpha), ctx)
    tau1 = lift_mod(reduced.tau1, "to-word", R, ideal)
    tau2 = lift_mod(reduced.tau2, "to-word", R, ideal)
    mu = lift_mod(reduced.mu, "monomial", R, ideal)
    lifted = eval_word(tau1) @ mu @ eval_word(tau2)
    residual = orthogonal_inverse(lifted, ctx) @ alpha
    if not is_orthogonal(residual, ctx):
        raise DecompositionError("residual lost orthogonality")
    if not matrices_congruent(residual, Matrix.identity(R, ctx.dim), ideal):
        raise DecompositionError("residual is not congruent to the identity")
    return LocalDecomposition(tau1, mu, tau2, residual)


# --- Laurent-ring operations -------------------------------------------------


def _laurent_matrix(m: Matrix) -> Matrix:
    R = m.ring
    if isinstance(R, LaurentRing):
        return m
    if not isinstance(R, PolynomialRing):
        raise UnsupportedRing(f"{R.descriptor} has no Laurent embedding")
    L = LaurentRing(R.base)
    rows = [[laurent_of_poly(Scalar(R, a)).payload for a in row] for row in m.rows]
    return Matrix(L, rows, copy=False)


def _entry_bounds_ok(m: Matrix, low: bool) -> bool:
    L = m.ring
    for row in m.rows:
        for a in row:
            b = L.bounds(a)
            if b is None:
                continue
            if low and b[0] < 0:
                return False
            if not low and b[1] > 0:
                return False
    return True


def _theta_pair(ctx: FormContext, L: LaurentRing, m):
    th = theta(ctx, L, m)
    inv = Matrix.identity(L, ctx.dim)
    count = ctx.n + 1 if m is None else m
    for t in range(count):
        inv.rows[t][t] = L.x_power(-1)
    return th, inv


def theta_conjugate(beta, direction: int, ctx: FormContext, m=None):
    """Conjugate by the theta scaling, reporting polynomiality.

    beta may be a Matrix or Word over a polynomial or Laurent ring, or a
    TransvectionSpec over a polynomial ring whose parameter is divisible
    by X and whose blocks avoid the center; for the latter the conjugate
    is checked against the transvection at the scaled columns and
    shifted parameter.  Returns (conjugate, flag) with flag true when no
    entry has a negative power.
    """
    if direction not in (1, -1):
        raise BadIndex("direction must be +1 or -1")
    spec = None
    if isinstance(beta, TransvectionSpec):
        spec = beta
        base = spec.x.ring
        if not isinstance(base, PolynomialRing):
            raise UnsupportedRing("transvection input must live over a polynomial ring")
        if not (base.is_zero(spec.v.v0) and base.is_zero(spec.w.v0)):
            raise HypothesisViolated("transvection blocks must avoid the center")
        if spec.x.payload and not base.base.is_zero(spec.x.payload[0]):
            raise HypothesisViolated("transvection parameter must be divisible by X")
        mat = transvection(spec, ctx)
    elif isinstance(beta, Word):
        mat = eval_word(beta)
    elif isinstance(beta, Matrix):
        mat = beta
    else:
        raise BadIndex("beta must be a Matrix, Word, or TransvectionSpec")

    lmat = _laurent_matrix(mat)
    L = lmat.ring
    if not is_orthogonal(lmat, ctx):
        raise NotOrthogonal("input does not preserve the form")
    th, th_inv = _theta_pair(ctx, L, m)
    conj = th @ lmat @ th_inv if direction == 1 else th_inv @ lmat @ th

    if spec is not None and direction == 1 and (m is None or m == ctx.n + 1):
        base = spec.x.ring
        f = Scalar(base, base.make(list(spec.x.payload[1:]))) if spec.x.payload else Scalar(base, base.zero)
        vL = th.apply(_laurent_vector(spec.v.to_vector(ctx)))
        wL = th.apply(_laurent_vector(spec.w.to_vector(ctx)))
        if conj != transvection_matrix(ctx, vL, wL, laurent_of_poly(f)):
            raise DecompositionError("conjugation identity failed")
    return conj, _entry_bounds_ok(conj, low=True)


def _laurent_vector(v: Vector) -> Vector:
    R = v.ring
    L = LaurentRing(R.base)
    return Vector(L, [laurent_of_poly(Scalar(R, a)).payload for a in v.comps], copy=False)


# --- certificate checking ----------------------------------------------------


def _require_elementary(word: Word) -> None:
    for letter in word.letters:
        if letter.family not in F_FAMILIES:
            raise NonElementaryLetter(f"letter {letter.family} is not elementary")


class HorrocksInstance:
    """A polynomial matrix, a negative-power one, and the witness between.

    alpha lives over R[X], beta over the Laurent ring (checked later to
    use only nonpositive powers), and the witness word multiplies out to
    alpha * beta^-1.  An optional claim (alpha0, word) asserts alpha =
    alpha0 * eval(word) with alpha0 constant.
    """

    __slots__ = ("alpha", "beta", "witness", "claim")

    def __init__(self, alpha: Matrix, beta: Matrix, witness: Word, claim=None) -> None:
        if not isinstance(alpha.ring, PolynomialRing):
            raise RingMismatch("alpha must live over a polynomial ring")
        if not isinstance(beta.ring, LaurentRing) or beta.ring.base != alpha.ring.base:
            raise RingMismatch("beta must live over the matching Laurent ring")
        if witness.ring != beta.ring:
            raise RingMismatch("witness must live over the Laurent ring")
        if alpha.dim != beta.dim or witness.ctx.dim != alpha.dim:
            raise IndexOutOfRange("instance parts must share one size")
        _require_elementary(witness)
        if claim is not None:
            alpha0, word = claim
            if alpha0.ring != alpha.ring.base:
                raise RingMismatch("claimed constant must live over the base ring")
            if word.ring != alpha.ring:
                raise RingMismatch("claimed word must live over the polynomial ring")
            if alpha0.dim != alpha.dim or word.ctx.dim != alpha.dim:
                raise IndexOutOfRange("claim parts must share the instance size")
            _require_elementary(word)
            claim = (alpha0, word)
        self.alpha = alpha
        self.beta = beta
        self.witness = witness
        self.claim = claim

    def to_json(self) -> dict:
        claim = None
        if self.claim is not None:
            claim = {"alpha0": self.claim[0].to_json(), "word": word_to_json(self.claim[1])}
        return {
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "witness": word_to_json(self.witness),
            "claim": claim,
        }

    @classmethod
    def from_json(cls, obj) -> "HorrocksInstance":
        if not isinstance(obj, dict) or not {"alpha", "beta", "witness"} <= set(obj):
            raise JSONFormatError("instance needs 'alpha', 'beta', 'witness'")
        claim = obj.get("claim")
        if claim is not None:
            if not isinstance(claim, dict) or not {"alpha0", "word"} <= set(claim):
                raise JSONFormatError("claim needs 'alpha0' and 'word'")
            claim = (Matrix.from_json(claim["alpha0"]), word_from_json(claim["word"]))
        return cls(
            Matrix.from_json(obj["alpha"]),
            Matrix.from_json(obj["beta"]),
            word_from_json(obj["witness"]),
            claim,
        )


def _constant_matrix_over(m: Matrix, P: PolynomialRing) -> Matrix:
    rows = [[P.make([a]) for a in row] for row in m.rows]
    return Matrix(P, rows, copy=False)


def check_horrocks_instance(inst: HorrocksInstance, claim=None) -> dict:
    """Verify a splitting certificate and report each check separately.

    The verdict records orthogonality of both matrices, that beta uses
    only nonpositive powers, and that the witness multiplies out to
    alpha * beta^-1 over the Laurent ring; with a claim it additionally
    checks that the constant part is orthogonal and recomposes alpha.
    Accepts exactly when every recorded check passes.
    """
    if claim is None:
        claim = inst.claim
    ctx = inst.witness.ctx
    verdict = {
        "alpha_orthogonal": is_orthogonal(inst.alpha, ctx),
        "beta_orthogonal": is_orthogonal(inst.beta, ctx),
        "beta_negative_powers": _entry_bounds_ok(inst.beta, low=False),
        "quotient_elementary": _laurent_matrix(inst.alpha)
        @ orthogonal_inverse(inst.beta, ctx)
        == eval_word(inst.witness),
    }
    if claim is not None:
        alpha0, word = claim
        verdict["claim_constant"] = is_orthogonal(alpha0, ctx)
        verdict["claim_recomposes"] = (
            _constant_matrix_over(alpha0, inst.alpha.ring) @ eval_word(word) == inst.alpha
        )
    verdict["accepted"] = all(verdict.values())
    return verdict
