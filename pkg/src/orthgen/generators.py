"""Named generators of the odd orthogonal group and words over them.

The five F families are stored as one term table mapping each family to
its elementary-matrix terms; gen_F is a direct transcription of that
table, and the identity suite's mutation self-test perturbs the table to
prove the test battery would notice a wrong sign.  Words are sequences
of GenLabels; evaluation is left-to-right, and letter inverses are
closed-form (F(z)^-1 = F(-z)), never numeric inversion.

Conventions fixed here and relied on everywhere else:
  * commutator(a, b) = a*b*a^-1*b^-1
  * theta(m) = diag(X,...,X, 1,...,1) with X in the first m slots
  * permutations are 1-based image tuples, sigma*e_s = e_pi(s)
"""

from __future__ import annotations

from .errors import (
    BadIndex,
    BadSign,
    JSONFormatError,
    NotAUnit,
    NotDeltaCommuting,
    NotOrthogonal,
    OddLength,
    RingMismatch,
    UnsupportedRing,
)
from .quadratic_space import FormContext, Matrix, is_orthogonal, orthogonal_inverse
from .rings import (
    LaurentRing,
    PolynomialRing,
    Ring,
    Scalar,
    ring_from_string,
    scalar_from_json,
    variable,
)

__all__ = [
    "F_FAMILIES",
    "GenLabel",
    "Word",
    "gen_F",
    "gen_oe",
    "perm_matrix",
    "diag_orthogonal",
    "theta",
    "embed_odd",
    "commutator",
    "letter_matrix",
    "eval_word",
    "word_shuffle",
    "word_to_json",
    "word_from_json",
    "random_word",
    "random_perm",
]

F_FAMILIES = ("F1", "F2", "F3", "F4", "F5")

# Each term is (row slot, column slot, integer coefficient, power of z);
# slots name the center or a hyperbolic coordinate of index i or j.
# The table is the single source of truth for the F formulas.
_F_TERMS = {
    "F1": (("c", "vi", 1, 1), ("ui", "c", -2, 1), ("ui", "vi", -1, 2)),
    "F2": (("c", "ui", 1, 1), ("vi", "c", -2, 1), ("vi", "ui", -1, 2)),
    "F3": (("ui", "uj", 1, 1), ("vj", "vi", -1, 1)),
    "F4": (("ui", "vj", 1, 1), ("uj", "vi", -1, 1)),
    "F5": (("vi", "uj", 1, 1), ("vj", "ui", -1, 1)),
}


def _slot(ctx: FormContext, name: str, i: int, j) -> int:
    if name == "c":
        return 0
    kind, which = name[0], name[1]
    idx = i if which == "i" else j
    return ctx.u(idx) if kind == "u" else ctx.v(idx)


def _check_f_indices(ctx: FormContext, family: str, i: int, j) -> None:
    if family not in F_FAMILIES:
        raise BadIndex(f"unknown F family {family!r}")
    if not ctx.odd:
        raise BadIndex("F generators live in the odd context")
    if not 1 <= i <= ctx.n:
        raise BadIndex(f"index i={i} outside 1..{ctx.n}")
    if family in ("F1", "F2"):
        if j is not None:
            raise BadIndex(f"{family} takes no second index")
    else:
        if j is None:
            raise BadIndex(f"{family} needs a second index")
        if not 1 <= j <= ctx.n:
            raise BadIndex(f"index j={j} outside 1..{ctx.n}")
        if i == j:
            raise BadIndex(f"{family} needs i != j, got i = j = {i}")


def gen_F(ctx: FormContext, family: str, i: int, j, z: Scalar) -> Matrix:
    """The generator F^family with parameter z, from the term table."""
    _check_f_indices(ctx, family, i, j)
    R = z.ring
    m = Matrix.identity(R, ctx.dim)
    zpow = {1: z.payload, 2: R.mul(z.payload, z.payload)}
    for row, col, coeff, power in _F_TERMS[family]:
        r, c = _slot(ctx, row, i, j), _slot(ctx, col, i, j)
        m.rows[r][c] = R.add(m.rows[r][c], R.mul(R.from_int(coeff), zpow[power]))
    return m


def gen_oe(ctx: FormContext, i: int, j: int, z: Scalar) -> Matrix:
    """The even-context generator oe_ij(z) = I + e_ij(z) - e_delta(j),delta(i)(z)."""
    if ctx.odd:
        raise BadIndex("oe generators live in the even context")
    dim = ctx.dim
    if not (1 <= i <= dim and 1 <= j <= dim):
        raise BadIndex(f"oe indices ({i},{j}) outside 1..{dim}")
    if i == j:
        raise BadIndex("oe needs i != j")
    di, dj = ctx.delta(i - 1) + 1, ctx.delta(j - 1) + 1
    if j == di:
        raise BadIndex(f"oe_{{{i},{j}}} is degenerate: j is the delta-partner of i")
    R = z.ring
    m = Matrix.identity(R, dim)
    m.rows[i - 1][j - 1] = R.add(m.rows[i - 1][j - 1], z.payload)
    m.rows[dj - 1][di - 1] = R.add(m.rows[dj - 1][di - 1], R.neg(z.payload))
    return m


def _check_perm(ctx: FormContext, pi) -> tuple:
    pi = tuple(int(s) for s in pi)
    dim = ctx.dim
    if sorted(pi) != list(range(1, dim + 1)):
        raise BadIndex(f"not a permutation of 1..{dim}: {pi!r}")
    for s in range(1, dim + 1):
        # pi(delta(s)) must equal delta(pi(s)), 1-based on both sides
        if pi[ctx.delta(s - 1)] != ctx.delta(pi[s - 1] - 1) + 1:
            raise NotDeltaCommuting(f"permutation {pi!r} does not commute with delta")
    return pi


def perm_matrix(ctx: FormContext, ring: Ring, pi) -> Matrix:
    """The permutation matrix sigma with sigma*e_s = e_pi(s), pi an image tuple."""
    pi = _check_perm(ctx, pi)
    m = Matrix.zeros(ring, ctx.dim)
    for s in range(ctx.dim):
        m.rows[pi[s] - 1][s] = ring.one
    return m


def _invert_perm(pi) -> tuple:
    out = [0] * len(pi)
    for s, t in enumerate(pi):
        out[t - 1] = s + 1
    return tuple(out)


def diag_orthogonal(ctx: FormContext, d0: Scalar, d) -> Matrix:
    """diag(d0, d1..dn, d1^-1..dn^-1); needs d0^2 = 1 and every d_i a unit."""
    if not ctx.odd:
        raise BadIndex("diagonal generators live in the odd context")
    d = tuple(d)
    if len(d) != ctx.n:
        raise BadIndex(f"need {ctx.n} diagonal scalars, got {len(d)}")
    R = d0.ring
    for x in d:
        if x.ring != R:
            raise RingMismatch(f"{x.ring.descriptor} vs {R.descriptor}")
    if (d0 * d0) != 1:
        raise BadSign(f"center entry must square to 1, got {d0!r}")
    m = Matrix.identity(R, ctx.dim)
    m.rows[0][0] = d0.payload
    for i in range(1, ctx.n + 1):
        m.rows[ctx.u(i)][ctx.u(i)] = d[i - 1].payload
        m.rows[ctx.v(i)][ctx.v(i)] = d[i - 1].inv().payload
    return m


def theta(ctx: FormContext, ring: Ring, m=None) -> Matrix:
    """diag(X,...,X, 1,...,1) with X in the first m slots (default n+1)."""
    if not isinstance(ring, (PolynomialRing, LaurentRing)):
        raise UnsupportedRing(f"theta needs a polynomial or laurent ring, got {ring.descriptor}")
    if m is None:
        m = ctx.n + 1
    if not 0 <= m <= ctx.dim:
        raise BadIndex(f"theta slot count {m} outside 0..{ctx.dim}")
    x = variable(ring)
    out = Matrix.identity(ring, ctx.dim)
    for s in range(m):
        out.rows[s][s] = x.payload
    return out


def embed_odd(alpha: Matrix) -> Matrix:
    """The canonical embedding of a rank-n odd orthogonal matrix at rank n+1.

    Old coordinates keep their meaning: the center stays at 0, u_i stays
    at i, v_i moves from n+i to n+1+i; the new pair (u_{n+1}, v_{n+1})
    is fixed pointwise.
    """
    if alpha.dim % 2 == 0 or alpha.dim < 3:
        raise BadIndex(f"need an odd dimension 2n+1, got {alpha.dim}")
    n = (alpha.dim - 1) // 2
    ctx = FormContext(n)
    if not is_orthogonal(alpha, ctx):
        raise NotOrthogonal("embedding is only defined on orthogonal matrices")
    R = alpha.ring
    big = Matrix.identity(R, alpha.dim + 2)
    shift = lambda idx: idx if idx <= n else idx + 1
    for i in range(alpha.dim):
        for j in range(alpha.dim):
            big.rows[shift(i)][shift(j)] = alpha.rows[i][j]
    big.rows[n + 1][n + 1] = R.one
    big.rows[2 * n + 2][2 * n + 2] = R.one
    return big


def commutator(a: Matrix, b: Matrix, ctx: FormContext) -> Matrix:
    """a*b*a^-1*b^-1 for orthogonal a, b (inverses via the form)."""
    return a @ b @ orthogonal_inverse(a, ctx) @ orthogonal_inverse(b, ctx)


_LETTER_FAMILIES = F_FAMILIES + ("OE", "PERM", "DIAG", "THETA")


class GenLabel:
    """One symbolic letter: an F/oe generator, permutation, diagonal, or theta.

    param holds the letter's data: a Scalar for F/OE, an image tuple for
    PERM, a (d0, (d1..dn)) pair for DIAG, a slot count for THETA.
    """

    __slots__ = ("family", "i", "j", "param", "exp")

    def __init__(self, family: str, i=None, j=None, param=None, exp: int = 1) -> None:
        if family not in _LETTER_FAMILIES:
            raise BadIndex(f"unknown letter family {family!r}")
        if exp not in (1, -1):
            raise BadIndex(f"letter exponent must be +1 or -1, got {exp!r}")
        self.family = family
        self.i = i
        self.j = j
        self.param = param
        self.exp = exp

    def inverse(self) -> "GenLabel":
        return GenLabel(self.family, self.i, self.j, self.param, -self.exp)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GenLabel)
            and other.family == self.family
            and other.i == self.i
            and other.j == self.j
            and other.param == self.param
            and other.exp == self.exp
        )

    def __hash__(self) -> int:
        return hash((self.family, self.i, self.j, repr(self.param), self.exp))

    def __repr__(self) -> str:
        bits = [self.family]
        if self.i is not None:
            bits.append(f"i={self.i}")
        if self.j is not None:
            bits.append(f"j={self.j}")
        bits.append(f"param={self.param!r}")
        if self.exp != 1:
            bits.append("exp=-1")
        return f"GenLabel({', '.join(bits)})"


def _validate_letter(ctx: FormContext, ring: Ring, letter: GenLabel) -> None:
    fam = letter.family
    if fam in F_FAMILIES:
        _check_f_indices(ctx, fam, letter.i, letter.j)
        if not isinstance(letter.param, Scalar) or letter.param.ring != ring:
            raise RingMismatch(f"{fam} parameter must be a {ring.descriptor} scalar")
    elif fam == "OE":
        if ctx.odd:
            raise BadIndex("OE letters live in the even context")
        if not isinstance(letter.param, Scalar) or letter.param.ring != ring:
            raise RingMismatch(f"OE parameter must be a {ring.descriptor} scalar")
    elif fam == "PERM":
        _check_perm(ctx, letter.param)
    elif fam == "DIAG":
        d0, d = letter.param
        if d0.ring != ring or any(x.ring != ring for x in d):
            raise RingMismatch("DIAG entries must live in the word's ring")
    elif fam == "THETA":
        if not isinstance(ring, (PolynomialRing, LaurentRing)):
            raise UnsupportedRing("THETA letters need a polynomial or laurent ring")
        if letter.exp == -1 and not isinstance(ring, LaurentRing):
            raise UnsupportedRing("inverse THETA letters need a laurent ring")


def letter_matrix(ctx: FormContext, ring: Ring, letter: GenLabel) -> Matrix:
    """The matrix of one letter, applying the closed-form inverse if exp = -1."""
    _validate_letter(ctx, ring, letter)
    fam, e = letter.family, letter.exp
    if fam in F_FAMILIES:
        z = letter.param if e == 1 else -letter.param
        return gen_F(ctx, fam, letter.i, letter.j, z)
    if fam == "OE":
        z = letter.param if e == 1 else -letter.param
        return gen_oe(ctx, letter.i, letter.j, z)
    if fam == "PERM":
        pi = letter.param if e == 1 else _invert_perm(letter.param)
        return perm_matrix(ctx, ring, pi)
    if fam == "DIAG":
        d0, d = letter.param
        if e == -1:
            d = tuple(x.inv() for x in d)
        return diag_orthogonal(ctx, d0, d)
    out = theta(ctx, ring, letter.param)
    if e == -1:
        for s in range(ctx.dim):
            out.rows[s][s] = ring.inv(out.rows[s][s])
    return out


class Word:
    """A finite product of letters over one context and ring."""

    __slots__ = ("ctx", "ring", "letters")

    def __init__(self, ctx: FormContext, ring: Ring, letters=()) -> None:
        letters = tuple(letters)
        for letter in letters:
            _validate_letter(ctx, ring, letter)
        self.ctx = ctx
        self.ring = ring
        self.letters = letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and other.ctx.n == self.ctx.n
            and other.ctx.odd == self.ctx.odd
            and other.ring == self.ring
            and other.letters == self.letters
        )

    def __repr__(self) -> str:
        return f"Word(n={self.ctx.n}, {len(self.letters)} letters)"

    def inverse(self) -> "Word":
        return Word(self.ctx, self.ring, tuple(l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        if other.ctx.dim != self.ctx.dim or other.ring != self.ring:
            raise RingMismatch("cannot concatenate words over different contexts")
        return Word(self.ctx, self.ring, self.letters + other.letters)


def eval_word(word: Word) -> Matrix:
    """Left-to-right product of the letter matrices."""
    out = Matrix.identity(word.ring, word.ctx.dim)
    for letter in word.letters:
        out = out @ letter_matrix(word.ctx, word.ring, letter)
    return out


def word_shuffle(word: Word) -> Word:
    """Rewrite a1 b1 a2 b2 ... am bm as prod_i (r_i b_i r_i^-1) * prod_i a_i.

    r_i is the prefix product a1..a_i; both sides evaluate to the same
    matrix, but the rewrite separates the b-part into conjugates.
    """
    if len(word.letters) % 2 != 0:
        raise OddLength(f"need an even letter count, got {len(word.letters)}")
    pairs = [(word.letters[2 * k], word.letters[2 * k + 1]) for k in range(len(word.letters) // 2)]
    out = []
    for k, (_, b) in enumerate(pairs):
        prefix = [a for a, _ in pairs[: k + 1]]
        out.extend(prefix)
        out.append(b)
        out.extend(a.inverse() for a in reversed(prefix))
    out.extend(a for a, _ in pairs)
    return Word(word.ctx, word.ring, out)


def _scalar_json(x: Scalar):
    return x.to_json()


def _label_to_json(letter: GenLabel):
    fam = letter.family
    obj = {"fam": fam, "exp": letter.exp}
    if fam in F_FAMILIES or fam == "OE":
        obj["i"] = letter.i
        if letter.j is not None:
            obj["j"] = letter.j
        obj["z"] = _scalar_json(letter.param)
    elif fam == "PERM":
        obj["perm"] = list(letter.param)
    elif fam == "DIAG":
        d0, d = letter.param
        obj["d0"] = _scalar_json(d0)
        obj["d"] = [_scalar_json(x) for x in d]
    else:
        obj["m"] = letter.param
    return obj


def _label_from_json(ring: Ring, obj) -> GenLabel:
    if not isinstance(obj, dict) or "fam" not in obj:
        raise JSONFormatError(f"letter must be an object with 'fam', got {obj!r}")
    fam = obj["fam"]
    exp = obj.get("exp", 1)
    if fam in F_FAMILIES or fam == "OE":
        if "z" not in obj or "i" not in obj:
            raise JSONFormatError(f"{fam} letter needs 'i' and 'z'")
        z = scalar_from_json(ring, obj["z"])
        return GenLabel(fam, obj["i"], obj.get("j"), z, exp)
    if fam == "PERM":
        return GenLabel(fam, param=tuple(obj["perm"]), exp=exp)
    if fam == "DIAG":
        d0 = scalar_from_json(ring, obj["d0"])
        d = tuple(scalar_from_json(ring, x) for x in obj["d"])
        return GenLabel(fam, param=(d0, d), exp=exp)
    if fam == "THETA":
        return GenLabel(fam, param=obj["m"], exp=exp)
    raise JSONFormatError(f"unknown letter family {fam!r}")


def word_to_json(word: Word):
    obj = {
        "n": word.ctx.n,
        "ring": word.ring.descriptor,
        "letters": [_label_to_json(l) for l in word.letters],
    }
    if not word.ctx.odd:
        obj["even"] = True
    return obj


def word_from_json(obj) -> Word:
    if not isinstance(obj, dict) or "n" not in obj or "ring" not in obj:
        raise JSONFormatError("word JSON needs 'n', 'ring' and 'letters'")
    ring = ring_from_string(obj["ring"])
    ctx = FormContext(obj["n"], odd=not obj.get("even", False))
    letters = [_label_from_json(ring, o) for o in obj.get("letters", ())]
    return Word(ctx, ring, letters)


def random_perm(ctx: FormContext, rng) -> tuple:
    """A random delta-commuting permutation as a 1-based image tuple."""
    n = ctx.n
    block = list(range(1, n + 1))
    rng.shuffle(block)
    swap = [rng.random() < 0.5 for _ in range(n)]
    out = [0] * ctx.dim
    off = 1 if ctx.odd else 0
    if ctx.odd:
        out[0] = 1
    for i in range(1, n + 1):
        t = block[i - 1]
        ui, vi = (t + off, n + t + off) if not swap[i - 1] else (n + t + off, t + off)
        out[i - 1 + off] = ui
        out[n + i - 1 + off] = vi
    return tuple(out)


def _random_f_letter(ctx: FormContext, ring: Ring, rng, families) -> GenLabel:
    fam = families[rng.randrange(len(families))]
    i = rng.randrange(1, ctx.n + 1)
    j = None
    if fam not in ("F1", "F2"):
        j = rng.randrange(1, ctx.n)
        if j >= i:
            j += 1
    z = Scalar(ring, ring.sample(rng))
    return GenLabel(fam, i, j, z)


def random_word(ctx: FormContext, ring: Ring, rng, length: int, families=F_FAMILIES) -> Word:
    """A random word of F letters, the stock sampler for tests and the suite."""
    return Word(ctx, ring, [_random_f_letter(ctx, ring, rng, families) for _ in range(length)])
