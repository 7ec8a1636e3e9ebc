"""Orthogonal transvections and their constructive splittings.

The transvection E(v, w, x) is taken in the operator normalization

    E(v, w, x) = I + x*(v*wt - w*vt) - x^2*q(w)*(v*vt),

where vt, wt are the tilde rows of v, w.  It is defined whenever
q(v) = 0 and phi(v, w) = 0, and then E(v, w, x) is orthogonal with
E(v, w, x)^-1 = E(v, w, -x).  Under this sign choice the standard
letters are transvections on the nose: F1_i(z) = E(e_ui, -e_0, z),
F2_i(z) = E(e_vi, -e_0, z), and in the even space
oe_ij(z) = E(e_i, e_delta(j), z).

The three-factor splitting (transvection_split3) assumes the w block
shape (w0, w', 0); its border rows carry the sign of the normalization
above, while the interior blocks agree with the diagonal/alternating
factors one expects: alpha = I - x*w'*(v'')^T with inverse transpose
I + x*v''*(w')^T, and middle block x*(v'*(w')^T - w'*(v')^T).
"""

from __future__ import annotations

from .errors import (
    BadWitness,
    HypothesisViolated,
    IndexOutOfRange,
    JSONFormatError,
    NotAUnit,
    NotOrthogonalPair,
    RingMismatch,
)
from .quadratic_space import FormContext, Matrix, SplitVector, Vector, is_orthogonal
from .rings import Ring, Scalar, ring_from_string

__all__ = [
    "TransvectionSpec",
    "OrderIdealWitness",
    "transvection",
    "transvection_matrix",
    "transvection_laws",
    "solve_alternating",
    "normalize_w_pairs",
    "transvection_split3",
    "split_w_pair",
    "is_alternating",
]


class TransvectionSpec:
    """Data (v, w, x) with the standing hypotheses q(v) = phi(v,w) = 0."""

    __slots__ = ("v", "w", "x")

    def __init__(self, v: SplitVector, w: SplitVector, x: Scalar) -> None:
        if v.ring != w.ring or v.ring != x.ring:
            raise RingMismatch("spec blocks must share one ring")
        if v.n != w.n:
            raise IndexOutOfRange(f"rank mismatch: {v.n} vs {w.n}")
        ctx = FormContext(v.n)
        vv, wv = v.to_vector(ctx), w.to_vector(ctx)
        if not ctx.quad(vv) == 0:
            raise HypothesisViolated("q(v) must vanish")
        if not ctx.phi(vv, wv) == 0:
            raise HypothesisViolated("phi(v, w) must vanish")
        self.v = v
        self.w = w
        self.x = x

    @property
    def n(self) -> int:
        return self.v.n

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TransvectionSpec)
            and other.v == self.v
            and other.w == self.w
            and other.x == self.x
        )

    def __repr__(self) -> str:
        return f"TransvectionSpec(v={self.v!r}, w={self.w!r}, x={self.x!r})"

    def to_json(self) -> dict:
        return {
            "ring": self.x.ring.descriptor,
            "v": self.v.to_json(),
            "w": self.w.to_json(),
            "x": self.x.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "TransvectionSpec":
        if not isinstance(obj, dict):
            raise JSONFormatError("transvection spec must be an object")
        try:
            ring = ring_from_string(obj["ring"])
            v = SplitVector.from_json(ring, obj["v"])
            w = SplitVector.from_json(ring, obj["w"])
            x = Scalar(ring, ring.from_json(obj["x"]))
        except (KeyError, TypeError) as exc:
            raise JSONFormatError(f"bad transvection spec: {exc}") from exc
        return cls(v, w, x)


class OrderIdealWitness:
    """A membership certificate x = sum_i c_i * s_i over given entries s_i."""

    __slots__ = ("target", "combiners", "sources")

    def __init__(self, target: Scalar, combiners, sources) -> None:
        combiners = tuple(combiners)
        sources = tuple(sources)
        if len(combiners) != len(sources):
            raise BadWitness("combiner and source counts differ")
        R = target.ring
        acc = R.zero
        for c, s in zip(combiners, sources):
            if c.ring != R or s.ring != R:
                raise RingMismatch("witness parts must share one ring")
            acc = R.add(acc, R.mul(c.payload, s.payload))
        if not R.eq(acc, target.payload):
            raise BadWitness("combination does not reproduce the target")
        self.target = target
        self.combiners = combiners
        self.sources = sources


def transvection_matrix(ctx: FormContext, v: Vector, w: Vector, x: Scalar) -> Matrix:
    """E(v, w, x) as a matrix; requires q(v) = 0 and phi(v, w) = 0."""
    R = v.ring
    if w.ring != R or x.ring != R:
        raise RingMismatch("transvection data must share one ring")
    if len(v) != ctx.dim or len(w) != ctx.dim:
        raise IndexOutOfRange(f"vectors must have length {ctx.dim}")
    if not ctx.quad(v) == 0:
        raise HypothesisViolated("q(v) must vanish")
    if not ctx.phi(v, w) == 0:
        raise HypothesisViolated("phi(v, w) must vanish")
    tv = ctx.tilde(v)
    tw = ctx.tilde(w)
    m = Matrix.identity(R, ctx.dim) + (v.outer(tw) - w.outer(tv)).scale(x)
    qw = ctx.quad(w)
    if not qw == 0:
        return m - v.outer(tv).scale(x * x * qw)
    return m


def transvection(spec: TransvectionSpec, ctx: FormContext) -> Matrix:
    if not ctx.odd or ctx.n != spec.n:
        raise IndexOutOfRange("spec rank disagrees with the context")
    return transvection_matrix(ctx, spec.v.to_vector(ctx), spec.w.to_vector(ctx), spec.x)


def _law(preconditions, verify) -> str:
    for ok, reason in preconditions:
        if not ok:
            return f"skipped ({reason})"
    return "equal" if verify() else "unequal"


def transvection_laws(ctx, u, v, w, a, b, alpha=None) -> dict:
    """Evaluate the five transvection laws on concrete data.

    Returns a dict keyed "i".."v" with values "equal", "unequal", or
    "skipped (<why>)" when a law's hypotheses fail on the input.  Law
    (v) needs alpha, a similitude of the form; its multiplier is read
    off the gram transport and must be a unit.
    """
    qu = ctx.quad(u)
    qv = ctx.quad(v)
    qw = ctx.quad(w)
    phi_uv = ctx.phi(u, v)
    phi_uw = ctx.phi(u, w)
    phi_vw = ctx.phi(v, w)
    ident = Matrix.identity(u.ring, ctx.dim)
    report = {}

    base = [(qu == 0, "q(u) != 0"), (phi_uv == 0, "phi(u,v) != 0")]

    report["i"] = _law(
        base,
        lambda: is_orthogonal(transvection_matrix(ctx, u, v, a), ctx)
        and transvection_matrix(ctx, u, u, a) == ident,
    )
    report["ii"] = _law(
        base,
        lambda: transvection_matrix(ctx, u, v, a * b)
        == transvection_matrix(ctx, u.scale(a), v, b)
        == transvection_matrix(ctx, u, v.scale(a), b),
    )
    report["iii"] = _law(
        base + [(phi_uw == 0, "phi(u,w) != 0")],
        lambda: transvection_matrix(ctx, u, v, a) @ transvection_matrix(ctx, u, w, a)
        == transvection_matrix(ctx, u, v + w, a),
    )

    # Additivity in the first slot picks up a correction transvection
    # inside the isotropic plane spanned by u and v.
    def check_iv() -> bool:
        lhs = transvection_matrix(ctx, u, w, a) @ transvection_matrix(ctx, v, w, a)
        fix = transvection_matrix(ctx, u, v, -(a * a * qw))
        rhs = transvection_matrix(ctx, u + v, w, a) @ fix
        alt = transvection_matrix(ctx, u, v, a) @ transvection_matrix(ctx, v, u, a)
        return lhs == rhs and alt == ident

    report["iv"] = _law(
        base
        + [
            (qv == 0, "q(v) != 0"),
            (phi_uw == 0, "phi(u,w) != 0"),
            (phi_vw == 0, "phi(v,w) != 0"),
        ],
        check_iv,
    )

    if alpha is None:
        report["v"] = "skipped (no similitude given)"
        return report

    R = u.ring
    gram = ctx.gram(R)
    transported = alpha.transpose() @ gram @ alpha
    if ctx.odd:
        mult = transported[0, 0] * Scalar(R, R.half)
    else:
        mult = transported[ctx.u(1), ctx.v(1)]
    if transported != gram.scale(mult):
        report["v"] = "skipped (alpha is not a similitude)"
        return report
    try:
        mult_inv = mult.inv()
    except NotAUnit:
        report["v"] = "skipped (similitude multiplier is not a unit)"
        return report
    gram_inv = ctx.gram(R)
    if ctx.odd:
        gram_inv.set(0, 0, Scalar(R, R.half))
    alpha_inv = gram_inv @ alpha.transpose() @ gram
    alpha_inv = alpha_inv.scale(mult_inv)
    report["v"] = _law(
        base,
        lambda: alpha @ transvection_matrix(ctx, u, v, b) @ alpha_inv
        == transvection_matrix(ctx, alpha.apply(u), alpha.apply(v), mult_inv * b),
    )
    return report


def is_alternating(m: Matrix) -> bool:
    R = m.ring
    for i in range(m.dim):
        if not R.is_zero(m.rows[i][i]):
            return False
        for j in range(i + 1, m.dim):
            if not R.eq(m.rows[i][j], R.neg(m.rows[j][i])):
                return False
    return True


def solve_alternating(v: Vector, w: Vector, witness: OrderIdealWitness) -> Matrix:
    """Alternating alpha with alpha*w = v*x, for x = witness.target in o(w).

    alpha = sum_i c_i * (v*e_i^T - e_i*v^T), which lands on
    alpha[r][c] = v_r*c_c - c_r*v_c.
    """
    R = v.ring
    if w.ring != R or witness.target.ring != R:
        raise RingMismatch("vectors and witness must share one ring")
    if len(v) != len(w):
        raise IndexOutOfRange("columns must have equal length")
    if not v.dot(w) == 0:
        raise NotOrthogonalPair("v^T * w must vanish")
    if len(witness.sources) != len(w):
        raise BadWitness("witness must combine the entries of w")
    for s, ent in zip(witness.sources, w.comps):
        if not R.eq(s.payload, ent):
            raise BadWitness("witness sources disagree with w")
    c = [coef.payload for coef in witness.combiners]
    rows = []
    for r in range(len(v)):
        row = []
        for col in range(len(v)):
            row.append(R.add(R.mul(v.comps[r], c[col]), R.neg(R.mul(c[r], v.comps[col]))))
        rows.append(row)
    return Matrix(R, rows, copy=False)


def normalize_w_pairs(ctx: FormContext, w: Vector) -> tuple:
    """A delta-commuting permutation image moving w's pair support upward.

    Greedy per pair: whenever the v_i slot is nonzero, the u_i slot must
    be free to swap into, else no permutation can empty the lower block.
    """
    if not ctx.odd:
        raise IndexOutOfRange("pair normalization lives in the odd space")
    if len(w) != ctx.dim:
        raise IndexOutOfRange(f"vector must have length {ctx.dim}")
    R = w.ring
    image = list(range(1, ctx.dim + 1))
    for i in range(1, ctx.n + 1):
        ui, vi = ctx.u(i), ctx.v(i)
        if not R.is_zero(w.comps[vi]):
            if not R.is_zero(w.comps[ui]):
                raise HypothesisViolated(f"pair {i} of w has both coordinates nonzero")
            image[ui], image[vi] = image[vi], image[ui]
    return tuple(image)


def _split3_blocks(ctx: FormContext, spec: TransvectionSpec):
    R = spec.x.ring
    n = ctx.n
    x = spec.x
    v0 = Scalar(R, spec.v.v0)
    w0 = Scalar(R, spec.w.v0)
    vp = Vector(R, spec.v.vp)
    vdp = Vector(R, spec.v.vdp)
    wp = Vector(R, spec.w.vp)

    zero = Scalar(R, R.zero)
    checks = [
        (all(R.is_zero(c) for c in spec.w.vdp), "w'' must vanish"),
        (v0 * v0 == zero, "v0^2 must vanish"),
        (w0 * w0 == zero, "w0^2 must vanish"),
        (v0 * w0 == zero, "v0*w0 must vanish"),
        (ctx.quad(spec.w.to_vector(ctx)) == zero, "q(w) must vanish"),
    ]
    for ok, why in checks:
        if not ok:
            raise HypothesisViolated(why)

    eye = Matrix.identity(R, n)
    alpha = eye - wp.outer(vdp).scale(x)
    alpha_inv_t = eye + vdp.outer(wp).scale(x)
    mid = (vp.outer(wp) - wp.outer(vp)).scale(x)
    beta1 = vdp.scale(-(x * w0))
    beta2 = wp.scale(x * v0) - vp.scale(x * w0)
    return alpha, alpha_inv_t, mid, beta1, beta2


def transvection_split3(spec: TransvectionSpec, ctx: FormContext):
    """Split E(v, (w0, w', 0), x) into diagonal, middle, and border factors."""
    if not ctx.odd or ctx.n != spec.n:
        raise IndexOutOfRange("spec rank disagrees with the context")
    R = spec.x.ring
    n = ctx.n
    alpha, alpha_inv_t, mid, beta1, beta2 = _split3_blocks(ctx, spec)

    m1 = Matrix.identity(R, ctx.dim)
    m2 = Matrix.identity(R, ctx.dim)
    m3 = Matrix.identity(R, ctx.dim)
    two = R.from_int(2)
    for i in range(n):
        ui, vi = i + 1, n + i + 1
        for j in range(n):
            m1.rows[ui][j + 1] = alpha.rows[i][j]
            m1.rows[vi][n + j + 1] = alpha_inv_t.rows[i][j]
            m2.rows[ui][n + j + 1] = mid.rows[i][j]
        m3.rows[0][ui] = beta1.comps[i]
        m3.rows[0][vi] = beta2.comps[i]
        m3.rows[ui][0] = R.neg(R.mul(two, beta2.comps[i]))
        m3.rows[vi][0] = R.neg(R.mul(two, beta1.comps[i]))
    return m1, m2, m3


def split_w_pair(v: SplitVector, w: SplitVector, y: Scalar, alpha: Matrix):
    """Split w*y = w1 + w2 with both summands orthogonal to v.

    alpha must come from solve_alternating for the halved columns:
    alpha * (v0/2, v'') = (v0/2, v') * y.  The first-row compatibility
    w0*y = alpha_0 * (w0, w'') is what makes phi(v, w1) vanish; it is
    checked, not assumed.
    """
    R = y.ring
    if v.ring != R or w.ring != R or alpha.ring != R:
        raise RingMismatch("split data must share one ring")
    if v.n != w.n:
        raise IndexOutOfRange(f"rank mismatch: {v.n} vs {w.n}")
    n = v.n
    if alpha.dim != n + 1:
        raise IndexOutOfRange(f"alpha must have size {n + 1}")
    ctx = FormContext(n)
    vv = v.to_vector(ctx)
    wv = w.to_vector(ctx)
    zero = Scalar(R, R.zero)
    v0 = Scalar(R, v.v0)
    w0 = Scalar(R, w.v0)
    if not ctx.quad(vv) == zero:
        raise HypothesisViolated("q(v) must vanish")
    if not ctx.phi(vv, wv) == zero:
        raise HypothesisViolated("phi(v, w) must vanish")
    if not v0 * v0 == zero:
        raise HypothesisViolated("v0^2 must vanish")
    if not v0 * w0 == zero:
        raise HypothesisViolated("v0*w0 must vanish")
    if not is_alternating(alpha):
        raise HypothesisViolated("alpha must be alternating")

    half0 = R.mul(R.half, v.v0)
    lower = Vector(R, [half0] + list(v.vdp))
    upper = Vector(R, [half0] + list(v.vp))
    if alpha.apply(lower) != upper.scale(y):
        raise HypothesisViolated("alpha does not carry (v0/2, v'') to (v0/2, v')*y")

    t = Vector(R, [w.v0] + list(w.vdp))
    at = alpha.apply(t)
    if not w0 * y == at[0]:
        raise HypothesisViolated("first-row compatibility w0*y = alpha_0*(w0, w'') fails")

    w1 = SplitVector(R, at.comps[0], at.comps[1:], [R.mul(c, y.payload) for c in w.vdp])
    top = Vector(R, [w.v0] + list(w.vp)).scale(y) - at
    w2 = SplitVector(R, top.comps[0], top.comps[1:], [R.zero] * n)
    return w1, w2
