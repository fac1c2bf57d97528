"""Complex and real multiplicities of node germs and floor plans.

Real values are computed for the all-plus sign vector; when no rule is known
the value is `UNDETERMINED`, which counts as 0 towards real lower bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .floors import GermKind, NodeGerm

G = GermKind


class UndefinedMultiplicity(ValueError):
    pass


class _Undetermined:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNDETERMINED"

    def __str__(self):
        return "undet."

    def __reduce__(self):
        return (_Undetermined, ())


UNDETERMINED = _Undetermined()


def is_known(v) -> bool:
    return v is not UNDETERMINED


@dataclass(frozen=True)
class SignVector:
    """The sign vector of the point conditions; only the all-plus one is supported."""
    signs: str = "+++"

    def __post_init__(self):
        if set(self.signs) != {"+"}:
            raise ValueError("only the all-plus sign vector has multiplicity rules")


ALL_PLUS = SignVector()


@dataclass(frozen=True)
class GermContext:
    """Data a germ's multiplicity depends on.

    `k`, `l`, `variant` describe a parallelogram; `target_ks` are the x-coordinates
    of the horizontal edges the string ends align with; `target_kind` is
    "edge" or "vertex" for strings.
    """
    floor_degree: int
    k: int | None = None
    l: int | None = None
    variant: int | None = None
    target_kind: str | None = None
    target_ks: tuple = ()
    consumed: int = 0

    def __post_init__(self):
        if self.consumed < 0:
            raise ValueError("consumed intersections must be nonnegative")


@dataclass(frozen=True)
class Multiplicity:
    complex: int
    real: object = UNDETERMINED

    def __post_init__(self):
        if is_known(self.real) and self.real > self.complex:
            raise ValueError(f"real {self.real} exceeds complex {self.complex}")

    @property
    def real_bound(self) -> int:
        """Contribution to a real lower bound."""
        return self.real if is_known(self.real) else 0

    def to_json(self):
        return {"complex": self.complex, "real": self.real if is_known(self.real) else "undet."}


def parallelogram_data(quad, i: int):
    """(variant, k, l) for a parallelogram of a degree-i floor, or None.

    First variant: vertices (k,0),(k,1),(k-1,l),(k-1,l+1).
    Second variant: vertices (k,i-k),(k,i-k-1),(k+1,l),(k+1,l+1).
    """
    vs = set(map(tuple, quad))
    for k in range(1, i + 1):
        for l in range(0, i):
            if vs == {(k, 0), (k, 1), (k - 1, l), (k - 1, l + 1)}:
                return 1, k, l
    for k in range(0, i):
        for l in range(0, i):
            if vs == {(k, i - k), (k, i - k - 1), (k + 1, l), (k + 1, l + 1)}:
                return 2, k, l
    return None


def parallelogram_real(variant: int | None, i: int, k: int | None, l: int | None):
    # both parity expressions are integers: i(i-1) is even
    if variant == 1:
        value = (3 * i + 2 + 2 * k + 2 * l) * (i - 1) // 2
    elif variant == 2:
        value = (i + 2 + 2 * l) * (i - 1) // 2
    else:
        return UNDETERMINED
    return 2 if value % 2 else 0


def _left_real(i, k):
    return 2 if (i - k) % 2 == 0 else 0


def complex_mult(germ: NodeGerm | GermKind, ctx: GermContext) -> int:
    kind = germ.kind if isinstance(germ, NodeGerm) else GermKind(germ)
    i = ctx.floor_degree
    if kind == G.PARALLELOGRAM:
        return 2
    if kind == G.HORIZONTAL_W2:
        return 2 * (i + 1)
    if kind == G.DIAGONAL_W2:
        if i < 2 or ctx.consumed > i - 1:
            raise UndefinedMultiplicity(f"diagonal weight-two end on degree {i} "
                                        f"with {ctx.consumed} consumed")
        return 2 * (i - 1 - ctx.consumed)
    if kind in (G.LEFT_STRING, G.RIGHT_STRING):
        if ctx.target_kind == "vertex":
            return 1
        if ctx.target_kind == "edge":
            return 2
        raise UndefinedMultiplicity(f"{kind} without an alignment")
    if kind == G.TWO_DIM_STRING:
        if ctx.target_kind != "edge" or len(ctx.target_ks) != 2:
            raise UndefinedMultiplicity("two-freedom string needs two edge alignments")
        return 2 * 2
    raise UndefinedMultiplicity(f"no multiplicity for {kind}")


def real_mult(germ: NodeGerm | GermKind, ctx: GermContext, s: SignVector = ALL_PLUS):
    kind = germ.kind if isinstance(germ, NodeGerm) else GermKind(germ)
    c = complex_mult(kind, ctx)  # raises for inadmissible germs
    i = ctx.floor_degree
    if kind == G.PARALLELOGRAM:
        return parallelogram_real(ctx.variant, i, ctx.k, ctx.l)
    if kind == G.DIAGONAL_W2:
        return c
    if kind == G.LEFT_STRING:
        if ctx.target_kind == "vertex":
            return 1
        return _left_real(i, ctx.target_ks[0])
    if kind == G.RIGHT_STRING:
        return 1 if ctx.target_kind == "vertex" else UNDETERMINED
    if kind == G.TWO_DIM_STRING:
        return prod(_left_real(i, k) for k in ctx.target_ks)
    return UNDETERMINED  # horizontal weight two


def combine(factors) -> Multiplicity:
    """Product of germ (complex, real) factors."""
    factors = list(factors)
    c = prod(f[0] for f in factors)
    reals = [f[1] for f in factors]
    if any(is_known(r) and r == 0 for r in reals):
        r = 0
    elif all(is_known(r) for r in reals):
        r = prod(reals)
    else:
        r = UNDETERMINED
    return Multiplicity(c, r)


def vainsencher_degree(m: int) -> int:
    """Number of binodal degree-m surfaces through the right number of points."""
    if m < 3:
        raise ValueError(f"formula needs m >= 3, got {m}")
    return 2 * (m - 2) * (4 * m ** 3 - 8 * m ** 2 + 8 * m - 25) * (m - 1) ** 2
