"""Connected-sum-along-S^1 algebra of building-block 5-manifolds.

The classified family: closed orientable 5-manifolds M with pi_1 = Z/2,
trivial pi_1-action on pi_2 and torsion-free H_2.  The complete invariants
are the w2-type (I, II, III), r = rk H_2(M), and the class of the
characteristic submanifold in the bordism group attached to the type
(I -> pinc, II -> pin-, III -> pin+), taken mod +-; topologically the same
with the top- groups, whose leading coordinate is the Kirby-Siebenmann bit.

Relations among the invariants (all mod 2):
    type I:   q + s + r = 1      type II:  r = 1      type III:  q + r = 1

Block vocabulary and their contributions:

    X(q)        smooth fake RP5 for odd q (q in Z/16, generator-relative);
                even q names the rank-1 composite X(l) join X(l') with class q
    X(p,q)      topological analogue, class (p, q) in Z/2 + Z/8 (p = KS)
    S2xRP3      rank 1, spin, trivial bordism class
    *S2xRP3     topological only; its characteristic submanifold carries KS=1
    CP2xS1      rank 1, pi_1 = Z, contributes the w2^2 generator (0,1) in pinc
    k*(S2xS2)xS1  rank 2k, pi_1 = Z, contributes nothing

Rank of a join: ranks add, plus 1 for every join of two pi_1 = Z/2 pieces;
for an expression that is one + (number of Z/2 blocks - 1).  A framing bit
on a join negates the bordism contribution of its right operand; the
convention is calibrated by X(0) = X(1) join X(1) with the twisted glueing
and X(2) = X(1) join X(1) with the untwisted one, the only instances where
the two glueings differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from . import bordism
from .bordism import BordismElement, CanonicalClass, Category, Flavor, GroupKind
from .errors import (
    CategoryMismatchError,
    ConsistencyError,
    InvalidExpressionError,
    StarInSmoothError,
)


class W2Type(str, Enum):
    I = "I"
    II = "II"
    III = "III"


FLAVOR_FOR_TYPE = {
    W2Type.I: Flavor.PINC,
    W2Type.II: Flavor.PIN_MINUS,
    W2Type.III: Flavor.PIN_PLUS,
}


# -- building blocks ----------------------------------------------------------

@dataclass(frozen=True)
class FakeRP5:
    """Smooth block X(q), q taken mod 16."""

    q: int

    def __init__(self, q: int):
        object.__setattr__(self, "q", int(q) % 16)


@dataclass(frozen=True)
class FakeRP5Top:
    """Topological block X(p, q); p = KS mod 2, q mod 8."""

    p: int
    q: int

    def __init__(self, p: int, q: int):
        object.__setattr__(self, "p", int(p) % 2)
        object.__setattr__(self, "q", int(q) % 8)


@dataclass(frozen=True)
class S2xRP3:
    pass


@dataclass(frozen=True)
class StarS2xRP3:
    pass


@dataclass(frozen=True)
class CP2xS1:
    pass


@dataclass(frozen=True)
class S2xS2xS1:
    """(#_k S2 x S2) x S1, k >= 1 copies."""

    k: int

    def __init__(self, k: int):
        k = int(k)
        if k < 1:
            raise InvalidExpressionError(f"S2xS2 count must be >= 1, got {k}")
        object.__setattr__(self, "k", k)


Block = Union[FakeRP5, FakeRP5Top, S2xRP3, StarS2xRP3, CP2xS1, S2xS2xS1]


def block_rank(b: Block) -> int:
    if isinstance(b, FakeRP5):
        return 0 if b.q % 2 else 1
    if isinstance(b, FakeRP5Top):
        return 0 if b.q % 2 else 1
    if isinstance(b, (S2xRP3, StarS2xRP3, CP2xS1)):
        return 1
    return 2 * b.k


def block_has_z2(b: Block) -> bool:
    """True for the blocks with fundamental group Z/2 (the rest have Z)."""
    return isinstance(b, (FakeRP5, FakeRP5Top, S2xRP3, StarS2xRP3))


def block_top_only(b: Block) -> bool:
    return isinstance(b, (FakeRP5Top, StarS2xRP3))


def _contribution(b: Block, kind: GroupKind) -> BordismElement:
    """Bordism class of the block's characteristic piece in the given group.

    Smooth fakes appearing in a topological expression contribute through
    the forgetful map (KS 0, class mod 8).
    """
    cat, fl = kind.category, kind.flavor
    z = bordism.zero(kind)
    if cat is Category.SMOOTH:
        if fl is Flavor.PIN_PLUS and isinstance(b, FakeRP5):
            return BordismElement(kind, (b.q,))
        if fl is Flavor.PINC:
            if isinstance(b, FakeRP5):
                return BordismElement(kind, (b.q % 8, 0))
            if isinstance(b, CP2xS1):
                return BordismElement(kind, (0, 1))
        return z
    # topological groups: leading coordinate is KS
    if fl is Flavor.PIN_PLUS:
        if isinstance(b, FakeRP5Top):
            return BordismElement(kind, (b.p, b.q))
        if isinstance(b, FakeRP5):
            return BordismElement(kind, (0, b.q % 8))
        if isinstance(b, StarS2xRP3):
            return BordismElement(kind, (1, 0))
        return z
    if fl is Flavor.PINC:
        if isinstance(b, FakeRP5Top):
            return BordismElement(kind, (b.p, b.q, 0))
        if isinstance(b, FakeRP5):
            return BordismElement(kind, (0, b.q % 8, 0))
        if isinstance(b, CP2xS1):
            return BordismElement(kind, (0, 0, 1))
        if isinstance(b, StarS2xRP3):
            return BordismElement(kind, (1, 0, 0))
        return z
    # top pin-: pure KS
    if isinstance(b, StarS2xRP3):
        return BordismElement(kind, (1,))
    if isinstance(b, FakeRP5Top):
        return BordismElement(kind, (b.p,))
    return z


# -- expressions --------------------------------------------------------------

@dataclass(frozen=True)
class ManifoldExpression:
    """An ordered join of blocks with one framing bit per join.

    Structural checks only; blocks with pi_1 = Z alone are permitted here
    (they are legitimate join operands), but invariants() requires at least
    one Z/2 block so the result has fundamental group Z/2.
    """

    category: Category
    blocks: tuple[Block, ...]
    framings: tuple[int, ...]

    def __init__(self, category: Category, blocks: Iterable[Block], framings=None):
        blocks = tuple(blocks)
        if not blocks:
            raise InvalidExpressionError("expression needs at least one block")
        if framings is None:
            framings = (0,) * (len(blocks) - 1)
        framings = tuple(int(f) % 2 for f in framings)
        if len(framings) != len(blocks) - 1:
            raise InvalidExpressionError(
                f"{len(blocks)} blocks need {len(blocks) - 1} framing bits, "
                f"got {len(framings)}"
            )
        if category is Category.SMOOTH:
            for b in blocks:
                if isinstance(b, StarS2xRP3):
                    raise StarInSmoothError(
                        "*S2xRP3 exists only in the topological category"
                    )
                if isinstance(b, FakeRP5Top):
                    raise InvalidExpressionError(
                        "X(p,q) blocks exist only in the topological category"
                    )
        object.__setattr__(self, "category", category)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "framings", framings)

    def has_z2_block(self) -> bool:
        return any(block_has_z2(b) for b in self.blocks)


def connected_sum(
    a: ManifoldExpression, b: ManifoldExpression, framing: int = 0
) -> ManifoldExpression:
    """Join two expressions, recording the framing bit at the new junction."""
    if a.category is not b.category:
        raise CategoryMismatchError(
            f"cannot join a {a.category.value} and a {b.category.value} expression"
        )
    if not (a.has_z2_block() or b.has_z2_block()):
        raise InvalidExpressionError(
            "at least one operand must contain a Z/2 block"
        )
    return ManifoldExpression(
        a.category,
        a.blocks + b.blocks,
        a.framings + (int(framing) % 2,) + b.framings,
    )


# -- invariants ---------------------------------------------------------------

@dataclass(frozen=True)
class Invariants:
    """Complete invariant tuple (category, w2-type, r, [P])."""

    category: Category
    w2type: W2Type
    r: int
    p_class: BordismElement

    @property
    def ks(self) -> int | None:
        """Kirby-Siebenmann bit; None in the smooth category."""
        if self.category is Category.TOP:
            return self.p_class.coords[0]
        return None

    @property
    def q(self) -> int | None:
        """The arf-style coordinate, where the group has one."""
        if self.w2type is W2Type.II:
            return None
        return self.p_class.coords[-1 if self.w2type is W2Type.III else -2]

    @property
    def s(self) -> int | None:
        """The w2^2 coordinate (type I only)."""
        if self.w2type is not W2Type.I:
            return None
        return self.p_class.coords[-1]

    def canonical(self) -> CanonicalClass:
        return bordism.canonicalize(self.p_class)


def _w2type_of(blocks: tuple[Block, ...]) -> W2Type:
    has_cp2 = any(isinstance(b, CP2xS1) for b in blocks)
    has_fake = any(isinstance(b, (FakeRP5, FakeRP5Top)) for b in blocks)
    has_s2rp3 = any(isinstance(b, (S2xRP3, StarS2xRP3)) for b in blocks)
    if has_cp2 or (has_fake and has_s2rp3):
        return W2Type.I
    if has_fake:
        return W2Type.III
    return W2Type.II


def invariants(e: ManifoldExpression) -> Invariants:
    """Compute (w2-type, r, [P]) for an expression.

    r = sum of block ranks + (number of Z/2 blocks - 1); the w2-type is read
    off from block presence; [P] is the signed sum of block contributions,
    a join's framing bit negating the right operand's term.
    """
    if not e.has_z2_block():
        raise InvalidExpressionError(
            "expression has no Z/2 block, so its fundamental group is not Z/2"
        )
    z2_count = sum(1 for b in e.blocks if block_has_z2(b))
    r = sum(block_rank(b) for b in e.blocks) + z2_count - 1
    w2type = _w2type_of(e.blocks)
    kind = GroupKind(e.category, FLAVOR_FOR_TYPE[w2type])
    total = bordism.zero(kind)
    for i, b in enumerate(e.blocks):
        contrib = _contribution(b, kind)
        if i > 0 and e.framings[i - 1]:
            contrib = bordism.neg(contrib)
        total = bordism.add(total, contrib)
    return Invariants(e.category, w2type, r, total)


def check_relations(inv: Invariants) -> bool:
    """Parity relations among (type, q, s, r); parities are +/- invariant."""
    if inv.w2type is W2Type.II:
        return inv.r % 2 == 1
    if inv.w2type is W2Type.III:
        return (inv.q + inv.r) % 2 == 1
    return (inv.q + inv.s + inv.r) % 2 == 1


def forget_invariants(inv: Invariants) -> Invariants:
    """Topological invariants underlying smooth ones (KS = 0)."""
    if inv.category is Category.TOP:
        return inv
    return Invariants(
        Category.TOP, inv.w2type, inv.r, bordism.forget_smooth(inv.p_class)
    )


# -- standard forms -----------------------------------------------------------

def _sign(q: int) -> int:
    return 1 if q % 2 == 0 else -1


@dataclass(frozen=True)
class StandardForm:
    """One line of the standard-form lists, with its parameters.

    Families and rank formulas (k = number of S2xS2 summands):

      type I,  s=0:  X(q) # S2xRP3 # k*(S2xS2)xS1     r = 2k + (5+(-1)^q)/2
      type I,  s=1:  X(q) # CP2xS1 # k*(S2xS2)xS1     r = 2k + (3+(-1)^q)/2
      type II:       S2xRP3 # k*(S2xS2)xS1            r = 2k + 1
      type III:      X(q) # k*(S2xS2)xS1              r = 2k + (1+(-1)^q)/2

    Smooth: q in {0..8} for type III, {0..4} for type I.  Topological: X(q)
    becomes X(p,q) with p = KS in {0,1} and q in {0..4}; the type II family
    with p = 1 uses *S2xRP3 instead of S2xRP3.
    """

    category: Category
    w2type: W2Type
    k: int
    q: int | None = None
    s: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise InvalidExpressionError(f"k must be >= 0, got {self.k}")
        top = self.category is Category.TOP
        if top:
            if self.p not in (0, 1):
                raise InvalidExpressionError("topological forms need p in {0,1}")
        elif self.p is not None:
            raise InvalidExpressionError("smooth forms carry no KS parameter")
        if self.w2type is W2Type.II:
            if self.q is not None or self.s is not None:
                raise InvalidExpressionError("type II forms have no q or s")
        elif self.w2type is W2Type.III:
            qmax = 4 if top else 8
            if self.q is None or not 0 <= self.q <= qmax:
                raise InvalidExpressionError(
                    f"type III needs q in 0..{qmax}, got {self.q}"
                )
            if self.s is not None:
                raise InvalidExpressionError("type III forms have no s")
        else:
            if self.q is None or not 0 <= self.q <= 4:
                raise InvalidExpressionError(f"type I needs q in 0..4, got {self.q}")
            if self.s not in (0, 1):
                raise InvalidExpressionError("type I needs s in {0,1}")

    @property
    def r(self) -> int:
        if self.w2type is W2Type.II:
            return 2 * self.k + 1
        if self.w2type is W2Type.III:
            return 2 * self.k + (1 + _sign(self.q)) // 2
        base = (5 + _sign(self.q)) // 2 if self.s == 0 else (3 + _sign(self.q)) // 2
        return 2 * self.k + base

    def expression(self) -> ManifoldExpression:
        blocks: list[Block] = []
        top = self.category is Category.TOP
        if self.w2type is W2Type.II:
            blocks.append(StarS2xRP3() if (top and self.p == 1) else S2xRP3())
        else:
            blocks.append(FakeRP5Top(self.p, self.q) if top else FakeRP5(self.q))
            if self.w2type is W2Type.I:
                blocks.append(CP2xS1() if self.s == 1 else S2xRP3())
        if self.k > 0:
            blocks.append(S2xS2xS1(self.k))
        return ManifoldExpression(self.category, blocks)

    def invariants(self) -> Invariants:
        return invariants(self.expression())

    def text(self) -> str:
        from .parsing import render_expression

        return render_expression(self.expression())


def standard_form_from_invariants(inv: Invariants) -> StandardForm:
    """The unique standard form with the given invariants.

    k is recovered by inverting the rank formula of the matching family;
    a non-integral or negative k cannot arise from a block expression and is
    reported as an internal inconsistency.
    """
    rep = inv.canonical().rep
    top = inv.category is Category.TOP
    p = rep[0] if top else None
    if inv.w2type is W2Type.II:
        q = s = None
        base = 1
    elif inv.w2type is W2Type.III:
        q, s = rep[-1], None
        base = (1 + _sign(q)) // 2
    else:
        q, s = rep[-2], rep[-1]
        base = (5 + _sign(q)) // 2 if s == 0 else (3 + _sign(q)) // 2
    k2 = inv.r - base
    if k2 < 0 or k2 % 2:
        raise ConsistencyError(
            f"no standard family matches invariants "
            f"(type {inv.w2type.value}, r={inv.r}, class {rep})"
        )
    return StandardForm(inv.category, inv.w2type, k2 // 2, q=q, s=s, p=p)


def normalize(e: ManifoldExpression) -> StandardForm:
    return standard_form_from_invariants(invariants(e))


_TYPE_ORDER = {W2Type.I: 0, W2Type.II: 1, W2Type.III: 2}


def _form_sort_key(f: StandardForm):
    return (f.r, _TYPE_ORDER[f.w2type], f.q or 0, f.s or 0, f.p or 0)


def enumerate_forms(
    r_max: int, category: Category, w2type: W2Type | None = None
) -> list[StandardForm]:
    """All standard forms of the category with r <= r_max, each once.

    Ordered by (r, type, q, s, p), lexicographically.
    """
    if r_max < 0:
        raise InvalidExpressionError("r_max must be >= 0")
    top = category is Category.TOP
    ps: tuple[int | None, ...] = (0, 1) if top else (None,)
    out: list[StandardForm] = []

    def keep(form: StandardForm):
        if form.r <= r_max:
            out.append(form)

    for p in ps:
        for k in range(r_max // 2 + 1):
            keep(StandardForm(category, W2Type.II, k, p=p))
            for q in range(0, (4 if top else 8) + 1):
                keep(StandardForm(category, W2Type.III, k, q=q, p=p))
            for q in range(0, 5):
                for s in (0, 1):
                    keep(StandardForm(category, W2Type.I, k, q=q, s=s, p=p))
    forms = [f for f in out if w2type is None or f.w2type is w2type]
    forms.sort(key=_form_sort_key)
    return forms


# -- equivalence --------------------------------------------------------------

class Level(str, Enum):
    DIFFEO = "diffeo"
    HOMEO = "homeo"
    HOMOTOPY = "homotopy"


def _as_invariants(x: Union[StandardForm, Invariants]) -> Invariants:
    return x.invariants() if isinstance(x, StandardForm) else x


def equivalent(
    a: Union[StandardForm, Invariants],
    b: Union[StandardForm, Invariants],
    level: Level,
) -> bool:
    """Equality of manifolds at the requested level.

    Diffeo: same (type, r, [P] mod +-), smooth inputs only.  Homeo: the same
    after forgetting to the topological groups (KS included).  Homotopy:
    same (type, r); in type I additionally the same homotopy bit, which is
    the w2^2 coordinate s of [P] (the characteristic number
    <w2(M)^2 t + t^5, [M]>, whose value on a class q*RP4 + s*CP2 is s since
    w2(RP4) = 0).
    """
    ia, ib = _as_invariants(a), _as_invariants(b)
    if level is Level.DIFFEO:
        if Category.TOP in (ia.category, ib.category):
            raise CategoryMismatchError(
                "diffeomorphism comparison needs smooth inputs on both sides"
            )
        return (ia.w2type, ia.r, ia.canonical()) == (ib.w2type, ib.r, ib.canonical())
    if level is Level.HOMEO:
        ta, tb = forget_invariants(ia), forget_invariants(ib)
        return (ta.w2type, ta.r, ta.canonical()) == (tb.w2type, tb.r, tb.canonical())
    if (ia.w2type, ia.r) != (ib.w2type, ib.r):
        return False
    if ia.w2type is W2Type.I:
        return ia.s == ib.s
    return True
