"""The six 4-dimensional Pin bordism groups and their arithmetic.

Groups, invariant names and generators:

    flavor   smooth                     topological
    pinc     Z/8 + Z/2  (arf, w2^2)     Z/2 + Z/8 + Z/2  (KS, arf, w2^2)
             gens RP4, CP2              gens E8, RP4, CP2
    pin+     Z/16       gen RP4         Z/2 + Z/8        (KS, arf), gens E8, RP4
    pin-     0                          Z/2              KS, gen E8

Elements are full (signed) group elements; the quotient by the orientation
action x -> -x is applied only at comparison time, through canonicalize.
The Z/16 coordinate of the smooth pin+ group is generator-relative
(RP4 -> 1); no closed-form invariant for it is known.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from .errors import InputError, KindMismatchError


class Category(str, Enum):
    SMOOTH = "smooth"
    TOP = "top"


class Flavor(str, Enum):
    PINC = "pinc"
    PIN_PLUS = "pin+"
    PIN_MINUS = "pin-"


# (orders of the cyclic factors, generator names), per (category, flavor)
GROUP_TABLE: dict[tuple[Category, Flavor], tuple[tuple[int, ...], tuple[str, ...]]] = {
    (Category.SMOOTH, Flavor.PINC): ((8, 2), ("RP4", "CP2")),
    (Category.SMOOTH, Flavor.PIN_PLUS): ((16,), ("RP4",)),
    (Category.SMOOTH, Flavor.PIN_MINUS): ((), ()),
    (Category.TOP, Flavor.PINC): ((2, 8, 2), ("E8", "RP4", "CP2")),
    (Category.TOP, Flavor.PIN_PLUS): ((2, 8), ("E8", "RP4")),
    (Category.TOP, Flavor.PIN_MINUS): ((2,), ("E8",)),
}

# names the invariants of each coordinate, where the group has one
INVARIANT_NAMES: dict[tuple[Category, Flavor], tuple[str, ...]] = {
    (Category.SMOOTH, Flavor.PINC): ("arf", "w2^2"),
    (Category.SMOOTH, Flavor.PIN_PLUS): ("?",),
    (Category.SMOOTH, Flavor.PIN_MINUS): (),
    (Category.TOP, Flavor.PINC): ("KS", "arf", "w2^2"),
    (Category.TOP, Flavor.PIN_PLUS): ("KS", "arf"),
    (Category.TOP, Flavor.PIN_MINUS): ("KS",),
}


@dataclass(frozen=True)
class GroupKind:
    category: Category
    flavor: Flavor

    @property
    def name(self) -> str:
        prefix = "top-" if self.category is Category.TOP else ""
        return prefix + self.flavor.value

    @property
    def orders(self) -> tuple[int, ...]:
        return GROUP_TABLE[(self.category, self.flavor)][0]

    @property
    def generators(self) -> tuple[str, ...]:
        return GROUP_TABLE[(self.category, self.flavor)][1]

    @property
    def group_order(self) -> int:
        n = 1
        for o in self.orders:
            n *= o
        return n


ALL_KINDS = tuple(GroupKind(cat, fl) for cat, fl in GROUP_TABLE)

_KIND_BY_NAME = {k.name: k for k in ALL_KINDS}


def kind_from_name(name: str) -> GroupKind:
    kind = _KIND_BY_NAME.get(name.strip().lower())
    if kind is None:
        raise InputError(
            f"unknown bordism group {name!r}; expected one of "
            + ", ".join(sorted(_KIND_BY_NAME))
        )
    return kind


@dataclass(frozen=True)
class GroupInfo:
    kind: GroupKind
    orders: tuple[int, ...]
    generators: tuple[str, ...]
    invariants: tuple[str, ...]


def group_info(kind: GroupKind) -> GroupInfo:
    orders, gens = GROUP_TABLE[(kind.category, kind.flavor)]
    return GroupInfo(kind, orders, gens, INVARIANT_NAMES[(kind.category, kind.flavor)])


@dataclass(frozen=True)
class BordismElement:
    """Element of one of the six groups; coordinates are reduced residues."""

    kind: GroupKind
    coords: tuple[int, ...]

    def __init__(self, kind: GroupKind, coords):
        coords = tuple(int(c) for c in coords)
        orders = kind.orders
        if len(coords) != len(orders):
            raise InputError(
                f"{kind.name} takes {len(orders)} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(
            self, "coords", tuple(c % o for c, o in zip(coords, orders))
        )

    def __add__(self, other: "BordismElement") -> "BordismElement":
        return add(self, other)

    def __neg__(self) -> "BordismElement":
        return neg(self)

    def canonical(self) -> "CanonicalClass":
        return canonicalize(self)


@dataclass(frozen=True)
class CanonicalClass:
    """An element of the quotient by x -> -x, stored as its smallest lift."""

    kind: GroupKind
    rep: tuple[int, ...]


def zero(kind: GroupKind) -> BordismElement:
    return BordismElement(kind, (0,) * len(kind.orders))


def add(a: BordismElement, b: BordismElement) -> BordismElement:
    if a.kind != b.kind:
        raise KindMismatchError(f"cannot add {a.kind.name} and {b.kind.name}")
    return BordismElement(a.kind, (x + y for x, y in zip(a.coords, b.coords)))


def neg(a: BordismElement) -> BordismElement:
    return BordismElement(a.kind, (-x for x in a.coords))


def canonicalize(a: BordismElement) -> CanonicalClass:
    """min(a, -a), lexicographically on the reduced coordinate tuples.

    Resulting representative sets: {0..8} for smooth pin+,
    {0..4} x {0,1} for smooth pinc, and likewise with a leading KS bit
    in the topological cases.
    """
    return CanonicalClass(a.kind, min(a.coords, neg(a).coords))


def forget_smooth(a: BordismElement) -> BordismElement:
    """Image under the smooth -> topological comparison map.

    Defined by generator tracking (RP4 -> RP4, smooth manifolds have
    KS = 0); on the pin+ groups this reduces the Z/16 coordinate mod 8.
    """
    if a.kind.category is not Category.SMOOTH:
        raise KindMismatchError("forget_smooth needs a smooth bordism element")
    top = GroupKind(Category.TOP, a.kind.flavor)
    if a.kind.flavor is Flavor.PIN_PLUS:
        return BordismElement(top, (0, a.coords[0] % 8))
    if a.kind.flavor is Flavor.PINC:
        return BordismElement(top, (0, a.coords[0], a.coords[1]))
    return BordismElement(top, (0,))


def elements(kind: GroupKind) -> Iterator[BordismElement]:
    for coords in product(*(range(o) for o in kind.orders)):
        yield BordismElement(kind, coords)


# -- textual notation: pin+:7, pinc:(1,1), top-pin+:(1,3), pin-:() ------------

def render_element(a: BordismElement) -> str:
    return f"{a.kind.name}:{_render_coords(a.coords)}"


def render_canonical(c: CanonicalClass) -> str:
    return f"{c.kind.name}:{_render_coords(c.rep)}"


def _render_coords(coords: tuple[int, ...]) -> str:
    if len(coords) == 1:
        return str(coords[0])
    return "(" + ",".join(str(c) for c in coords) + ")"


def parse_element(text: str) -> BordismElement:
    text = text.strip()
    name, sep, rest = text.partition(":")
    if not sep:
        raise InputError(f"bad element {text!r}; expected e.g. 'pin+:7'")
    kind = kind_from_name(name)
    rest = rest.strip()
    if rest.startswith("(") and rest.endswith(")"):
        rest = rest[1:-1]
    parts = [p.strip() for p in rest.split(",")] if rest.strip() else []
    try:
        coords = [int(p) for p in parts if p != ""]
    except ValueError as exc:
        raise InputError(f"bad coordinates in element {text!r}") from exc
    return BordismElement(kind, coords)
