"""Classify the total space of a circle bundle over a simply-connected
closed 4-manifold X when c1 = 2 * primitive, so pi_1(M) = Z/2.

Input: the intersection form Q of X, its Kirby-Siebenmann bit, and the
pairing vector of c1.  Write ct = c1/2 (the Chern class of the bundle
upstairs).  Then r = rk H_2(X) - 1 and the w2-type of M is

    II  iff Q is even (X spin),
    III iff ct is characteristic (w2(X) = ct mod 2),
    I   otherwise.

M is smoothable iff KS(X) = 0 (for even divisibility); the KS bit of the
characteristic submanifold equals KS(X), so the topological answer always
carries p = KS(X).  The arf-style coordinate is q = <ct^2, [X]> mod 8 taken
mod +-, and in type I the w2^2 coordinate is s = rk H_2(X) + <ct^2, [X]>
mod 2, using that <w2(X)^2, [X]> = rk H_2(X) mod 2 for any closed
4-manifold.  The number of S2xS2 summands k then comes from inverting the
rank formula of the matching family.  For smooth type III the pin+ class is
only pinned down mod 8, never mod 16: the answer is the two-element
candidate set {q, q+8} mod +-, which collapses to one element when q = 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Category, Invariants, StandardForm, W2Type
from .errors import (
    InvalidFormError,
    NonIntegralKError,
    WrongDivisibilityError,
    ZeroClassError,
)
from .forms import CohomologyClass, IntersectionForm


@dataclass(frozen=True)
class BundleInput:
    form: IntersectionForm
    ks: int
    c1: CohomologyClass

    def __post_init__(self):
        if self.ks not in (0, 1):
            raise InvalidFormError(f"ks must be 0 or 1, got {self.ks}")
        if len(self.c1) != self.form.rank:
            raise InvalidFormError(
                f"c1 has length {len(self.c1)}, form has rank {self.form.rank}"
            )


@dataclass(frozen=True)
class Classification:
    m: int
    r: int
    w2type: W2Type
    smoothable: bool
    homeo_form: StandardForm
    smooth_forms: tuple[StandardForm, ...]
    invariants: Invariants
    q: int | None
    s: int | None
    k: int


def w2_type(form: IntersectionForm, c1: CohomologyClass) -> W2Type:
    """w2-type of the total space; requires divisibility(c1) = 2."""
    _require_divisibility_two(c1)
    ct = c1.halved()
    if form.is_even():
        return W2Type.II
    if form.is_characteristic(ct):
        return W2Type.III
    return W2Type.I


def is_smoothable(ks: int, c1: CohomologyClass) -> bool:
    """Odd divisibility: always smoothable.  Even: smoothable iff KS(X)=0."""
    m = c1.divisibility()
    if m == 0:
        raise ZeroClassError("c1 is the zero class; the bundle is trivial")
    if m % 2 == 1:
        return True
    return ks == 0


def _require_divisibility_two(c1: CohomologyClass) -> None:
    m = c1.divisibility()
    if m == 0:
        raise ZeroClassError("c1 is the zero class; the bundle is trivial")
    if m == 1:
        raise WrongDivisibilityError(
            1,
            "c1 is primitive (m=1): the total space is simply connected; "
            "that is the Smale-Barden / Duan-Liang classification, "
            "not handled here",
        )
    if m != 2:
        raise WrongDivisibilityError(
            m,
            f"c1 has divisibility m={m}: pi_1(M) = Z/{m} is outside the "
            "classified family (only m=2 is supported)",
        )


def _invert_rank_formula(rk: int, base: int, label: str) -> int:
    k2 = rk - base
    if k2 < 0 or k2 % 2:
        raise NonIntegralKError(
            f"k = ({rk} - {base})/2 is not a non-negative integer in the "
            f"{label} formula; input violates an expected parity"
        )
    return k2 // 2


def classify(inp: BundleInput) -> Classification:
    """Full classification of the total space, per the w2-type trichotomy.

    Always returns the homeomorphism type; when KS(X) = 0 also the smooth
    answer, which for type III is the order-2 candidate set.
    """
    form, ks, c1 = inp.form, inp.ks, inp.c1
    _require_divisibility_two(c1)
    ct = c1.halved()
    t = w2_type(form, c1)
    rk = form.rank
    r = rk - 1
    smoothable = ks == 0

    def sign(q: int) -> int:
        return 1 if q % 2 == 0 else -1

    if t is W2Type.II:
        if rk % 2:
            raise NonIntegralKError(f"even form of odd rank {rk}")
        k = rk // 2 - 1
        if k < 0:
            raise NonIntegralKError(f"even form of rank {rk} < 2")
        q8 = s = None
        homeo = StandardForm(Category.TOP, t, k, p=ks)
        smooth = (StandardForm(Category.SMOOTH, t, k),) if smoothable else ()
    else:
        qraw = form.square(ct)
        q8 = min(qraw % 8, (-qraw) % 8)
        if t is W2Type.III:
            s = None
            k = _invert_rank_formula(rk, (3 + sign(q8)) // 2, "type III")
            homeo = StandardForm(Category.TOP, t, k, q=q8, p=ks)
            # smooth class known only mod 8: candidates q8 and 8-q8 in Z/16 mod +-
            candidates = sorted({q8, 8 - q8})
            smooth = (
                tuple(StandardForm(Category.SMOOTH, t, k, q=qq) for qq in candidates)
                if smoothable
                else ()
            )
        else:
            s = (rk + qraw) % 2
            base = (7 + sign(q8)) // 2 if s == 0 else (5 + sign(q8)) // 2
            k = _invert_rank_formula(rk, base, "type I")
            homeo = StandardForm(Category.TOP, t, k, q=q8, s=s, p=ks)
            smooth = (
                (StandardForm(Category.SMOOTH, t, k, q=q8, s=s),)
                if smoothable
                else ()
            )

    inv = homeo.invariants()
    return Classification(
        m=2,
        r=r,
        w2type=t,
        smoothable=smoothable,
        homeo_form=homeo,
        smooth_forms=smooth,
        invariants=inv,
        q=q8,
        s=s,
        k=k,
    )
