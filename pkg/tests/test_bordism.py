"""Tests for the six bordism groups: table data, arithmetic, quotient."""

import pytest

from fiveclass import bordism
from fiveclass.bordism import (
    ALL_KINDS,
    BordismElement,
    Category,
    Flavor,
    GroupKind,
    add,
    canonicalize,
    elements,
    forget_smooth,
    group_info,
    kind_from_name,
    neg,
    parse_element,
    render_element,
    zero,
)
from fiveclass.errors import InputError, KindMismatchError

SPIN = Category.SMOOTH
TOP = Category.TOP

PINC = GroupKind(SPIN, Flavor.PINC)
PINP = GroupKind(SPIN, Flavor.PIN_PLUS)
PINM = GroupKind(SPIN, Flavor.PIN_MINUS)
TPINC = GroupKind(TOP, Flavor.PINC)
TPINP = GroupKind(TOP, Flavor.PIN_PLUS)
TPINM = GroupKind(TOP, Flavor.PIN_MINUS)


def test_group_table_rows():
    assert group_info(PINC).orders == (8, 2)
    assert group_info(PINC).generators == ("RP4", "CP2")
    assert group_info(PINP).orders == (16,)
    assert group_info(PINP).generators == ("RP4",)
    assert group_info(PINM).orders == ()
    assert group_info(TPINC).orders == (2, 8, 2)
    assert group_info(TPINC).generators == ("E8", "RP4", "CP2")
    assert group_info(TPINP).orders == (2, 8)
    assert group_info(TPINM).orders == (2,)
    assert group_info(TPINM).generators == ("E8",)


def test_group_invariant_names():
    assert group_info(PINC).invariants == ("arf", "w2^2")
    assert group_info(TPINC).invariants == ("KS", "arf", "w2^2")
    assert group_info(TPINM).invariants == ("KS",)


def test_add_examples():
    assert add(BordismElement(PINP, (9,)), BordismElement(PINP, (9,))).coords == (2,)
    assert add(BordismElement(PINC, (7, 1)), BordismElement(PINC, (1, 1))).coords == (0, 0)
    assert neg(BordismElement(PINP, (3,))).coords == (13,)


def test_add_kind_mismatch():
    with pytest.raises(KindMismatchError):
        add(BordismElement(PINP, (1,)), BordismElement(PINC, (1, 0)))


def test_coords_are_reduced():
    assert BordismElement(PINP, (-3,)).coords == (13,)
    assert BordismElement(TPINC, (3, 11, 4)).coords == (1, 3, 0)


def test_wrong_coordinate_count():
    with pytest.raises(InputError):
        BordismElement(PINP, (1, 2))


def test_canonicalize_examples():
    assert canonicalize(BordismElement(PINP, (13,))).rep == (3,)
    assert canonicalize(BordismElement(PINC, (7, 1))).rep == (1, 1)
    assert canonicalize(BordismElement(TPINC, (1, 5, 0))).rep == (1, 3, 0)


def test_canonical_representative_sets():
    # smooth pin+: {0..8}; smooth pinc: {0..4} x {0,1}
    assert {canonicalize(e).rep[0] for e in elements(PINP)} == set(range(9))
    assert {canonicalize(e).rep for e in elements(PINC)} == {
        (q, s) for q in range(5) for s in (0, 1)
    }


def test_forget_smooth_examples():
    assert forget_smooth(BordismElement(PINP, (7,))).coords == (0, 7)
    assert forget_smooth(BordismElement(PINP, (8,))).coords == (0, 0)
    assert forget_smooth(BordismElement(PINC, (1, 1))).coords == (0, 1, 1)
    assert forget_smooth(BordismElement(PINM, ())).coords == (0,)


def test_forget_smooth_rejects_top():
    with pytest.raises(KindMismatchError):
        forget_smooth(BordismElement(TPINP, (0, 1)))


def test_forget_smooth_kernel_is_order_two():
    # the order-2 ambiguity: exactly 0 and 8 die in the topological group
    kernel = [
        e.coords[0]
        for e in elements(PINP)
        if forget_smooth(e).coords == (0, 0)
    ]
    assert kernel == [0, 8]


def test_group_axioms_exhaustive():
    for kind in ALL_KINDS:
        elems = list(elements(kind))
        assert len(elems) == kind.group_order
        z = zero(kind)
        for a in elems:
            assert add(a, z) == a
            assert add(a, neg(a)) == z
            assert canonicalize(a) == canonicalize(neg(a))
            for b in elems:
                assert add(a, b) == add(b, a)
                for c in elems:
                    assert add(add(a, b), c) == add(a, add(b, c))


def test_forget_smooth_is_homomorphism():
    for kind in ALL_KINDS:
        if kind.category is not SPIN:
            continue
        for a in elements(kind):
            for b in elements(kind):
                assert forget_smooth(add(a, b)) == add(
                    forget_smooth(a), forget_smooth(b)
                )


def test_render_parse_round_trip():
    for kind in ALL_KINDS:
        for e in elements(kind):
            assert parse_element(render_element(e)) == e


def test_parse_element_formats():
    assert parse_element("pin+:7") == BordismElement(PINP, (7,))
    assert parse_element("pinc:(1,1)") == BordismElement(PINC, (1, 1))
    assert parse_element("top-pin+:(1,3)") == BordismElement(TPINP, (1, 3))
    assert parse_element("pin-:()") == BordismElement(PINM, ())
    with pytest.raises(InputError):
        parse_element("pin*:3")
    with pytest.raises(InputError):
        parse_element("pin+")
    with pytest.raises(InputError):
        kind_from_name("spin")


def test_render_formats():
    assert render_element(BordismElement(PINP, (7,))) == "pin+:7"
    assert render_element(BordismElement(PINC, (1, 1))) == "pinc:(1,1)"
    assert render_element(BordismElement(PINM, ())) == "pin-:()"
    assert render_element(BordismElement(TPINM, (1,))) == "top-pin-:1"
