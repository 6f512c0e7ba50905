"""Bundled example rings and maps used by tests, docs, and the CLI corpus."""
from __future__ import annotations

from .maps import RingIsomorphism, inner_automorphism
from .presentation import RingPresentation


def cyclic(n: int, name: str | None = None) -> RingPresentation:
    """The ring of integers mod n on a single generator."""
    return RingPresentation((n,), (((1 % n,),),), (1 % n,), name=name or "Z%d" % n)


def upper_triangular(n: int, modulus: int, name: str | None = None) -> RingPresentation:
    """n-by-n upper triangular matrices over Z_modulus.

    Basis is E_ab for a <= b in row-major order; E_ab * E_cd = [b == c] E_ad.
    """
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    index = {p: t for t, p in enumerate(pairs)}
    k = len(pairs)
    zero = (0,) * k
    mul = []
    for a, b in pairs:
        row = []
        for c, d in pairs:
            if b == c:
                vec = [0] * k
                vec[index[(a, d)]] = 1
                row.append(tuple(vec))
            else:
                row.append(zero)
        mul.append(tuple(row))
    one = [0] * k
    for a in range(n):
        one[index[(a, a)]] = 1
    return RingPresentation(
        (modulus,) * k, tuple(mul), tuple(one), name=name or "T%d(Z%d)" % (n, modulus)
    )


def product(a: RingPresentation, b: RingPresentation, name: str | None = None) -> RingPresentation:
    """External direct product with block-diagonal multiplication."""
    ka = a.rank
    kb = b.rank
    zero = (0,) * (ka + kb)
    mul = []
    for i in range(ka + kb):
        row = []
        for j in range(ka + kb):
            if i < ka and j < ka:
                row.append(tuple(a.mul[i][j]) + (0,) * kb)
            elif i >= ka and j >= ka:
                row.append((0,) * ka + tuple(b.mul[i - ka][j - ka]))
            else:
                row.append(zero)
        mul.append(tuple(row))
    return RingPresentation(
        a.orders + b.orders,
        tuple(mul),
        tuple(a.one) + tuple(b.one),
        name=name or "%sx%s" % (a.name, b.name),
    )


def field_f4() -> RingPresentation:
    # GF(4) on basis {1, x} with x^2 = x + 1
    return RingPresentation(
        (2, 2),
        (((1, 0), (0, 1)), ((0, 1), (1, 1))),
        (1, 0),
        name="F4",
    )


def z6() -> RingPresentation:
    return cyclic(6)


def f2() -> RingPresentation:
    return cyclic(2, name="F2")


def z4() -> RingPresentation:
    return cyclic(4)


def t2_f2() -> RingPresentation:
    return upper_triangular(2, 2, name="T2(F2)")


def t2_z4() -> RingPresentation:
    return upper_triangular(2, 4, name="T2(Z4)")


def t3_f2() -> RingPresentation:
    return upper_triangular(3, 2, name="T3(F2)")


def z2xz3() -> RingPresentation:
    return product(cyclic(2), cyclic(3), name="Z2xZ3")


def three_block() -> RingPresentation:
    """T2(F2) plus a one-dimensional summand; three triangular blocks, one of
    which splits off.  The summand is listed first in the basis."""
    return product(f2(), t2_f2(), name="three_block")


FIXTURE_BUILDERS = {
    "z6": z6,
    "f2": f2,
    "f4": field_f4,
    "z4": z4,
    "t2_f2": t2_f2,
    "t2_z4": t2_z4,
    "t3_f2": t3_f2,
    "z2xz3": z2xz3,
    "three_block": three_block,
}


def fixture(name: str) -> RingPresentation:
    return FIXTURE_BUILDERS[name]()


def t2_f2_inner() -> RingIsomorphism:
    """Conjugation of T2(F2) by the unit 1 + E12."""
    ring = t2_f2()
    return inner_automorphism(ring.element((1, 1, 1)))
