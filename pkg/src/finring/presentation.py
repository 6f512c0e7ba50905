"""Finite rings presented by structure constants.

A ring here is an additive group Z_{d1} x ... x Z_{dk} with a bilinear
multiplication described by a tensor c, where generator products expand as

    g_i * g_j = sum_l c[i][j][l] * g_l      (mod d_l componentwise).

Validation checks, in order: shapes and reduction of all entries, order
compatibility (d_i * (g_i g_j) = d_j * (g_i g_j) = 0, which makes the bilinear
extension well defined), the two-sided unit law on generators, and
associativity on all generator triples.  Bilinearity then carries these to the
whole ring, so a validated presentation is an honest finite unital ring.

Elements are immutable coefficient tuples tied to their presentation; mixing
elements of different presentations raises AmbientMismatch.
"""
from __future__ import annotations

import itertools

from .errors import (
    AmbientMismatch,
    CapExceeded,
    NonAssociative,
    OrderViolation,
    ShapeMismatch,
    UnitFailure,
)

# Exhaustive element sweeps refuse to run past this many elements unless the
# caller raises the cap explicitly.
DEFAULT_ENUMERATION_CAP = 4096


def _as_int_tuple(seq, what: str) -> tuple[int, ...]:
    try:
        out = tuple(int(v) for v in seq)
    except (TypeError, ValueError):
        raise ShapeMismatch("%s must be a sequence of integers" % what)
    return out


class RingPresentation:
    """A validated structure-constant presentation of a finite unital ring."""

    __slots__ = ("orders", "mul", "one", "name", "_hash")

    def __init__(self, orders, mul, one, name: str | None = None):
        self.orders = _as_int_tuple(orders, "orders")
        k = len(self.orders)
        for i, d in enumerate(self.orders):
            if d < 2:
                raise ShapeMismatch("generator order at index %d must be >= 2" % i)

        if len(mul) != k:
            raise ShapeMismatch("mul tensor must have %d rows" % k)
        rows = []
        for i, row in enumerate(mul):
            if len(row) != k:
                raise ShapeMismatch("mul row %d must have %d entries" % (i, k))
            cols = []
            for j, vec in enumerate(row):
                v = _as_int_tuple(vec, "mul[%d][%d]" % (i, j))
                if len(v) != k:
                    raise ShapeMismatch("mul[%d][%d] must have %d coefficients" % (i, j, k))
                for l, c in enumerate(v):
                    if not 0 <= c < self.orders[l]:
                        raise ShapeMismatch(
                            "mul[%d][%d][%d] = %d is not reduced mod %d; "
                            "reduce all inputs before validation" % (i, j, l, c, self.orders[l])
                        )
                cols.append(v)
            rows.append(tuple(cols))
        self.mul = tuple(rows)

        u = _as_int_tuple(one, "one")
        if len(u) != k:
            raise ShapeMismatch("unit vector must have %d coefficients" % k)
        for l, c in enumerate(u):
            if not 0 <= c < self.orders[l]:
                raise ShapeMismatch(
                    "one[%d] = %d is not reduced mod %d; "
                    "reduce all inputs before validation" % (l, c, self.orders[l])
                )
        self.one = u
        self.name = name
        self._hash = hash((self.orders, self.mul, self.one))

        self._check_order_compat()
        self._check_unit()
        self._check_associativity()

    # -- validation ------------------------------------------------------

    def _check_order_compat(self):
        for i, j in itertools.product(range(len(self.orders)), repeat=2):
            vec = self.mul[i][j]
            for l, c in enumerate(vec):
                if (self.orders[i] * c) % self.orders[l] or (self.orders[j] * c) % self.orders[l]:
                    raise OrderViolation(i, j)

    def _check_unit(self):
        for i in range(len(self.orders)):
            g = self._basis_coeffs(i)
            if self._mul_coeffs(self.one, g) != g or self._mul_coeffs(g, self.one) != g:
                raise UnitFailure(i)

    def _check_associativity(self):
        k = len(self.orders)
        for i, j, l in itertools.product(range(k), repeat=3):
            left = self._mul_coeffs(self.mul[i][j], self._basis_coeffs(l))
            right = self._mul_coeffs(self._basis_coeffs(i), self.mul[j][l])
            if left != right:
                raise NonAssociative(i, j, l)

    # -- coefficient arithmetic ------------------------------------------

    def _basis_coeffs(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(len(self.orders)))

    def _reduce(self, coeffs) -> tuple[int, ...]:
        return tuple(c % d for c, d in zip(coeffs, self.orders))

    def _add_coeffs(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def _neg_coeffs(self, a):
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def _scale_coeffs(self, n, a):
        return tuple((n * x) % d for x, d in zip(a, self.orders))

    def _mul_coeffs(self, a, b):
        k = len(self.orders)
        acc = [0] * k
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.mul[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                vec = row[j]
                for l in range(k):
                    acc[l] += xy * vec[l]
        return tuple(c % d for c, d in zip(acc, self.orders))

    # -- public surface --------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for d in self.orders:
            n *= d
        return n

    @property
    def rank(self) -> int:
        return len(self.orders)

    def zero(self) -> "Element":
        return Element(self, (0,) * len(self.orders))

    def one_element(self) -> "Element":
        return Element(self, self.one)

    def gen(self, i: int) -> "Element":
        return Element(self, self._basis_coeffs(i))

    def gens(self) -> tuple["Element", ...]:
        return tuple(self.gen(i) for i in range(len(self.orders)))

    def element(self, coeffs) -> "Element":
        c = _as_int_tuple(coeffs, "coefficients")
        if len(c) != len(self.orders):
            raise ShapeMismatch("element needs %d coefficients" % len(self.orders))
        return Element(self, self._reduce(c))

    def elements(self):
        """All elements in lexicographic coefficient order.  No cap is applied
        here; callers running exhaustive sweeps must guard with require_cap."""
        for coeffs in itertools.product(*(range(d) for d in self.orders)):
            yield Element(self, coeffs)

    def sum(self, elems) -> "Element":
        acc = self.zero()
        for e in elems:
            acc = acc + e
        return acc

    def permuted(self, perm) -> "RingPresentation":
        """Re-present the same ring with generators listed in a new order.

        perm[i] names the old index of new generator i.
        """
        perm = tuple(perm)
        k = len(self.orders)
        if sorted(perm) != list(range(k)):
            raise ShapeMismatch("not a permutation of generator indices")
        inv = [0] * k
        for new, old in enumerate(perm):
            inv[old] = new
        orders = tuple(self.orders[old] for old in perm)

        def remap(vec):
            return tuple(vec[perm[l]] for l in range(k))

        mul = tuple(
            tuple(remap(self.mul[perm[i]][perm[j]]) for j in range(k)) for i in range(k)
        )
        return RingPresentation(orders, mul, remap(self.one), name=self.name)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.orders == other.orders
            and self.mul == other.mul
            and self.one == other.one
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name if self.name else "x".join("Z%d" % d for d in self.orders) or "0"
        return "RingPresentation(%s, |A|=%d)" % (label, self.order)


def validate_presentation(orders, mul, one, name: str | None = None) -> RingPresentation:
    """Validate raw structure-constant data, returning the presentation.

    Raises the first violated axiom: ShapeMismatch for malformed or unreduced
    input, OrderViolation(i, j), UnitFailure(i) or NonAssociative(i, j, l).
    """
    return RingPresentation(orders, mul, one, name=name)


class Element:
    """An element of a presented ring, stored as reduced coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingPresentation, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _require_same(self, other: "Element"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise AmbientMismatch("elements belong to different rings")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        return Element(self.ring, self.ring._add_coeffs(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        return Element(
            self.ring,
            self.ring._add_coeffs(self.coeffs, self.ring._neg_coeffs(other.coeffs)),
        )

    def __neg__(self):
        return Element(self.ring, self.ring._neg_coeffs(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring._scale_coeffs(other, self.coeffs))
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        return Element(self.ring, self.ring._mul_coeffs(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring._scale_coeffs(other, self.coeffs))
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_idempotent(self) -> bool:
        return self.ring._mul_coeffs(self.coeffs, self.coeffs) == self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring == other.ring

    def __lt__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        return self.coeffs < other.coeffs

    def __hash__(self):
        return hash((self.ring._hash, self.coeffs))

    def __repr__(self):
        return "Element%r" % (self.coeffs,)


def require_cap(size: int, cap: int | None, what: str = "enumeration") -> int:
    """Resolve the effective cap and raise CapExceeded when size overruns it."""
    effective = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if size > effective:
        raise CapExceeded(size, effective, what)
    return effective
