"""[0,1]-relations and distributors between finite categories.

Relations are dense Value matrices; composition is sup-of-tensors.
Bare-set relations are allowed everywhere, distributor checks demand
category structure on both ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .tnorms import Quantale
from .values import ONE, ZERO, as_value
from .vcat import VCategory


@dataclass(frozen=True)
class VRelation:
    quantale: Quantale
    src_size: int
    dst_size: int
    matrix: tuple[tuple[Fraction, ...], ...]

    def at(self, x: int, y: int) -> Fraction:
        return self.matrix[x][y]


def vrelation(q: Quantale, rows, src_size=None, dst_size=None) -> VRelation:
    matrix = tuple(tuple(as_value(v) for v in row) for row in rows)
    m = len(matrix) if src_size is None else src_size
    k = (len(matrix[0]) if matrix else 0) if dst_size is None else dst_size
    if len(matrix) != m or any(len(row) != k for row in matrix):
        raise ValueError("relation matrix shape mismatch")
    return VRelation(q, m, k, matrix)


def zero_relation(q: Quantale, m: int, k: int) -> VRelation:
    return VRelation(q, m, k, tuple(tuple(ZERO for _ in range(k)) for _ in range(m)))


def compose(s: VRelation, r: VRelation) -> VRelation:
    """(s . r)(x, z) = sup over y of r(x, y) tensor s(y, z).

    The empty middle object yields the empty join 0.
    """
    if r.dst_size != s.src_size:
        raise ValueError(
            f"middle objects differ: {r.dst_size} vs {s.src_size}"
        )
    q = r.quantale
    mid = r.dst_size
    matrix = tuple(
        tuple(
            max(
                (q.tensor(r.matrix[x][y], s.matrix[y][z]) for y in range(mid)),
                default=ZERO,
            )
            for z in range(s.dst_size)
        )
        for x in range(r.src_size)
    )
    return VRelation(q, r.src_size, s.dst_size, matrix)


def identity_distributor(X: VCategory) -> VRelation:
    """The structure matrix itself, as a distributor X -|-> X."""
    return VRelation(X.quantale, X.size, X.size, X.matrix)


def is_distributor(r: VRelation, X: VCategory, Y: VCategory) -> bool:
    return distributor_violation(r, X, Y) is None


def distributor_violation(r: VRelation, X: VCategory, Y: VCategory) -> Optional[str]:
    """First witness that r . a <= r or b . r <= r fails (the reverse
    inequalities hold for any relation between categories, so the checker
    asserts the equalities)."""
    if r.src_size != X.size or r.dst_size != Y.size:
        raise ValueError("relation endpoints do not match the categories")
    left = compose(r, identity_distributor(X))
    if left.matrix != r.matrix:
        return _first_diff("r.a != r", left, r)
    right = compose(identity_distributor(Y), r)
    if right.matrix != r.matrix:
        return _first_diff("b.r != r", right, r)
    return None


def _first_diff(tag: str, got: VRelation, want: VRelation) -> str:
    for x in range(want.src_size):
        for y in range(want.dst_size):
            if got.matrix[x][y] != want.matrix[x][y]:
                return f"{tag} at ({x},{y}): {got.matrix[x][y]} vs {want.matrix[x][y]}"
    return tag


def check_adjoint(phi: VRelation, psi: VRelation, A: VCategory) -> bool:
    """Unit and counit of phi -| psi for phi: G -|-> A, psi: A -|-> G.

    Unit: 1 <= (psi . phi)(*,*); counit: (phi . psi) <= a pointwise.
    """
    if phi.src_size != 1 or psi.dst_size != 1:
        raise ValueError("adjoint check expects phi: G -|-> A and psi: A -|-> G")
    if phi.dst_size != A.size or psi.src_size != A.size:
        raise ValueError("relation endpoints do not match the category")
    unit = compose(psi, phi).matrix[0][0]
    if unit != ONE:
        return False
    counit = compose(phi, psi)
    return all(
        counit.matrix[x][y] <= A.a(x, y)
        for x in range(A.size)
        for y in range(A.size)
    )


def representable_pair(A: VCategory, x0: int) -> tuple[VRelation, VRelation]:
    """The adjoint pair generated by a point: phi(*,y) = a(x0,y), psi(y,*) = a(y,x0)."""
    phi = VRelation(A.quantale, 1, A.size, (tuple(A.a(x0, y) for y in range(A.size)),))
    psi = VRelation(A.quantale, A.size, 1, tuple((A.a(y, x0),) for y in range(A.size)))
    return phi, psi
