"""Local-rule promotion, promotion matrices, chord-diagram fillings and rotation.

Cells of the promotion matrix are labelled

    lambda  nu
    kappa   mu

and satisfy mu = dom(kappa + nu - lambda), with dom the hyperoctahedral
dominance map.  The grid entry mu^{i,j} is the (j-i)-th entry of pr^i(T),
indices mod n, so no geometric cut-and-glue is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystals import FAN, OSCILLATING, VACILLATING, TableauSeq
from .growth import blocksum
from .virtual import iota_v_to_f, iota_v_to_o, iota_v_to_o_inverse
from .weights import (
    Partition,
    WeightVec,
    dominant_representative,
    pad,
    trim,
    vec_add,
    vec_sub,
)

Matrix = tuple[tuple[int, ...], ...]

CHORD_MAPS = ("M_O", "M_F", "M_VO", "M_VF")


def local_rule(lam: WeightVec, kap: WeightVec, nu: WeightVec) -> Partition:
    """dom(kappa + nu - lambda) for equal-length weight vectors."""
    if not len(lam) == len(kap) == len(nu):
        raise ValueError("weight vectors must have equal length")
    return dominant_representative(vec_add(kap, vec_sub(nu, lam)))


def fill_value(rule: str, lam: WeightVec, kap: WeightVec, nu: WeightVec) -> int:
    """Number of negative entries of kappa + nu - lambda (osc: capped at one)."""
    n = max(len(lam), len(kap), len(nu))
    diff = vec_add(pad(kap, n), vec_sub(pad(nu, n), pad(lam, n)))
    negatives = sum(1 for x in diff if x < 0)
    if rule == "osc":
        return 1 if negatives else 0
    if rule == "fan":
        return negatives
    raise ValueError(f"unknown filling rule {rule!r}")


def _promote_steps(steps: tuple[Partition, ...], r: int) -> tuple[Partition, ...]:
    """One local-rule promotion sweep over a weight-zero step sequence."""
    n = len(steps) - 1
    if n == 0:
        return steps
    out: list[Partition] = [()]
    for j in range(1, n):
        mu = local_rule(pad(steps[j], r), pad(out[j - 1], r), pad(steps[j + 1], r))
        out.append(trim(mu))
    out.append(())
    return tuple(out)


def promote(t: TableauSeq) -> TableauSeq:
    """Promotion of a weight-zero tableau of any of the three families."""
    if t.weight != ():
        raise ValueError("promotion requires weight zero")
    if t.family == VACILLATING:
        o = iota_v_to_o(t)
        o = promote(promote(o))
        return iota_v_to_o_inverse(o)
    return TableauSeq(t.family, t.rank, _promote_steps(t.steps, t.rank))


@dataclass(frozen=True)
class PromotionGrid:
    """Successive promotions of a weight-zero tableau, addressed modularly."""

    length: int
    rank: int
    rows: tuple[tuple[Partition, ...], ...]  # rows[i] = steps of pr^i(T)

    def entry(self, i: int, j: int) -> Partition:
        """mu^{i,j}: the (j-i)-th entry of pr^i(T), indices mod length."""
        n = self.length
        return self.rows[i % n][(j - i) % n]


def promotion_grid(t: TableauSeq) -> PromotionGrid:
    n = len(t)
    rows = []
    cur = t
    for _ in range(n):
        rows.append(cur.steps)
        cur = promote(cur)
    return PromotionGrid(n, t.rank, tuple(rows))


def chord_matrix(tag: str, t: TableauSeq) -> Matrix:
    """Adjacency matrix of the chord diagram attached to a weight-zero tableau."""
    if tag == "M_O":
        if t.family != OSCILLATING:
            raise ValueError("M_O expects an oscillating tableau")
        return _promotion_fill(t, "osc")
    if tag == "M_F":
        if t.family != FAN:
            raise ValueError("M_F expects a fan of Dyck paths")
        return _promotion_fill(t, "fan")
    if tag == "M_VO":
        if t.family != VACILLATING:
            raise ValueError("M_VO expects a vacillating tableau")
        return blocksum(_promotion_fill(iota_v_to_o(t), "osc"), 2)
    if tag == "M_VF":
        if t.family != VACILLATING:
            raise ValueError("M_VF expects a vacillating tableau")
        raw = blocksum(_promotion_fill(iota_v_to_f(t), "fan"), 2)
        # the doubled-length fan filling puts 2(r-1) in every diagonal block
        shift = 2 * (t.rank - 1)
        return tuple(
            tuple(x - shift if i == j else x for j, x in enumerate(row))
            for i, row in enumerate(raw)
        )
    raise ValueError(f"unknown chord map {tag!r}")


def _promotion_fill(t: TableauSeq, rule: str) -> Matrix:
    grid = promotion_grid(t)
    n = grid.length
    r = grid.rank
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            lam = pad(grid.entry(i - 1, j - 1), r)
            kap = pad(grid.entry(i, j - 1), r)
            nu = pad(grid.entry(i - 1, j), r)
            row.append(fill_value(rule, lam, kap, nu))
        out.append(tuple(row))
    return tuple(out)


def rotate_matrix(m: Matrix) -> Matrix:
    """Toroidal shift: cut the top row to the bottom, then the left column to the right."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    return tuple(
        tuple(m[(i + 1) % n][(j + 1) % n] for j in range(n)) for i in range(n)
    )
