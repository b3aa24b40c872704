"""Embeddings of the type-B crystals into tensor powers of the type-C vector crystal.

A spin letter maps to an r-letter C-word, a B-vector letter to a C-letter
pair, and on tableaux these induce the three embeddings fan->oscillating,
vacillating->oscillating and vacillating->fan.
"""

from __future__ import annotations

from .crystals import (
    CVEC,
    FAN,
    OSCILLATING,
    VACILLATING,
    TableauSeq,
    Word,
    letter_weight,
    tensor_apply,
)
from .weights import pad, trim, unit_vector, vec_add, vec_sub


class NotInImage(Exception):
    """A tableau is valid but not the image of the requested embedding."""


def _cvec_key(x: int, r: int) -> int:
    """Position of a C-letter in the order 1 < ... < r < -r < ... < -1."""
    return x if x > 0 else 2 * r + 1 + x


def psi_spin(eps: tuple, r: int) -> tuple:
    """C-letters (v_1, ..., v_r), increasing in the C-order, one per coordinate.

    Coordinate i contributes the letter i when eps[i-1] is +1 and the barred
    letter -i otherwise.
    """
    if len(eps) != r:
        raise ValueError(f"spin letter must have length {r}")
    out = [i if s == 1 else -i for i, s in enumerate(eps, start=1)]
    return tuple(sorted(out, key=lambda x: _cvec_key(x, r)))


def psi_vec(b: int, r: int) -> tuple:
    """C-letter pair (u_1, u_2) with u_1 the rightmost factor; 0 maps to r (x) -r."""
    if b == 0:
        return (-r, r)
    return (b, b)


def virtual_apply(w: Word, i: int, direction: str) -> Word | None:
    """The virtual operator on C-words: the square of e_i/f_i below index r."""
    if w.kind != CVEC:
        raise ValueError("virtual operators act on cvec words")
    power = 1 if i == w.rank else 2
    for _ in range(power):
        w = tensor_apply(w, i, direction)
        if w is None:
            return None
    return w


def spin_word_image(w: Word) -> Word:
    """Concatenate psi_spin letter images into one C-word (rightmost factor first)."""
    out: list = []
    for x in w.letters:
        out.extend(psi_spin(x, w.rank))
    return Word(CVEC, w.rank, tuple(out))


def bvec_word_image(w: Word) -> Word:
    out: list = []
    for x in w.letters:
        out.extend(psi_vec(x, w.rank))
    return Word(CVEC, w.rank, tuple(out))


def iota_f_to_o(f: TableauSeq) -> TableauSeq:
    """Oscillating tableau of length r*n refining a fan one cell at a time."""
    if f.family != FAN:
        raise ValueError("expected a fan of Dyck paths")
    r = f.rank
    steps = [()]
    for p, q in zip(f.steps, f.steps[1:]):
        eps = tuple(b - a for a, b in zip(pad(p, r), pad(q, r)))
        mu = pad(p, r)
        for v in psi_spin(eps, r):
            mu = vec_add(mu, letter_weight(CVEC, r, v))
            steps.append(trim(mu))
    return TableauSeq(OSCILLATING, r, tuple(steps))


def iota_v_to_o(v: TableauSeq) -> TableauSeq:
    """Oscillating tableau of twice the length; doubled corners at even positions."""
    if v.family != VACILLATING:
        raise ValueError("expected a vacillating tableau")
    if v.weight != ():
        raise ValueError("embedding requires weight zero")
    r = v.rank
    e_r = unit_vector(r, r)
    steps = [()]
    for p, q in zip(v.steps, v.steps[1:]):
        if p == q:
            odd = vec_sub(vec_add(pad(p, r), pad(q, r)), e_r)
        else:
            odd = vec_add(pad(p, r), pad(q, r))
        steps.append(trim(odd))
        steps.append(trim(tuple(2 * x for x in pad(q, r))))
    return TableauSeq(OSCILLATING, r, tuple(steps))


def iota_v_to_f(v: TableauSeq) -> TableauSeq:
    """Fan of twice the length; doubled corners at even positions."""
    if v.family != VACILLATING:
        raise ValueError("expected a vacillating tableau")
    if v.weight != ():
        raise ValueError("embedding requires weight zero")
    r = v.rank
    ones = (1,) * r
    e_r = unit_vector(r, r)
    steps = [()]
    for p, q in zip(v.steps, v.steps[1:]):
        pp, qq = pad(p, r), pad(q, r)
        if p == q:
            odd = vec_sub(vec_add(tuple(2 * x for x in pp), ones), tuple(2 * x for x in e_r))
        elif sum(qq) > sum(pp):
            odd = vec_add(tuple(2 * x for x in pp), ones)
        else:
            odd = vec_add(tuple(2 * x for x in qq), ones)
        steps.append(trim(odd))
        steps.append(trim(tuple(2 * x for x in qq)))
    return TableauSeq(FAN, r, tuple(steps))


def _halve(p, r: int):
    out = []
    for x in pad(p, r):
        if x % 2:
            raise NotInImage(f"{p} has an odd part where a doubled partition is required")
        out.append(x // 2)
    return trim(tuple(out))


def iota_f_to_o_inverse(t: TableauSeq) -> TableauSeq:
    """Fan with iota_f_to_o(result) == t, or NotInImage."""
    if t.family != OSCILLATING:
        raise ValueError("expected an oscillating tableau")
    r = t.rank
    if len(t) % r != 0:
        raise NotInImage(f"length {len(t)} is not a multiple of the rank {r}")
    try:
        f = TableauSeq(FAN, r, tuple(t.steps[k] for k in range(0, len(t) + 1, r)))
    except ValueError as exc:
        raise NotInImage(str(exc)) from exc
    if iota_f_to_o(f) != t:
        raise NotInImage("intermediate steps do not follow the letter refinement")
    return f


def iota_v_to_o_inverse(t: TableauSeq) -> TableauSeq:
    return _vac_inverse(t, OSCILLATING, iota_v_to_o)


def iota_v_to_f_inverse(t: TableauSeq) -> TableauSeq:
    return _vac_inverse(t, FAN, iota_v_to_f)


def _vac_inverse(t: TableauSeq, family: str, forward) -> TableauSeq:
    if t.family != family:
        raise ValueError(f"expected a {family} tableau")
    if len(t) % 2 != 0:
        raise NotInImage(f"length {len(t)} is odd")
    halves = [_halve(t.steps[k], t.rank) for k in range(0, len(t) + 1, 2)]
    try:
        v = TableauSeq(VACILLATING, t.rank, tuple(halves))
    except ValueError as exc:
        raise NotInImage(str(exc)) from exc
    if v.weight != ():
        raise NotInImage("weight is not zero")
    if forward(v) != t:
        raise NotInImage("odd steps do not match the embedding")
    return v


_INVERSES = {
    (FAN, OSCILLATING): iota_f_to_o_inverse,
    (VACILLATING, OSCILLATING): iota_v_to_o_inverse,
    (VACILLATING, FAN): iota_v_to_f_inverse,
}


def iota_inverse(family_pair: tuple[str, str], t: TableauSeq) -> TableauSeq:
    """Invert the embedding source->target named by ``family_pair`` on t."""
    try:
        inv = _INVERSES[family_pair]
    except KeyError:
        raise ValueError(f"no embedding for {family_pair!r}") from None
    return inv(t)
