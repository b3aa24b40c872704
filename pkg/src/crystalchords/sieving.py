"""Energy statistics, exact q-polynomials and the cyclic sieving checker.

Polynomials are tuples of integer coefficients indexed by exponent, with
trailing zeros trimmed; all arithmetic is exact.  The sieving criterion is
purely integral: a polynomial f sieves for an action of order N on X iff
f mod (q^N - 1) equals the orbit polynomial sum_orbits sum_j q^(j N / s).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .crystals import (
    BVEC,
    CVEC,
    FAMILY_KIND,
    RAISE,
    SPIN,
    TableauSeq,
    Word,
    enumerate_zero,
    is_highest,
    tableau_to_word,
    tensor_apply,
)
from .promotion import promote

Poly = tuple[int, ...]


# ---------------------------------------------------------------- polynomials


def poly_trim(coeffs: Sequence[int]) -> Poly:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    n = max(len(p), len(q))
    return poly_trim(
        tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))
    )


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divexact(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Exact division; raises if the remainder is nonzero."""
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(p))
    out = [0] * max(0, len(rem) - len(q) + 1)
    while len(rem) >= len(q):
        lead, div = rem[-1], q[-1]
        if lead % div:
            raise ValueError("division is not exact")
        c = lead // div
        k = len(rem) - len(q)
        out[k] = c
        for j, b in enumerate(q):
            rem[k + j] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        raise ValueError("division is not exact")
    return poly_trim(out)


def poly_mod_cyclic(p: Sequence[int], n: int) -> Poly:
    """Residue modulo q^n - 1 (exponents folded mod n)."""
    if n < 1:
        raise ValueError("modulus exponent must be positive")
    out = [0] * n
    for e, c in enumerate(p):
        out[e % n] += c
    return poly_trim(out)


def q_int(m: int) -> Poly:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    return (1,) * m


def monomial(e: int, c: int = 1) -> Poly:
    return poly_trim((0,) * e + (c,))


def poly_str(p: Sequence[int]) -> str:
    """Descending-power pretty form, e.g. 'q^4 + q^2 + 1'."""
    p = poly_trim(p)
    if not p:
        return "0"
    terms = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        if e == 0:
            base = str(abs(c))
        else:
            q = "q" if e == 1 else f"q^{e}"
            base = q if abs(c) == 1 else f"{abs(c)}*{q}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, base))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, base in terms[1:]:
        out += f" {sign} {base}"
    return out


# -------------------------------------------------------------------- energy


def _cvec_order(x: int, r: int) -> int:
    return x if x > 0 else 2 * r + 1 + x


def _bvec_order(x: int, r: int) -> int:
    if x > 0:
        return x
    if x == 0:
        return r + 1
    return 2 * r + 2 + x


def local_energy(kind: str, r: int, a, b) -> int:
    """Local energy of the pair a (x) b (a the left factor)."""
    if kind == CVEC:
        return 0 if _cvec_order(a, r) <= _cvec_order(b, r) else 1
    if kind == BVEC:
        if a == -1 and b == 1:
            return 2
        if _bvec_order(a, r) <= _bvec_order(b, r) and not (a == 0 and b == 0):
            return 0
        return 1
    if kind == SPIN:
        return _spin_pair_energy(r, a, b)
    raise ValueError(f"unknown crystal kind {kind!r}")


def _spin_pair_energy(r: int, a, b) -> int:
    # raise the pair to its classical highest weight (eps, +...+); the local
    # energy is constant along the way
    w = Word(SPIN, r, (b, a))  # left factor last
    limit = 4 * r * (r + 1)
    for _ in range(limit):
        for i in range(1, r + 1):
            up = tensor_apply(w, i, RAISE)
            if up is not None:
                w = up
                break
        else:
            break
    else:
        raise AssertionError("classical raising did not terminate")
    right, left = w.letters
    assert right == (1,) * r, "classical highest weight pair must end in all +"
    minus = sum(1 for s in left if s == -1)
    return (minus + 1) // 2


def energy(w: Word) -> int:
    """Sum of i * H(b_i (x) b_{i+1}) with b_1 the leftmost tensor factor."""
    n = len(w)
    # b_i = letters[n - i]: reading the tensor left to right
    return sum(
        i * local_energy(w.kind, w.rank, w.letters[n - i], w.letters[n - i - 1])
        for i in range(1, n)
    )


# ------------------------------------------------------------ q-polynomials


def energy_shift(kind: str, r: int, n: int) -> int:
    """Exponent of the overall q-power in front of the energy generating sum."""
    if kind == BVEC:
        return 0
    if kind == SPIN:
        return 0 if r % 4 in (0, 3) else n // 2
    if kind == CVEC:
        return n // 2
    raise ValueError(f"unknown crystal kind {kind!r}")


def f_poly(family: str, r: int, n: int) -> Poly:
    """Energy generating polynomial over weight-zero highest words."""
    kind = FAMILY_KIND[family]
    elements = enumerate_zero(family, r, n)
    if not elements:
        return ()
    # weight zero forces n even whenever the shift is n/2 (cvec and spin)
    shift = energy_shift(kind, r, n)
    out: Poly = ()
    for t in elements:
        out = poly_add(out, monomial(shift + energy(tableau_to_word(t))))
    return out


def g_poly(n: int, r: int) -> Poly:
    """prod over 1 <= i <= j <= n-1 of [i+j+2r]_q / [i+j]_q, exactly."""
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    num: Poly = (1,)
    den: Poly = (1,)
    for i in range(1, n):
        for j in range(i, n):
            num = poly_mul(num, q_int(i + j + 2 * r))
            den = poly_mul(den, q_int(i + j))
    return poly_divexact(num, den)


# -------------------------------------------------------- descents and major


def descent_major(w: Word) -> tuple[tuple[int, ...], int]:
    """Descent set and major index of a highest weight B-vector word.

    Position i (1-based, counting from the rightmost factor u_1) is a descent
    when u_{i+1} > u_i, unless u_{i+1} (x) u_i = j-bar (x) j while u_1..u_{i-1}
    balances the letters j and j-bar.
    """
    if w.kind != BVEC:
        raise ValueError("descents are defined for bvec words")
    if not is_highest(w):
        raise ValueError("word is not highest weight")
    r = w.rank
    descents = []
    for i in range(1, len(w)):
        u_i, u_next = w.letters[i - 1], w.letters[i]
        if _bvec_order(u_next, r) <= _bvec_order(u_i, r):
            continue
        if u_i > 0 and u_next == -u_i:
            j = u_i
            prefix = w.letters[: i - 1]
            if prefix.count(j) == prefix.count(-j):
                continue
        descents.append(i)
    return tuple(descents), sum(descents)


def h_poly(n: int, r: int) -> Poly:
    """Major-index generating polynomial over weight-zero highest bvec words."""
    out: Poly = ()
    for t in enumerate_zero("vacillating", r, n):
        _, maj = descent_major(tableau_to_word(t))
        out = poly_add(out, monomial(maj))
    return out


def _partitions_of(n: int, parts_filter: Callable[[int], bool], max_len: int):
    def rec(rest: int, cap: int, acc: tuple[int, ...]):
        if rest == 0:
            yield acc
            return
        if len(acc) == max_len:
            return
        for part in range(min(rest, cap), 0, -1):
            if parts_filter(part):
                yield from rec(rest - part, part, acc + (part,))

    yield from rec(n, n, ())


def _standard_tableaux(shape: tuple[int, ...]):
    """All standard Young tableaux of the shape, as row-index words."""
    n = sum(shape)

    def rec(rows: tuple[int, ...], word: tuple[int, ...]):
        if len(word) == n:
            yield word
            return
        for k in range(len(shape)):
            if rows[k] < shape[k] and (k == 0 or rows[k] < rows[k - 1]):
                yield from rec(
                    rows[:k] + (rows[k] + 1,) + rows[k + 1 :], word + (k,)
                )

    yield from rec((0,) * len(shape), ())


def syt_h_poly(n: int, r: int) -> Poly:
    """Major-index generating polynomial over standard Young tableaux.

    Shapes are the partitions of n with all parts even and at most 2r+1 rows
    for even n, and all parts odd with exactly 2r+1 rows for odd n.
    """
    if n % 2 == 0:
        shapes = list(_partitions_of(n, lambda p: p % 2 == 0, 2 * r + 1))
    else:
        shapes = [
            s
            for s in _partitions_of(n, lambda p: p % 2 == 1, 2 * r + 1)
            if len(s) == 2 * r + 1
        ]
    out: Poly = ()
    for shape in shapes:
        for word in _standard_tableaux(shape):
            maj = sum(i for i in range(1, n) if word[i] > word[i - 1])
            out = poly_add(out, monomial(maj))
    return out


# ------------------------------------------------------------------- sieving


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[tuple[TableauSeq, int], ...]  # (representative, size)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(size for _, size in self.orbits)


def orbit_decomposition(
    elements: Sequence[TableauSeq],
    order: int,
    action: Callable[[TableauSeq], TableauSeq] = promote,
) -> OrbitDecomposition:
    """Orbits of the action; raises if an orbit size does not divide the order."""
    seen: set[TableauSeq] = set()
    orbits = []
    universe = set(elements)
    for t in elements:
        if t in seen:
            continue
        orbit = [t]
        cur = action(t)
        while cur != t:
            if cur not in universe:
                raise ValueError(f"action leaves the set on {t}")
            orbit.append(cur)
            cur = action(cur)
        seen.update(orbit)
        if order % len(orbit):
            raise ValueError(
                f"orbit size {len(orbit)} does not divide the order {order}"
            )
        orbits.append((t, len(orbit)))
    return OrbitDecomposition(tuple(orbits))


@dataclass(frozen=True)
class CspReport:
    holds: bool
    order: int
    orbit_sizes: tuple[int, ...]
    residue: Poly  # f mod q^order - 1
    expected_residue: Poly  # orbit polynomial
    first_mismatch_d: int | None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "order": self.order,
            "orbit_sizes": list(self.orbit_sizes),
            "residue": list(self.residue),
            "expected_residue": list(self.expected_residue),
            "first_mismatch_d": self.first_mismatch_d,
        }


def orbit_polynomial(sizes: Sequence[int], order: int) -> Poly:
    """Sum over orbits of size s of sum_j q^(j * order / s).

    Evaluating at a primitive order-th root of unity to the power d gives the
    number of fixed points of the d-th power of the action.
    """
    out: Poly = ()
    for s in sizes:
        for j in range(s):
            out = poly_add(out, monomial(j * order // s))
    return out


def csp_check(
    elements: Sequence[TableauSeq],
    order: int,
    f: Sequence[int],
    action: Callable[[TableauSeq], TableauSeq] = promote,
) -> CspReport:
    """Integer cyclic sieving test of the polynomial f against the action."""
    dec = orbit_decomposition(elements, order, action)
    expected = orbit_polynomial(dec.sizes, order)
    residue = poly_mod_cyclic(f, order) if poly_trim(f) else ()
    holds = residue == expected
    first = None
    if not holds:
        top = max(len(residue), len(expected))
        for d in range(top):
            a = residue[d] if d < len(residue) else 0
            b = expected[d] if d < len(expected) else 0
            if a != b:
                first = d
                break
    return CspReport(holds, order, dec.sizes, residue, expected, first)
