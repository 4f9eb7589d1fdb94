"""Polyomino ideals, binomial Buchberger and Hilbert numerators.

Every polynomial handled here is a difference of two monomials with unit
coefficients.  S-polynomials and reduction steps of such binomials are again
such binomials, so no field arithmetic is carried around; a binomial whose two
terms coincide is zero.

Monomials are dense exponent tuples indexed by the vertices of the polyomino
in ``(y, x)`` order.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import InexactDivision, NegativeCoefficient, NonBinomialEncountered
from .grid import Interval, Polyomino, is_inner_interval, vertices
from .polynomial import IntPolynomial

log = logging.getLogger(__name__)

Monomial = tuple[int, ...]

DEGREVLEX = "degrevlex"
LEX = "lex"


def degrevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


ORDERS: dict[str, Callable[[Monomial], object]] = {DEGREVLEX: degrevlex_key, LEX: lex_key}


@dataclass(frozen=True)
class Binomial:
    """``lead - trail`` with ``lead`` strictly larger in the active order."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if self.lead == self.trail:
            raise NonBinomialEncountered("binomial with equal terms is zero")

    def __str__(self):
        return f"{_fmt(self.lead)} - {_fmt(self.trail)}"


def _fmt(m: Monomial) -> str:
    parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
    return "*".join(parts) or "1"


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _quot_mul(m: Monomial, d: Monomial, f: Monomial) -> Monomial:
    # (m / d) * f
    return tuple(x - y + z for x, y, z in zip(m, d, f))


# -- polyomino ideal ---------------------------------------------------------


def variable_order(P: Polyomino) -> list[tuple[int, int]]:
    """Vertices of P in ``(y, x)`` order; position = variable index."""
    return sorted(vertices(P), key=lambda v: (v[1], v[0]))


def inner_intervals(P: Polyomino) -> list[Interval]:
    """All proper inner intervals of P, ordered by lower then upper corner."""
    out = []
    V = sorted(vertices(P), key=lambda v: (v[1], v[0]))
    for a in V:
        for b in V:
            if b[0] > a[0] and b[1] > a[1]:
                I = Interval(a, b)
                if is_inner_interval(P, I):
                    out.append(I)
    return out


def generators(P: Polyomino, order: str = DEGREVLEX) -> list[Binomial]:
    """Inner 2-minors ``x_a x_b - x_c x_d``, oriented for ``order``."""
    key = ORDERS[order]
    index = {v: i for i, v in enumerate(variable_order(P))}
    n = len(index)
    gens = []
    for I in inner_intervals(P):
        c, d = I.anti_diagonal_corners
        diag = [0] * n
        anti = [0] * n
        diag[index[I.lo]] += 1
        diag[index[I.hi]] += 1
        anti[index[c]] += 1
        anti[index[d]] += 1
        gens.append(_orient(tuple(diag), tuple(anti), key))
    return gens


def _orient(p: Monomial, q: Monomial, key) -> Binomial:
    return Binomial(p, q) if key(p) > key(q) else Binomial(q, p)


# -- Buchberger ----------------------------------------------------------------


def _reduce_term(m: Monomial, basis: Sequence[Binomial]) -> Monomial:
    """Rewrite m by lead -> trail until no lead divides it."""
    changed = True
    while changed:
        changed = False
        for g in basis:
            if divides(g.lead, m):
                m = _quot_mul(m, g.lead, g.trail)
                changed = True
                break
    return m


def normal_form(p: Monomial, q: Monomial, basis: Sequence[Binomial], key) -> Binomial | None:
    """Fully reduced form of ``p - q`` modulo ``basis``; None if it reduces to 0."""
    while True:
        if p == q:
            return None
        if key(p) < key(q):
            p, q = q, p
        for g in basis:
            if divides(g.lead, p):
                p = _quot_mul(p, g.lead, g.trail)
                break
        else:
            break
    q = _reduce_term(q, basis)
    if p == q:
        return None
    if key(p) < key(q):
        raise NonBinomialEncountered("trail reduction overtook an irreducible lead")
    return Binomial(p, q)


def s_polynomial(f: Binomial, g: Binomial) -> tuple[Monomial, Monomial]:
    L = lcm(f.lead, g.lead)
    return _quot_mul(L, f.lead, f.trail), _quot_mul(L, g.lead, g.trail)


def buchberger(gens: Iterable[Binomial], order: str = DEGREVLEX) -> list[Binomial]:
    """Reduced Gröbner basis of the ideal generated by unit-coefficient binomials.

    Pairs are processed by smallest lcm degree; Buchberger's coprime-lead
    and chain criteria discard pairs.
    """
    key = ORDERS[order]
    basis: list[Binomial] = []
    for g in gens:
        h = normal_form(g.lead, g.trail, basis, key)
        if h is not None:
            basis.append(h)
    if not basis:
        return []

    pending: set[tuple[int, int]] = set()
    heap: list[tuple[int, int, int]] = []

    def push(i: int, j: int) -> None:
        pending.add((i, j))
        heapq.heappush(heap, (sum(lcm(basis[i].lead, basis[j].lead)), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        f, g = basis[i], basis[j]
        if coprime(f.lead, g.lead):
            continue
        L = lcm(f.lead, g.lead)
        if _chain_criterion(i, j, L, basis, pending):
            continue
        p, q = s_polynomial(f, g)
        h = normal_form(p, q, basis, key)
        if h is None:
            continue
        new = len(basis)
        basis.append(h)
        for k in range(new):
            push(k, new)
    return _interreduce(basis, key)


def _chain_criterion(i, j, L, basis, pairs) -> bool:
    for k, g in enumerate(basis):
        if k in (i, j):
            continue
        if divides(g.lead, L) and _pair(i, k) not in pairs and _pair(j, k) not in pairs:
            return True
    return False


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _interreduce(basis: list[Binomial], key) -> list[Binomial]:
    minimal = []
    for idx, g in enumerate(basis):
        redundant = False
        for jdx, h in enumerate(basis):
            if jdx == idx or not divides(h.lead, g.lead):
                continue
            # equal leads: keep the first occurrence
            if h.lead != g.lead or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        trail = _reduce_term(g.trail, others)
        if trail == g.lead or key(trail) > key(g.lead):
            raise NonBinomialEncountered("reduced trail is not below its lead")
        reduced.append(Binomial(g.lead, trail))
    reduced.sort(key=lambda b: key(b.lead))
    return reduced


def is_groebner_basis(basis: Sequence[Binomial], order: str = DEGREVLEX) -> bool:
    """Check that every S-pair reduces to zero (no criteria applied)."""
    key = ORDERS[order]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            p, q = s_polynomial(basis[i], basis[j])
            if normal_form(p, q, basis, key) is not None:
                return False
    return True


# -- monomial ideals and Hilbert numerators ----------------------------------


class MonomialIdeal:
    """Minimal generating set of a monomial ideal, kept minimal on insertion."""

    def __init__(self, gens: Iterable[Monomial] = (), nvars: int | None = None):
        self.gens: list[Monomial] = []
        self.nvars = nvars
        for m in gens:
            self.add(m)

    def add(self, m: Monomial) -> bool:
        m = tuple(m)
        if self.nvars is None:
            self.nvars = len(m)
        elif len(m) != self.nvars:
            raise ValueError("monomial length does not match nvars")
        if any(divides(g, m) for g in self.gens):
            return False
        self.gens = [g for g in self.gens if not divides(m, g)]
        self.gens.append(m)
        return True

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    ordered = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for m in ordered:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def _numerator(gens: tuple[Monomial, ...], memo: dict) -> IntPolynomial:
    if not gens:
        return IntPolynomial([1])
    hit = memo.get(gens)
    if hit is not None:
        return hit
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        for v, e in enumerate(g):
            if e:
                counts[v] += 1
    if max(counts) <= 1:
        # pairwise coprime generators: a complete intersection
        out = IntPolynomial([1])
        for g in gens:
            out = out * (IntPolynomial([1]) - IntPolynomial.monomial(sum(g)))
    else:
        x = max(range(nvars), key=lambda v: (counts[v], -v))
        rest = tuple(g for g in gens if g[x] == 0)
        colon = tuple(
            sorted(_minimalize(g[:x] + (g[x] - 1,) + g[x + 1 :] if g[x] else g for g in gens))
        )
        # HS(R/I) = HS(R/(I + x)) + t HS(R/(I : x))
        out = IntPolynomial([1, -1]) * _numerator(rest, memo) + _numerator(colon, memo).shift(1)
    memo[gens] = out
    return out


def hilbert_numerator(I: MonomialIdeal | Iterable[Monomial], nvars: int | None = None) -> IntPolynomial:
    """N(t) with ``HS(R/I) = N(t) / (1 - t)**nvars``, by pivot recursion."""
    gens = list(I.gens) if isinstance(I, MonomialIdeal) else [tuple(m) for m in I]
    if nvars is not None and any(len(m) != nvars for m in gens):
        raise ValueError("monomial length does not match nvars")
    return _numerator(tuple(sorted(_minimalize(gens))), {})


def initial_ideal(basis: Iterable[Binomial], nvars: int) -> MonomialIdeal:
    return MonomialIdeal((b.lead for b in basis), nvars)


# -- polyomino invariants ----------------------------------------------------


def krull_dim(P: Polyomino) -> int:
    return len(vertices(P)) - P.rank


def h_polynomial(P: Polyomino, order: str = DEGREVLEX) -> IntPolynomial:
    """Reduced Hilbert numerator h(t) of K[P] for a simple polyomino P."""
    nvars = len(vertices(P))
    basis = buchberger(generators(P, order), order)
    if any(sum(b.lead) > 2 for b in basis):
        log.info("non-quadratic reduced Gröbner basis for %r under %s", P, order)
    N = hilbert_numerator(initial_ideal(basis, nvars), nvars)
    try:
        h = N.divide_one_minus_t(nvars - krull_dim(P))
    except InexactDivision as exc:
        raise InexactDivision(f"{P!r}: {exc}") from exc
    if any(c < 0 for c in h):
        raise NegativeCoefficient(f"{P!r}: h(t) = {h}")
    return h


def regularity(P: Polyomino) -> int:
    return h_polynomial(P).degree
