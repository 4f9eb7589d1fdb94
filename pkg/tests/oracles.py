"""Slow, direct re-implementations used as test oracles.

None of these import the optimized code paths they check.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, combinations_with_replacement

PRIME = 2_147_483_647


def norm(cells) -> frozenset:
    cells = list(cells)
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return frozenset((x - mx, y - my) for x, y in cells)


def nbrs(c):
    x, y = c
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


def bfs_fixed(n: int) -> set[frozenset]:
    """Fixed polyominoes of rank n by growing every rank n-1 shape by one cell."""
    level = {frozenset([(0, 0)])}
    for _ in range(n - 1):
        nxt = set()
        for shape in level:
            for c in shape:
                for d in nbrs(c):
                    if d not in shape:
                        nxt.add(norm(shape | {d}))
        level = nxt
    return level


def complement_components(cells) -> int:
    """Components of the empty cells inside the bounding box grown by one."""
    cells = set(cells)
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    box = [
        (x, y)
        for x in range(min(xs) - 1, max(xs) + 2)
        for y in range(min(ys) - 1, max(ys) + 2)
        if (x, y) not in cells
    ]
    parent = {c: c for c in box}

    def find(c):
        while parent[c] != c:
            c = parent[c]
        return c

    for c in box:
        for d in ((c[0] + 1, c[1]), (c[0], c[1] + 1)):
            if d in parent:
                parent[find(c)] = find(d)
    return len({find(c) for c in box})


def oracle_attack(cells, a, b) -> bool:
    cells = set(cells)
    if a[1] == b[1]:
        lo, hi = sorted((a[0], b[0]))
        return all((x, a[1]) in cells for x in range(lo, hi + 1))
    if a[0] == b[0]:
        lo, hi = sorted((a[1], b[1]))
        return all((a[0], y) in cells for y in range(lo, hi + 1))
    return False


def brute_rook_counts(cells) -> list[int]:
    cells = sorted(cells)
    counts = []
    for k in range(len(cells) + 1):
        c = sum(
            1
            for F in combinations(cells, k)
            if not any(oracle_attack(cells, a, b) for a, b in combinations(F, 2))
        )
        if c == 0:
            break
        counts.append(c)
    return counts


def rect_inside(cells, x0, y0, x1, y1) -> bool:
    """Cells with lower-left in [x0, x1] x [y0, y1] all present."""
    return all((x, y) in cells for x in range(x0, x1 + 1) for y in range(y0, y1 + 1))


def oracle_switches(cells, F) -> set[frozenset]:
    cells = set(cells)
    out = set()
    for a, b in combinations(F, 2):
        if a[0] == b[0] or a[1] == b[1]:
            continue
        x0, x1 = sorted((a[0], b[0]))
        y0, y1 = sorted((a[1], b[1]))
        if rect_inside(cells, x0, y0, x1, y1):
            a2, b2 = (a[0], b[1]), (b[0], a[1])
            out.add(frozenset(set(F) - {a, b} | {a2, b2}))
    return out


def brute_r_tilde(cells) -> list[int]:
    cells = sorted(cells)
    out = []
    for k in range(len(cells) + 1):
        level = [
            frozenset(F)
            for F in combinations(cells, k)
            if not any(oracle_attack(cells, a, b) for a, b in combinations(F, 2))
        ]
        if not level:
            break
        seen = set()
        classes = 0
        for F in level:
            if F in seen:
                continue
            classes += 1
            queue = deque([F])
            seen.add(F)
            while queue:
                G = queue.popleft()
                for H in oracle_switches(cells, G):
                    if H not in seen:
                        seen.add(H)
                        queue.append(H)
        out.append(classes)
    return out


def oracle_vertices(cells) -> set:
    return {(x + dx, y + dy) for x, y in cells for dx in (0, 1) for dy in (0, 1)}


def inner_interval_count(cells) -> int:
    cells = set(cells)
    V = oracle_vertices(cells)
    n = 0
    for a in V:
        for b in V:
            if b[0] > a[0] and b[1] > a[1] and rect_inside(cells, a[0], a[1], b[0] - 1, b[1] - 1):
                n += 1
    return n


def hilbert_function_linear_algebra(cells, degree: int) -> int:
    """dim_K (K[P])_d by Gaussian elimination mod a prime on the span of m * f."""
    cells = set(cells)
    V = sorted(oracle_vertices(cells))
    idx = {v: i for i, v in enumerate(V)}
    gens = []
    for a in V:
        for b in V:
            if b[0] > a[0] and b[1] > a[1] and rect_inside(cells, a[0], a[1], b[0] - 1, b[1] - 1):
                c, d = (a[0], b[1]), (b[0], a[1])
                gens.append((tuple(sorted((idx[a], idx[b]))), tuple(sorted((idx[c], idx[d])))))
    monos = list(combinations_with_replacement(range(len(V)), degree))
    if degree < 2:
        return len(monos)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for m in combinations_with_replacement(range(len(V)), degree - 2):
        for p, q in gens:
            rows.append({col[tuple(sorted(m + p))]: 1, col[tuple(sorted(m + q))]: PRIME - 1})
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = pow(row[lead], PRIME - 2, PRIME)
                pivots[lead] = {k: v * inv % PRIME for k, v in row.items()}
                break
            piv = pivots[lead]
            f = row[lead]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % PRIME
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(monos) - len(pivots)


def standard_monomial_count(leads, nvars: int, degree: int) -> int:
    """Monomials of the given degree divisible by no lead term."""
    count = 0
    for combo in combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for v in combo:
            m[v] += 1
        if not any(all(a <= b for a, b in zip(g, m)) for g in leads):
            count += 1
    return count


def cell_chain_counts(cells) -> list[int]:
    cells = sorted(cells)
    out = [1]
    for k in range(1, len(cells) + 1):
        c = sum(
            1
            for F in combinations(cells, k)
            if all(p[0] < q[0] and p[1] < q[1] for p, q in zip(F, F[1:]))
        )
        if c == 0:
            break
        out.append(c)
    return out


def all_path_pairs(m: int, n: int):
    """Every pair of NE lattice words (u above l) from (0,0) to (m,n), by brute force."""
    from itertools import combinations as comb

    L = m + n
    words = []
    for ones in comb(range(L), n):
        words.append("".join("1" if i in ones else "0" for i in range(L)))

    def heights(w):
        pts, x, y = [], 0, 0
        for ch in w:
            if ch == "1":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    for u in words:
        pu = heights(u)
        for l in words:
            pl = heights(l)
            # strictly separated except at the ends: u's point at step i is
            # strictly north-west of l's point on the same anti-diagonal
            if all(a[1] > b[1] for a, b in zip(pu[:-1], pl[:-1])):
                yield u, l
