"""Quivers (directed multigraphs with optional vertex weights) and the
structural analysis used to screen them: connectivity, integer
eigen-weightings, exact characteristic polynomials, automorphism orbits,
isomorphism testing, and affine ADE recognition.

Everything is exact; eigenvector computations run over Fraction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .polynomials import IntPolynomial


class QuiverFormatError(ValueError):
    """Malformed quiver JSON."""


class Quiver:
    """Immutable quiver: vertex names, a non-negative integer adjacency
    matrix (entry [i][j] counts arrows i -> j), optional positive vertex
    weights."""

    __slots__ = ("vertices", "adjacency", "weights")

    def __init__(self, vertices, adjacency, weights=None):
        vs = tuple(str(v) for v in vertices)
        if not vs:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("vertex names must be unique")
        rows = []
        for row in adjacency:
            row = tuple(row)
            if len(row) != len(vs):
                raise ValueError("adjacency matrix must be square")
            if any(not isinstance(a, int) or a < 0 for a in row):
                raise ValueError("adjacency entries must be non-negative integers")
            rows.append(row)
        if len(rows) != len(vs):
            raise ValueError("adjacency matrix must be square")
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != len(vs):
                raise ValueError("weights must match the vertex count")
            if any(not isinstance(w, int) or w < 1 for w in weights):
                raise ValueError("weights must be positive integers")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "adjacency", tuple(rows))
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, *a):
        raise AttributeError("Quiver is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def induced(self, indices) -> "Quiver":
        idx = sorted(set(indices))
        return Quiver(
            [self.vertices[i] for i in idx],
            [[self.adjacency[i][j] for j in idx] for i in idx],
            None if self.weights is None else [self.weights[i] for i in idx])

    def is_symmetric(self) -> bool:
        A = self.adjacency
        return all(A[i][j] == A[j][i] for i in range(self.n) for j in range(i))

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.adjacency == other.adjacency and self.weights == other.weights)

    def __hash__(self):
        return hash((self.vertices, self.adjacency, self.weights))

    def __repr__(self):
        return f"<Quiver on {self.n} vertices>"

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices),
               "adjacency": [list(r) for r in self.adjacency]}
        if self.weights is not None:
            out["weights"] = list(self.weights)
        return out

    @staticmethod
    def from_json(data) -> "Quiver":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as ex:
                raise QuiverFormatError(f"not valid JSON: {ex}") from ex
        if not isinstance(data, dict):
            raise QuiverFormatError("quiver JSON must be an object")
        try:
            return Quiver(data["vertices"], data["adjacency"], data.get("weights"))
        except (KeyError, TypeError, ValueError) as ex:
            raise QuiverFormatError(f"malformed quiver JSON: {ex}") from ex


# -- connectivity ------------------------------------------------------------


def strongly_connected_components(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Tarjan, iterative; components as sorted tuples, sorted by first vertex."""
    n = q.n
    adj = [[j for j in range(n) if q.adjacency[i][j] > 0] for i in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return tuple(sorted(comps, key=lambda c: c[0]))


def weakly_connected_components(q: Quiver) -> tuple[tuple[int, ...], ...]:
    parent = list(range(q.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(q.n):
        for j in range(q.n):
            if q.adjacency[i][j] > 0:
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(q.n):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted((tuple(sorted(g)) for g in groups.values()),
                        key=lambda c: c[0]))


def is_strongly_connected(q: Quiver) -> bool:
    return len(strongly_connected_components(q)) == 1


# -- eigen-weightings ---------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """A strictly positive integer vector w with A w = k w, scaled so the
    entries have gcd 1."""
    k: int
    weights: tuple[int, ...]


def _nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace, by sparse Gaussian elimination."""
    n = len(matrix[0]) if matrix else 0
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    rows = [r for r in rows if r]
    pivots: dict[int, dict[int, Fraction]] = {}  # pivot col -> reduced row
    while rows:
        # smallest row first keeps the elimination sparse
        rows.sort(key=lambda r: (len(r), min(r)))
        row = rows.pop(0)
        col = min(row)
        inv = 1 / row[col]
        row = {j: v * inv for j, v in row.items()}
        for pcol, prow in pivots.items():
            if col in prow:
                f = prow[col]
                for j, v in row.items():
                    nv = prow.get(j, Fraction(0)) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        pivots[col] = row
        nxt = []
        for r in rows:
            if col in r:
                f = r[col]
                for j, v in row.items():
                    nv = r.get(j, Fraction(0)) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
            if r:
                nxt.append(r)
        rows = nxt
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for pcol, prow in pivots.items():
            vec[pcol] = -prow.get(fc, Fraction(0))
        basis.append(vec)
    return basis


def _strictly_positive_combination(basis: list[list[Fraction]]):
    """A vector w = sum(l_b * basis_b) with every entry > 0, or None.
    Fourier-Motzkin elimination on the coefficients l_b."""
    m = len(basis)
    n = len(basis[0])
    # constraint rows: sum_b basis[b][i] * l_b > 0
    cons = [[basis[b][i] for b in range(m)] for i in range(n)]
    if any(all(v == 0 for v in row) for row in cons):
        return None  # some coordinate is identically zero on the eigenspace
    eliminated = []  # (var, lowers, uppers) in elimination order
    live = list(range(m))
    while live:
        var = live.pop()
        lowers, uppers, keep = [], [], []
        for row in cons:
            c = row[var]
            if c > 0:
                lowers.append(row)   # l_var > -(rest)/c
            elif c < 0:
                uppers.append(row)   # l_var < -(rest)/c
            else:
                keep.append(row)
        cons = list(keep)
        for lo in lowers:
            for up in uppers:
                a, b = lo[var], -up[var]
                row = [lo[j] / a + up[j] / b for j in range(m)]
                row[var] = Fraction(0)
                if any(row):
                    cons.append(row)
                else:
                    return None  # combined to 0 > 0
        eliminated.append((var, lowers, uppers))
    # back-substitute: the last-eliminated variable is constrained only by
    # already-assigned ones
    sol = [Fraction(0)] * m
    for var, lowers, uppers in reversed(eliminated):
        lo_vals = []
        for row in lowers:
            rest = sum(row[j] * sol[j] for j in range(m) if j != var)
            lo_vals.append(-rest / row[var])
        up_vals = []
        for row in uppers:
            rest = sum(row[j] * sol[j] for j in range(m) if j != var)
            up_vals.append(-rest / row[var])
        if lo_vals and up_vals:
            lo, up = max(lo_vals), min(up_vals)
            if not lo < up:
                return None
            sol[var] = (lo + up) / 2
        elif lo_vals:
            sol[var] = max(lo_vals) + 1
        elif up_vals:
            sol[var] = min(up_vals) - 1
        else:
            sol[var] = Fraction(1)
    w = [sum(basis[b][i] * sol[b] for b in range(m)) for i in range(n)]
    if any(v <= 0 for v in w):
        return None
    return w


def _normalize_positive(w: list[Fraction]) -> tuple[int, ...]:
    den = lcm(*(v.denominator for v in w))
    ints = [int(v * den) for v in w]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def k_weight_vector(q: Quiver, k: int) -> WeightVector | None:
    """A strictly positive w with A w = k w, reduced to integers with
    gcd 1, or None when no such vector exists."""
    n = q.n
    mat = [[Fraction(q.adjacency[i][j] - (k if i == j else 0))
            for j in range(n)] for i in range(n)]
    basis = _nullspace(mat)
    if not basis:
        return None
    if len(basis) == 1:
        v = basis[0]
        if all(x > 0 for x in v):
            return WeightVector(k, _normalize_positive(v))
        if all(x < 0 for x in v):
            return WeightVector(k, _normalize_positive([-x for x in v]))
        return None
    w = _strictly_positive_combination(basis)
    if w is None:
        return None
    weights = _normalize_positive(w)
    assert all(
        sum(q.adjacency[i][j] * weights[j] for j in range(n)) == k * weights[i]
        for i in range(n))
    return WeightVector(k, weights)


def reduced_weight_vector(q: Quiver) -> WeightVector | None:
    """The unique strictly positive integer eigen-weighting, scanning the
    integer eigenvalue candidates between the extreme row sums.  At most
    one eigenvalue can carry a strictly positive eigenvector, so the
    first hit is the answer."""
    sums = [sum(row) for row in q.adjacency]
    lo, hi = max(1, min(sums)), max(sums)
    for k in range(lo, hi + 1):
        wv = k_weight_vector(q, k)
        if wv is not None:
            return wv
    return None


# -- characteristic polynomial -------------------------------------------------


def char_poly(q: Quiver) -> IntPolynomial:
    """det(xI - A), computed exactly: similarity reduction to Hessenberg
    form over Fraction, then the standard three-term recurrence on
    leading principal minors."""
    n = q.n
    H = [[Fraction(v) for v in row] for row in q.adjacency]
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if H[r][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[piv], H[c + 1] = H[c + 1], H[piv]
            for r in range(n):
                H[r][piv], H[r][c + 1] = H[r][c + 1], H[r][piv]
        for r in range(c + 2, n):
            if H[r][c]:
                f = H[r][c] / H[c + 1][c]
                for j in range(n):
                    H[r][j] -= f * H[c + 1][j]
                for i in range(n):
                    H[i][c + 1] += f * H[i][r]
    # c[m] = charpoly of the leading m x m block
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        d = H[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [Fraction(0)] + prev
        for i, v in enumerate(prev):
            cur[i] -= d * v
        beta = Fraction(1)
        for i in range(m - 1, 0, -1):
            beta *= H[i][i - 1]
            if not beta:
                break
            coef = H[i - 1][m - 1] * beta
            if coef:
                for j, v in enumerate(polys[i - 1]):
                    cur[j] -= coef * v
        polys.append(cur)
    out = polys[n]
    assert all(c.denominator == 1 for c in out)
    return IntPolynomial([int(c) for c in out])


# -- automorphisms and isomorphism ---------------------------------------------


def _invariants(q: Quiver, use_weights: bool = True) -> list[tuple]:
    n = q.n
    A = q.adjacency
    out = []
    for v in range(n):
        w = q.weights[v] if use_weights and q.weights is not None else 0
        outs = tuple(sorted(A[v][j] for j in range(n) if j != v and A[v][j]))
        ins = tuple(sorted(A[j][v] for j in range(n) if j != v and A[j][v]))
        out.append((w, A[v][v], outs, ins))
    return out


def _extend_map(q1: Quiver, q2: Quiver, inv1, inv2, seed: dict[int, int]):
    """Backtracking completion of a partial vertex map q1 -> q2 to an
    isomorphism; returns the full map as a list, or None."""
    n = q1.n
    A, B = q1.adjacency, q2.adjacency
    assigned = dict(seed)
    used = set(assigned.values())
    order = [v for v in range(n) if v not in assigned]

    def consistent(v, t):
        if inv1[v] != inv2[t]:
            return False
        if A[v][v] != B[t][t]:
            return False
        for u, s in assigned.items():
            if A[v][u] != B[t][s] or A[u][v] != B[s][t]:
                return False
        return True

    pos = 0
    choice: list[list[int]] = []
    while True:
        if pos == len(order):
            full = [0] * n
            for u, s in assigned.items():
                full[u] = s
            return full
        if pos == len(choice):
            v = order[pos]
            choice.append([t for t in range(n)
                           if t not in used and consistent(v, t)])
        v = order[pos]
        if choice[pos]:
            t = choice[pos].pop(0)
            assigned[v] = t
            used.add(t)
            pos += 1
        else:
            choice.pop()
            if pos == 0:
                return None
            pos -= 1
            v = order[pos]
            used.discard(assigned.pop(v))
    # unreachable


def automorphism_orbits(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits of the automorphism group (adjacency- and
    weight-preserving), as sorted tuples sorted by first vertex."""
    n = q.n
    inv = _invariants(q)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j) or inv[i] != inv[j]:
                continue
            full = _extend_map(q, q, inv, inv, {i: j})
            if full is not None:
                for u, s in enumerate(full):
                    ra, rb = find(u), find(s)
                    if ra != rb:
                        parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted((tuple(sorted(g)) for g in groups.values()),
                        key=lambda c: c[0]))


def find_isomorphism(q1: Quiver, q2: Quiver,
                     respect_weights: bool = True) -> tuple[int, ...] | None:
    """A vertex bijection carrying q1's arrows (and weights, when both
    quivers have them and respect_weights is set) onto q2's, or None."""
    if q1.n != q2.n:
        return None
    if respect_weights and (q1.weights is None) != (q2.weights is None):
        return None
    inv1 = _invariants(q1, respect_weights)
    inv2 = _invariants(q2, respect_weights)
    if sorted(inv1) != sorted(inv2):
        return None
    full = _extend_map(q1, q2, inv1, inv2, {})
    return tuple(full) if full is not None else None


def quiver_isomorphic(q1: Quiver, q2: Quiver,
                      respect_weights: bool = True) -> bool:
    return find_isomorphism(q1, q2, respect_weights) is not None


# -- affine ADE recognition -----------------------------------------------------


def ade_classify(q: Quiver) -> str | None:
    """The affine ADE type of the underlying graph, as "A~n", "D~n",
    "E~6", "E~7" or "E~8"; None when the quiver is not an affine ADE
    diagram (doubled arrows everywhere count as single undirected edges
    only in the two rank<=1 cycle cases A~0 and A~1)."""
    n = q.n
    A = q.adjacency
    if n == 1:
        return "A~0" if A[0][0] == 2 else None
    if n == 2 and A[0][0] == 0 and A[1][1] == 0 and A[0][1] == 2 and A[1][0] == 2:
        return "A~1"
    if not q.is_symmetric():
        return None
    if any(A[i][i] for i in range(n)):
        return None
    if any(A[i][j] > 1 for i in range(n) for j in range(n)):
        return None
    if len(weakly_connected_components(q)) != 1:
        return None
    deg = [sum(A[i]) for i in range(n)]
    edges = sum(deg) // 2
    if all(d == 2 for d in deg):
        return f"A~{n - 1}"  # a single cycle
    if edges != n - 1:
        return None  # not a tree
    three = [v for v in range(n) if deg[v] == 3]
    four = [v for v in range(n) if deg[v] == 4]
    if any(d > 4 for d in deg):
        return None
    if len(four) == 1 and not three and n == 5:
        return "D~4"  # star with four leaves
    if four:
        return None
    if len(three) == 2:
        ok = all(sum(1 for j in range(n) if A[v][j] and deg[j] == 1) == 2
                 for v in three)
        rest_ok = all(deg[v] <= 2 for v in range(n) if v not in three)
        return f"D~{n - 1}" if ok and rest_ok else None
    if len(three) == 1:
        c = three[0]
        arms = []
        for start in (j for j in range(n) if A[c][j]):
            length = 1
            prev, cur = c, start
            while deg[cur] == 2:
                nxt = next(j for j in range(n) if A[cur][j] and j != prev)
                prev, cur = cur, nxt
                length += 1
            if deg[cur] != 1:
                return None
            arms.append(length)
        arms.sort()
        return {(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}.get(tuple(arms))
    return None


# -- DOT export ------------------------------------------------------------------


def to_dot(q: Quiver) -> str:
    """Graphviz source.  Opposite arrow pairs are drawn as single
    undirected edges and self-loop pairs are halved, purely for display;
    the JSON form keeps the exact arrow counts."""
    lines = ["digraph quiver {", "  rankdir=LR;", '  node [shape=circle];']
    for i, name in enumerate(q.vertices):
        label = name
        if q.weights is not None:
            label = f"{name}\\n({q.weights[i]})"
        lines.append(f'  v{i} [label="{label}"];')
    A = q.adjacency
    for i in range(q.n):
        undirected, directed = divmod(A[i][i], 2)
        for _ in range(undirected):
            lines.append(f"  v{i} -> v{i} [dir=none];")
        for _ in range(directed):
            lines.append(f"  v{i} -> v{i};")
        for j in range(i + 1, q.n):
            paired = min(A[i][j], A[j][i])
            for _ in range(paired):
                lines.append(f"  v{i} -> v{j} [dir=none];")
            for _ in range(A[i][j] - paired):
                lines.append(f"  v{i} -> v{j};")
            for _ in range(A[j][i] - paired):
                lines.append(f"  v{j} -> v{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
