"""Support-set combinatorics: the interior monomial set, lifted exponents,
constrained representation enumeration, the lattice of relations, and the
sign-restricted subsets L_i.

Index conventions: a SupportSet reorders its exponents so that the interior
monomials (lexicographically sorted) come first, followed by the remaining
monomials in lexicographic order.  ``input_order`` records the permutation
(new index -> position in the caller-supplied list) so user-facing data such
as specialization points can be permuted to match.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def enumerate_interior(d, n):
    """All u in N^{n+1} with sum(u) = d and every u_i > 0, in lex order.

    These index the rows/columns of the Hasse-Witt matrix; there are
    C(d-1, n) of them, and the set is empty iff d < n+1.
    """
    if d < n + 1:
        raise ValueError(
            f"no interior monomials: degree {d} < {n + 1} variables"
        )
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for u in range(1, remaining - slots + 2):
            rec(prefix + [u], remaining - u, slots - 1)

    rec([], d, n + 1)
    return out


def lift(exponents):
    """Append a coordinate 1 to every exponent vector."""
    return tuple(tuple(a) + (1,) for a in exponents)


@dataclass(frozen=True)
class SupportSet:
    """The exponent vectors of a sparse homogeneous polynomial family.

    ``m`` counts how many interior monomials are present in the support;
    when ``u_contained`` is true the full interior set occupies indices
    0..m-1.  Operations that need the interior set inside the support must
    check ``u_contained`` and refuse otherwise.
    """

    n: int
    d: int
    exponents: tuple
    m: int
    u_contained: bool
    input_order: tuple

    @classmethod
    def build(cls, n, d, exponents):
        exps = [tuple(int(x) for x in a) for a in exponents]
        if not exps:
            raise ValueError("support is empty")
        for a in exps:
            if len(a) != n + 1:
                raise ValueError(f"exponent {a} has length != n+1 = {n + 1}")
            if any(x < 0 for x in a):
                raise ValueError(f"exponent {a} has a negative entry")
            if sum(a) != d:
                raise ValueError(f"exponent {a} is not homogeneous of degree {d}")
        if len(set(exps)) != len(exps):
            raise ValueError("support contains repeated exponents")
        if d < n + 1:
            raise ValueError(f"degree {d} < n+1 = {n + 1}: interior set is empty")
        interior = set(enumerate_interior(d, n))
        present = sorted(a for a in exps if a in interior)
        rest = sorted(a for a in exps if a not in interior)
        ordered = present + rest
        input_order = tuple(exps.index(a) for a in ordered)
        return cls(
            n=n,
            d=d,
            exponents=tuple(ordered),
            m=len(present),
            u_contained=len(present) == len(interior),
            input_order=input_order,
        )

    @property
    def N(self):
        return len(self.exponents)

    @property
    def lifted(self):
        return lift(self.exponents)

    def interior_set(self):
        return enumerate_interior(self.d, self.n)


def enumerate_representations(lifted, target):
    """All e in N^N with sum_k e_k * lifted[k] = target, lex-ascending in e.

    The last coordinate of every lifted vector is 1, so the last target
    coordinate bounds the total of the e_k; the depth-first search prunes on
    per-coordinate reachability of the remaining budget.
    """
    lifted = [tuple(v) for v in lifted]
    target = tuple(target)
    if any(t < 0 for t in target):
        return []
    N = len(lifted)
    m = len(target)
    # suffix_max[k][i]: largest coordinate-i entry among columns k..N-1
    suffix_max = [[0] * m for _ in range(N + 1)]
    for k in reversed(range(N)):
        for i in range(m):
            suffix_max[k][i] = max(suffix_max[k + 1][i], lifted[k][i])
    out = []
    acc = [0] * N

    def rec(k, remaining):
        if all(x == 0 for x in remaining):
            out.append(tuple(acc) if k == N else tuple(acc[:k]) + (0,) * (N - k))
            return
        if k == N:
            return
        budget = remaining[-1]
        if any(
            remaining[i] > budget * suffix_max[k][i] for i in range(m)
        ):
            return
        col = lifted[k]
        emax = budget
        for i in range(m):
            if col[i]:
                emax = min(emax, remaining[i] // col[i])
        for e in range(emax + 1):
            acc[k] = e
            rec(k + 1, tuple(r - e * c for r, c in zip(remaining, col)))
        acc[k] = 0

    rec(0, target)
    return sorted(out)


def kernel_basis(lifted):
    """A Z-basis of the lattice {l : sum_k l_k * lifted[k] = 0}.

    Computed by integer (Hermite-style) row reduction of the augmented
    matrix [A^T | I]: unimodular row operations preserve the correspondence
    between rows and integer combinations of the columns, so the rows whose
    A^T-part vanishes form a basis of the full kernel lattice, not merely a
    rational basis.
    """
    lifted = [list(v) for v in lifted]
    N = len(lifted)
    m = len(lifted[0]) if lifted else 0
    rows = [lifted[k] + [1 if j == k else 0 for j in range(N)] for k in range(N)]
    pivot = 0
    for col in range(m):
        while True:
            cand = [r for r in range(pivot, N) if rows[r][col] != 0]
            if not cand:
                break
            r0 = min(cand, key=lambda r: (abs(rows[r][col]), r))
            rows[pivot], rows[r0] = rows[r0], rows[pivot]
            done = True
            for r in range(pivot + 1, N):
                if rows[r][col]:
                    q = rows[r][col] // rows[pivot][col]
                    rows[r] = [a - q * b for a, b in zip(rows[r], rows[pivot])]
                    if rows[r][col]:
                        done = False
            if done:
                pivot += 1
                break
    basis = []
    for r in range(pivot, N):
        vec = tuple(rows[r][m:])
        basis.append(_sign_normalize(vec))
    return sorted(basis)


def _sign_normalize(vec):
    for x in vec:
        if x < 0:
            return tuple(-y for y in vec)
        if x > 0:
            return tuple(vec)
    return tuple(vec)


def enumerate_Li(lifted, i, depth):
    """All l with sum_k l_k*lifted[k] = 0, l_i <= 0, l_k >= 0 for k != i,
    and -l_i <= depth.  Includes l = 0; deterministic order (by -l_i, then
    lex in the nonnegative part).
    """
    lifted = [tuple(v) for v in lifted]
    if depth < 0:
        raise ValueError("depth must be >= 0")
    others = lifted[:i] + lifted[i + 1 :]
    out = []
    for t in range(depth + 1):
        target = tuple(t * c for c in lifted[i])
        for e in enumerate_representations(others, target):
            out.append(e[:i] + (-t,) + e[i:])
    return out


def is_relation(lifted, l):
    m = len(lifted[0])
    return all(
        sum(lk * v[i] for lk, v in zip(l, lifted)) == 0 for i in range(m)
    )


def in_Li(lifted, i, l):
    if not is_relation(lifted, l):
        return False
    if l[i] > 0:
        return False
    return all(x >= 0 for k, x in enumerate(l) if k != i)


def convex_combination_certificate(lifted, i, l):
    """Exact-rational check that a nonzero element of L_i expresses
    lifted[i] as a convex combination of the lifted vectors with positive
    coefficient: the weights -l_k/l_i are nonnegative and sum to 1, and the
    weighted sum reproduces lifted[i].
    """
    if l[i] >= 0:
        raise ValueError("certificate needs l_i < 0")
    weights = {
        k: Fraction(-l[k], l[i]) for k in range(len(l)) if k != i and l[k]
    }
    if any(w < 0 for w in weights.values()):
        return False
    if sum(weights.values(), Fraction(0)) != 1:
        return False
    m = len(lifted[0])
    for coord in range(m):
        s = sum(
            (w * lifted[k][coord] for k, w in weights.items()), Fraction(0)
        )
        if s != lifted[i][coord]:
            return False
    return True


def enumerate_box_relations(lifted, sup_bound, max_results=2000, max_nodes=2_000_000):
    """Nonzero lattice relations with max_k |l_k| <= sup_bound, up to sign
    (first nonzero entry positive), enumerated depth-first with candidate
    values ordered by absolute value so small relations are found first.

    For high-rank lattices the full ball is astronomically large, so the
    search is capped at ``max_results`` relations / ``max_nodes`` search
    nodes; the capped enumeration is still deterministic.
    """
    lifted = [tuple(v) for v in lifted]
    N = len(lifted)
    m = len(lifted[0])
    suffix = [[0] * m for _ in range(N + 1)]
    for k in reversed(range(N)):
        for i in range(m):
            suffix[k][i] = suffix[k + 1][i] + sup_bound * lifted[k][i]
    values = [0]
    for v in range(1, sup_bound + 1):
        values += [v, -v]
    out = []
    acc = [0] * N
    nodes = 0

    def rec(k, partial):
        nonlocal nodes
        if len(out) >= max_results or nodes > max_nodes:
            return
        nodes += 1
        if any(abs(partial[i]) > suffix[k][i] for i in range(m)):
            return
        if k == N:
            if all(x == 0 for x in partial) and any(acc):
                vec = tuple(acc)
                if _sign_normalize(vec) == vec:
                    out.append(vec)
            return
        col = lifted[k]
        for v in values:
            acc[k] = v
            rec(k + 1, tuple(pp + v * c for pp, c in zip(partial, col)))
            if len(out) >= max_results or nodes > max_nodes:
                break
        acc[k] = 0

    rec(0, (0,) * m)
    return out


def default_box_bound(lifted):
    """Sup-norm bound for box-operator enumeration: 3 * max(1, kernel rank)."""
    rank = len(kernel_basis(lifted))
    return 3 * max(1, rank)
