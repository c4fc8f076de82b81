"""Standalone brute-force Hall product for the one-vertex case.

Deliberately independent of the package: derived objects over a single
vertex are just graded F_p vector spaces, so everything here is done by
enumerating honest matrices over F_p and row-reducing.  Used to freeze
the product fixtures that the fast implementation is tested against.

Run as a script to print [S]*[S] at p=2.
"""

from fractions import Fraction
from itertools import product


def rank_mod_p(rows, p):
    """Rank of a matrix (list of row tuples) over F_p by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def all_matrices(nrows, ncols, p):
    if nrows == 0 or ncols == 0:
        yield tuple(tuple() for _ in range(nrows))
        return
    for flat in product(range(p), repeat=nrows * ncols):
        yield tuple(tuple(flat[r * ncols:(r + 1) * ncols]) for r in range(nrows))


# a graded vector space is a dict degree -> dimension (zero entries dropped)


def normalize(gv):
    return tuple(sorted((n, d) for n, d in gv.items() if d))


def shift(gv, k):
    # cohomological: (gv[k])^n = gv^{n+k}
    return {n - k: d for n, d in gv.items()}


def graded_maps(x, y, p):
    """All degree-0 linear maps x -> y, as dicts degree -> matrix."""
    degs = sorted(set(x) | set(y))
    per_degree = [list(all_matrices(y.get(n, 0), x.get(n, 0), p)) for n in degs]
    for combo in product(*per_degree):
        yield dict(zip(degs, combo))


def cone_dims(f, x, y):
    """Graded dims of the cone of f : x -> y (zero differentials on x, y)."""
    out = {}
    for n in set(x) | set(y) | {n - 1 for n in x}:
        d = 0
        mat = f.get(n + 1)
        if mat is not None:
            d += x.get(n + 1, 0) - rank_mod_p(mat, p=f["p"])
        else:
            d += x.get(n + 1, 0)
        mat = f.get(n)
        d += y.get(n, 0) - (rank_mod_p(mat, p=f["p"]) if mat is not None else 0)
        if d:
            out[n] = d
    return out


def hom_dim(x, y, k):
    """dim of the degree-k morphism space from x to y."""
    return sum(dx * y.get(n + k, 0) for n, dx in x.items())


def aut_order(x, p):
    total = 1
    for d in x.values():
        size = 1
        for i in range(d):
            size *= p ** d - p ** i
        total *= size
    return total


def braces(x, y, p):
    e = 0
    n = 1
    while hom_dim(x, y, -n) or n <= max((abs(k) for k in list(x) + list(y)),
                                        default=0) + 1:
        e += (-1) ** n * hom_dim(x, y, -n)
        n += 1
    return Fraction(p) ** e


def hall_product(x, y, p):
    """[x]*[y] as {graded space: (rational, sqrt-q exponent)} pairs.

    The twist q^{<y,x>/2} is returned as an exponent of sqrt(p) so the
    result stays exact.
    """
    euler = sum((-1 if k % 2 else 1) * hom_dim(y, x, k)
                for k in range(-10, 11))  # plenty for the tiny inputs here
    candidates = {}
    for w in graded_maps(shift(y, -1), x, p):
        w["p"] = p
        candidates[normalize(cone_dims(w, shift(y, -1), x))] = None
    out = {}
    for lkey in candidates:
        L = dict(lkey)
        count = 0
        for f in graded_maps(x, L, p):
            f["p"] = p
            if normalize(cone_dims(f, x, L)) == normalize(y):
                count += 1
        if not count:
            continue
        c = Fraction(count, aut_order(x, p)) * braces(x, L, p) / braces(x, x, p)
        out[lkey] = (c, euler)
    return out


if __name__ == "__main__":
    S = {0: 1}
    for lkey, (c, e) in sorted(hall_product(S, S, 2).items()):
        print(f"{dict(lkey)}: {c} * sqrt(2)^{e}")
