"""Regenerates corpus.json. Expected hull dimensions come from an independent numerical oracle:
complex roots at high precision, Q-relations found by PSLQ with coordinate elimination, then the
hull dimension of the companion matrix as t + 1 minus the rank of the Delta constraints."""

import json
import random
import sys

import mpmath
import sympy

mpmath.mp.dps = 150
WEIGHT = mpmath.sqrt(2) + mpmath.e / 7
TOL = mpmath.mpf(10) ** -120

CORPUS = [
    # label, coefficients constant first, |G|, recipe, family
    ("x2-2", [-2, 0, 1], 2, "symmetric", "quadratic"),
    ("x2+1", [1, 0, 1], 2, "symmetric", "quadratic"),
    ("x2-x-1", [-1, -1, 1], 2, "symmetric", "quadratic"),
    ("x3-2", [-2, 0, 0, 1], 6, "symmetric", "cubic"),
    ("x3-3x+1", [1, -3, 0, 1], 3, "alternating3", "cubic"),
    ("x4-2", [-2, 0, 0, 0, 1], 8, "pairs", "quartic"),
    ("x4-x2+2", [2, 0, -1, 0, 1], 8, "pairs", "quartic"),
    ("x4-3", [-3, 0, 0, 0, 1], 8, "pairs", "quartic"),
    ("x4+2", [2, 0, 0, 0, 1], 8, "pairs", "quartic"),
    ("x4+3", [3, 0, 0, 0, 1], 8, "pairs", "quartic"),
    ("(x+1)4-2", [-1, 4, 6, 4, 1], 8, "pairs", "quartic"),
    ("x4+1", [1, 0, 0, 0, 1], 4, "cyclotomic:8", "quartic"),
    ("x4-x2+1", [1, 0, -1, 0, 1], 4, "cyclotomic:12", "quartic"),
    ("x4-10x2+1", [1, 0, -10, 0, 1], 4, "klein", "quartic"),
    ("x4-2x2+9", [9, 0, -2, 0, 1], 4, "klein", "quartic"),
    ("x4-16x2+4", [4, 0, -16, 0, 1], 4, "klein", "quartic"),
    ("phi5", [1, 1, 1, 1, 1], 4, "cyclotomic:5", "quartic"),
    ("x4-4x2+2", [2, 0, -4, 0, 1], 4, "frobenius", "quartic"),
    ("x4+4x2+2", [2, 0, 4, 0, 1], 4, "frobenius", "quartic"),
    ("x4+5x2+5", [5, 0, 5, 0, 1], 4, "frobenius", "quartic"),
    ("x4-5x2+5", [5, 0, -5, 0, 1], 4, "frobenius", "quartic"),
    ("x4+10x2+40x+205", [205, 40, 10, 0, 1], 4, "frobenius", "quartic"),
    ("x4+x+1", [1, 1, 0, 0, 1], 24, "symmetric", "quartic"),
    ("x4-x-1", [-1, -1, 0, 0, 1], 24, "symmetric", "quartic"),
    ("x5-2", [-2, 0, 0, 0, 0, 1], 20, "kummer", "quintic"),
    ("x5-3", [-3, 0, 0, 0, 0, 1], 20, "kummer", "quintic"),
    ("x5-5x+12", [12, -5, 0, 0, 0, 1], 10, "dihedral5", "quintic"),
    ("x5+x4-4x3-3x2+3x+1", [1, 3, -3, -4, 1, 1], 5, "frobenius", "quintic"),
    ("x5-x-1", [-1, -1, 0, 0, 0, 1], 120, "symmetric", "quintic"),
    ("x5-6x+3", [3, -6, 0, 0, 0, 1], 120, "symmetric", "quintic"),
    ("x5+x4-1", [-1, 0, 0, 0, 1, 1], 120, "symmetric", "quintic"),
    ("x5+x4+2", [2, 0, 0, 0, 1, 1], 120, "symmetric", "quintic"),
    ("phi7", [1, 1, 1, 1, 1, 1, 1], 6, "cyclotomic:7", "sextic"),
    ("phi9", [1, 0, 0, 1, 0, 0, 1], 6, "cyclotomic:9", "sextic"),
    ("phi14", [1, -1, 1, -1, 1, -1, 1], 6, "cyclotomic:14", "sextic"),
    ("x6-2", [-2, 0, 0, 0, 0, 0, 1], 12, "kummer", "sextic"),
    ("x6-3", [-3, 0, 0, 0, 0, 0, 1], 12, "kummer", "sextic"),
    ("x6-x2-1", [-1, 0, -1, 0, 0, 0, 1], 48, "pairs", "sextic"),
    ("phi15", [1, -1, 0, 1, -1, 1, 0, -1, 1], 8, "cyclotomic:15", "octic"),
    ("phi16", [1, 0, 0, 0, 0, 0, 0, 0, 1], 8, "cyclotomic:16", "octic"),
    ("phi20", [1, 0, -1, 0, 1, 0, -1, 0, 1], 8, "cyclotomic:20", "octic"),
    ("phi24", [1, 0, 0, 0, -1, 0, 0, 0, 1], 8, "cyclotomic:24", "octic"),
]


def relations(values):
    """Q-basis (integer vectors) of the relations among complex values."""
    n = len(values)
    active = list(range(n))
    found = []
    while len(active) > 1:
        zero = [i for i in active if abs(values[i]) < TOL]
        if zero:
            rel = [1 if j == zero[0] else 0 for j in active]
        else:
            vec = [mpmath.re(values[i]) + WEIGHT * mpmath.im(values[i]) for i in active]
            rel = mpmath.pslq(vec, maxcoeff=10**8, maxsteps=10**6)
        if rel is None:
            break
        full = [0] * n
        for c, i in zip(rel, active):
            full[i] = int(c)
        if abs(sum(c * values[i] for i, c in enumerate(full))) > TOL:
            raise RuntimeError("spurious relation")
        found.append(full)
        drop = max(i for i in active if full[i] != 0)
        active.remove(drop)
    if len(active) == 1 and abs(values[active[0]]) < TOL:
        found.append([1 if j == active[0] else 0 for j in range(n)])
    return found


def hull_dim(coeffs):
    roots = mpmath.polyroots([int(c) for c in reversed(coeffs)], maxsteps=500, extraprec=800)
    m = len(roots)
    lam = relations(roots)
    # Upsilon is the intersection of the relation spaces M(e); stack the equations cutting out each.
    equations = []
    for e in lam:
        deltas = [sum(e[k] * roots[k] ** i for k in range(m)) for i in range(m)]
        rel = relations(deltas)
        if not rel:
            equations.extend([[1 if j == i else 0 for j in range(m)] for i in range(m)])
            continue
        equations.extend(list(v.T) for v in sympy.Matrix(rel).nullspace())
    if not equations:
        return m, len(lam)
    return len(sympy.Matrix(equations).nullspace()), len(lam)


def main():
    out = []
    for label, coeffs, order, recipe, family in CORPUS:
        dim, lam_rank = hull_dim(coeffs)
        out.append({"label": label, "poly": coeffs, "group_order": order, "group": recipe,
                    "family": family, "expected_dim": dim, "expected_lambda_rank": lam_rank})
        print(label, dim, lam_rank, file=sys.stderr)
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
