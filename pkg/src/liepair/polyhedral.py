"""Exact dominance of convex piecewise-linear functions on a split torus.

Both functions have the shape Y ↦ Σ m_i |λ_i(Y)|, so they are linear on each
closed cone of the hyperplane arrangement {λ_j = 0} drawn from the union of
their forms.  The global inequality f ≤ g therefore reduces to finitely many
exact evaluations: once the common kernel (lineality) is quotiented away, the
cones are pointed, and a linear function is nonnegative on a pointed cone iff
it is nonnegative on every extreme ray.

Cone enumeration proceeds by picking a maximal independent subset of forms
(whose sign choices cut simplicial base cones) and splitting by the remaining
hyperplanes double-description style, keeping exact extreme rays throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional

from .algebra import Subspace
from .linalg import (
    ZERO,
    inverse,
    kernel,
    rank,
    rref,
    vec_dot,
)
from .weights import RhoFunction, rho_eval

DEFAULT_CONE_BUDGET = 10 ** 6


class ConeBudgetExceeded(RuntimeError):
    """The arrangement has more full-dimensional cones than the budget."""


class RankMismatch(ValueError):
    pass


def normalize_form(v):
    """Canonical representative modulo positive scaling and global sign:
    first nonzero coordinate becomes +1.  Returns None for the zero form."""
    nz = next((x for x in v if x != 0), None)
    if nz is None:
        return None
    s = abs(nz)
    w = [x / s for x in v]
    if nz < 0:
        w = [-x for x in w]
    return tuple(w)


def normalize_ray(v):
    """Canonical representative modulo positive scaling only: first nonzero
    coordinate becomes ±1."""
    nz = next((x for x in v if x != 0), None)
    if nz is None:
        return None
    s = abs(nz)
    return tuple(x / s for x in v)


@dataclass(frozen=True)
class Arrangement:
    """Deduplicated union of the nonzero forms of two rho functions, with the
    common kernel of all forms (on which both functions vanish)."""

    rank: int
    forms: tuple  # tuple of canonical form tuples
    lineality: Subspace


@dataclass(frozen=True)
class SignedCone:
    """A closed full-dimensional cone of the arrangement, encoded by the sign
    each form takes on its interior, with extreme rays modulo lineality."""

    signs: tuple       # +1 / -1 per arrangement form
    generators: tuple  # extreme rays, ambient coordinates, canonical scaling
    dim: int


@dataclass(frozen=True)
class DominanceVerdict:
    holds: bool
    witness: Optional[tuple]
    margin: Optional[Fraction]
    cone_count: int


def build_arrangement(f: RhoFunction, g: RhoFunction) -> Arrangement:
    if f.rank != g.rank:
        raise RankMismatch(f"rho ranks differ: {f.rank} vs {g.rank}")
    r = f.rank
    seen = []
    for lam, _ in tuple(f.forms) + tuple(g.forms):
        nf = normalize_form(lam)
        if nf is not None and nf not in seen:
            seen.append(nf)
    forms = tuple(sorted(seen))
    if forms:
        lin = Subspace.from_rows(r, kernel([list(x) for x in forms], r))
    else:
        lin = Subspace.full(r)
    return Arrangement(rank=r, forms=forms, lineality=lin)


def _is_extreme(ray, signed_forms, d):
    tight = [mu for mu, _ in signed_forms if vec_dot(mu, ray) == 0]
    if d == 1:
        return True  # a nonzero ray on the line is always extreme
    if len(tight) < d - 1:
        return False
    return rank([list(t) for t in tight]) == d - 1


def _split_recursive(rays, signed_prefix, rest, d, emit, budget, counter):
    if not rest:
        counter[0] += 1
        if counter[0] > budget:
            raise ConeBudgetExceeded(
                f"cone count exceeded the budget of {budget}")
        emit(signed_prefix, rays)
        return
    lam = rest[0]
    vals = [vec_dot(lam, r) for r in rays]
    has_pos = any(v > 0 for v in vals)
    has_neg = any(v < 0 for v in vals)
    if not has_pos and not has_neg:
        raise AssertionError("full-dimensional cone inside a hyperplane")
    if not has_neg:
        _split_recursive(rays, signed_prefix + ((lam, 1),), rest[1:],
                         d, emit, budget, counter)
        return
    if not has_pos:
        _split_recursive(rays, signed_prefix + ((lam, -1),), rest[1:],
                         d, emit, budget, counter)
        return
    pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
    neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
    zero = [r for r, v in zip(rays, vals) if v == 0]
    combos = []
    for p, vp in pos:
        for q, vq in neg:
            c = tuple(vp * qq - vq * pp for pp, qq in zip(p, q))
            combos.append(normalize_ray(c))
    for side, keep in ((1, [r for r, _ in pos]), (-1, [r for r, _ in neg])):
        signed = signed_prefix + ((lam, side),)
        cand = []
        for r in keep + zero + combos:
            if r is not None and r not in cand:
                cand.append(r)
        ext = tuple(r for r in cand if _is_extreme(r, signed, d))
        _split_recursive(ext, signed, rest[1:], d, emit, budget, counter)


def enumerate_cones(arr: Arrangement, budget=DEFAULT_CONE_BUDGET):
    """All closed full-dimensional cones of the arrangement in the quotient by
    the lineality space, each with its extreme rays mapped back to ambient
    coordinates.  The cones cover the quotient."""
    if not arr.forms:
        return []
    span_rows, _ = rref([list(x) for x in arr.forms])
    d = len(span_rows)
    # columns of the row-space basis give a canonical complement of the
    # lineality (the dot product is definite over ℚ)
    reduced = []
    for lam in arr.forms:
        reduced.append(tuple(vec_dot(lam, row) for row in span_rows))
    order = []
    rest = []
    for idx, mu in enumerate(reduced):
        if len(order) < d and rank([list(reduced[i]) for i in order] + [list(mu)]) > len(order):
            order.append(idx)
        else:
            rest.append(idx)
    perm = order + rest
    basis = [list(reduced[i]) for i in order]
    Binv = inverse(basis)
    base_rays = [tuple(Binv[i][k] for i in range(d)) for k in range(d)]
    cones = []
    counter = [0]

    def emit(signed, rays):
        signs = [0] * len(arr.forms)
        for pos_in_perm, (mu, s) in enumerate(signed):
            signs[perm[pos_in_perm]] = s
        ambient = []
        for z in rays:
            y = [ZERO] * arr.rank
            for za, row in zip(z, span_rows):
                if za != 0:
                    for i, x in enumerate(row):
                        y[i] += za * x
            ambient.append(normalize_ray(y))
        cones.append(SignedCone(signs=tuple(signs),
                                generators=tuple(sorted(ambient)),
                                dim=d))

    for eps in itertools.product((1, -1), repeat=d):
        rays = [normalize_ray(tuple(e * x for x in ray))
                for e, ray in zip(eps, base_rays)]
        signed = tuple((tuple(mu), e) for mu, e in zip(basis, eps))
        _split_recursive(tuple(rays), signed,
                         [reduced[i] for i in rest], d, emit, budget, counter)
    return cones


def cone_contains(cone: SignedCone, arr: Arrangement, y):
    """Membership of y in the closed cone: sign compatibility with every
    arrangement form (zero allowed on boundaries)."""
    for lam, s in zip(arr.forms, cone.signs):
        if s * vec_dot(lam, y) < 0:
            return False
    return True


def decide_dominance(f: RhoFunction, g: RhoFunction,
                     budget=DEFAULT_CONE_BUDGET) -> DominanceVerdict:
    """Decide f(Y) ≤ g(Y) for all Y, exactly.

    On each enumerated cone both functions are linear, so the difference is
    checked on the extreme rays only; any strict violation there is an exact
    counterexample.  With no forms at all both functions vanish identically
    and the verdict holds with margin 0 by convention.
    """
    arr = build_arrangement(f, g)
    cones = enumerate_cones(arr, budget)
    rays = sorted({r for cone in cones for r in cone.generators})
    margin = None
    for ray in rays:
        diff = rho_eval(g, list(ray)) - rho_eval(f, list(ray))
        if diff < 0:
            return DominanceVerdict(holds=False, witness=ray, margin=None,
                                    cone_count=len(cones))
        if margin is None or diff < margin:
            margin = diff
    if margin is None:
        margin = ZERO
    return DominanceVerdict(holds=True, witness=None, margin=margin,
                            cone_count=len(cones))


@dataclass(frozen=True)
class OracleOutcome:
    agrees: bool              # True when no violation of f ≤ g was sampled
    counterexample: Optional[tuple]
    f_value: Optional[Fraction]
    g_value: Optional[Fraction]
    samples: int


def randomized_dominance_oracle(f: RhoFunction, g: RhoFunction,
                                samples: int, seed: int) -> OracleOutcome:
    """Independent Monte Carlo cross-check of decide_dominance.

    Samples integer points (exact rationals) and evaluates both functions
    exactly; a strict violation is a certified counterexample to dominance.
    The bulk evaluation runs in int64 when a conservative overflow bound
    allows it, otherwise in Fractions; both paths are exact.
    """
    if f.rank != g.rank:
        raise RankMismatch(f"rho ranks differ: {f.rank} vs {g.rank}")
    r = f.rank
    rng = Random(seed)
    pts = [tuple(rng.randint(-9, 9) for _ in range(r)) for _ in range(samples)]
    if r == 0 or (not f.forms and not g.forms):
        return OracleOutcome(True, None, None, None, samples)
    scale = 1
    for lam, _ in tuple(f.forms) + tuple(g.forms):
        from math import lcm
        for x in lam:
            scale = lcm(scale, x.denominator)
    def int_forms(fn):
        return [([int(x * scale) for x in lam], m) for lam, m in fn.forms]
    fi, gi = int_forms(f), int_forms(g)
    max_coef = max((abs(c) for lam, _ in fi + gi for c in lam), default=0)
    mult_sum = sum(m for _, m in fi + gi)
    bound = max_coef * 9 * r * max(mult_sum, 1)
    idx = None
    if bound < 2 ** 62:
        import numpy as np
        P = np.array(pts, dtype=np.int64).T  # r x samples
        def eval_all(forms):
            total = np.zeros(samples, dtype=np.int64)
            for lam, m in forms:
                total += m * np.abs(np.array(lam, dtype=np.int64) @ P)
            return total
        diff = eval_all(gi) - eval_all(fi)
        where = np.nonzero(diff < 0)[0]
        idx = int(where[0]) if len(where) else None
    else:
        for i, p in enumerate(pts):
            if rho_eval(f, list(p)) > rho_eval(g, list(p)):
                idx = i
                break
    if idx is None:
        return OracleOutcome(True, None, None, None, samples)
    p = [Fraction(x) for x in pts[idx]]
    return OracleOutcome(False, tuple(p), rho_eval(f, p), rho_eval(g, p),
                         samples)
