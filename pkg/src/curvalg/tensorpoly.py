"""Symbolic tensor polynomials sum of coeff * U[abc] * W[de].

The five index names are fixed as i < j < k < l < r.  A polynomial stores
sparse terms keyed by (u_word, w_pair) with the w_pair kept ascending; the
sign convention W[ab] = eps * W[ba] is folded in during canonicalization.
Reduction rewrites every U-word whose arrangement lies outside the chosen
pivot set via the substitution rules of an IdentitySet.

A small exact numeric layer evaluates polynomials on concrete dimension-3
arrays; it is the independent oracle used to cross-check every reduction.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

import numpy as np

from .groupring import GroupRingElement, young_symmetrizer, TABLEAU_TPRIME
from .ideals import IdentitySet
from .scalars import (
    Eisenstein,
    RationalFunction,
    as_scalar,
    roots_up_to_quadratic,
    scalar_factor_str,
)

INDEX_NAMES: tuple[str, ...] = ("i", "j", "k", "l", "r")
_NAME_POS = {n: t for t, n in enumerate(INDEX_NAMES)}

TermKey = tuple[tuple[str, str, str], tuple[str, str]]


class TensorPolynomial:
    """Canonical sparse polynomial in the coordinates of U and W."""

    __slots__ = ("epsilon", "terms")

    def __init__(self, epsilon: int, terms=None):
        if epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        store: dict[TermKey, RationalFunction] = {}
        if terms:
            for (u_word, w_pair), c in dict(terms).items():
                u_word = tuple(u_word)
                w_pair = tuple(w_pair)
                c = as_scalar(c)
                if w_pair[0] > w_pair[1]:
                    w_pair = (w_pair[1], w_pair[0])
                    c = c * epsilon
                key = (u_word, w_pair)
                _check_key(key)
                acc = store.get(key)
                c = c if acc is None else acc + c
                if c:
                    store[key] = c
                elif acc is not None:
                    del store[key]
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "terms", store)

    def __setattr__(self, name, value):
        raise AttributeError("TensorPolynomial values are immutable")

    def length(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_items(self) -> list[tuple[TermKey, RationalFunction]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def coefficient(self, u_word, w_pair) -> RationalFunction:
        return self.terms.get((tuple(u_word), tuple(w_pair)), RationalFunction.zero())

    def __add__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        if self.epsilon != other.epsilon:
            raise ValueError("cannot combine polynomials with different epsilon")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, RationalFunction.zero()) + c
        return TensorPolynomial(self.epsilon, out)

    def __neg__(self):
        return TensorPolynomial(self.epsilon, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TensorPolynomial":
        c = as_scalar(c)
        return TensorPolynomial(self.epsilon, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        return self.epsilon == other.epsilon and self.terms == other.terms

    def render(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for (u_word, w_pair), c in self.sorted_items():
            lines.append(
                f"{scalar_factor_str(c)} * U[{''.join(u_word)}] * W[{''.join(w_pair)}]"
            )
        return "\n".join(lines)

    def __repr__(self):
        return f"<TensorPolynomial eps={self.epsilon:+d} len={self.length()}>"


def _check_key(key: TermKey):
    u_word, w_pair = key
    names = set(u_word) | set(w_pair)
    if len(u_word) != 3 or len(w_pair) != 2 or names != set(INDEX_NAMES):
        raise ValueError(f"malformed term key {key}")


def symmetrize_product(
    a: GroupRingElement, orientation: str = "uw", epsilon: int = 1
) -> TensorPolynomial:
    """Apply a symmetry operator to the base monomial and canonicalize W.

    orientation "uw" starts from U[ijk]*W[lr]; "wu" starts from W[ij]*U[klr].
    The permuted index words are summed with the operator's coefficients and
    the W factor is folded to ascending order with sign epsilon.
    """
    if a.r != 5:
        raise ValueError("symmetrize_product expects an operator acting on 5 slots")
    if orientation not in ("uw", "wu"):
        raise ValueError("orientation must be 'uw' or 'wu'")
    terms: dict[TermKey, RationalFunction] = {}
    for p, c in a.terms.items():
        seq = tuple(INDEX_NAMES[p[t] - 1] for t in range(5))
        if orientation == "uw":
            key = (seq[:3], seq[3:])
        else:
            key = (seq[2:], seq[:2])
        acc = terms.get(key)
        terms[key] = c if acc is None else acc + c
    return TensorPolynomial(epsilon, terms)


def orientation_relation(epsilon: int, a: GroupRingElement | None = None) -> bool:
    """True iff the two product orientations agree up to the sign epsilon."""
    if a is None:
        a = young_symmetrizer(TABLEAU_TPRIME).star().scale(Fraction(1, 24))
    uw = symmetrize_product(a, "uw", epsilon)
    wu = symmetrize_product(a, "wu", epsilon)
    return uw == wu.scale(epsilon)


def arrangement_perm(u_word, complement) -> tuple[int, int, int]:
    """Permutation s with u_word = (c[s(1)-1], c[s(2)-1], c[s(3)-1])."""
    return tuple(complement.index(x) + 1 for x in u_word)


def reduce_polynomial(poly: TensorPolynomial, ids: IdentitySet) -> TensorPolynomial:
    """Rewrite every U-word outside the pivot arrangements and collect."""
    pivots = set(ids.pivots)
    out: dict[TermKey, RationalFunction] = {}
    zero = RationalFunction.zero()
    for (u_word, w_pair), c in poly.terms.items():
        complement = tuple(sorted(set(INDEX_NAMES) - set(w_pair)))
        s = arrangement_perm(u_word, complement)
        if s in pivots:
            key = (u_word, w_pair)
            out[key] = out.get(key, zero) + c
            continue
        for p, b in ids.rule_row(s).items():
            if not b:
                continue
            word = tuple(complement[p[t] - 1] for t in range(3))
            key = (word, w_pair)
            out[key] = out.get(key, zero) + c * b
    return TensorPolynomial(poly.epsilon, out)


def substitute_nu(poly: TensorPolynomial, nu0) -> TensorPolynomial:
    """Evaluate all coefficients at a concrete nu, dropping vanishing terms."""
    x = nu0 if isinstance(nu0, Eisenstein) else Eisenstein(nu0)
    out = {}
    for key, c in poly.terms.items():
        try:
            out[key] = c.substitute(x)
        except ZeroDivisionError as exc:
            u_word, w_pair = key
            raise ValueError(
                f"denominator vanishes at nu={x} in term U[{''.join(u_word)}]*"
                f"W[{''.join(w_pair)}]"
            ) from exc
    return TensorPolynomial(poly.epsilon, out)


def numerator_root_scan(poly: TensorPolynomial, exclude=()) -> frozenset[Eisenstein]:
    """Union of Q(w) roots of all coefficient numerators, minus exclusions."""
    excluded = {x if isinstance(x, Eisenstein) else Eisenstein(x) for x in exclude}
    found: set[Eisenstein] = set()
    for c in poly.terms.values():
        if c.num.degree < 1:
            continue
        report = roots_up_to_quadratic(c.num)
        if report.unresolved:
            raise ValueError(
                f"numerator {c.num} has unresolved factors of degree >= 3"
            )
        found.update(report.root_set())
    return frozenset(found - excluded)


def eps_symbolic_coefficients(
    plus: TensorPolynomial, minus: TensorPolynomial
) -> dict[TermKey, tuple[RationalFunction, RationalFunction]]:
    """Reconstruct per-term (a, b) with coefficient a + b*eps from both runs."""
    half = as_scalar(Fraction(1, 2))
    keys = set(plus.terms) | set(minus.terms)
    out = {}
    for key in keys:
        cp = plus.terms.get(key, RationalFunction.zero())
        cm = minus.terms.get(key, RationalFunction.zero())
        out[key] = (half * (cp + cm), half * (cp - cm))
    return out


# ---------------------------------------------------------------------------
# Exact numeric evaluation at a concrete dimension (the reduction oracle).
# Arrays are flat lists in row-major order; all arithmetic is exact, with
# denominators cleared up front so the inner loops run on integers.  The
# hot gather-multiply loops go through int64 numpy when the values provably
# fit, with a pure-Python big-integer path as fallback.
# ---------------------------------------------------------------------------

_INT64_SAFE = 2**62


def flat_index(indices, dim: int) -> int:
    out = 0
    for v in indices:
        out = out * dim + v
    return out


@functools.lru_cache(maxsize=None)
def _gather_indices(slots: tuple[int, ...], dim: int) -> np.ndarray:
    """Flat source index per assignment of values to the five index names."""
    out = np.empty(dim**5, dtype=np.int64)
    for flat, x in enumerate(itertools.product(range(dim), repeat=5)):
        idx = 0
        for s in slots:
            idx = idx * dim + x[s]
        out[flat] = idx
    return out


def _cleared(values) -> tuple[list[int], int]:
    fracs = [Fraction(v) for v in values]
    lcm = 1
    for v in fracs:
        d = v.denominator
        if d != 1:
            g = _gcd(lcm, d)
            lcm = lcm // g * d
    return [int(v * lcm) for v in fracs], lcm


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _constant_coefficients(poly: TensorPolynomial) -> list[tuple[TermKey, Fraction]]:
    out = []
    for key, c in poly.terms.items():
        if not c.is_constant():
            u_word, w_pair = key
            raise ValueError(
                f"symbolic nu remains in term U[{''.join(u_word)}]*W[{''.join(w_pair)}]"
            )
        out.append((key, c.as_fraction()))
    return out


def _evaluate_cleared(poly: TensorPolynomial, u_values, w_values, dim: int):
    """Integer dim**5 array plus the exact scale restoring true values."""
    coeffs = _constant_coefficients(poly)
    ints_c, lcm_c = _cleared([c for _, c in coeffs])
    ints_u, lcm_u = _cleared(u_values)
    ints_w, lcm_w = _cleared(w_values)
    scale = Fraction(1, lcm_c * lcm_u * lcm_w)
    plan = [
        (ic, tuple(_NAME_POS[n] for n in key[0]), tuple(_NAME_POS[n] for n in key[1]))
        for (key, _), ic in zip(coeffs, ints_c)
    ]
    bound = (
        max((abs(ic) for ic, _, _ in plan), default=0)
        * max((abs(v) for v in ints_u), default=0)
        * max((abs(v) for v in ints_w), default=0)
        * max(len(plan), 1)
    )
    if bound < _INT64_SAFE:
        u_arr = np.asarray(ints_u, dtype=np.int64)
        w_arr = np.asarray(ints_w, dtype=np.int64)
        acc = np.zeros(dim**5, dtype=np.int64)
        for ic, us, ws in plan:
            acc += ic * u_arr[_gather_indices(us, dim)] * w_arr[_gather_indices(ws, dim)]
        return [int(v) for v in acc], scale
    out = []
    for x in itertools.product(range(dim), repeat=5):
        acc = 0
        for ic, us, ws in plan:
            ui = (x[us[0]] * dim + x[us[1]]) * dim + x[us[2]]
            wi = x[ws[0]] * dim + x[ws[1]]
            acc += ic * ints_u[ui] * ints_w[wi]
        out.append(acc)
    return out, scale


def numeric_evaluate(poly: TensorPolynomial, u_values, w_values, dim: int = 3):
    """Exact dim**5 array of the polynomial on concrete U and W arrays.

    u_values is a flat dim**3 array, w_values a flat dim**2 array; the result
    is a flat list of Fractions indexed by the values given to (i,j,k,l,r).
    """
    ints, scale = _evaluate_cleared(poly, u_values, w_values, dim)
    return [v * scale for v in ints]


def numeric_equivalent(
    poly_a: TensorPolynomial, poly_b: TensorPolynomial, u_values, w_values, dim: int = 3
) -> bool:
    """Exact pointwise equality of two polynomials on one (U, W) sample."""
    a, sa = _evaluate_cleared(poly_a, u_values, w_values, dim)
    b, sb = _evaluate_cleared(poly_b, u_values, w_values, dim)
    # a*sa == b*sb  <=>  a * (sa/sb).num == b * (sa/sb).den  with sa, sb > 0
    ratio = sa / sb
    return all(x * ratio.numerator == y * ratio.denominator for x, y in zip(a, b))


def apply_operator(a: GroupRingElement, t_values, dim: int = 3):
    """Exact symmetry-operator action on a flat dim**r array."""
    r = a.r
    coeffs = [(p, c.as_fraction()) for p, c in a.terms.items()]
    ints_c, lcm_c = _cleared([c for _, c in coeffs])
    ints_t, lcm_t = _cleared(t_values)
    scale = Fraction(1, lcm_c * lcm_t)
    perms = [p for p, _ in coeffs]
    bound = (
        max((abs(v) for v in ints_c), default=0)
        * max((abs(v) for v in ints_t), default=0)
        * max(len(perms), 1)
    )
    if r == 5 and bound < _INT64_SAFE:
        t_arr = np.asarray(ints_t, dtype=np.int64)
        acc = np.zeros(dim**5, dtype=np.int64)
        for p, ic in zip(perms, ints_c):
            acc += ic * t_arr[_gather_indices(tuple(v - 1 for v in p), dim)]
        return [int(v) * scale for v in acc]
    out = []
    for x in itertools.product(range(dim), repeat=r):
        acc = 0
        for p, ic in zip(perms, ints_c):
            acc += ic * ints_t[flat_index([x[p[t] - 1] for t in range(r)], dim)]
        out.append(acc * scale)
    return out


def random_tensor(rng, arity: int, dim: int = 3) -> list[int]:
    return [rng.randint(-9, 9) for _ in range(dim**arity)]


def random_conforming_u(e: GroupRingElement, rng, dim: int = 3):
    """A random order-3 array in the symmetry class of the idempotent e."""
    return apply_operator(e, random_tensor(rng, 3, dim), dim)


def random_w(epsilon: int, rng, dim: int = 3) -> list[int]:
    """Random symmetric (+1) or alternating (-1) order-2 array."""
    out = [0] * (dim * dim)
    for a in range(dim):
        for b in range(a, dim):
            if a == b:
                out[a * dim + a] = rng.randint(-9, 9) if epsilon == 1 else 0
            else:
                v = rng.randint(-9, 9)
                out[a * dim + b] = v
                out[b * dim + a] = epsilon * v
    return out


def scaled_equal(t1, t2, scale=1) -> bool:
    """Exact componentwise comparison t1 == scale * t2."""
    return all(a == scale * b for a, b in zip(t1, t2))


def curvature_checks(t_values, dim: int = 3) -> dict[str, bool]:
    """Index-symmetry battery for an order-5 array.

    Checks the pair antisymmetry and pair exchange, both cyclic sums, and
    the characterizing eigen-equation of the S_5 Young symmetrizer.
    """
    idx = lambda *v: flat_index(v, dim)
    rng5 = list(itertools.product(range(dim), repeat=5))
    antisym = all(
        t_values[idx(a, b, c, d, e)] == -t_values[idx(a, b, d, c, e)]
        for a, b, c, d, e in rng5
    )
    pair = all(
        t_values[idx(a, b, c, d, e)] == t_values[idx(c, d, a, b, e)]
        for a, b, c, d, e in rng5
    )
    bianchi1 = all(
        t_values[idx(a, b, c, d, e)]
        + t_values[idx(a, c, d, b, e)]
        + t_values[idx(a, d, b, c, e)]
        == 0
        for a, b, c, d, e in rng5
    )
    bianchi2 = all(
        t_values[idx(a, b, c, d, e)]
        + t_values[idx(a, b, d, e, c)]
        + t_values[idx(a, b, e, c, d)]
        == 0
        for a, b, c, d, e in rng5
    )
    y_star = young_symmetrizer(TABLEAU_TPRIME).star()
    eigen = scaled_equal(apply_operator(y_star, t_values, dim), t_values, 24)
    return {
        "antisymmetry": antisym,
        "pair_exchange": pair,
        "first_cyclic_sum": bianchi1,
        "second_cyclic_sum": bianchi2,
        "symmetrizer_eigenvalue_24": eigen,
    }
