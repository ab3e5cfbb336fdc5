"""Left-ideal bases, pivot determinants, linear identity systems and the
commutation-symmetry scans for the two-dimensional class of K[S_3].

The basis construction follows the matrix-unit route: star the generating
idempotent, transform it, pick the first nonzero row of the single nonzero
block, build the row-matrices C_{i,a} and transform each back.  Identity
systems are solved exactly over Q(w)(nu); pivot sets P are two-element
subsets of S_3 denoted by their positions in the fixed ordering p1..p6.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fourier import BLOCK_DIMS, FourierBlocks, dft, inverse_dft
from .groupring import GroupRingElement, catalog
from .perms import Perm, S3_ORDER
from .scalars import (
    Eisenstein,
    Polynomial,
    RationalFunction,
    poly_gcd,
    roots_up_to_quadratic,
)


@dataclass(frozen=True)
class IdealBasis:
    """Basis h_1..h_d of the minimal left ideal K[S_3] . e*."""

    generator: GroupRingElement
    block: tuple[int, ...]
    basis: tuple[GroupRingElement, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class IdentitySet:
    """Substitution rules U_s = sum_{p in P} B[s][p] * U_p for s outside P."""

    pivots: tuple[Perm, ...]
    rules: dict[Perm, dict[Perm, RationalFunction]]

    def rule_row(self, s: Perm) -> dict[Perm, RationalFunction]:
        return self.rules[tuple(s)]


def position_set_to_perms(pset) -> tuple[Perm, ...]:
    """Positions (1-based, per the fixed S_3 ordering) to permutations."""
    perms = tuple(S3_ORDER[i - 1] for i in pset)
    if len(set(perms)) != len(perms):
        raise ValueError(f"duplicate positions in {pset}")
    return perms


def pset_label(pset) -> str:
    return "".join(str(i) for i in sorted(pset))


def all_pair_psets() -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, 7), 2))


def left_ideal_basis(e: GroupRingElement) -> IdealBasis:
    """Matrix-unit basis of K[S_3].e* for an idempotent e with one nonzero block."""
    if e.r != 3:
        raise ValueError("left_ideal_basis expects an idempotent of K[S_3]")
    if not e.is_idempotent():
        raise ValueError("generator is not idempotent")
    transformed = dft(e.star())
    nonzero = transformed.nonzero_partitions()
    if not nonzero:
        raise ValueError("transform of e* is zero")
    if len(nonzero) > 1:
        raise ValueError(f"transform of e* has several nonzero blocks: {nonzero}")
    lam = nonzero[0]
    block = transformed[lam]
    d = BLOCK_DIMS[lam]
    row = next(i for i in range(d) if any(block[i][j] for j in range(d)))
    a = block[row]
    basis = []
    for i in range(d):
        c_ia = tuple(
            tuple(a[j] if k == i else RationalFunction.zero() for j in range(d))
            for k in range(d)
        )
        basis.append(inverse_dft(FourierBlocks({lam: c_ia})))
    return IdealBasis(generator=e, block=lam, basis=tuple(basis))


def coefficient_matrix(basis: IdealBasis) -> tuple[tuple[RationalFunction, ...], ...]:
    """Row i, column j = h_i(p_j) with columns in the fixed S_3 order."""
    return tuple(
        tuple(h.coefficient(p) for p in S3_ORDER) for h in basis.basis
    )


def delta(basis: IdealBasis, pset) -> RationalFunction:
    """Determinant of the d x d pivot submatrix on the columns of P."""
    perms = position_set_to_perms(pset)
    d = basis.dim
    if len(perms) != d:
        raise ValueError(f"P must have {d} elements, got {len(perms)}")
    rows = [[h.coefficient(p) for p in perms] for h in basis.basis]
    return _det(rows)


def _det(rows) -> RationalFunction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = RationalFunction.zero()
    sign = 1
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        acc = acc + sign * rows[0][j] * _det(minor)
        sign = -sign
    return acc


def solve_linear(a, b):
    """Exact solution of a small dense square system over Q(w)(nu)."""
    n = len(a)
    m = [list(row) + [bv] for row, bv in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [vr - f * vc for vr, vc in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def linear_identities(basis: IdealBasis, pset) -> IdentitySet:
    """Solve for the substitution rules determined by the pivot set P.

    For every permutation s outside P the functional system forces
    U_s = sum_p B[s][p] U_p; a vanishing pivot determinant raises with the
    offending P named.
    """
    perms = position_set_to_perms(pset)
    if not delta(basis, pset):
        raise ValueError(f"pivot determinant vanishes for P={pset_label(pset)}")
    a = [[h.coefficient(p) for p in perms] for h in basis.basis]
    rules: dict[Perm, dict[Perm, RationalFunction]] = {}
    for s in S3_ORDER:
        if s in perms:
            continue
        rhs = [-h.coefficient(s) for h in basis.basis]
        x = solve_linear(a, rhs)
        # identity: sum_p x_p U_p + U_s = 0, hence B[s][p] = -x_p
        rules[s] = {p: -xp for p, xp in zip(perms, x)}
    return IdentitySet(pivots=perms, rules=rules)


def basis_from_span(e: GroupRingElement) -> IdealBasis:
    """Alternative basis: first independent elements of {p . e* : p in S_3}."""
    if not e.is_idempotent():
        raise ValueError("generator is not idempotent")
    estar = e.star()
    lam = dft(estar).nonzero_partitions()[0]
    d = BLOCK_DIMS[lam]
    chosen: list[GroupRingElement] = []
    rows: list[list[RationalFunction]] = []
    for p in S3_ORDER:
        candidate = GroupRingElement.basis(p) * estar
        vec = [candidate.coefficient(q) for q in S3_ORDER]
        if _independent(rows + [vec]):
            chosen.append(candidate)
            rows.append(vec)
        if len(chosen) == d:
            break
    if len(chosen) != d:
        raise ValueError("span of {p.e*} has deficient rank")
    return IdealBasis(generator=e, block=lam, basis=tuple(chosen))


def _independent(rows) -> bool:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [vr - f * vc for vr, vc in zip(m[r], m[rank])]
        rank += 1
    return rank == len(rows)


@dataclass(frozen=True)
class NuCondition:
    """Solution set in nu of an element-vanishing condition."""

    always: bool
    roots: frozenset[Eisenstein]

    def holds_at(self, nu0) -> bool:
        if self.always:
            return True
        x = nu0 if isinstance(nu0, Eisenstein) else Eisenstein(nu0)
        return x in self.roots


def vanishing_nu_condition(a: GroupRingElement) -> NuCondition:
    """All nu in Q(w) at which every coefficient of a vanishes."""
    if a.is_zero():
        return NuCondition(always=True, roots=frozenset())
    g = Polynomial.zero()
    for c in a.terms.values():
        g = poly_gcd(g, c.num)
    if g.degree <= 0:
        return NuCondition(always=False, roots=frozenset())
    report = roots_up_to_quadratic(g)
    if report.unresolved:
        raise ValueError(f"unresolved factors in vanishing condition: {report.unresolved}")
    return NuCondition(always=False, roots=report.root_set())


def commutation_check(theta: GroupRingElement, e: GroupRingElement):
    """Whether theta-tilde* . e == e.

    Returns a plain bool when e has constant coefficients; for a symbolic
    family it returns the NuCondition describing all admissible nu.
    """
    diff = theta.star() * e - e
    symbolic = any(
        c.num.degree > 0 or c.den.degree > 0 for c in e.terms.values()
    )
    if not symbolic:
        return diff.is_zero()
    return vanishing_nu_condition(diff)


def commutation_scan() -> dict[str, dict]:
    """Scan all eleven symmetrizers against eta and the symbolic xi family."""
    from .groupring import SYMMETRIZER_NAMES

    eta = catalog("eta")
    xi = catalog("xi")
    out: dict[str, dict] = {}
    for name in SYMMETRIZER_NAMES:
        theta = catalog(name)
        out[name] = {
            "eta": commutation_check(theta, eta),
            "xi": commutation_check(theta, xi),
        }
    return out


def derivative_relations() -> dict[str, object]:
    """Idempotent relations tying xi_0 / xi_2 to the derivative classes."""
    h_s = catalog("h_s")
    h_a = catalog("h_a")
    eta = catalog("eta")
    xi = catalog("xi")
    xi0 = xi.substitute_nu(0)
    xi2 = xi.substitute_nu(2)
    return {
        "eta_fixes_h_s": (eta * h_s) == h_s,
        "eta_fixes_h_a": (eta * h_a) == h_a,
        "xi0_fixes_h_s": (xi0 * h_s) == h_s,
        "xi2_fixes_h_a": (xi2 * h_a) == h_a,
        "nu_fixing_h_s": vanishing_nu_condition(xi * h_s - h_s),
        "nu_fixing_h_a": vanishing_nu_condition(xi * h_a - h_a),
    }


def sigma_rho_report(variant: str) -> dict[str, object]:
    """Nonvanishing data for rho and the symbolic sigma family in one variant."""
    from .groupring import rho_element, sigma_element

    out: dict[str, object] = {"variant": variant}
    factor = Polynomial((Eisenstein(-1), Eisenstein(2)))  # 2*nu - 1
    for eps in (1, -1):
        rho = rho_element(eps, variant)
        sigma = sigma_element(RationalFunction.nu(), eps, variant)
        divisible = all((c.num % factor).is_zero() for c in sigma.terms.values())
        at_values = {
            str(v): not sigma.substitute_nu(v).is_zero() for v in (-1, 0, 1, 2)
        }
        out[f"rho_nonzero_eps_{eps}"] = not rho.is_zero()
        out[f"sigma_nonzero_eps_{eps}"] = not sigma.is_zero()
        out[f"sigma_divisible_eps_{eps}"] = divisible
        out[f"sigma_zero_at_half_eps_{eps}"] = sigma.substitute_nu(
            Fraction(1, 2)
        ).is_zero()
        out[f"sigma_nonzero_at_eps_{eps}"] = at_values
    return out
