"""The group ring K[S_r] over exact rational-function scalars.

Elements are sparse maps from one-line permutations to scalars.  The product
is the convolution induced by ``(p . q)(i) = p(q(i))``; ``star`` is the
involutive anti-automorphism sending each permutation to its inverse.

``catalog`` builds every named element used by the reports: the idempotent
family ``xi``/``eta`` for the two-dimensional class of K[S_3], the critical
idempotent ``f``, the derivative-class idempotents ``h_s``/``h_a``, all
eleven subgroup symmetrizers (sym2a .. alt6, z1, z2), the S_5 Young
symmetrizer ``y_tprime`` of the frame (3,2), and the composites ``sigma``
and ``rho`` in their two variants.
"""

from __future__ import annotations

from fractions import Fraction

from .perms import (
    Perm,
    YoungTableau,
    all_perms,
    check_perm,
    compose,
    horizontal_permutations,
    identity,
    inverse,
    perm_str,
    sign,
    transposition,
    vertical_permutations,
)
from .scalars import (
    OMEGA,
    Eisenstein,
    RationalFunction,
    as_scalar,
    scalar_factor_str,
)


class GroupRingElement:
    """Sparse K[S_r] element; zero coefficients are never stored."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms=None):
        store: dict[Perm, RationalFunction] = {}
        if terms:
            for p, c in dict(terms).items():
                check_perm(p)
                if len(p) != r:
                    raise ValueError(f"permutation {p} does not live in S_{r}")
                c = as_scalar(c)
                if c:
                    store[p] = c
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "terms", store)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement values are immutable")

    @staticmethod
    def zero(r: int) -> "GroupRingElement":
        return GroupRingElement(r)

    @staticmethod
    def unit(r: int) -> "GroupRingElement":
        return GroupRingElement(r, {identity(r): 1})

    @staticmethod
    def basis(p: Perm) -> "GroupRingElement":
        return GroupRingElement(len(p), {p: 1})

    def coefficient(self, p: Perm) -> RationalFunction:
        return self.terms.get(tuple(p), RationalFunction.zero())

    def support(self) -> list[Perm]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check_same_group(self, other: "GroupRingElement"):
        if self.r != other.r:
            raise ValueError(f"group size mismatch: S_{self.r} vs S_{other.r}")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_same_group(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, RationalFunction.zero()) + c
        return GroupRingElement(self.r, out)

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GroupRingElement(self.r, {p: -c for p, c in self.terms.items()})

    def scale(self, c) -> "GroupRingElement":
        c = as_scalar(c)
        return GroupRingElement(self.r, {p: c * v for p, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, GroupRingElement):
            return NotImplemented
        return self.scale(other)

    def __mul__(self, other):
        if not isinstance(other, GroupRingElement):
            return self.scale(other)
        self._check_same_group(other)
        out: dict[Perm, RationalFunction] = {}
        zero = RationalFunction.zero()
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                s = compose(p, q)
                out[s] = out.get(s, zero) + cp * cq
        return GroupRingElement(self.r, out)

    def star(self) -> "GroupRingElement":
        """The involution a* with a*(p) = a(p^-1)."""
        return GroupRingElement(self.r, {inverse(p): c for p, c in self.terms.items()})

    def substitute_nu(self, value) -> "GroupRingElement":
        """Evaluate every coefficient at a concrete nu."""
        x = value if isinstance(value, Eisenstein) else Eisenstein(value)
        return GroupRingElement(
            self.r, {p: c.substitute(x) for p, c in self.terms.items()}
        )

    def is_idempotent(self) -> bool:
        return self * self == self

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def render(self) -> str:
        """Terms sorted lexicographically, e.g. '1/3*[1,2,3] - 1/3*[2,1,3]'."""
        if not self.terms:
            return "0"
        parts = []
        for p in self.support():
            cstr = scalar_factor_str(self.terms[p])
            neg = cstr.startswith("-")
            if neg:
                cstr = cstr[1:]
            body = perm_str(p) if cstr == "1" else f"{cstr}*{perm_str(p)}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<GroupRingElement S_{self.r}: {self.render()}>"


def embed_fix12(a: GroupRingElement) -> GroupRingElement:
    """S_3 -> S_5 embedding [i1,i2,i3] -> [1,2,i1+2,i2+2,i3+2]."""
    if a.r != 3:
        raise ValueError("embed_fix12 expects an element of K[S_3]")
    return GroupRingElement(
        5, {(1, 2, p[0] + 2, p[1] + 2, p[2] + 2): c for p, c in a.terms.items()}
    )


def embed_fix45(a: GroupRingElement) -> GroupRingElement:
    """S_3 -> S_5 embedding [i1,i2,i3] -> [i1,i2,i3,4,5]."""
    if a.r != 3:
        raise ValueError("embed_fix45 expects an element of K[S_3]")
    return GroupRingElement(5, {p + (4, 5): c for p, c in a.terms.items()})


def young_symmetrizer(t: YoungTableau) -> GroupRingElement:
    """Signed double sum over horizontal and vertical permutations of t."""
    terms: dict[Perm, int] = {}
    for q in vertical_permutations(t):
        sq = sign(q)
        for p in horizontal_permutations(t):
            s = compose(p, q)
            terms[s] = terms.get(s, 0) + sq
    return GroupRingElement(t.size, terms)


TABLEAU_T1 = YoungTableau(((1, 2), (3,)))
TABLEAU_T2 = YoungTableau(((1, 3), (2,)))
TABLEAU_TPRIME = YoungTableau(((1, 3, 5), (2, 4)))


def _eta() -> GroupRingElement:
    return GroupRingElement(
        3,
        {
            (1, 2, 3): Fraction(1, 3),
            (2, 1, 3): Fraction(-1, 3),
            (2, 3, 1): Fraction(-1, 3),
            (3, 2, 1): Fraction(1, 3),
        },
    )


def _xi(nu) -> GroupRingElement:
    n = as_scalar(nu)
    one = as_scalar(1)
    third = as_scalar(Fraction(1, 3))
    return GroupRingElement(
        3,
        {
            (1, 2, 3): third,
            (1, 3, 2): third * n,
            (2, 1, 3): third * (one - n),
            (2, 3, 1): -third * n,
            (3, 1, 2): third * (n - one),
            (3, 2, 1): -third,
        },
    )


def _symmetrizer(perm_coeffs, order: int) -> GroupRingElement:
    scale = Fraction(1, order)
    return GroupRingElement(3, {p: as_scalar(c) * as_scalar(scale) for p, c in perm_coeffs})


_OMEGA_BAR = Eisenstein(-1, -1)

_CATALOG_SYMMETRIZERS = {
    # name -> (|C|, [(perm, coefficient), ...]), the normalized theta-tilde
    "sym2a": (2, (((1, 2, 3), 1), ((2, 1, 3), 1))),
    "sym2b": (2, (((1, 2, 3), 1), ((3, 2, 1), 1))),
    "sym2c": (2, (((1, 2, 3), 1), ((1, 3, 2), 1))),
    "alt2a": (2, (((1, 2, 3), 1), ((2, 1, 3), -1))),
    "alt2b": (2, (((1, 2, 3), 1), ((3, 2, 1), -1))),
    "alt2c": (2, (((1, 2, 3), 1), ((1, 3, 2), -1))),
    "z1": (3, (((1, 2, 3), 1), ((2, 3, 1), OMEGA), ((3, 1, 2), _OMEGA_BAR))),
    "z2": (3, (((1, 2, 3), 1), ((2, 3, 1), _OMEGA_BAR), ((3, 1, 2), OMEGA))),
    "sym3": (3, (((1, 2, 3), 1), ((2, 3, 1), 1), ((3, 1, 2), 1))),
    "sym6": (
        6,
        tuple(
            (p, 1)
            for p in ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))
        ),
    ),
    "alt6": (
        6,
        tuple(
            (p, sign(p))
            for p in ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))
        ),
    ),
}

SYMMETRIZER_NAMES = tuple(_CATALOG_SYMMETRIZERS)


def _full_sym() -> GroupRingElement:
    return GroupRingElement(3, {p: Fraction(1, 6) for p in all_perms(3)})


def _full_alt() -> GroupRingElement:
    return GroupRingElement(3, {p: sign(p) * Fraction(1, 6) for p in all_perms(3)})


def _e_s() -> GroupRingElement:
    return GroupRingElement(3, {(1, 2, 3): Fraction(1, 2), (2, 1, 3): Fraction(1, 2)})


def _e_a() -> GroupRingElement:
    return GroupRingElement(3, {(1, 2, 3): Fraction(1, 2), (2, 1, 3): Fraction(-1, 2)})


def _critical_f() -> GroupRingElement:
    """(1/2)(id - [3,2,1]) - (1/6) * signed sum; generates the excluded ideal."""
    half_part = GroupRingElement(
        3, {(1, 2, 3): Fraction(1, 2), (3, 2, 1): Fraction(-1, 2)}
    )
    return half_part - _full_alt()


def zeta12(epsilon: int) -> GroupRingElement:
    """id + epsilon*(1 2) in K[S_5]."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    return GroupRingElement(5, {identity(5): 1, transposition(5, 1, 2): epsilon})


def zeta45(epsilon: int) -> GroupRingElement:
    """id + epsilon*(4 5) in K[S_5]."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    return GroupRingElement(5, {identity(5): 1, transposition(5, 4, 5): epsilon})


def sigma_element(nu, epsilon: int, variant: str = "12") -> GroupRingElement:
    """y_tprime* . zeta_eps . embedded xi_nu, in either variant.

    variant "12": zeta = id + eps*(1 2) and xi embedded on positions 3..5;
    variant "45": zeta = id + eps*(4 5) and xi embedded on positions 1..3.
    """
    y_star = young_symmetrizer(TABLEAU_TPRIME).star()
    if variant == "12":
        return y_star * zeta12(epsilon) * embed_fix12(_xi(nu))
    if variant == "45":
        return y_star * zeta45(epsilon) * embed_fix45(_xi(nu))
    raise ValueError(f"unknown variant {variant!r}")


def rho_element(epsilon: int, variant: str = "12") -> GroupRingElement:
    """y_tprime* . zeta_eps . embedded eta, in either variant."""
    y_star = young_symmetrizer(TABLEAU_TPRIME).star()
    if variant == "12":
        return y_star * zeta12(epsilon) * embed_fix12(_eta())
    if variant == "45":
        return y_star * zeta45(epsilon) * embed_fix45(_eta())
    raise ValueError(f"unknown variant {variant!r}")


def catalog(name: str, **params) -> GroupRingElement:
    """Build a named element; nu-parametrized elements default to symbolic nu."""
    name = name.lower()
    if name == "eta":
        return _eta()
    if name == "xi":
        return _xi(params.get("nu", RationalFunction.nu()))
    if name == "f":
        return _critical_f()
    if name == "e_s":
        return _e_s()
    if name == "e_a":
        return _e_a()
    if name == "f_s":
        return _full_sym()
    if name == "f_a":
        return _full_alt()
    if name == "h_s":
        return _e_s() - _full_sym()
    if name == "h_a":
        return _e_a() - _full_alt()
    if name in _CATALOG_SYMMETRIZERS:
        order, entries = _CATALOG_SYMMETRIZERS[name]
        return _symmetrizer(entries, order)
    if name == "y_tprime":
        return young_symmetrizer(TABLEAU_TPRIME)
    if name == "zeta12":
        return zeta12(params["epsilon"])
    if name == "zeta45":
        return zeta45(params["epsilon"])
    if name == "sigma":
        return sigma_element(
            params.get("nu", RationalFunction.nu()),
            params["epsilon"],
            params.get("variant", "12"),
        )
    if name == "rho":
        return rho_element(params["epsilon"], params.get("variant", "12"))
    raise KeyError(f"unknown catalog element {name!r}")
