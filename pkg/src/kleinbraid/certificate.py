"""Bounded certification of the Borsuk-Ulam property.

If a class fails the property, its witness pair forces an equation in the
abelianised kernel that is linear in two unknown vectors x, y:

    Ax(x) + Ay(y) + C(m, n) = 0        for some integers m, n,

where Ax, Ay and the constant C are assembled from the induced operators
and the T/I/O/J/Q families.  A certificate for the property runs the
contrapositive on finite windows: a class-specific linear functional is
shown to kill Ax and Ay on every basis vector of a coordinate window
while staying nonzero on C for every (m, n) in a parameter window.  That
is a desk-scale verification of an infinite statement, so reports always
carry their windows.

build_master assembles the general equation from the class parameters
(r1, r2, s1, s2, i, j) and the quantified pair (m, n).  The three
per-family builders below re-transcribe the specialised equations
independently; agreement of the two routes, term for term, is part of the
test surface, as is agreement of the displayed mu/nu operators with their
compositional definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

from .classifier import HomClass, decide
from .kernel import (
    KernelVector,
    c_ab,
    c_ab_basis,
    rho_ab_basis,
    theta_ab_basis,
    tilde_i,
    tilde_j,
    tilde_o,
    tilde_q,
    tilde_t,
)
from .kleinpi import KleinElt, delta, eps
from .witness import UnsupportedFamilyError


class KernelOperator:
    """Linear operator on kernel vectors, given by its basis images."""

    __slots__ = ("on_basis",)

    def __init__(self, on_basis: Callable[[int, int], KernelVector]) -> None:
        self.on_basis = on_basis

    def __call__(self, vec: KernelVector) -> KernelVector:
        out = KernelVector()
        for (k, l), c in vec.items():
            out = out + c * self.on_basis(k, l)
        return out

    def __add__(self, other: "KernelOperator") -> "KernelOperator":
        return KernelOperator(lambda k, l: self.on_basis(k, l) + other.on_basis(k, l))

    def __sub__(self, other: "KernelOperator") -> "KernelOperator":
        return KernelOperator(lambda k, l: self.on_basis(k, l) - other.on_basis(k, l))

    def __matmul__(self, other: "KernelOperator") -> "KernelOperator":
        return KernelOperator(lambda k, l: self(other.on_basis(k, l)))

    @staticmethod
    def identity() -> "KernelOperator":
        return KernelOperator(lambda k, l: KernelVector.unit(k, l))


def c_operator(p: int, q: int) -> KernelOperator:
    return KernelOperator(lambda k, l: KernelVector({c_ab_basis(p, q, k, l): 1}))


def theta_operator(m: int, n: int) -> KernelOperator:
    t = KleinElt(m, n)

    def on_basis(k: int, l: int) -> KernelVector:
        sign, key = theta_ab_basis(t, k, l)
        return KernelVector({key: sign})

    return KernelOperator(on_basis)


def rho_operator() -> KernelOperator:
    def on_basis(k: int, l: int) -> KernelVector:
        sign, key = rho_ab_basis(k, l)
        return KernelVector({key: sign})

    return KernelOperator(on_basis)


@dataclass(frozen=True)
class Functional:
    """Linear functional on kernel vectors; mod == 0 means Z-valued,
    mod == 2 means Z/2-valued."""

    on_basis: Callable[[int, int], int]
    mod: int
    label: str

    def __call__(self, vec: KernelVector) -> int:
        total = sum(c * self.on_basis(k, l) for (k, l), c in vec.items())
        return total % self.mod if self.mod else total


@dataclass(frozen=True)
class MasterParams:
    r1: int
    r2: int
    s1: int
    s2: int
    i: int
    j: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValueError("i and j must be 0 or 1")


@dataclass(frozen=True)
class MasterEquation:
    params: MasterParams
    ax: KernelOperator
    ay: KernelOperator
    constant: KernelVector
    derived: Tuple[int, int, int, int, int]  # (a1, a2, b1, b2, g)


def derived_exponents(p: MasterParams) -> Tuple[int, int, int, int, int]:
    """(a1, a2, b1, b2, g) as functions of the class data and (m, n)."""
    r1, r2, s1, s2, i, j, m, n = (
        p.r1, p.r2, p.s1, p.s2, p.i, p.j, p.m, p.n,
    )
    a1 = -2 * (delta(i + 1) * delta(j + 1) * delta(n + 1) * r1 + delta(i) * eps(n) * m)
    a2 = -4 * s1 - 2 * i
    b1 = delta(i + 1) * delta(j + 1) * eps(n) * r2 + 2 * delta(j + n + 1) * eps(j + 1) * m
    b2 = 2 * s2 - 2 * n + j
    g = delta(i + 1) * delta(j + 1) * r1 + eps(i) * m + eps(n + i) * a1
    return a1, a2, b1, b2, g


def _sum_shift_and_twisted_flip(p: int, q: int, g: int, d: int) -> KernelOperator:
    """c(p, q) + theta(g, d)∘rho, fused into one closure for the window sweeps."""
    t = KleinElt(g, d)

    def on_basis(k: int, l: int) -> KernelVector:
        first = (k + p, l + eps(k) * q)
        s_r, (kr, lr) = rho_ab_basis(k, l)
        s_t, second = theta_ab_basis(t, kr, lr)
        return KernelVector([(first, 1), (second, s_r * s_t)])

    return KernelOperator(on_basis)


def _shifted_twist_minus_identity(p: int, q: int, r: int, d: int) -> KernelOperator:
    """c(p, q)∘theta(r, d) - id, fused into one closure."""
    t = KleinElt(r, d)

    def on_basis(k: int, l: int) -> KernelVector:
        s, (kt, lt) = theta_ab_basis(t, k, l)
        return KernelVector([((kt + p, lt + eps(kt) * q), s), ((k, l), -1)])

    return KernelOperator(on_basis)


def build_master(p: MasterParams) -> MasterEquation:
    """The general two-unknown obstruction equation at (m, n)."""
    r1, s1, s2, i, j, m, n = p.r1, p.s1, p.s2, p.i, p.j, p.m, p.n
    a1, a2, b1, b2, g = derived_exponents(p)

    ax = _sum_shift_and_twisted_flip(a2 - b2, a1 - b1, g, delta(n + i))
    ay = _shifted_twist_minus_identity(
        a2, a1 * eps(n + i), delta(i + 1) * delta(j + 1) * r1, delta(i)
    )

    constant = (
        c_ab(a2, 0, tilde_t(a1 * eps(n + i), delta(n + i)))
        + c_ab(
            a2 - b2,
            0,
            tilde_o(2 * s1 + i, a1 - b1)
            - delta(j + 1)
            * tilde_o(s2 - n, 2 * delta(i) * m - 2 * delta(i + 1) * delta(n + 1) * r1)
            + delta(j) * tilde_q(-2 * delta(i) * m, s2 - n),
        )
        + c_ab(
            a2,
            a1 * eps(n + i),
            tilde_j(delta(i + 1) * (n - s2), -2 * delta(i + 1) * delta(j + 1) * r1),
        )
        + c_ab(a2 - 1, a1 * eps(n + i + 1), tilde_i(-delta(i) * b2))
        + c_ab(0, delta(n + i + 1), tilde_j(-2 * s1 - i, 1 - 2 * g))
        + tilde_o(-2 * s1 - i, delta(n + i - 1))
        + (delta(n + i) + delta(i) * eps(n + i) - g) * KernelVector.unit(0, 0)
        + (delta(i) - delta(n + i) + eps(i) * m)
        * KernelVector.unit(a2, a1 * eps(n + i))
        + (delta(i + 1) * delta(j + 1) * r1 - delta(i))
        * KernelVector.unit(a2 - b2, a1 - b1)
    )
    return MasterEquation(p, ax, ay, constant, (a1, a2, b1, b2, g))


# ---------------------------------------------------------------------------
# per-family equations, transcribed independently of build_master


def equation_first_odd(s: int, z: int, w: int, m: int, n: int):
    """Equation for classes (1,0) ↦ (0, 2s+1), (0,1) ↦ (0, (2z+1)w).

    Covers type 1 at the even representative (w = 0) and type 2 (w = 1).
    Returns (ax, ay, constant); cross-checked against build_master with
    i = 1, j = w, s1 = s, s2 = z·w.
    """
    shift = 2 * n - (2 * z + 1) * w - 4 * s - 2
    lam = 2 * m * eps(w) * delta(n + w)
    ax = c_operator(shift, lam) + theta_operator(m, delta(n + 1)) @ rho_operator()
    ay = c_operator(-4 * s - 2, 2 * m) @ theta_operator(0, 1) - KernelOperator.identity()
    constant = (
        c_ab(-4 * s - 2, 0, tilde_t(2 * m, delta(n + 1)))
        + c_ab(
            shift,
            0,
            tilde_o(2 * s + 1, lam)
            - delta(w + 1) * tilde_o(z * w - n, 2 * m)
            + delta(w) * tilde_q(-2 * m, z * w - n),
        )
        + c_ab(-4 * s - 3, -2 * m, tilde_i(2 * n - (2 * z + 1) * w))
        + c_ab(0, delta(n), tilde_j(-2 * s - 1, 1 - 2 * m))
        + tilde_o(-2 * s - 1, delta(n))
        + (delta(n) - m) * (KernelVector.unit(0, 0) + KernelVector.unit(-4 * s - 2, 2 * m))
        - KernelVector.unit(shift, lam)
    )
    return ax, ay, constant


def equation_even_odd(s: int, z: int, m: int, n: int):
    """Equation for classes (1,0) ↦ (0, 2s), (0,1) ↦ (0, 2z+1) (type 3).

    Cross-checked against build_master with i = 0, j = 1, s1 = s, s2 = z.
    """
    ax = (
        c_operator(2 * n - 2 * z - 4 * s - 1, -2 * delta(n) * m)
        + theta_operator(m, delta(n)) @ rho_operator()
    )
    ay = c_operator(-4 * s, 0) - KernelOperator.identity()
    constant = (
        c_ab(2 * n - 2 * z - 4 * s - 1, 0, tilde_o(2 * s, -2 * delta(n) * m))
        + c_ab(0, delta(n + 1), tilde_j(-2 * s, 1 - 2 * m))
        + tilde_o(-2 * s, delta(n + 1))
        + (m - delta(n)) * (KernelVector.unit(-4 * s, 0) - KernelVector.unit(0, 0))
    )
    return ax, ay, constant


def mu_nu_operators(r1: int, r2: int, s: int, z: int, m: int, n: int):
    """The displayed forms of the two linear operators of the type-4
    equation; must agree with their compositional definitions

        mu = c(2n-2z-4s, 2δ(n+1)(m-r1)+ε(n+1)r2) + theta(m+ε(n+1)r1, δn)∘rho
        nu = c(-4s, -2δ(n+1)r1)∘theta(r1, 0) - id
    """

    def mu_basis(k: int, l: int) -> KernelVector:
        first = (
            k - 2 * z + 2 * n - 4 * s,
            l + eps(k) * (2 * delta(n + 1) * (m - r1) + eps(n + 1) * r2),
        )
        second = (
            -k,
            eps(k + n + 1) * l - 2 * delta(k) * (m + eps(n + 1) * r1),
        )
        return KernelVector([(first, 1), (second, eps(k + n))])

    def nu_basis(k: int, l: int) -> KernelVector:
        return KernelVector(
            [((k - 4 * s, l - 2 * delta(n + k + 1) * r1), 1), ((k, l), -1)]
        )

    return KernelOperator(mu_basis), KernelOperator(nu_basis)


def equation_even_even(r1: int, r2: int, s: int, z: int, m: int, n: int):
    """Equation for classes (1,0) ↦ (r1, 2s), (0,1) ↦ (r2, 2z) (type 4).

    Cross-checked against build_master with i = j = 0, s1 = s, s2 = z.
    """
    ax, ay = mu_nu_operators(r1, r2, s, z, m, n)
    lam = 2 * delta(n + 1) * (m - r1) + eps(n + 1) * r2
    constant = (
        c_ab(-4 * s, 0, tilde_t(-2 * delta(n + 1) * r1, delta(n)))
        + c_ab(
            2 * n - 2 * z - 4 * s,
            0,
            tilde_o(2 * s, lam) - tilde_o(z - n, -2 * delta(n + 1) * r1),
        )
        + c_ab(-4 * s, -2 * delta(n + 1) * r1, tilde_j(n - z, -2 * r1))
        + c_ab(0, delta(n + 1), tilde_j(-2 * s, 2 * eps(n) * r1 - 2 * m + 1))
        + tilde_o(-2 * s, delta(n + 1))
        + (eps(n) * r1 - m + delta(n)) * KernelVector.unit(0, 0)
        + (m - delta(n)) * KernelVector.unit(-4 * s, -2 * delta(n + 1) * r1)
        + r1 * KernelVector.unit(2 * n - 2 * z - 4 * s, lam)
    )
    return ax, ay, constant


# ---------------------------------------------------------------------------
# the functionals used by the per-family contradictions


def xi_parity(w: int) -> Functional:
    """Z/2 functional: constant 1 when w is odd, otherwise parity of k."""
    if w % 2:
        return Functional(lambda k, l: 1, 2, f"xi(w={w})")
    return Functional(lambda k, l: k % 2, 2, f"xi(w={w})")


def xi_congruence(s: int, n: int, z: int) -> Functional:
    """Z/2 functional: 1 iff k ≡ 0 or k ≡ 2n-2z-1 (mod 4s); needs s ≠ 0."""
    if s == 0:
        raise ValueError("modulus 4s requires s != 0")
    mod = abs(4 * s)
    target = 2 * n - 2 * z - 1

    def on_basis(k: int, l: int) -> int:
        return 1 if (k % mod == 0 or (k - target) % mod == 0) else 0

    return Functional(on_basis, 2, f"xi(4s-congruence, s={s})")


def xi_count(n: int) -> Functional:
    """Z-valued functional: δ(k+n)."""
    return Functional(lambda k, l: delta(k + n), 0, "xi1")


def xi_column(r1: int, r2: int, m: int, n: int) -> Functional:
    """Z/2 functional: parity of k+n+1 on the columns
    l ≡ ε(n)m - r2/2 (mod 2|r1|); needs r1 > 0 and r2 even."""
    if r1 <= 0:
        raise ValueError("modulus 2|r1| requires r1 > 0")
    if r2 % 2:
        raise ValueError("r2 must be even")
    mod = 2 * abs(r1)
    target = eps(n) * m - r2 // 2

    def on_basis(k: int, l: int) -> int:
        return (k + n + 1) % 2 if (l - target) % mod == 0 else 0

    return Functional(on_basis, 2, "xi2")


def xi_row(s: int, n: int) -> Functional:
    """Z/2 functional: 1 iff k ≡ n (mod 4|s|); needs s ≠ 0."""
    if s == 0:
        raise ValueError("modulus 4|s| requires s != 0")
    mod = 4 * abs(s)

    def on_basis(k: int, l: int) -> int:
        return 1 if (k - n) % mod == 0 else 0

    return Functional(on_basis, 2, "xi3")


# ---------------------------------------------------------------------------
# certificate driver


@dataclass(frozen=True)
class CertificateReport:
    family: str
    windows: Tuple[int, int]  # (coordinate window, parameter window)
    linear_killed: bool
    constant_nonzero_for_all: bool
    witnesses_of_failure: Tuple[Tuple[int, int, str, int, int], ...]

    @property
    def success(self) -> bool:
        return self.linear_killed and self.constant_nonzero_for_all


def _family(cls: HomClass):
    """(family label, params builder, functional builder) for a class
    with the Borsuk-Ulam property."""
    if cls.kind in (1, 2, 3) and cls.i != 0:
        raise UnsupportedFamilyError(
            f"no certificate family covers {cls.describe()}; only i=0 "
            "representatives are covered"
        )
    z = cls.s2 % 2
    if cls.kind == 1:
        params = lambda m, n: MasterParams(0, 0, cls.s1, 0, 1, 0, m, n)
        return "type1-even/xi-parity", params, lambda m, n: xi_parity(0)
    if cls.kind == 2:
        params = lambda m, n: MasterParams(0, 0, cls.s1, z, 1, 1, m, n)
        return "type2/xi-parity", params, lambda m, n: xi_parity(1)
    if cls.kind == 3:
        params = lambda m, n: MasterParams(0, 0, cls.s1, z, 0, 1, m, n)
        return (
            "type3/xi-congruence",
            params,
            lambda m, n: xi_congruence(cls.s1, n, z),
        )
    params = lambda m, n: MasterParams(cls.r1, cls.r2, cls.s1, z, 0, 0, m, n)
    if cls.r2 * cls.s1 != 0:
        return "type4-(i)/xi-count", params, lambda m, n: xi_count(n)
    if z == 0 and cls.r1 > 0 and cls.r2 % 2 == 0:
        return (
            "type4-(ii)/xi-column",
            params,
            lambda m, n: xi_column(cls.r1, cls.r2, m, n),
        )
    if z == 0 and cls.r1 == 0 and cls.r2 == 0 and cls.s1 != 0:
        return "type4-(iii)/xi-row", params, lambda m, n: xi_row(cls.s1, n)
    raise UnsupportedFamilyError(f"no certificate family covers {cls.describe()}")


def check_certificate(cls: HomClass, window: int = 6, mn: int = 4) -> CertificateReport:
    """Run the bounded certificate for a class with the property.

    For every (m, n) with |m|, |n| <= mn, the family's functional must
    kill both linear operators on every basis vector with |k|, |l| <=
    window and take a nonzero value on the constant part.
    """
    verdict = decide(cls)
    if not verdict.bu:
        raise ValueError(
            f"{cls.describe()} fails the Borsuk-Ulam property; "
            "certificates only exist for classes that have it"
        )
    family, params_at, functional_at = _family(cls)
    failures: list[Tuple[int, int, str, int, int]] = []
    linear_ok = True
    constant_ok = True
    coords = range(-window, window + 1)
    for m in range(-mn, mn + 1):
        for n in range(-mn, mn + 1):
            eq = build_master(params_at(m, n))
            f = functional_at(m, n)
            ax_on, ay_on = eq.ax.on_basis, eq.ay.on_basis
            for k in coords:
                for l in coords:
                    if f(ax_on(k, l)) != 0:
                        linear_ok = False
                        failures.append((m, n, "Ax", k, l))
                    if f(ay_on(k, l)) != 0:
                        linear_ok = False
                        failures.append((m, n, "Ay", k, l))
            if f(eq.constant) == 0:
                constant_ok = False
                failures.append((m, n, "C", 0, 0))
    return CertificateReport(
        family,
        (window, mn),
        linear_ok,
        constant_ok,
        tuple(sorted(failures)),
    )
