"""The abelianised kernel of gmap as a sparse integer module.

ker(gmap) is free on the conjugates  basis(k, l) = v^k u^l B u^-l v^-k,
and its abelianisation is the direct sum ⊕ Z·e(k,l).  project() rewrites a
kernel word into those coordinates by an abelianised coset scan over the
transversal {v^n u^(εn·m)}: u-letters only move between cosets, while each
v-letter crossing coset (m, n) deposits the row

    σk · Σ_{i=1..|k|} e(n, σk·i - (1+σk)/2),        k = εn·m

(a v^-1 letter first steps back to (m, n-1) and deposits the negated row
evaluated there).  The roundtrip project(expand(k, l)) == e(k, l) and the
closed forms of the T/I/O/J/Q families pin the scan's correctness.

theta_ab / rho_ab / c_ab are the operators induced on the abelianisation:

    theta_ab(m, n): e(k, l) ↦ εn · e(k, εn·l - 2·δk·m)
    rho_ab:         e(k, l) ↦ εk · e(-k, ε(k+1)·l)
    c_ab(p, q):     e(k, l) ↦ e(k+p, l + εk·q)
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Dict, Iterable, Iterator, Tuple, Union

from .kleinpi import KleinElt, delta, eps, sign_of
from .words import BIG_B, ONE, U, V, Word, comm

Basis = Tuple[int, int]
_Items = Union[Mapping[Basis, int], Iterable[Tuple[Basis, int]], None]


class KernelVector:
    """Finitely supported integer vector over the basis pairs (k, l).

    Zero coefficients are never stored, so equality of vectors is equality
    of the underlying dicts.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: _Items = None) -> None:
        c: Dict[Basis, int] = {}
        if coeffs:
            items = coeffs.items() if type(coeffs) is dict or isinstance(coeffs, Mapping) else coeffs
            for key, val in items:
                if not val:
                    continue
                new = c.get(key, 0) + val
                if new:
                    c[key] = new
                else:
                    del c[key]
        self._c = c

    @staticmethod
    def unit(k: int, l: int) -> "KernelVector":
        return KernelVector({(k, l): 1})

    def __getitem__(self, key: Basis) -> int:
        return self._c.get(key, 0)

    def items(self) -> Iterator[Tuple[Basis, int]]:
        return iter(self._c.items())

    def support(self):
        return self._c.keys()

    def total(self) -> int:
        """Sum of all coefficients."""
        return sum(self._c.values())

    def __add__(self, other: "KernelVector") -> "KernelVector":
        c = dict(self._c)
        for key, val in other._c.items():
            new = c.get(key, 0) + val
            if new:
                c[key] = new
            else:
                del c[key]
        out = KernelVector()
        out._c = c
        return out

    def __sub__(self, other: "KernelVector") -> "KernelVector":
        return self + (-other)

    def __neg__(self) -> "KernelVector":
        out = KernelVector()
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __rmul__(self, scalar: int) -> "KernelVector":
        if not scalar:
            return KernelVector()
        out = KernelVector()
        out._c = {k: scalar * v for k, v in self._c.items()}
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KernelVector) and self._c == other._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " ".join(f"({k},{l}):{c}" for (k, l), c in sorted(self._c.items()))

    def __repr__(self) -> str:
        return f"KernelVector({self._c!r})"


ZERO = KernelVector()


def expand(k: int, l: int) -> Word:
    """The basis word v^k u^l B u^-l v^-k, reduced."""
    return V ** k * U ** l * BIG_B * U ** (-l) * V ** (-k)


def _row(m: int, n: int) -> list[tuple[Basis, int]]:
    # coordinates deposited by a v-letter leaving coset (m, n)
    k = eps(n) * m
    if k == 0:
        return []
    sk = sign_of(k)
    off = (1 + sk) // 2
    return [((n, sk * i - off), sk) for i in range(1, abs(k) + 1)]


def project(w: Word) -> KernelVector:
    """Coordinates of a kernel word in the basis; rejects words not in ker gmap."""
    acc: Dict[Basis, int] = {}
    m = n = 0
    for g, e in w.runs:
        if g == "u":
            m += eps(n) * e
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if step == 1:
                for key, val in _row(m, n):
                    new = acc.get(key, 0) + val
                    if new:
                        acc[key] = new
                    else:
                        del acc[key]
                n += 1
            else:
                n -= 1
                for key, val in _row(m, n):
                    new = acc.get(key, 0) - val
                    if new:
                        acc[key] = new
                    else:
                        del acc[key]
    if m or n:
        raise ValueError(f"word is not in ker gmap: image ({m},{n}) != (0,0)")
    out = KernelVector()
    out._c = acc
    return out


# ---------------------------------------------------------------------------
# induced operators


def theta_ab_basis(t: KleinElt, k: int, l: int) -> tuple[int, Basis]:
    """(sign, basis pair) of theta_ab(t) applied to e(k, l)."""
    return eps(t.n), (k, eps(t.n) * l - 2 * delta(k) * t.m)


def rho_ab_basis(k: int, l: int) -> tuple[int, Basis]:
    return eps(k), (-k, eps(k + 1) * l)


def c_ab_basis(p: int, q: int, k: int, l: int) -> Basis:
    return (k + p, l + eps(k) * q)


def theta_ab(t: KleinElt, vec: KernelVector) -> KernelVector:
    out = []
    for (k, l), c in vec.items():
        sign, key = theta_ab_basis(t, k, l)
        out.append((key, sign * c))
    return KernelVector(out)


def rho_ab(vec: KernelVector) -> KernelVector:
    out = []
    for (k, l), c in vec.items():
        sign, key = rho_ab_basis(k, l)
        out.append((key, sign * c))
    return KernelVector(out)


def c_ab(p: int, q: int, vec: KernelVector) -> KernelVector:
    return KernelVector([(c_ab_basis(p, q, k, l), c) for (k, l), c in vec.items()])


def c_agreement(p: int, q: int, x: Word) -> bool:
    """project(v^p u^q · x · u^-q v^-p) == c_ab(p, q, project(x)) for kernel x."""
    conjugated = (V ** p * U ** q).conj(x)
    return project(conjugated) == c_ab(p, q, project(x))


# ---------------------------------------------------------------------------
# the special word families and their closed-form projections


def word_t(k: int, r: int) -> Word:
    """u^k (B^εr u^-εr)^(k·εr), for r in {0, 1}."""
    if r not in (0, 1):
        raise ValueError(f"r must be 0 or 1, got {r}")
    er = eps(r)
    return U ** k * (BIG_B ** er * U ** (-er)) ** (k * er)


def word_i(k: int) -> Word:
    """v^k (v B)^-k."""
    return V ** k * (V * BIG_B) ** (-k)


def word_o(k: int, l: int) -> Word:
    """[v^2k, u^l]."""
    return comm(V ** (2 * k), U ** l)


def word_j(k: int, l: int) -> Word:
    """v^2k (v u^l)^-2k."""
    return V ** (2 * k) * (V * U ** l) ** (-2 * k)


def word_q(k: int, l: int) -> Word:
    """u^k v^(2l+1) u^k v^-(2l+1)."""
    return U ** k * V ** (2 * l + 1) * U ** k * V ** (-2 * l - 1)


def tilde_t(k: int, r: int) -> KernelVector:
    if r not in (0, 1):
        raise ValueError(f"r must be 0 or 1, got {r}")
    if k == 0:
        return ZERO
    sk = sign_of(k)
    shift = (sk * (1 - 2 * r) - 1) // 2
    return KernelVector(
        [((0, sk * (i + shift)), sk) for i in range(1, abs(k) + 1)]
    )


def tilde_i(k: int) -> KernelVector:
    if k == 0:
        return ZERO
    sk = sign_of(k)
    off = (1 - sk) // 2
    return KernelVector(
        [((sk * i + off, 0), -sk) for i in range(1, abs(k) + 1)]
    )


def tilde_o(k: int, l: int) -> KernelVector:
    if k == 0 or l == 0:
        return ZERO
    sk, sl = sign_of(k), sign_of(l)
    lo = (sl - 1) // 2
    hi = (1 + sl) // 2
    items = []
    for i in range(1, abs(k) + 1):
        for j in range(1, abs(l) + 1):
            items.append(((sk * (2 * i - 1), -sl * j + lo), sk * sl))
            items.append(((sk * (2 * i - 1) - 1, sl * j - hi), -sk * sl))
    return KernelVector(items)


def tilde_j(k: int, l: int) -> KernelVector:
    if k == 0 or l == 0:
        return ZERO
    sk, sl = sign_of(k), sign_of(l)
    hi = (1 + sl) // 2
    items = []
    for i in range(1, abs(k) + 1):
        for j in range(1, abs(l) + 1):
            items.append(((sk * (2 * i - 1), sl * (j - hi)), -sk * sl))
    return KernelVector(items)


def tilde_q(k: int, l: int) -> KernelVector:
    if k == 0:
        return ZERO
    sk = sign_of(k)
    off = (1 + sk) // 2
    tail = KernelVector([((2 * l, sk * i - off), sk) for i in range(1, abs(k) + 1)])
    return -tilde_o(l, k) + tail


def q_identity_check(k: int, l: int) -> bool:
    """Exact word identity expressing word_q(k, l) through word_o and basis words.

    word_q(k,l) == word_o(l,k)^-1 · (Π_{i=1..|k|} expand(2l, -i + k(1+σk)/2))^σk,
    the product taken in increasing i.  Only defined for k ≠ 0.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    sk = sign_of(k)
    shift = k * (1 + sk) // 2
    prod = ONE
    for i in range(1, abs(k) + 1):
        prod = prod * expand(2 * l, -i + shift)
    rhs = word_o(l, k).inv() * prod ** sk
    return word_q(k, l) == rhs
