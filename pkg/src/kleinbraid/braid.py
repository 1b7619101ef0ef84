"""The pure 2-strand braid group of the Klein bottle as F(u, v) ⋊ (Z ⋊ Z).

An element is a pair (w; m, n) of a reduced word and a Klein twist.  The
twist acts on words through the automorphisms

    theta(m, n):  u ↦ B^(m-δn) u^(εn) B^(-m+δn)
                  v ↦ B^m v u^(-2m) B^(-m+δn)

(with B = u v u v^-1), which also send B to B^(εn).  The product law is
(w; t) · (w'; t') = (w · theta(t)(w'); t t').

lsigma is conjugation by the Artin generator σ, assembled from its values
on u-runs, v-runs and pure twists:

    lsigma(u^r; 0,0) = ((B u^-1)^r B^-r ; r, 0)
    lsigma(v^s; 0,0) = ((u v)^-s (u B)^δs ; 0, s)
    lsigma(1; m, 0)  = (1 ; m, 0)
    lsigma(1; 0, n)  = (B^δn ; 0, n)

σ² itself is the pure braid (B; 0, 0), so lsigma∘lsigma is conjugation by
SIGMA_SQ.  gmap is the projection F(u, v) → Z ⋊ Z sending u ↦ (1,0),
v ↦ (0,1); its kernel is where the kernel module lives.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .kleinpi import K_IDENTITY, KleinElt, delta, eps
from .words import BIG_B, ONE, U, V, Word, parse_word


@lru_cache(maxsize=4096)
def _theta_images(m: int, n_parity: int) -> tuple[Word, Word]:
    d = n_parity
    e = eps(n_parity)
    img_u = BIG_B ** (m - d) * U ** e * BIG_B ** (d - m)
    img_v = BIG_B ** m * V * U ** (-2 * m) * BIG_B ** (d - m)
    return img_u, img_v


def theta(t: KleinElt, w: Word) -> Word:
    """Image of w under the twisting automorphism with parameters t."""
    img_u, img_v = _theta_images(t.m, t.n % 2)
    out = ONE
    for g, k in w.runs:
        out = out * (img_u if g == "u" else img_v) ** k
    return out


@dataclass(frozen=True)
class BraidElt:
    """A braid (word; twist) in normal form; the word is always reduced."""

    word: Word = ONE
    twist: KleinElt = K_IDENTITY

    def __mul__(self, other: "BraidElt") -> "BraidElt":
        return BraidElt(
            self.word * theta(self.twist, other.word), self.twist * other.twist
        )

    def inv(self) -> "BraidElt":
        t = self.twist.inv()
        return BraidElt(theta(t, self.word.inv()), t)

    def __pow__(self, k: int) -> "BraidElt":
        base = self if k >= 0 else self.inv()
        out = BraidElt()
        for _ in range(abs(k)):
            out = out * base
        return out

    @property
    def is_identity(self) -> bool:
        return self.word.is_identity and self.twist == K_IDENTITY

    def __str__(self) -> str:
        return f"({self.word} ; {self.twist.m}, {self.twist.n})"


B_IDENTITY = BraidElt()
SIGMA_SQ = BraidElt(BIG_B, K_IDENTITY)


def bmul(a: BraidElt, b: BraidElt) -> BraidElt:
    return a * b


def binv(a: BraidElt) -> BraidElt:
    return a.inv()


def p1(a: BraidElt) -> KleinElt:
    """Strand projection onto the twist coordinates."""
    return a.twist


def p_word(a: BraidElt) -> Word:
    """Projection onto the word coordinate."""
    return a.word


def gmap(w: Word) -> KleinElt:
    """The homomorphism F(u, v) → Z ⋊ Z with u ↦ (1,0), v ↦ (0,1)."""
    out = K_IDENTITY
    for g, e in w.runs:
        out = out * (KleinElt(e, 0) if g == "u" else KleinElt(0, e))
    return out


def _lsigma_u_run(r: int) -> BraidElt:
    return BraidElt((BIG_B * U.inv()) ** r * BIG_B ** (-r), KleinElt(r, 0))


def _lsigma_v_run(s: int) -> BraidElt:
    return BraidElt((U * V) ** (-s) * (U * BIG_B) ** delta(s), KleinElt(0, s))


def lsigma(a: BraidElt) -> BraidElt:
    """Conjugation by σ, computed run by run through the table above."""
    out = B_IDENTITY
    for g, k in a.word.runs:
        out = out * (_lsigma_u_run(k) if g == "u" else _lsigma_v_run(k))
    out = out * BraidElt(ONE, KleinElt(a.twist.m, 0))
    out = out * BraidElt(BIG_B ** delta(a.twist.n), KleinElt(0, a.twist.n))
    return out


def rho(w: Word) -> Word:
    """Word coordinate of lsigma((w; 0, 0)).

    The twist coordinate of that image must equal gmap(w); a mismatch
    means the run tables and the projection disagree, so it is fatal.
    """
    full = lsigma(BraidElt(w, K_IDENTITY))
    if full.twist != gmap(w):
        raise RuntimeError(
            f"internal consistency failure: lsigma twist {full.twist} != gmap {gmap(w)}"
        )
    return full.word


def decompose(w: Word) -> tuple[int, int, Word]:
    """Split w as u^r v^s x with x in the kernel of gmap.

    (r, s) are the coordinates of gmap(w) and x = v^-s u^-r w.
    """
    g = gmap(w)
    r, s = g.m, g.n
    x = V ** (-s) * U ** (-r) * w
    return r, s, x


def forced_word_exponents(a: BraidElt, b: BraidElt) -> tuple[int, int]:
    """The (a1, a2) word exponents forced on a when a·b·lsigma(a) = b.

    a1 = ε(n2)·m2·(ε(n1)-1) - m1·(1+ε(n1+n2)) and a2 = -2·n1, both even;
    reads only the twists of a and b.
    """
    m1, n1 = a.twist.m, a.twist.n
    m2, n2 = b.twist.m, b.twist.n
    a1 = eps(n2) * m2 * (eps(n1) - 1) - m1 * (1 + eps(n1 + n2))
    a2 = -2 * n1
    return a1, a2


def formula_blsiga(a: BraidElt, b: BraidElt) -> BraidElt:
    """Closed formula for b · lsigma(a) on normal forms.

    Must agree with bmul(b, lsigma(a)); kept as an independent transcription
    so the two routes cross-check each other.
    """
    a1, a2, x = decompose(a.word)
    b1, b2, y = decompose(b.word)
    m1, n1 = a.twist.m, a.twist.n
    m2, n2 = b.twist.m, b.twist.n

    word = (
        U ** b1
        * V ** b2
        * y
        * theta(KleinElt(m2, delta(n2)), (BIG_B * U.inv()) ** a1 * BIG_B ** (-a1))
        * theta(
            KleinElt(m2 + eps(n2) * a1, delta(n2)),
            (U * V) ** (-a2) * (U * BIG_B) ** delta(a2),
        )
        * theta(
            KleinElt(m2 + eps(n2) * a1, delta(n2) + delta(a2)),
            rho(x) * BIG_B ** delta(n1),
        )
    )
    twist = KleinElt(m2 + eps(n2) * (a1 + eps(a2) * m1), a2 + n1 + n2)
    return BraidElt(word, twist)


def formula_ablsiga(a: BraidElt, b: BraidElt) -> BraidElt:
    """Closed formula for a · b · lsigma(a) on normal forms.

    Must agree with bmul(bmul(a, b), lsigma(a)).
    """
    a1, a2, x = decompose(a.word)
    b1, b2, y = decompose(b.word)
    m1, n1 = a.twist.m, a.twist.n
    m2, n2 = b.twist.m, b.twist.n

    inner = rho(x) * BIG_B ** delta(n1)
    t = (U * V) ** (-a2) * (U * BIG_B) ** delta(a2) * theta(KleinElt(0, delta(a2)), inner)
    t = (BIG_B * U.inv()) ** a1 * BIG_B ** (-a1) * theta(KleinElt(a1, 0), t)
    word = (
        U ** a1
        * V ** a2
        * x
        * theta(KleinElt(m1, delta(n1)), U ** b1 * V ** b2 * y)
        * theta(KleinElt(m1 + eps(n1) * m2, delta(n1 + n2)), t)
    )
    twist = KleinElt(
        m1 + eps(n1) * m2 + eps(n1 + n2) * (a1 + eps(a2) * m1),
        2 * n1 + n2 + a2,
    )
    return BraidElt(word, twist)


_BRAID = re.compile(r"^\s*\(\s*(?P<word>[^;]*);\s*(?P<m>-?\d+)\s*,\s*(?P<n>-?\d+)\s*\)\s*$")


def parse_braid(text: str) -> BraidElt:
    """Parse ``(<word> ; m , n)`` with the word grammar of the words module."""
    m = _BRAID.match(text)
    if m is None:
        raise ValueError(f"expected '(<word> ; m , n)', got {text!r}")
    return BraidElt(parse_word(m.group("word")), KleinElt(int(m.group("m")), int(m.group("n"))))


def format_braid(a: BraidElt) -> str:
    return str(a)
