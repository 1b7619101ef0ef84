"""Construction, verification and bounded search of braid witness pairs.

A pair (a, b) in the Klein-bottle braid group certifies that a class fails
the Borsuk-Ulam property when three conditions hold exactly:

    (i)   a · b · lsigma(a) = b
    (ii)  p1(a) = image of (1, 0)
    (iii) p1(b · lsigma(b)) = image of (0, 1)

Explicit families cover every failing class whose representative has first
coordinates zero, plus every failing type-4 class; the central element
(1; 0, 2) moves a pair across raw second coordinates mod 4, which extends
each family to the whole shift tower.  Representatives with i = 1 have no
direct construction here and raise UnsupportedFamilyError; callers may
fall back to search_witness, which scans every pair with short words and
small twists (exhaustively, after sound pruning by the exponent
constraints that condition (i) forces).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import (
    B_IDENTITY,
    SIGMA_SQ,
    BraidElt,
    forced_word_exponents,
    gmap,
    lsigma,
    p1,
)
from .classifier import HomClass, decide
from .kleinpi import KleinElt, eps, omega
from .words import BIG_B, ONE, U, V, Word


class UnsupportedFamilyError(Exception):
    """No direct construction covers this class."""


class WitnessVerificationError(Exception):
    """One of the three witness conditions failed; carries the details."""

    def __init__(self, failures: list[str]) -> None:
        super().__init__("; ".join(failures))
        self.failures = failures


@dataclass(frozen=True)
class WitnessChecks:
    relation: bool
    first_image: bool
    second_image: bool

    @property
    def all_ok(self) -> bool:
        return self.relation and self.first_image and self.second_image


@dataclass(frozen=True)
class WitnessReport:
    a: BraidElt
    b: BraidElt
    checks: WitnessChecks
    source: str  # constructed | shifted | searched
    cls: HomClass


@dataclass(frozen=True)
class SearchBounds:
    word_len: int = 4  # reduced letter count of each word part
    coord: int = 2     # max |m|, |n| of each twist


@dataclass(frozen=True)
class SearchResult:
    report: "WitnessReport | None"
    examined: int
    bounds: SearchBounds

    @property
    def found(self) -> bool:
        return self.report is not None


def second_image_of_pair(b: BraidElt) -> KleinElt:
    """p1(b · lsigma(b)), which only needs b's twist and its word's gmap."""
    t = b.twist
    return t * gmap(b.word) * t


def verify_pair(a: BraidElt, b: BraidElt, cls: HomClass, source: str = "constructed") -> WitnessReport:
    """Check the three conditions exactly; raise with details on failure."""
    img10, img01 = cls.images()
    lhs = a * b * lsigma(a)
    relation = lhs == b
    first = p1(a) == img10
    second = p1(b * lsigma(b)) == img01
    checks = WitnessChecks(relation, first, second)
    if not checks.all_ok:
        failures = []
        if not relation:
            failures.append(f"(i) a·b·lsigma(a) = {lhs} but b = {b}")
        if not first:
            failures.append(f"(ii) p1(a) = {p1(a)} but image of (1,0) is {img10}")
        if not second:
            failures.append(
                f"(iii) p1(b·lsigma(b)) = {p1(b * lsigma(b))} "
                f"but image of (0,1) is {img01}"
            )
        raise WitnessVerificationError(failures)
    return WitnessReport(a, b, checks, source, cls)


def _base_pair(cls: HomClass) -> tuple[BraidElt, BraidElt, int]:
    """Representative pair for the class's shift tower, plus the shift k
    needed to reach the requested s2."""
    if cls.kind == 2:
        raise ValueError("type 2 classes always have the Borsuk-Ulam property")
    if cls.kind in (1, 3) and cls.i != 0:
        raise UnsupportedFamilyError(
            f"no direct construction for {cls.describe()}; only i=0 "
            "representatives are covered"
        )
    if cls.kind == 1:
        # s2 odd; representative at raw second coordinate 2
        s = cls.s1
        x = V ** (2 * s + 2) * (BIG_B * V ** 2) ** (-s - 1)
        a = BraidElt(V ** (-(4 * s + 2)) * x, KleinElt(0, 2 * s + 1))
        b = BraidElt(ONE, KleinElt(0, 1))
        return a, b, (2 * cls.s2 - 2) // 4
    if cls.kind == 3:
        # s1 = 0; representative at raw second coordinate 2z+1
        z = cls.s2 % 2
        return B_IDENTITY, BraidElt(V, KleinElt(0, z)), (cls.s2 - z) // 2
    # type 4, representative at raw second coordinate 2z
    z = cls.s2 % 2
    r1, r2, s = cls.r1, cls.r2, cls.s1
    if z == 1:
        w = omega(s)
        a = BraidElt(
            V ** (-2 * s) * (U ** (2 * r1 - 1) * V ** -1) ** (2 * s) * BIG_B ** (-r1),
            KleinElt(r1, 2 * s),
        )
        b = BraidElt(U ** (-w * r2) * BIG_B ** (1 - w), KleinElt(0, 1))
        return a, b, (cls.s2 - 1) // 2
    if r2 % 2 == 0:
        # forces r1 == 0 and s1 == 0 for a failing class
        return B_IDENTITY, BraidElt(ONE, KleinElt(r2 // 2, 0)), cls.s2 // 2
    # r2 odd: collapse (b1·σ)^-r2 · σ^-1 into the pure group via σ² = (B;0,0)
    a_gen = BraidElt(U ** -2, KleinElt(1, 0))
    b_gen = BraidElt(U ** -1)
    c = b_gen * lsigma(b_gen) * SIGMA_SQ
    a = a_gen ** r1
    b = c.inv() ** ((r2 + 1) // 2) * b_gen
    return a, b, cls.s2 // 2


def build_witness(cls: HomClass) -> WitnessReport:
    """Construct and re-verify a witness pair for a failing class."""
    verdict = decide(cls)
    if verdict.bu:
        raise ValueError(
            f"{cls.describe()} has the Borsuk-Ulam property; no witness exists"
        )
    a, b, k = _base_pair(cls)
    if k:
        b = b * BraidElt(ONE, KleinElt(0, 2 * k))
    return verify_pair(a, b, cls, source="shifted" if k else "constructed")


# ---------------------------------------------------------------------------
# bounded exhaustive search


@lru_cache(maxsize=None)
def _short_words(max_len: int) -> tuple[Word, ...]:
    """All reduced words with at most max_len letters."""
    out = [ONE]
    frontier: list[tuple[tuple[tuple[str, int], ...], tuple[str, int]]] = [((), ("", 0))]
    for _ in range(max_len):
        nxt = []
        for runs, last in frontier:
            for g in ("u", "v"):
                for e in (1, -1):
                    if (g, -e) == last:
                        continue
                    new = runs + ((g, e),)
                    nxt.append((new, (g, e)))
                    out.append(Word(new))
        frontier = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def _words_by_gmap(max_len: int) -> dict[tuple[int, int], tuple[Word, ...]]:
    buckets: dict[tuple[int, int], list[Word]] = {}
    for w in _short_words(max_len):
        g = gmap(w)
        buckets.setdefault((g.m, g.n), []).append(w)
    return {key: tuple(ws) for key, ws in buckets.items()}


def _ab_image(word: Word, twist: KleinElt) -> tuple[int, int, int, int]:
    pu, pv = word.exponent_sums()
    return pu, pv, twist.m, twist.n


def _ab_mul(x: tuple[int, int, int, int], y: tuple[int, int, int, int]):
    # image of the braid product in (Z² ⋊ (Z ⋊ Z)), with the word part
    # abelianised: theta(m, n) acts on (p, q) as (εn·p + 2(δn - m)·q, q)
    px, qx, mx, nx = x
    py, qy, my, ny = y
    e = eps(nx)
    d = nx % 2
    return (
        px + e * py + 2 * (d - mx) * qy,
        qx + qy,
        mx + e * my,
        nx + ny,
    )


def _candidate_b_twists(
    b1: int, b2: int, target: KleinElt, coord: int
) -> list[KleinElt]:
    """Twists (m2, n2) with p1(b·lsigma(b)) == target for a word of gmap (b1, b2)."""
    if (target.n - b2) % 2:
        return []
    n2 = (target.n - b2) // 2
    if abs(n2) > coord:
        return []
    if (n2 + b2) % 2:
        # first coordinate constraint is m2-free: ε(n2)·b1 must hit the target
        if eps(n2) * b1 != target.m:
            return []
        return [KleinElt(m2, n2) for m2 in range(-coord, coord + 1)]
    num = target.m - eps(n2) * b1
    if num % 2:
        return []
    m2 = num // 2
    if abs(m2) > coord:
        return []
    return [KleinElt(m2, n2)]


def search_witness(cls: HomClass, bounds: SearchBounds = SearchBounds()) -> SearchResult:
    """Scan all pairs within bounds for a verified witness.

    Candidate words are every reduced word of letter length <= word_len
    (which includes B and its short conjugates); twists have coordinates
    bounded by coord.  Condition (ii) fixes a's twist, condition (iii)
    pins b's twist given its word, and the exponents forced by condition
    (i) select a's word bucket, so the scan is exhaustive over the bounded
    space while only running the braid engine on surviving pairs.  The
    returned pair is the deterministic minimum by total size.
    """
    img10, _ = cls.images()
    examined = 0
    found: list[tuple[tuple, BraidElt, BraidElt]] = []
    if abs(img10.m) <= bounds.coord and abs(img10.n) <= bounds.coord:
        t_a = img10
        a2 = -2 * t_a.n
        buckets = _words_by_gmap(bounds.word_len)
        img01 = cls.images()[1]
        lsig_cache: dict[Word, tuple[BraidElt, tuple[int, int, int, int]]] = {}
        for (b1, b2), b_words in buckets.items():
            for t_b in _candidate_b_twists(b1, b2, img01, bounds.coord):
                a1, _ = forced_word_exponents(
                    BraidElt(ONE, t_a), BraidElt(ONE, t_b)
                )
                for w_a in buckets.get((a1, a2), ()):
                    cached = lsig_cache.get(w_a)
                    if cached is None:
                        a = BraidElt(w_a, t_a)
                        ls = lsigma(a)
                        cached = (ls, _ab_image(ls.word, ls.twist))
                        lsig_cache[w_a] = cached
                    ls, ls_ab = cached
                    a = BraidElt(w_a, t_a)
                    a_ab = _ab_image(w_a, t_a)
                    for w_b in b_words:
                        examined += 1
                        b_ab = _ab_image(w_b, t_b)
                        lhs_ab = _ab_mul(_ab_mul(a_ab, b_ab), ls_ab)
                        if lhs_ab != b_ab:
                            continue
                        b = BraidElt(w_b, t_b)
                        if a * b * ls == b:
                            key = (
                                w_a.letter_length()
                                + w_b.letter_length()
                                + abs(t_a.m)
                                + abs(t_a.n)
                                + abs(t_b.m)
                                + abs(t_b.n),
                                str(a),
                                str(b),
                            )
                            found.append((key, a, b))
    if not found:
        return SearchResult(None, examined, bounds)
    _, a, b = min(found, key=lambda item: item[0])
    return SearchResult(verify_pair(a, b, cls, source="searched"), examined, bounds)
