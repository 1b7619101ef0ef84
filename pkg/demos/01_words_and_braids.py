"""Tour of the exact arithmetic layers: free-group words, the Klein bottle
group, and the braid group they assemble into.

Run as:  python3 demos/01_words_and_braids.py
"""

from kleinbraid import (
    BIG_B,
    BraidElt,
    KleinElt,
    SIGMA_SQ,
    U,
    V,
    eps,
    gmap,
    lsigma,
    parse_word,
    theta,
)

print("== reduced words ==")
w = parse_word("u^2 v^-1 B")
print(f"u^2 v^-1 B parses and reduces to: {w}")
print(f"its inverse: {w.inv()}")
print(f"w * w^-1 = {w * w.inv()}   (the identity prints as '1')")

print()
print("== the Klein bottle group Z x| Z ==")
a, b = KleinElt(1, 0), KleinElt(0, 1)
print(f"(1,0)*(0,1) = {a * b}   but   (0,1)*(1,0) = {b * a}")
print("the second coordinate twists the first by a sign, so the group is")
print("non-abelian; (0,2) is central in the relevant quotients.")

print()
print("== the twisting automorphisms ==")
t = KleinElt(1, 0)
print(f"theta(1,0) sends u to {theta(t, U)}")
print(f"theta(1,0) sends v to {theta(t, V)}")
print(f"theta(m,n) sends B = {BIG_B} to B^((-1)^n); for (2,1): {theta(KleinElt(2, 1), BIG_B)}")

print()
print("== braids and conjugation by sigma ==")
x = BraidElt(U * V, KleinElt(1, 1))
print(f"x = {x},  x^-1 = {x.inv()},  x*x^-1 = {x * x.inv()}")
print(f"sigma^2 is the pure braid {SIGMA_SQ}")
print(f"lsigma fixes it: {lsigma(SIGMA_SQ)}")
print(f"lsigma(u;0,0) = {lsigma(BraidElt(U))}")
ls2 = lsigma(lsigma(x))
conj = SIGMA_SQ * x * SIGMA_SQ.inv()
print(f"lsigma applied twice equals conjugation by sigma^2: {ls2 == conj}")

print()
print("== the strand projection g ==")
print(f"g(u) = {gmap(U)},  g(v) = {gmap(V)},  g(B) = {gmap(BIG_B)}")
print("words in ker g are where the kernel coordinates of demo 02 live;")
print(f"as a sanity check, eps(-3) = {eps(-3)} is the sign gadget used above.")
