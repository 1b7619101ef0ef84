"""Classifying homomorphisms Z + Z -> Z x| Z and deciding the Borsuk-Ulam
property of the homotopy class each one represents.

Run as:  python3 demos/03_classify.py
"""

from kleinbraid import (
    HomClass,
    HomDescriptor,
    KleinElt,
    central_shift_equiv,
    decide,
    normalize,
    validate,
)

print("== from raw images to a normal form ==")
h = HomDescriptor(KleinElt(3, 5), KleinElt(0, 4))
print(f"images {h.img10}, {h.img01} commute: {validate(h)}")
cls = normalize(h)
print(f"normal form: {cls.describe()}")

bad = HomDescriptor(KleinElt(1, 1), KleinElt(1, 0))
print(f"images {bad.img10}, {bad.img01} commute: {validate(bad)}  (not a homomorphism)")

print()
print("== the decision table ==")
for cls in [
    HomClass(1, i=0, s1=3, s2=0),
    HomClass(1, i=0, s1=3, s2=1),
    HomClass(2, i=0, s1=0, s2=0),
    HomClass(3, i=0, s1=2, s2=1),
    HomClass(3, i=0, s1=0, s2=1),
    HomClass(4, r1=1, r2=2, s1=0, s2=0),
    HomClass(4, r1=1, r2=1, s1=0, s2=0),
    HomClass(4, r1=2, r2=3, s1=1, s2=1),
]:
    v = decide(cls)
    print(f"{cls.describe():42s} -> {'BU' if v.bu else 'no BU':5s}  branch {v.branch}")

print()
print("== the mod-4 shift tower ==")
a = HomClass(4, r1=1, r2=0, s1=1, s2=0)
b = HomClass(4, r1=1, r2=0, s1=1, s2=2)
c = HomClass(4, r1=1, r2=0, s1=1, s2=1)
print(f"{a.describe()} ~ {b.describe()}: {central_shift_equiv(a, b)}")
print(f"{a.describe()} ~ {c.describe()}: {central_shift_equiv(a, c)}")
print("equivalent classes share their verdict, so deciding at s2 in {0,1} suffices:")
print(f"  verdicts: {decide(a).bu}, {decide(b).bu}")
