"""Print and replay the two polynomial bound proofs built on the skew expansion."""

from tourney_sandwich.skew_algebra import certified_bound_p22, certified_bound_p1331

for proof in (certified_bound_p22(), certified_bound_p1331()):
    print(proof.to_text())
    print("check:", proof.check())
    print()
