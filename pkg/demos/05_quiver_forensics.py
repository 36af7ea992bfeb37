"""
Could this graph be a McKay quiver?
===================================

Given a bare quiver, the obstruction battery runs five necessary
conditions.  One failure is a certificate that no finite group and no
representation produce this quiver; all passes mean "consistent", never
"yes".
"""

from mckayq import (
    McKayQuiver,
    Quiver,
    mckay_obstruction_battery,
    natural_rep,
    parse_group_spec,
)

# a genuine McKay quiver sails through
b12 = parse_group_spec("BD:12")
good = McKayQuiver(b12, natural_rep(b12)).to_quiver()
print(mckay_obstruction_battery(good))
print()

# the orphaned block from demo 04: strongly connected, correctly
# weighted, right arithmetic, but its two looped vertices can never be
# swapped with the loopless one by any quiver automorphism, while the
# dual group of a real McKay quiver shuffles all weight-1 vertices
# transitively
minor = Quiver(["a", "b", "c"], [[1, 0, 1], [0, 1, 1], [1, 1, 0]])
print(mckay_obstruction_battery(minor))
print()

# weights without a 1 can also kill a candidate: the trivial
# representation always contributes a weight-1 vertex
no_one = Quiver(["u", "v"], [[1, 2], [3, 2]])
report = mckay_obstruction_battery(no_one)
for t in report.tests:
    if t.status == "fail":
        print(f"{t.name} fails: {t.detail}")
print()

# and an asymmetric eigenvalue situation leaves nothing to weight
fib = Quiver(["u", "v"], [[0, 1], [1, 1]])
report = mckay_obstruction_battery(fib)
print("golden-ratio quiver verdict:", report.verdict)
for t in report.tests:
    print(f"  [{t.status}] {t.name}")
