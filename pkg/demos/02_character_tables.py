"""
Character tables and their self-checks
======================================

The catalog builds tables for cyclic groups, dicyclic (binary dihedral)
groups, the three exceptional binary polyhedral groups, and direct
products.  verify_table re-derives the orthogonality relations and the
indicator arithmetic from scratch, so a corrupted table cannot slip by.
"""

from mckayq import (
    dicyclic_table,
    fs_indicator,
    parse_group_spec,
    render_table_text,
    table_from_json,
    table_to_json,
    verify_table,
    TableValidationError,
)

# the order-12 dicyclic group: 6 classes, four 1-dim and two 2-dim rows
b12 = dicyclic_table(12)
print(render_table_text(b12))
print()

# every check re-derived: orthogonality both ways, class size sanity,
# dimension squares, inverse pairing, squaring-map indicators
report = verify_table(b12)
print(report)
print()

# the Frobenius-Schur indicator tells real from complex from quaternionic
for k in range(b12.n_classes):
    nu = fs_indicator(b12.irreducible(k))
    kind = {1: "real (orthogonal)", 0: "complex", -1: "quaternionic"}[int(nu)]
    print(f"  chi{k + 1}: indicator {int(nu):>2}  {kind}")
print()

# now sabotage the class sizes the way a typo would, and watch it fail:
# swapping the sizes of the 2-element and 3-element classes breaks row
# orthogonality immediately
data = table_to_json(b12)
for cls, size in zip(data["classes"], (1, 1, 2, 2, 3, 3)):
    cls["size"] = size
try:
    table_from_json(data)
except TableValidationError as ex:
    bad = [c.name for c in ex.report.checks if not c.passed]
    print("corrupted table rejected; failing checks:", ", ".join(bad))
print()

# tables compose: a direct product multiplies classes and characters
prod = parse_group_spec("C:2xBD:8")
print(f"{prod.name}: order {prod.order}, {prod.n_classes} classes,",
      "verified" if verify_table(prod).all_pass else "BROKEN")
