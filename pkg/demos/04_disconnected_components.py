"""
When the quiver falls apart
===========================

A McKay quiver is connected exactly when rho is faithful.  For an
unfaithful rho the vertices split into components, one per class in the
kernel of rho's character, and the component holding the trivial row is
itself a McKay quiver: the one of the descended representation of the
quotient group.
"""

from mckayq import (
    McKayQuiver,
    component_partition,
    parse_group_spec,
    principal_component,
    reduced_weight_vector,
)

# BD:24, with the 2-dim row that is trivial on the center
b24 = parse_group_spec("BD:24")
rho = (0, 0, 0, 0, 0, 0, 1, 0, 0)
mq = McKayQuiver(b24, rho)

print("faithful:", mq.is_faithful())
print("kernel classes (1-based):",
      [c + 1 for c in mq.kernel_class_indices()])

# strong components, weak components and proportionality of character
# columns all give the same partition; the library cross-checks the
# three routes and would raise if they ever disagreed
parts = component_partition(mq)
print("components:", [[v + 1 for v in p] for p in parts])
print()

# the principal component IS the quotient group's McKay quiver
pc = principal_component(mq)
print(f"principal component vertices: {[v + 1 for v in pc.vertices]}")
print(f"quotient group order: {pc.quotient.table.order}")
print("quotient quiver adjacency:")
for row in pc.quotient.matrix:
    print("  ", list(row))
print()

# the leftover block is a perfectly nice graph with weights (1,1,1)...
minor = mq.to_quiver().induced(parts[1])
print("minor block adjacency:")
for row in minor.adjacency:
    print("  ", list(row))
rw = reduced_weight_vector(minor)
print(f"minor block reduced weighting: k = {rw.k}, weights {list(rw.weights)}")
print("(whether it could be a McKay quiver at all: see demo 05)")
