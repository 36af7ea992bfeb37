"""
McKay quivers of the finite SU(2) subgroups
===========================================

Tensoring the irreducibles with a chosen representation rho gives a
directed multigraph: a_ij arrows i -> j when sigma_j appears a_ij times
inside rho (x) sigma_i.  For the natural 2-dim representation of a
finite SU(2) subgroup the result is an extended Dynkin diagram, one per
group family.
"""

from mckayq import (
    McKayQuiver,
    ade_classify,
    eigen_check,
    natural_rep,
    parse_group_spec,
    reduced_weight_vector,
    to_dot,
)

# sweep the families: cyclic -> A~, dicyclic -> D~, exceptional -> E~
for spec in ["C:2", "C:5", "C:9", "BD:8", "BD:12", "BD:28", "2T", "2O", "2I"]:
    t = parse_group_spec(spec)
    mq = McKayQuiver(t, natural_rep(t))
    q = mq.to_quiver()
    rw = reduced_weight_vector(q)
    print(f"{spec:>6}: order {t.order:>3}, {q.n} vertices,"
          f" type {ade_classify(q)},"
          f" weights {list(rw.weights)} at k = {rw.k}")
print()

# the weights are exactly the irreducible dimensions, and k the
# dimension of rho: the dimension vector is a positive eigenvector
b12 = parse_group_spec("BD:12")
mq = McKayQuiver(b12, natural_rep(b12))
print("BD:12 adjacency (rows are tensor decompositions):")
for i, row in enumerate(mq.matrix):
    print(f"  chi{i + 1} (dim {b12.dims[i]}):", list(row))
print()

# the identity behind the weights: every column of the character table
# is an eigenvector of the adjacency matrix, with eigenvalue the value
# of rho's character on that class
print("column eigenvector identity holds:", eigen_check(mq))
print()

# Graphviz source for drawing; opposite arrows collapse to plain edges
print(to_dot(mq.to_quiver()))
