"""
Solvability by radicals, with receipts
======================================

The characteristic polynomial of a McKay quiver splits into factors
whose roots are character values, forcing a solvable Galois group.  The
battery's last test exploits that: exhibit a quiver whose char poly has
a nonsolvable factor and you have an obstruction.  The screen never
bluffs: "not_solvable" always ships a certificate anyone can replay.
"""

from mckayq import (
    NonsolvabilityCertificate,
    Quiver,
    char_poly,
    factor_over_Q,
    parse_polynomial,
    replay_certificate,
    solvability,
)

# a quintic with full symmetric Galois group
quintic = parse_polynomial("x^5+2*x^4-44*x^3-40*x^2+400*x+128")
print("factors:", " * ".join(str(g) for g in factor_over_Q(quintic)))

verdict = solvability(quintic)
print("verdict:", verdict.status)
cert = verdict.certificates[0]
print(f"certificate: mod {cert.prime} the factor splits with degree"
      f" pattern {cert.pattern}, triggering the {cert.rule} rule")

# replaying re-derives irreducibility, the factor pattern and the rule
print("replay:", replay_certificate(cert, quintic))

# tamper with the prime and the replay refuses
fake = NonsolvabilityCertificate(cert.factor, cert.prime + 2,
                                 cert.pattern, cert.rule)
print("tampered replay:", replay_certificate(fake, quintic))
print()

# degree 5 irreducible but solvable (group of order 20): the cycle-type
# screen cannot prove solvability, so it says so instead of guessing
print("x^5-2 verdict:", solvability(parse_polynomial("x^5-2")).status)

# cyclotomic factors are recognized and declared solvable outright
print("x^47-1 verdict:", solvability(parse_polynomial("x^47-1")).status)
print()

# a 5-vertex quiver whose char poly is that kind of bad quintic
adj = [
    [1, 0, 0, 1, 0],
    [0, 1, 1, 0, 1],
    [1, 1, 0, 1, 0],
    [1, 0, 1, 0, 1],
    [1, 1, 0, 0, 1],
]
q = Quiver([f"v{i}" for i in range(5)], adj)
cp = char_poly(q)
print("quiver char poly:", cp)
v = solvability(cp)
print("verdict:", v.status, "- certificate factor:", v.certificates[0].factor)
print("such a quiver is not a McKay quiver of anything")
