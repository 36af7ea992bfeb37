"""Solvability screening for Galois groups of integer polynomials.

The decision procedure factors over Q, declares factors of degree at
most 4 solvable (as is every cyclotomic factor, whose Galois group is
abelian), and hunts for nonsolvability witnesses on the remaining
factors: degree patterns of the factor modulo good primes are
Frobenius cycle types, and two classical cycle-type rules force the
Galois group to contain the alternating group or be the full symmetric
group.  A verdict of "not_solvable" always carries a certificate that
can be replayed independently; absence of a witness within the prime
budget leaves the verdict "unknown", never "solvable".

Both rules are sound for irreducible factors:

* large-prime-cycle: a pattern containing a prime part q with
  n/2 < q <= n-3 means some power of Frobenius is a q-cycle, and a
  transitive group containing such a long prime cycle contains A_n.
* transposition: for prime degree n, a pattern of one 2 and odd parts
  otherwise gives a transposition in a primitive group, hence S_n.

For n >= 5 these groups are not solvable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import cyclotomic_polynomial, euler_phi
from .polynomials import (
    BadPrime,
    IntPolynomial,
    MAX_FACTOR_DEGREE,
    PolynomialSyntaxError,
    ddf_pattern,
    factor_over_Q,
    is_prime,
    parse_polynomial,
    poly_gcd,
    primes_below,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "BadPrime", "IntPolynomial", "MAX_FACTOR_DEGREE", "PolynomialSyntaxError",
    "ddf_pattern", "factor_over_Q", "parse_polynomial", "poly_gcd",
    "primes_below", "squarefree_decomposition", "squarefree_part",
    "NonsolvabilityCertificate", "SolvabilityVerdict", "solvability",
    "replay_certificate", "component_solvability",
    "SOLVABLE", "NOT_SOLVABLE", "UNKNOWN",
]

SOLVABLE = "solvable"
NOT_SOLVABLE = "not_solvable"
UNKNOWN = "unknown"

RULE_PRIME_CYCLE = "large-prime-cycle"
RULE_TRANSPOSITION = "transposition"


@dataclass(frozen=True)
class NonsolvabilityCertificate:
    """A replayable witness that one irreducible factor has nonsolvable
    Galois group."""
    factor: IntPolynomial
    prime: int
    pattern: tuple[int, ...]
    rule: str

    def to_json(self) -> dict:
        return {"factor": str(self.factor), "prime": self.prime,
                "pattern": list(self.pattern), "rule": self.rule}

    @staticmethod
    def from_json(data) -> "NonsolvabilityCertificate":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return NonsolvabilityCertificate(
            factor=parse_polynomial(data["factor"]),
            prime=int(data["prime"]),
            pattern=tuple(int(d) for d in data["pattern"]),
            rule=str(data["rule"]))


@dataclass(frozen=True)
class SolvabilityVerdict:
    status: str  # SOLVABLE / NOT_SOLVABLE / UNKNOWN
    prime_budget: int
    factor_degrees: tuple[int, ...]
    certificates: tuple[NonsolvabilityCertificate, ...] = ()

    def to_json(self) -> dict:
        return {"status": self.status,
                "prime_budget": self.prime_budget,
                "factor_degrees": list(self.factor_degrees),
                "certificates": [c.to_json() for c in self.certificates]}


def _rule_for_pattern(n: int, pattern: tuple[int, ...]) -> str | None:
    """Which nonsolvability rule (if any) the cycle type of an
    irreducible degree-n factor triggers."""
    if n < 5:
        return None
    for q in set(pattern):
        if is_prime(q) and 2 * q > n and q <= n - 3:
            return RULE_PRIME_CYCLE
    if is_prime(n):
        evens = [d for d in pattern if d % 2 == 0]
        if evens == [2]:
            return RULE_TRANSPOSITION
    return None


@lru_cache(maxsize=None)
def _cyclotomic_index(coeffs: tuple[int, ...]) -> int | None:
    """d with Phi_d equal to the given monic coefficients, or None.
    phi(d) >= sqrt(d/2) bounds the candidates by twice the degree
    squared."""
    n = len(coeffs) - 1
    for d in range(1, 2 * n * n + 2):
        if euler_phi(d) == n and cyclotomic_polynomial(d) == coeffs:
            return d
    return None


def _witness_for_factor(f: IntPolynomial, prime_budget: int):
    for p in primes_below(prime_budget):
        try:
            pattern = ddf_pattern(f, p)
        except BadPrime:
            continue
        rule = _rule_for_pattern(f.degree, pattern)
        if rule is not None:
            return NonsolvabilityCertificate(f, p, pattern, rule)
    return None


def solvability(f: IntPolynomial, prime_budget: int = 10000) -> SolvabilityVerdict:
    """Decide solvability of the Galois group of f where possible.

    Verdicts: "solvable" when every irreducible factor has degree <= 4;
    "not_solvable" when some factor yields a certificate within the
    budget; "unknown" otherwise.  Raising the budget can only move
    "unknown" to "not_solvable"."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no Galois group")
    factors = factor_over_Q(squarefree_part(f))
    degrees = tuple(g.degree for g in factors)
    certs = []
    undecided = False
    for g in factors:
        if g.degree <= 4:
            continue
        if g.is_monic and _cyclotomic_index(g.coeffs) is not None:
            continue  # roots of unity, abelian Galois group
        cert = _witness_for_factor(g, prime_budget)
        if cert is not None:
            certs.append(cert)
        else:
            undecided = True
    if certs:
        return SolvabilityVerdict(NOT_SOLVABLE, prime_budget, degrees, tuple(certs))
    if undecided:
        return SolvabilityVerdict(UNKNOWN, prime_budget, degrees)
    return SolvabilityVerdict(SOLVABLE, prime_budget, degrees)


def replay_certificate(cert: NonsolvabilityCertificate,
                       f: IntPolynomial | None = None) -> bool:
    """Re-derive everything a certificate claims: the factor is
    irreducible (and divides f, when given), the degree pattern modulo
    the prime is as stated, and the stated rule really fires on it."""
    g = cert.factor
    if g.degree < 5:
        return False
    if f is not None:
        if squarefree_part(f).try_divide(g) is None:
            return False
    if factor_over_Q(g) != (g.primitive(),):
        return False
    try:
        pattern = ddf_pattern(g, cert.prime)
    except (BadPrime, ValueError):
        return False
    if pattern != cert.pattern:
        return False
    return _rule_for_pattern(g.degree, pattern) == cert.rule


def component_solvability(q, prime_budget: int = 10000):
    """Per weak component of a quiver: (vertex tuple, verdict for the
    characteristic polynomial of the induced adjacency block)."""
    from .quiver import char_poly, weakly_connected_components
    out = []
    for comp in weakly_connected_components(q):
        sub = q.induced(comp)
        out.append((comp, solvability(char_poly(sub), prime_budget)))
    return tuple(out)
