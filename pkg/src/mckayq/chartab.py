"""Character tables of finite groups and class-function operations.

A table is the finite data the rest of the library runs on: conjugacy
classes (name, size, the squaring map c -> class of c^2, the inversion
map), and a square matrix of exact cyclotomic character values with the
trivial character first and the identity class first.

Deep consistency (orthogonality, dimension counts, map/value coherence)
is checked by verify_table, not by the constructor, so that suspect
tables can be loaded, inspected and reported on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import (
    Cyclotomic,
    CyclotomicSyntaxError,
    _reduction_rows,
    euler_phi,
    parse_cyclotomic,
)


class TableMismatch(ValueError):
    """Two class functions live on different tables."""


class NotACharacter(ValueError):
    """A class function is not a non-negative integer sum of irreducibles."""


class InvalidKernel(ValueError):
    """A class subset does not define a quotient table."""


class TableFormatError(ValueError):
    """Malformed table JSON."""


class TableValidationError(ValueError):
    """A loaded table failed verification; .report has the details."""

    def __init__(self, report: "VerificationReport"):
        super().__init__("table failed verification:\n" + str(report))
        self.report = report


@dataclass(frozen=True)
class ConjClass:
    name: str
    size: int
    power2: int   # index of the class containing the squares of members
    inverse: int  # index of the class containing the inverses of members


class CharacterTable:
    """Immutable character table; all values are Cyclotomic."""

    def __init__(self, name, order, classes, characters):
        classes = tuple(classes)
        r = len(classes)
        if r == 0:
            raise ValueError("a table needs at least one class")
        if not isinstance(order, int) or order < 1:
            raise ValueError("order must be a positive integer")
        rows = []
        for row in characters:
            row = tuple(_as_cyclotomic(v) for v in row)
            if len(row) != r:
                raise ValueError("character rows must match the class count")
            rows.append(row)
        if len(rows) != r:
            raise ValueError("need exactly as many characters as classes")
        for c in classes:
            if not isinstance(c.size, int) or c.size < 1:
                raise ValueError(f"class {c.name!r} has a bad size")
            if not (0 <= c.power2 < r and 0 <= c.inverse < r):
                raise ValueError(f"class {c.name!r} has out-of-range maps")
        self.name = str(name)
        self.order = order
        self.classes = classes
        self.characters = tuple(rows)
        self._engine_cache = None

    # -- basic accessors -------------------------------------------------

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def class_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.classes)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(v.to_int() for v in (row[0] for row in self.characters))

    def row_names(self) -> tuple[str, ...]:
        return tuple(f"chi{i + 1}" for i in range(self.n_classes))

    def irreducible(self, i: int) -> "ClassFunction":
        return ClassFunction(self, self.characters[i])

    def trivial(self) -> "ClassFunction":
        return self.irreducible(0)

    def row_index(self, values) -> int | None:
        """Index of the irreducible with exactly these values, if any."""
        eng = self._engine()
        key = tuple(eng.key_of_value(v) for v in values)
        return eng.row_lookup.get(key)

    def dual_index(self, i: int) -> int:
        j = self.row_index([v.conjugate() for v in self.characters[i]])
        if j is None:
            raise ValueError("table is not closed under complex conjugation")
        return j

    def _engine(self) -> "_TableEngine":
        if self._engine_cache is None:
            self._engine_cache = _TableEngine(self)
        return self._engine_cache

    def __repr__(self):
        return f"<CharacterTable {self.name}: order {self.order}, {self.n_classes} classes>"


def _as_cyclotomic(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    if isinstance(v, (int, Fraction)):
        return Cyclotomic.from_rational(v)
    raise TypeError(f"not a cyclotomic value: {v!r}")


class ClassFunction:
    """A function on the classes of one table, valued in cyclotomics."""

    __slots__ = ("table", "values")

    def __init__(self, table: CharacterTable, values):
        values = tuple(_as_cyclotomic(v) for v in values)
        if len(values) != table.n_classes:
            raise ValueError("value count does not match the class count")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "values", values)

    def __setattr__(self, *a):
        raise AttributeError("ClassFunction is immutable")

    def _same(self, other: "ClassFunction"):
        if self.table is not other.table:
            raise TableMismatch("class functions on different tables")

    def __getitem__(self, c: int) -> Cyclotomic:
        return self.values[c]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.table, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.table, [v * other for v in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.table, [v.conjugate() for v in self.values])

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.table is other.table
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __repr__(self):
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


# -- fast exact engine -------------------------------------------------------
#
# All table values live in one Q(zeta_E).  A value is a sparse dict
# {exponent: coefficient} over the group ring basis zeta_E^0..zeta_E^(E-1);
# products are exponent additions, conjugation negates exponents, and a
# single reduction mod Phi_E at the end turns an accumulated sum into
# canonical power-basis coordinates.  Everything stays exact.


class _TableEngine:
    def __init__(self, table: CharacterTable):
        self.table = table
        E = 1
        for row in table.characters:
            for v in row:
                E = E * v.conductor // math.gcd(E, v.conductor)
        self.exponent = E
        self.phi = euler_phi(E)
        self.red = _reduction_rows(E)
        r = table.n_classes
        self.vals = [[self._embed(table.characters[i][c]) for c in range(r)]
                     for i in range(r)]
        self.conj_vals = [[self.conj(d) for d in row] for row in self.vals]
        self.coords = [[self.reduce_dict(d) for d in row] for row in self.vals]
        self.row_lookup: dict[tuple, int] = {}
        for i in range(r):
            key = tuple(self.coords[i])
            self.row_lookup.setdefault(key, i)
        self.product_cache: dict[int, tuple] = {}

    def _embed(self, v: Cyclotomic) -> dict:
        step = self.exponent // v.conductor
        out = {}
        for k, c in enumerate(v.coeffs):
            if c:
                out[(k * step) % self.exponent] = c.numerator if c.denominator == 1 else c
        return out

    def key_of_value(self, v: Cyclotomic) -> tuple:
        return self.reduce_dict(self._embed(_as_cyclotomic(v)))

    def conj(self, d: dict) -> dict:
        E = self.exponent
        return {(E - e) % E: c for e, c in d.items()}

    def mul(self, d1: dict, d2: dict) -> dict:
        E = self.exponent
        out: dict = {}
        for e1, c1 in d1.items():
            for e2, c2 in d2.items():
                e = e1 + e2
                if e >= E:
                    e -= E
                out[e] = out.get(e, 0) + c1 * c2
        return out

    def combo(self, weights, dicts) -> dict:
        """Integer combination sum(w * d for w, d in zip(weights, dicts))."""
        out: dict = {}
        for w, d in zip(weights, dicts):
            if w:
                for e, c in d.items():
                    out[e] = out.get(e, 0) + w * c
        return {e: c for e, c in out.items() if c}

    def reduce_dict(self, d: dict) -> tuple:
        if len(d) == 1:
            # monomial fast path; returning the cached row by reference lets
            # callers compare repeated reductions with `is` before `==`
            (e, c), = d.items()
            if c == 1:
                return self.red[e]
            return tuple(c * x for x in self.red[e])
        out = [0] * self.phi
        for e, c in d.items():
            if c:
                row = self.red[e]
                for t in range(self.phi):
                    if row[t]:
                        out[t] += c * row[t]
        return tuple(out)

    def reduce_dense(self, acc: list) -> tuple:
        out = [0] * self.phi
        for e, c in enumerate(acc):
            if c:
                row = self.red[e]
                for t in range(self.phi):
                    if row[t]:
                        out[t] += c * row[t]
        return tuple(out)

    def rational_of_coords(self, coords) -> Fraction | None:
        if any(coords[1:]):
            return None
        return Fraction(coords[0])

    def row_inner(self, d_per_class_1, d_per_class_2_conj) -> tuple:
        """Coordinates of sum_c size_c * a_c * b_c (b already conjugated)."""
        sizes = self.table.class_sizes
        E = self.exponent
        acc = [0] * E
        for c, s in enumerate(sizes):
            d1 = d_per_class_1[c]
            d2 = d_per_class_2_conj[c]
            for e1, c1 in d1.items():
                sc1 = s * c1
                for e2, c2 in d2.items():
                    e = e1 + e2
                    if e >= E:
                        e -= E
                    acc[e] += sc1 * c2
        return self.reduce_dense(acc)


# -- operations --------------------------------------------------------------


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of size * f * conj(g)."""
    f._same(g)
    t = f.table
    total = Cyclotomic.zero()
    for c in range(t.n_classes):
        total = total + t.classes[c].size * f[c] * g[c].conjugate()
    return total * Fraction(1, t.order)


def decompose(f: ClassFunction) -> tuple[int, ...]:
    """Multiplicities of f in the irreducible basis; NotACharacter if any
    multiplicity is negative or non-integral."""
    t = f.table
    out = []
    for i in range(t.n_classes):
        m = inner_product(f, t.irreducible(i))
        if not m.is_rational or m.to_rational().denominator != 1 or m.to_rational() < 0:
            raise NotACharacter(f"multiplicity of row {i + 1} is {m}")
        out.append(int(m.to_rational()))
    return tuple(out)


def dual(f: ClassFunction) -> ClassFunction:
    """Pointwise complex conjugate (the contragredient character)."""
    return f.conjugate()


def fs_indicator(f: ClassFunction) -> Fraction:
    """Frobenius-Schur indicator (1/|G|) sum size(c) * f(c^2)."""
    t = f.table
    total = Cyclotomic.zero()
    for c in range(t.n_classes):
        total = total + t.classes[c].size * f[t.classes[c].power2]
    return (total * Fraction(1, t.order)).to_rational()


def is_symplectic(multiplicities, t: CharacterTable) -> bool:
    """Whether the representation with these multiplicities admits a
    nondegenerate invariant antisymmetric form.

    Constituent criterion: indicator +1 parts need even multiplicity,
    indicator 0 parts must pair with their duals, indicator -1 parts are
    unconstrained.
    """
    mult = list(multiplicities)
    if len(mult) != t.n_classes:
        raise ValueError("multiplicity vector has the wrong length")
    for i, m in enumerate(mult):
        if m == 0:
            continue
        nu = fs_indicator(t.irreducible(i))
        if nu == 1 and m % 2 != 0:
            return False
        if nu == 0 and m != mult[t.dual_index(i)]:
            return False
    return True


def kernel_classes(f: ClassFunction) -> frozenset[int]:
    """Classes where the character takes its identity value."""
    decompose(f)  # validates that f is a genuine character
    return frozenset(c for c, v in enumerate(f.values) if v == f[0])


def proportional_on_classes(f: ClassFunction, g: ClassFunction, class_indices) -> bool:
    """Whether the restrictions to the given classes are scalar multiples."""
    f._same(g)
    idx = sorted(set(class_indices))
    fz = [f[c].is_zero for c in idx]
    gz = [g[c].is_zero for c in idx]
    if fz != gz:
        return False
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            ca, cb = idx[a], idx[b]
            if f[ca] * g[cb] != f[cb] * g[ca]:
                return False
    return True


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


class VerificationReport:
    def __init__(self, table_name: str, checks: list[CheckOutcome]):
        self.table_name = table_name
        self.checks = checks

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        lines = [f"verification of {self.table_name}:"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}"
            if c.detail and not c.passed:
                line += f": {c.detail}"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "table": self.table_name,
            "all_pass": self.all_pass,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


def verify_table(t: CharacterTable) -> VerificationReport:
    """Run the standard consistency checks and report each outcome."""
    checks: list[CheckOutcome] = []
    r = t.n_classes
    eng = t._engine()

    # structure: identity class and trivial character up front, sane maps
    problems = []
    if t.classes[0].size != 1:
        problems.append("first class has size != 1")
    if any(not v == Cyclotomic.one() for v in t.characters[0]):
        problems.append("first character is not trivial")
    dims_ok = True
    for i in range(r):
        v = t.characters[i][0]
        if not (v.is_rational and v.to_rational().denominator == 1 and v.to_rational() >= 1):
            problems.append(f"row {i + 1} has a bad identity value {v}")
            dims_ok = False
    if t.classes[0].power2 != 0 or t.classes[0].inverse != 0:
        problems.append("identity class maps are wrong")
    if any(t.classes[t.classes[c].inverse].inverse != c for c in range(r)):
        problems.append("inverse map is not an involution")
    checks.append(CheckOutcome("structure", not problems, "; ".join(problems)))

    total = sum(t.class_sizes)
    checks.append(CheckOutcome(
        "class-sizes", total == t.order,
        f"sizes sum to {total}, order is {t.order}"))

    bad = None
    for i in range(r):
        for j in range(i, r):
            coords = eng.row_inner(eng.vals[i], eng.conj_vals[j])
            want = t.order if i == j else 0
            q = eng.rational_of_coords(coords)
            if q is None or q != want:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(CheckOutcome(
        "row-orthogonality", bad is None,
        "" if bad is None else f"<chi{bad[0] + 1}, chi{bad[1] + 1}> is off"))

    bad = None
    for c in range(r):
        for c2 in range(c, r):
            acc = [0] * eng.exponent
            E = eng.exponent
            for i in range(r):
                d1 = eng.vals[i][c]
                d2 = eng.conj_vals[i][c2]
                for e1, a in d1.items():
                    for e2, b in d2.items():
                        e = e1 + e2
                        if e >= E:
                            e -= E
                        acc[e] += a * b
            q = eng.rational_of_coords(eng.reduce_dense(acc))
            want = Fraction(t.order, t.classes[c].size) if c == c2 else Fraction(0)
            if q is None or q != want:
                bad = (c, c2)
                break
        if bad:
            break
    checks.append(CheckOutcome(
        "column-orthogonality", bad is None,
        "" if bad is None else (
            f"column {bad[0] + 1} has the wrong norm" if bad[0] == bad[1]
            else f"columns {bad[0] + 1} and {bad[1] + 1} are off")))

    if dims_ok:
        sq = sum(int(t.characters[i][0].to_rational()) ** 2 for i in range(r))
        checks.append(CheckOutcome(
            "dimension-squares", sq == t.order,
            f"sum of squared dims is {sq}, order is {t.order}"))
    else:
        checks.append(CheckOutcome("dimension-squares", False, "dims not positive integers"))

    bad_ic = next((
        (i, c) for i in range(r) for c in range(r)
        if eng.coords[i][t.classes[c].inverse] != eng.reduce_dict(eng.conj_vals[i][c])),
        None)
    checks.append(CheckOutcome(
        "inverse-consistency", bad_ic is None,
        "" if bad_ic is None else
        f"chi{bad_ic[0] + 1} at class {bad_ic[1] + 1} is not conjugated by inversion"))

    # indicator of every row must come out rational and in {-1, 0, 1},
    # vanishing exactly for the non-real rows
    bad_p2 = None
    for i in range(r):
        acc: dict = {}
        for c in range(r):
            d = eng.vals[i][t.classes[c].power2]
            s = t.classes[c].size
            for e, cc in d.items():
                acc[e] = acc.get(e, 0) + s * cc
        q = eng.rational_of_coords(eng.reduce_dict(acc))
        nu = None if q is None else q / t.order
        real = eng.coords[i] == [eng.reduce_dict(d) for d in eng.conj_vals[i]]
        if nu not in (Fraction(-1), Fraction(0), Fraction(1)) or (nu == 0) == real:
            bad_p2 = i
            break
    checks.append(CheckOutcome(
        "power2-indicators", bad_p2 is None,
        "" if bad_p2 is None else f"row {bad_p2 + 1} has an inconsistent indicator"))

    return VerificationReport(t.name, checks)


# -- quotients ----------------------------------------------------------------


def quotient_table(t: CharacterTable, kernel) -> CharacterTable:
    """Character table of G/N where N is the union of the given classes.

    The classes must form the kernel of some character.  Rows whose kernel
    contains N survive; classes fuse when all surviving rows agree on them.
    """
    ker = sorted(set(kernel))
    if not ker or ker[0] != 0:
        raise InvalidKernel("kernel must contain the identity class")
    if any(not (0 <= c < t.n_classes) for c in ker):
        raise InvalidKernel("kernel has out-of-range class indices")
    n_size = sum(t.classes[c].size for c in ker)
    if t.order % n_size != 0:
        raise InvalidKernel(f"kernel size {n_size} does not divide the order")
    q_order = t.order // n_size

    survivors = [i for i in range(t.n_classes)
                 if all(t.characters[i][c] == t.characters[i][0] for c in ker)]
    if not survivors:
        raise InvalidKernel("no characters survive")

    # fuse classes that the surviving rows cannot tell apart
    sig_to_block: dict[tuple, list[int]] = {}
    for c in range(t.n_classes):
        sig = tuple(t.characters[i][c] for i in survivors)
        sig_to_block.setdefault(sig, []).append(c)
    blocks = sorted(sig_to_block.values(), key=lambda b: b[0])
    block_of = {}
    for bi, b in enumerate(blocks):
        for c in b:
            block_of[c] = bi
    if blocks[0] != ker:
        raise InvalidKernel("given classes are not the kernel of the survivors")
    if len(blocks) != len(survivors):
        raise InvalidKernel("class fusion does not match the surviving characters")

    classes = []
    for b in blocks:
        size_sum = sum(t.classes[c].size for c in b)
        if size_sum % n_size != 0:
            raise InvalidKernel("fused class size is not divisible by the kernel size")
        p2 = {block_of[t.classes[c].power2] for c in b}
        inv = {block_of[t.classes[c].inverse] for c in b}
        if len(p2) != 1 or len(inv) != 1:
            raise InvalidKernel("power or inverse maps do not descend")
        classes.append(ConjClass(
            name="+".join(t.classes[c].name for c in b),
            size=size_sum // n_size,
            power2=p2.pop(),
            inverse=inv.pop(),
        ))

    characters = [[t.characters[i][b[0]] for b in blocks] for i in survivors]
    qt = CharacterTable(
        name=f"{t.name}/({'+'.join(t.classes[c].name for c in ker)})",
        order=q_order, classes=classes, characters=characters)
    report = verify_table(qt)
    if not report.all_pass:
        raise InvalidKernel("quotient table fails verification:\n" + str(report))
    qt.surviving_rows = tuple(survivors)
    qt.block_representatives = tuple(b[0] for b in blocks)
    return qt


# -- JSON ---------------------------------------------------------------------


def table_to_json(t: CharacterTable) -> dict:
    return {
        "name": t.name,
        "order": t.order,
        "classes": [{"name": c.name, "size": c.size, "power2": c.power2,
                     "inverse": c.inverse} for c in t.classes],
        "characters": [[str(v) for v in row] for row in t.characters],
    }


def table_from_json(data, force: bool = False) -> CharacterTable:
    """Build a table from its JSON form; verification failures raise
    TableValidationError unless force is set."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as ex:
            raise TableFormatError(f"not valid JSON: {ex}") from ex
    if not isinstance(data, dict):
        raise TableFormatError("table JSON must be an object")
    try:
        classes = [ConjClass(name=str(c["name"]), size=c["size"],
                             power2=c["power2"], inverse=c["inverse"])
                   for c in data["classes"]]
        rows = [[parse_cyclotomic(s) if isinstance(s, str)
                 else Cyclotomic.from_rational(s)
                 for s in row]
                for row in data["characters"]]
        t = CharacterTable(data["name"], data["order"], classes, rows)
    except (KeyError, TypeError, ValueError, CyclotomicSyntaxError) as ex:
        if isinstance(ex, TableFormatError):
            raise
        raise TableFormatError(f"malformed table JSON: {ex}") from ex
    report = verify_table(t)
    if not report.all_pass and not force:
        raise TableValidationError(report)
    return t


def render_table_text(t: CharacterTable) -> str:
    """Plain text grid of a table."""
    headers = ["", "size"] + list(t.class_names)
    rows = []
    for i, name in enumerate(t.row_names()):
        rows.append([name, ""] + [str(v) for v in t.characters[i]])
    size_row = ["", ""] + [str(c.size) for c in t.classes]
    grid = [headers, size_row] + rows
    widths = [max(len(r[c]) for r in grid) for c in range(len(headers))]
    out = [f"{t.name} (order {t.order})"]
    for r in grid:
        out.append("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip())
    return "\n".join(out)
