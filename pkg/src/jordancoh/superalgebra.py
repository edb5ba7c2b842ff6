"""Z2-graded algebras given by structure constants.

A :class:`SuperAlgebra` stores its table sparsely: ``table[(i, j)]`` maps the
index ``k`` of each basis vector with a nonzero coefficient in ``b_i b_j`` to
that coefficient.  Everything here is immutable once built.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    GradingViolation,
    InconsistentSymmetricPair,
    ParseError,
)
from .field import ONE, ZERO, Scalar, format_scalar, parse_scalar, specialize, to_scalar

Table = Dict[Tuple[int, int], Dict[int, Scalar]]


def sign(exponent: int) -> int:
    return -1 if exponent & 1 else 1


@dataclass(frozen=True)
class GradedBasis:
    even: Tuple[str, ...]
    odd: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(self.even))
        object.__setattr__(self, "odd", tuple(self.odd))
        names = self.even + self.odd
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ParseError(f"duplicate basis names {dupes}")

    @property
    def names(self) -> Tuple[str, ...]:
        return self.even + self.odd

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.even), len(self.odd)

    def parity(self, i: int) -> int:
        return 0 if i < len(self.even) else 1

    @property
    def parities(self) -> Tuple[int, ...]:
        return (0,) * len(self.even) + (1,) * len(self.odd)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown basis element {name!r}") from None


@dataclass(frozen=True)
class Element:
    coefficients: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(to_scalar(c) for c in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __add__(self, other: "Element") -> "Element":
        _same_length(self, other)
        return Element(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "Element") -> "Element":
        _same_length(self, other)
        return Element(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coefficients))

    def __rmul__(self, c) -> "Element":
        c = to_scalar(c)
        return Element(tuple(c * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    @classmethod
    def from_sparse(cls, dim: int, coeffs: Mapping[int, Scalar]) -> "Element":
        out = [ZERO] * dim
        for k, c in coeffs.items():
            out[k] = c
        return cls(tuple(out))

    def sparse(self) -> Dict[int, Scalar]:
        return {k: c for k, c in enumerate(self.coefficients) if c}


def _same_length(u: Element, v: Element):
    if len(u) != len(v):
        raise DimensionMismatch(f"elements of length {len(u)} and {len(v)}")


@dataclass
class IdentityReport:
    """Outcome of an identity scan.  ``violations`` holds (basis-index tuple,
    residual) pairs in lexicographic order of the tuple."""

    violations: List[Tuple[Tuple[int, ...], Element]] = field(default_factory=list)
    checked: int = 0
    names: Optional[Tuple[str, ...]] = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def describe(self, limit: int = 10) -> List[str]:
        lines = []
        for quad, residual in self.violations[:limit]:
            label = ",".join(self.names[i] for i in quad) if self.names else str(quad)
            lines.append(f"({label}): residual {format_element(residual, self.names)}")
        if len(self.violations) > limit:
            lines.append(f"... {len(self.violations) - limit} more")
        return lines


def format_element(u: Element, names: Optional[Sequence[str]] = None) -> str:
    terms = []
    for k, c in enumerate(u.coefficients):
        if not c:
            continue
        name = names[k] if names else f"b{k}"
        terms.append(name if c == 1 else f"({format_scalar(c)})*{name}")
    return " + ".join(terms) if terms else "0"


class SuperAlgebra:
    """Superalgebra with basis ``basis`` and sparse structure constants."""

    def __init__(self, basis: GradedBasis, table: Mapping[Tuple[int, int], Mapping[int, Scalar]],
                 name: str = "algebra"):
        self.basis = basis
        self.name = name
        n = basis.dim
        clean: Table = {}
        for (i, j), row in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(f"table entry ({i},{j}) outside dimension {n}")
            kept = {}
            for k, c in row.items():
                if not 0 <= k < n:
                    raise DimensionMismatch(f"table result index {k} outside dimension {n}")
                c = to_scalar(c)
                if c:
                    kept[k] = c
            if kept:
                clean[(i, j)] = kept
        self.table: Table = clean
        for (i, j), row in clean.items():
            for k in row:
                if basis.parity(k) != (basis.parity(i) + basis.parity(j)) % 2:
                    raise GradingViolation(
                        f"{basis.names[i]}*{basis.names[j]} has a component along "
                        f"{basis.names[k]} of the wrong parity")

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def parities(self) -> Tuple[int, ...]:
        return self.basis.parities

    def gamma(self, i: int, j: int, k: int) -> Scalar:
        return self.table.get((i, j), {}).get(k, ZERO)

    def basis_element(self, name_or_index) -> Element:
        i = name_or_index if isinstance(name_or_index, int) else self.basis.index(name_or_index)
        return Element.from_sparse(self.dim, {i: ONE})

    def element(self, coeffs: Mapping[str, object]) -> Element:
        return Element.from_sparse(self.dim, {self.basis.index(k): to_scalar(v) for k, v in coeffs.items()})

    def is_symbolic(self) -> bool:
        return any(not c.is_constant for row in self.table.values() for c in row.values())

    def sparse_mul(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        table = self.table
        for p, cu in u.items():
            for q, cv in v.items():
                row = table.get((p, q))
                if row is None:
                    continue
                c = cu * cv
                for r, g in row.items():
                    out[r] = out[r] + c * g if r in out else c * g
        return {k: c for k, c in out.items() if c}

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self.basis == other.basis and self.table == other.table

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, dims={self.basis.dims})"


def product(A: SuperAlgebra, u: Element, v: Element) -> Element:
    if len(u) != A.dim or len(v) != A.dim:
        raise DimensionMismatch(f"elements of length {len(u)}, {len(v)} for an algebra of dimension {A.dim}")
    return Element.from_sparse(A.dim, A.sparse_mul(u.sparse(), v.sparse()))


# -- identity checks -------------------------------------------------------------

def check_supercommutative(A: SuperAlgebra) -> IdentityReport:
    report = IdentityReport(names=A.basis.names)
    par = A.parities
    for i in range(A.dim):
        for j in range(A.dim):
            report.checked += 1
            s = sign(par[i] * par[j])
            residual = {}
            for k in set(A.table.get((i, j), {})) | set(A.table.get((j, i), {})):
                c = A.gamma(i, j, k) - s * A.gamma(j, i, k)
                if c:
                    residual[k] = c
            if residual:
                report.violations.append(((i, j), Element.from_sparse(A.dim, residual)))
    return report


Sparse = Dict[Hashable, Scalar]


def _axpy(acc: Sparse, s: int, x: Sparse):
    for k, c in x.items():
        if k in acc:
            acc[k] = acc[k] + c if s > 0 else acc[k] - c
        else:
            acc[k] = c if s > 0 else -c


def sj2_residuals(parities: Sequence[int], mul: Callable[[Sparse, Sparse], Sparse],
                  basis: Sequence[Sparse], indices: Optional[Sequence[int]] = None
                  ) -> Iterator[Tuple[Tuple[int, int, int, int], Sparse]]:
    """Yield ``(quadruple, LHS - RHS)`` of the super-Jordan identity

        ((ab)c)d + (-1)^{|d|(|c|+|b|)+|b||c|} ((ad)c)b + (-1)^{|a|(|b|+|c|+|d|)+|c||d|} ((bd)c)a
          = (ab)(cd) + (-1)^{|d|(|c|+|b|)} (ad)(bc) + (-1)^{|c||b|} (ac)(bd)

    for every quadruple drawn from ``indices`` (default: all), in lexicographic
    order.  ``mul`` multiplies sparse dicts and ``basis[i]`` is the sparse form
    of basis vector ``i``.  Products are memoized, so this costs O(n^4) sparse
    multiplications rather than 18 per quadruple.
    """
    if indices is None:
        indices = range(len(basis))
    p2: Dict[tuple, Sparse] = {}
    p3: Dict[tuple, Sparse] = {}
    p4: Dict[tuple, Sparse] = {}
    pp: Dict[tuple, Sparse] = {}

    def two(a, b):
        key = (a, b)
        if key not in p2:
            p2[key] = mul(basis[a], basis[b])
        return p2[key]

    def left_nested(a, b, c, d):
        key = (a, b, c, d)
        if key not in p4:
            k3 = (a, b, c)
            if k3 not in p3:
                p3[k3] = mul(two(a, b), basis[c])
            p4[key] = mul(p3[k3], basis[d])
        return p4[key]

    def paired(a, b, c, d):
        key = (a, b, c, d)
        if key not in pp:
            pp[key] = mul(two(a, b), two(c, d))
        return pp[key]

    par = parities
    for a, b, c, d in itertools.product(indices, repeat=4):
        i, j, k, l = par[a], par[b], par[c], par[d]
        acc: Sparse = {}
        _axpy(acc, 1, left_nested(a, b, c, d))
        _axpy(acc, sign(l * (k + j) + j * k), left_nested(a, d, c, b))
        _axpy(acc, sign(i * (j + k + l) + k * l), left_nested(b, d, c, a))
        _axpy(acc, -1, paired(a, b, c, d))
        _axpy(acc, -sign(l * (k + j)), paired(a, d, b, c))
        _axpy(acc, -sign(k * j), paired(a, c, b, d))
        yield (a, b, c, d), {key: v for key, v in acc.items() if v}


def check_jordan(A: SuperAlgebra) -> IdentityReport:
    """Scan every basis quadruple for violations of the super-Jordan identity."""
    report = IdentityReport(names=A.basis.names)
    basis = [{i: ONE} for i in range(A.dim)]
    for quad, residual in sj2_residuals(A.parities, A.sparse_mul, basis):
        report.checked += 1
        if residual:
            report.violations.append((quad, Element.from_sparse(A.dim, residual)))
    return report


# -- catalog ---------------------------------------------------------------------

def builtin_Dt(t="t") -> SuperAlgebra:
    """D_t: even idempotents e1, e2 and odd x, y with xy = e1 + t e2."""
    t = to_scalar(t)
    half = Scalar.const(ONE.value / 2)
    e1, e2, x, y = range(4)
    table: Table = {(e1, e1): {e1: ONE}, (e2, e2): {e2: ONE},
                    (x, y): {e1: ONE, e2: t}, (y, x): {e1: -ONE, e2: -t}}
    for e in (e1, e2):
        for o in (x, y):
            table[(e, o)] = {o: half}
            table[(o, e)] = {o: half}
    name = "D_t" if not t.is_constant else f"D_{format_scalar(t)}"
    return SuperAlgebra(GradedBasis(("e1", "e2"), ("x", "y")), table, name=name)


def builtin_M11plus() -> SuperAlgebra:
    """M_{1|1}(F)^(+): 2x2 matrix units under a.b = (ab + (-1)^{|a||b|} ba) / 2."""
    units = [(0, 0), (1, 1), (0, 1), (1, 0)]  # E11, E22 even; E12, E21 odd
    par = [0, 0, 1, 1]
    half = Scalar.const(ONE.value / 2)
    table: Table = {}
    for a, (r1, c1) in enumerate(units):
        for b, (r2, c2) in enumerate(units):
            row: Dict[int, Scalar] = {}
            if c1 == r2:
                k = units.index((r1, c2))
                row[k] = row.get(k, ZERO) + half
            if c2 == r1:
                k = units.index((r2, c1))
                row[k] = row.get(k, ZERO) + sign(par[a] * par[b]) * half
            table[(a, b)] = row
    return SuperAlgebra(GradedBasis(("E11", "E22"), ("E12", "E21")), table, name="M11plus")


BUILTINS = {"Dt": builtin_Dt, "M11plus": builtin_M11plus}


def specialize_algebra(A: SuperAlgebra, r) -> SuperAlgebra:
    """Evaluate every structure constant at ``t = r``."""
    table = {key: {k: Scalar.const(specialize(c, r)) for k, c in row.items()}
             for key, row in A.table.items()}
    return SuperAlgebra(A.basis, table, name=A.name)


# -- file format -------------------------------------------------------------------

def _require(doc: Mapping, key: str, where: str):
    if not isinstance(doc, Mapping) or key not in doc:
        raise ParseError(f"missing key {key!r}", where)
    return doc[key]


def _name_list(value, where: str) -> Tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError("expected a list of names", where)
    return tuple(value)


def parse_combination(result, basis: GradedBasis, where: str) -> Dict[int, Scalar]:
    """Parse ``{"e1": "1", "e2": "t"}`` into a sparse coefficient dict."""
    if not isinstance(result, Mapping):
        raise ParseError("expected an object of coefficients", where)
    out: Dict[int, Scalar] = {}
    for key, text in result.items():
        if key not in basis.names:
            raise ParseError(f"unknown basis element {key!r}", f"{where}.{key}")
        try:
            c = parse_scalar(text if isinstance(text, str) else str(text))
        except ParseError as exc:
            raise ParseError(f"bad coefficient {text!r}: {exc}", f"{where}.{key}") from None
        if c:
            out[basis.index(key)] = c
    return out


def read_products(entries, left_basis: GradedBasis, right_basis: GradedBasis,
                  result_basis: GradedBasis, section: str, symmetric: bool
                  ) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
    """Parse a list of ``{"left", "right", "result"}`` records.

    With ``symmetric`` (algebra products) an unordered pair may be stated in
    both orders only if the two statements agree up to the super sign.
    """
    if not isinstance(entries, list):
        raise ParseError("expected a list", section)
    seen: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for n, entry in enumerate(entries):
        where = f"{section}[{n}]"
        left = _require(entry, "left", where)
        right = _require(entry, "right", where)
        if left not in left_basis.names:
            raise ParseError(f"unknown element {left!r}", f"{where}.left")
        if right not in right_basis.names:
            raise ParseError(f"unknown element {right!r}", f"{where}.right")
        i, j = left_basis.index(left), right_basis.index(right)
        row = parse_combination(_require(entry, "result", where), result_basis, f"{where}.result")
        target = (left_basis.parity(i) + right_basis.parity(j)) % 2
        for k in row:
            if result_basis.parity(k) != target:
                raise GradingViolation(
                    f"{where}: {left}*{right} must be {'odd' if target else 'even'}, "
                    f"but has a component along {result_basis.names[k]}")
        if (i, j) in seen:
            raise ParseError(f"product {left}*{right} stated twice", where)
        if symmetric:
            s = sign(left_basis.parity(i) * left_basis.parity(j))
            if i == j and s < 0 and row:
                raise InconsistentSymmetricPair(
                    f"{where}: {left}*{left} must vanish for odd {left}")
            if (j, i) in seen:
                expected = {k: s * c for k, c in seen[(j, i)].items()}
                if expected != row:
                    raise InconsistentSymmetricPair(
                        f"{where}: {left}*{right} disagrees with the stated {right}*{left} "
                        f"(super-commutativity requires sign {'+' if s > 0 else '-'})")
        seen[(i, j)] = row
    return seen


def load_algebra(document: Mapping) -> SuperAlgebra:
    """Build an algebra from a parsed AlgebraFile document."""
    if not isinstance(document, Mapping):
        raise ParseError("algebra document must be a JSON object", "$")
    basis = GradedBasis(_name_list(_require(document, "even_basis", "$"), "$.even_basis"),
                        _name_list(_require(document, "odd_basis", "$"), "$.odd_basis"))
    stated = read_products(_require(document, "products", "$"), basis, basis, basis,
                           "$.products", symmetric=True)
    table: Table = {}
    par = basis.parities
    for (i, j), row in stated.items():
        table[(i, j)] = dict(row)
        s = sign(par[i] * par[j])
        if (j, i) not in stated:
            table[(j, i)] = {k: s * c for k, c in row.items()}
    return SuperAlgebra(basis, table, name=str(document.get("name", "algebra")))


def load_json_file(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def read_algebra(path) -> SuperAlgebra:
    return load_algebra(load_json_file(path))


def combination_document(row: Mapping[int, Scalar], names: Sequence[str]) -> Dict[str, str]:
    return {names[k]: format_scalar(c) for k, c in sorted(row.items())}


def algebra_to_document(A: SuperAlgebra) -> dict:
    """Serialize with each unordered pair listed once (left index <= right)."""
    names = A.basis.names
    products = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            row = A.table.get((i, j))
            if row:
                products.append({"left": names[i], "right": names[j],
                                 "result": combination_document(row, names)})
    return {"name": A.name, "even_basis": list(A.basis.even), "odd_basis": list(A.basis.odd),
            "products": products}


# -- homomorphisms -----------------------------------------------------------------

def check_isomorphism(A: SuperAlgebra, B: SuperAlgebra, phi: Sequence[Sequence]) -> bool:
    """``phi[i]`` is the B-coordinate vector of the image of A's basis vector ``i``.

    True iff phi is parity-preserving, invertible and multiplicative on basis pairs.
    """
    from .linalg import rank

    if A.basis.dims != B.basis.dims:
        raise DimensionMismatch(f"graded dimensions {A.basis.dims} and {B.basis.dims} differ")
    n = A.dim
    if len(phi) != n or any(len(row) != n for row in phi):
        raise DimensionMismatch(f"phi must be {n}x{n}")
    images = [{k: to_scalar(c) for k, c in enumerate(row) if to_scalar(c)} for row in phi]
    for i, img in enumerate(images):
        if any(B.basis.parity(k) != A.basis.parity(i) for k in img):
            return False
    if rank([[to_scalar(c) for c in row] for row in phi]) != n:
        return False
    for i in range(n):
        for j in range(n):
            lhs: Dict[int, Scalar] = {}
            for k, c in A.table.get((i, j), {}).items():
                _axpy(lhs, 1, {q: c * v for q, v in images[k].items()})
            lhs = {q: v for q, v in lhs.items() if v}
            if lhs != B.sparse_mul(images[i], images[j]):
                return False
    return True
