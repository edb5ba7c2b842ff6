"""Second cohomology H^2(J, M) of a Jordan superalgebra, one parity at a time.

A degree-k cochain h is stored as its full coefficient tensor: one unknown per
admissible triple (i, j, q), meaning the coefficient of m_q in h(b_i, b_j).
Cocycle constraints are not transcribed by hand.  They are produced by
evaluating the super-Jordan identity in the extension J + M with product
a*b = ab + h(a, b), where the structure constants h(i, j)_q are formal
unknowns, and reading off the coefficient of every unknown.

Odd cochains: J + M with an odd h is not graded, so the identity's signs are
meaningless there.  A degree-1 cochain into M is instead treated as a
degree-0 cochain into the parity-shifted opposite module (see
:func:`jordancoh.bimodule.opposite_bimodule`).  Coordinates are still reported
in M's basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .bimodule import SuperBimodule, opposite_bimodule, regular_bimodule, split_null_extension
from .errors import (
    ConsistencyError,
    DenominatorVanishes,
    DimensionMismatch,
    JordanCohError,
    LayoutMismatch,
    ParseError,
)
from .field import ONE, ZERO, Scalar, format_scalar, specialize, to_scalar
from .linalg import Echelon, ExactMatrix, column_space_basis, nullspace, quotient_basis, rref
from .superalgebra import (
    Element,
    IdentityReport,
    SuperAlgebra,
    _axpy,
    parse_combination,
    sign,
    sj2_residuals,
    specialize_algebra,
)

DEFAULT_SAMPLES = ("1", "2", "5", "1/2", "-3", "-1")


class CoboundaryVariant(str, enum.Enum):
    """Sign on the a.mu(b) term of the coboundary of a degree-k map mu.

    PRINTED: -mu(ab) + a.mu(b) + mu(a).b for every k.
    SIGNED_ODD: the a.mu(b) term carries (-1)^{k|a|}; same as PRINTED for k = 0.
    """

    PRINTED = "printed"
    SIGNED_ODD = "signed"


class IdentityVariant(str, enum.Enum):
    """Exponent on the last G-term of the four-variable cocycle identity."""

    PRINTED = "printed"   # |d|(|c|+|d|)
    DERIVED = "derived"   # |d|(|c|+|b|), as in the super-Jordan identity


@dataclass(frozen=True)
class CochainLayout:
    parity: int
    columns: Tuple[Tuple[int, int, int], ...]
    algebra_names: Tuple[str, ...]
    module_names: Tuple[str, ...]

    def __len__(self):
        return len(self.columns)

    @property
    def index(self) -> Dict[Tuple[int, int, int], int]:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {c: n for n, c in enumerate(self.columns)}
            object.__setattr__(self, "_index", idx)
        return idx

    def label(self, n: int) -> str:
        i, j, q = self.columns[n]
        return f"h({self.algebra_names[i]},{self.algebra_names[j]})[{self.module_names[q]}]"

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(self.label(n) for n in range(len(self.columns)))


def enumerate_unknowns(A: SuperAlgebra, M: SuperBimodule, k: int) -> CochainLayout:
    k %= 2
    pa, pm = A.parities, M.basis.parities
    cols = tuple((i, j, q) for i in range(A.dim) for j in range(A.dim) for q in range(M.dim)
                 if pm[q] == (pa[i] + pa[j] + k) % 2)
    return CochainLayout(k, cols, A.basis.names, M.basis.names)


@dataclass(frozen=True)
class Cocycle:
    layout: CochainLayout
    coefficients: Tuple[Scalar, ...]

    def __post_init__(self):
        coeffs = tuple(to_scalar(c) for c in self.coefficients)
        if len(coeffs) != len(self.layout):
            raise DimensionMismatch(f"{len(coeffs)} coefficients for a layout of {len(self.layout)}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, layout: CochainLayout) -> "Cocycle":
        return cls(layout, (ZERO,) * len(layout))

    def value(self, i: int, j: int) -> Dict[int, Scalar]:
        """h(b_i, b_j) as a sparse module vector."""
        out = {}
        for n, (a, b, q) in enumerate(self.layout.columns):
            if a == i and b == j and self.coefficients[n]:
                out[q] = self.coefficients[n]
        return out

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "Cocycle") -> "Cocycle":
        _check_layout(self.layout, other.layout)
        return Cocycle(self.layout, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        _check_layout(self.layout, other.layout)
        return Cocycle(self.layout, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, c) -> "Cocycle":
        c = to_scalar(c)
        return Cocycle(self.layout, tuple(c * a for a in self.coefficients))


def _check_layout(a: CochainLayout, b: CochainLayout):
    if a != b:
        raise LayoutMismatch("cochains live on different layouts")


# -- row generation --------------------------------------------------------------

@dataclass(frozen=True)
class Supersymmetry:
    i: int
    j: int
    q: int


@dataclass(frozen=True)
class Jordan:
    quad: Tuple[int, int, int, int]
    q: int


@dataclass
class CocycleSystem:
    layout: CochainLayout
    constraints: ExactMatrix
    provenance: List[object]

    def satisfied_by(self, h: Cocycle) -> bool:
        _check_layout(self.layout, h.layout)
        return not any(self.constraints.apply(h.coefficients))

    def basis_rows(self) -> ExactMatrix:
        """A maximal independent subset of the constraint rows (cached)."""
        cached = self.__dict__.get("_basis_rows")
        if cached is None:
            cached = ExactMatrix.from_rows(_independent_rows(self.constraints),
                                           ncols=len(self.layout))
            self._basis_rows = cached
        return cached

    def failing_rows(self, h: Cocycle) -> List[object]:
        _check_layout(self.layout, h.layout)
        values = self.constraints.apply(h.coefficients)
        return [tag for tag, v in zip(self.provenance, values) if v]


def working_module(M: SuperBimodule, k: int) -> Tuple[SuperBimodule, List[int]]:
    """Module whose degree-0 cochains are M's degree-k cochains, plus the
    index map from M's basis into it."""
    if k % 2 == 0:
        return M, list(range(M.dim))
    W = opposite_bimodule(M)
    return W, [W.shift_map[p] for p in range(M.dim)]


def supersymmetry_rows(A: SuperAlgebra, M: SuperBimodule, layout: CochainLayout,
                       tags: Optional[list] = None) -> ExactMatrix:
    idx = layout.index
    par = A.parities
    rows = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            s = sign(par[i] * par[j])
            for q in range(M.dim):
                if (i, j, q) not in idx:
                    continue
                row = [ZERO] * len(layout)
                row[idx[(i, j, q)]] = row[idx[(i, j, q)]] + ONE
                row[idx[(j, i, q)]] = row[idx[(j, i, q)]] - s
                if any(row):
                    rows.append(row)
                    if tags is not None:
                        tags.append(Supersymmetry(i, j, q))
    return ExactMatrix.from_rows(rows, ncols=len(layout), column_labels=layout.labels)


def _formal_extension(A: SuperAlgebra, M: SuperBimodule, layout: CochainLayout):
    """Multiplication on the extension with formal h, over sparse dicts keyed
    by (basis index, unknown or None)."""
    W, to_w = working_module(M, layout.parity)
    E = split_null_extension(A, W)
    formal: Dict[Tuple[int, int], List[Tuple[int, Scalar, Optional[int]]]] = {
        key: [(r, c, None) for r, c in row.items()] for key, row in E.table.items()}
    ja, jm = E.algebra_index, E.module_index
    for n, (i, j, q) in enumerate(layout.columns):
        formal.setdefault((ja[i], ja[j]), []).append((jm[to_w[q]], ONE, n))

    def mul(u, v):
        out: Dict[tuple, Scalar] = {}
        for (p, cp), x in u.items():
            for (q, cq), y in v.items():
                entries = formal.get((p, q))
                if not entries:
                    continue
                xy = x * y
                for r, g, cg in entries:
                    unknowns = [c for c in (cp, cq, cg) if c is not None]
                    if len(unknowns) > 1:
                        raise JordanCohError("nonlinear term in the cochain expansion")
                    key = (r, unknowns[0] if unknowns else None)
                    val = xy * g
                    out[key] = out[key] + val if key in out else val
        return {key: c for key, c in out.items() if c}

    # extension index of module coordinate q of M
    m_index = {jm[to_w[q]]: q for q in range(M.dim)}
    return E, mul, m_index


def jordan_cocycle_rows(A: SuperAlgebra, M: SuperBimodule, layout: CochainLayout,
                        tags: Optional[list] = None) -> ExactMatrix:
    """Coefficients of the unknowns in the super-Jordan identity, one row per
    (basis quadruple, module coordinate) with a nonzero row."""
    if not len(layout):
        return ExactMatrix((), 0, ())
    E, mul, m_index = _formal_extension(A, M, layout)
    basis = [{(E.algebra_index[i], None): ONE} for i in range(A.dim)]
    rows = []
    for quad, residual in sj2_residuals(A.parities, mul, basis):
        by_coord: Dict[int, Dict[int, Scalar]] = {}
        for (r, col), c in residual.items():
            if col is None:
                raise JordanCohError(
                    f"algebra fails the super-Jordan identity at {quad}; no cocycle system")
            by_coord.setdefault(m_index[r], {})[col] = c
        for q in sorted(by_coord):
            row = [ZERO] * len(layout)
            for col, c in by_coord[q].items():
                row[col] = c
            rows.append(row)
            if tags is not None:
                tags.append(Jordan(quad, q))
    return ExactMatrix.from_rows(rows, ncols=len(layout), column_labels=layout.labels)


def cocycle_system(A: SuperAlgebra, M: SuperBimodule, k: int) -> CocycleSystem:
    layout = enumerate_unknowns(A, M, k)
    tags: list = []
    S = supersymmetry_rows(A, M, layout, tags)
    J = jordan_cocycle_rows(A, M, layout, tags)
    return CocycleSystem(layout, S.stack(J) if len(layout) else S, tags)


def _independent_rows(M: ExactMatrix) -> List[Tuple[Scalar, ...]]:
    # drop rows proportional to an earlier one before eliminating
    seen = set()
    candidates = []
    for row, sparse in zip(M.rows, M.sparse_rows):
        if not sparse:
            continue
        lead = sparse[0][1]
        key = tuple((c, a / lead) for c, a in sparse)
        if key not in seen:
            seen.add(key)
            candidates.append(row)
    ech = Echelon(M.ncols)
    return [candidates[n] for n in ech.extend(candidates)]


def cocycle_space(A: SuperAlgebra, M: SuperBimodule, k: int,
                  system: Optional[CocycleSystem] = None) -> List[Cocycle]:
    system = system or cocycle_system(A, M, k)
    layout = system.layout
    if not len(layout):
        return []
    basis_rows = system.basis_rows()
    kernel = nullspace(basis_rows) if len(basis_rows) \
        else [[ONE if c == n else ZERO for c in range(len(layout))] for n in range(len(layout))]
    return [Cocycle(layout, tuple(v)) for v in kernel]


# -- coboundaries ------------------------------------------------------------------

def coboundary_domain(A: SuperAlgebra, M: SuperBimodule, k: int) -> Tuple[Tuple[int, int], ...]:
    """Unknowns of a degree-k linear map mu: (algebra index a, module index q)."""
    pa, pm = A.parities, M.basis.parities
    return tuple((a, q) for a in range(A.dim) for q in range(M.dim) if pm[q] == (pa[a] + k) % 2)


def coboundary_matrix(A: SuperAlgebra, M: SuperBimodule, k: int,
                      variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD) -> ExactMatrix:
    """Matrix of mu -> delta(mu), (delta mu)(a, b) = -mu(ab) + a.mu(b) + mu(a).b."""
    k %= 2
    variant = CoboundaryVariant(variant)
    layout = enumerate_unknowns(A, M, k)
    domain = coboundary_domain(A, M, k)
    didx = {d: n for n, d in enumerate(domain)}
    par = A.parities
    rows = []
    for (i, j, q) in layout.columns:
        row = [ZERO] * len(domain)
        for m, g in A.table.get((i, j), {}).items():
            if (m, q) in didx:
                row[didx[(m, q)]] -= g
        s = sign(k * par[i]) if variant is CoboundaryVariant.SIGNED_ODD else 1
        for p in range(M.dim):
            if (j, p) in didx:
                c = M.left(i, p).get(q)
                if c:
                    row[didx[(j, p)]] += s * c
            if (i, p) in didx:
                c = M.right(p, j).get(q)
                if c:
                    row[didx[(i, p)]] += c
        rows.append(row)
    labels = tuple(f"mu({A.basis.names[a]})[{M.basis.names[q]}]" for a, q in domain)
    return ExactMatrix.from_rows(rows, ncols=len(domain), column_labels=labels)


def coboundary_space(A: SuperAlgebra, M: SuperBimodule, k: int,
                     variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD,
                     matrix: Optional[ExactMatrix] = None) -> List[Cocycle]:
    layout = enumerate_unknowns(A, M, k)
    C = matrix if matrix is not None else coboundary_matrix(A, M, k, variant)
    if not len(layout) or not C.ncols:
        return []
    return [Cocycle(layout, tuple(v)) for v in column_space_basis(C)]


def coboundary(A: SuperAlgebra, M: SuperBimodule, k: int, mu: Sequence,
               variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD) -> Cocycle:
    """delta(mu) for mu given in :func:`coboundary_domain` coordinates."""
    C = coboundary_matrix(A, M, k, variant)
    return Cocycle(enumerate_unknowns(A, M, k), tuple(C.apply([to_scalar(c) for c in mu])))


# -- the cohomology group ---------------------------------------------------------

@dataclass
class CohomologyReport:
    parity: int
    dim_Z: int
    dim_B: int
    dim_H: int
    Z_basis: List[Cocycle]
    B_basis: List[Cocycle]
    H_representatives: List[Cocycle]
    layout: CochainLayout
    dim_maps: int = 0           # dimension of the space of degree-k maps mu
    dim_kernel: int = 0         # maps with zero coboundary
    variant: str = CoboundaryVariant.SIGNED_ODD.value

    def __post_init__(self):
        assert self.dim_H == self.dim_Z - self.dim_B
        assert len(self.H_representatives) == self.dim_H


def check_coboundaries_are_cocycles(system: CocycleSystem, B: Iterable[Cocycle]) -> None:
    basis = system.basis_rows()
    for n, b in enumerate(B):
        if not len(system.layout) or not any(basis.apply(b.coefficients)):
            continue
        bad = system.failing_rows(b)
        if bad:
            raise ConsistencyError(
                f"coboundary basis vector {n} (parity {system.layout.parity}) violates "
                f"{len(bad)} cocycle constraints, first {bad[0]}")


def cohomology_group(A: SuperAlgebra, M: SuperBimodule, k: int,
                     variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD) -> CohomologyReport:
    k %= 2
    system = cocycle_system(A, M, k)
    Z = cocycle_space(A, M, k, system)
    C = coboundary_matrix(A, M, k, variant)
    B = coboundary_space(A, M, k, variant, matrix=C)
    check_coboundaries_are_cocycles(system, B)
    reps = quotient_basis([z.coefficients for z in Z], [b.coefficients for b in B])
    H = [Cocycle(system.layout, tuple(v)) for v in reps]
    return CohomologyReport(parity=k, dim_Z=len(Z), dim_B=len(B), dim_H=len(Z) - len(B),
                            Z_basis=Z, B_basis=B, H_representatives=H, layout=system.layout,
                            dim_maps=C.ncols, dim_kernel=C.ncols - len(B),
                            variant=CoboundaryVariant(variant).value)


def cohomology(A: SuperAlgebra, M: SuperBimodule, parities: Sequence[int] = (0, 1),
               variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD) -> List[CohomologyReport]:
    return [cohomology_group(A, M, k, variant) for k in parities]


def describe_group(reports: Sequence[CohomologyReport]) -> str:
    """``0 ∔ F^2``-style summary of the graded pieces, in parity order."""
    parts = []
    for r in sorted(reports, key=lambda r: r.parity):
        parts.append("0" if r.dim_H == 0 else "F" if r.dim_H == 1 else f"F^{r.dim_H}")
    return " ∔ ".join(parts)


def verify_representative_span(A: SuperAlgebra, M: SuperBimodule, k: int,
                               expected: Sequence[Cocycle],
                               variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD,
                               report: Optional[CohomologyReport] = None) -> bool:
    """True iff every expected vector is a cocycle and expected + B spans Z."""
    layout = enumerate_unknowns(A, M, k)
    for h in expected:
        if h.layout != layout:
            raise LayoutMismatch(f"expected cochain has parity {h.layout.parity} layout, need {k}")
    report = report or cohomology_group(A, M, k, variant)
    zspan = Echelon(len(layout))
    zspan.extend([z.coefficients for z in report.Z_basis])
    if not all(zspan.contains(h.coefficients) for h in expected):
        return False
    combined = Echelon(len(layout))
    combined.extend([h.coefficients for h in expected] + [b.coefficients for b in report.B_basis])
    return len(combined) == report.dim_Z


# -- extensions and the four-variable identity --------------------------------------

def extension_by_cocycle(A: SuperAlgebra, M: SuperBimodule, h: Cocycle) -> SuperAlgebra:
    """A + M with a*b = ab + h(a, b); for odd h the module part is parity shifted."""
    layout = enumerate_unknowns(A, M, h.layout.parity)
    if h.layout != layout:
        raise DimensionMismatch("cochain does not match the algebra/module layout")
    W, to_w = working_module(M, layout.parity)
    extra: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for (i, j, q), c in zip(layout.columns, h.coefficients):
        if c:
            extra.setdefault((i, j), {})[to_w[q]] = c
    return split_null_extension(A, W, extra)


def _lin(h_value, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Dict[int, Scalar]:
    out: Dict[int, Scalar] = {}
    for i, x in u.items():
        for j, y in v.items():
            _axpy(out, 1, {q: x * y * c for q, c in h_value(i, j).items()})
    return out


def _act(rows_of, m: Mapping[int, Scalar], a: Mapping[int, Scalar]) -> Dict[int, Scalar]:
    out: Dict[int, Scalar] = {}
    for i, x in a.items():
        for p, y in m.items():
            _axpy(out, 1, {q: x * y * c for q, c in rows_of(i, p).items()})
    return out


def paper_identity_check(A: SuperAlgebra, M: SuperBimodule, h: Cocycle,
                         variant: IdentityVariant = IdentityVariant.DERIVED) -> IdentityReport:
    """Evaluate the four-variable identity for h with

        F(a,b,c,d) = h((ab)c, d) + h(ab, c).d + (h(a,b).c).d
        G(a,b,c,d) = h(ab, cd) + h(a,b).(cd) + (ab).h(c,d)

    on all basis quadruples.  Residuals are reported in M's coordinates.
    """
    variant = IdentityVariant(variant)
    k = h.layout.parity
    W, to_w = working_module(M, k)
    from_w = {w: q for q, w in enumerate(to_w)}
    values = {}
    for (i, j, q), c in zip(h.layout.columns, h.coefficients):
        if c:
            values.setdefault((i, j), {})[to_w[q]] = c
    hv = lambda i, j: values.get((i, j), {})
    left = lambda a, m: _act(W.left, m, a)
    right = lambda m, a: _act(lambda i, p: W.right(p, i), m, a)
    mul = A.sparse_mul
    e = [{i: ONE} for i in range(A.dim)]

    def F(a, b, c, d):
        ab = mul(e[a], e[b])
        acc: Dict[int, Scalar] = {}
        _axpy(acc, 1, _lin(hv, mul(ab, e[c]), e[d]))
        _axpy(acc, 1, right(_lin(hv, ab, e[c]), e[d]))
        _axpy(acc, 1, right(right(hv(a, b), e[c]), e[d]))
        return acc

    def G(a, b, c, d):
        ab, cd = mul(e[a], e[b]), mul(e[c], e[d])
        acc: Dict[int, Scalar] = {}
        _axpy(acc, 1, _lin(hv, ab, cd))
        _axpy(acc, 1, right(hv(a, b), cd))
        _axpy(acc, 1, left(ab, hv(c, d)))
        return acc

    par = A.parities
    report = IdentityReport(names=M.basis.names)
    n = A.dim
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    pa, pb, pc, pd = par[a], par[b], par[c], par[d]
                    last = pd * (pc + pd) if variant is IdentityVariant.PRINTED else pd * (pc + pb)
                    acc: Dict[int, Scalar] = {}
                    _axpy(acc, 1, F(a, b, c, d))
                    _axpy(acc, sign(pb * (pc + pd) + pc * pd), F(a, d, c, b))
                    _axpy(acc, sign(pa * (pb + pc + pd) + pc * pd), F(b, d, c, a))
                    _axpy(acc, -1, G(a, b, c, d))
                    _axpy(acc, -sign(pb * pc), G(a, c, b, d))
                    _axpy(acc, -sign(last), G(a, d, b, c))
                    report.checked += 1
                    residual = {from_w[w]: x for w, x in acc.items() if x}
                    if residual:
                        report.violations.append(((a, b, c, d), Element.from_sparse(M.dim, residual)))
    return report


# -- specialization / sampling ------------------------------------------------------

def specialize_bimodule(M: SuperBimodule, A_r: SuperAlgebra, r) -> SuperBimodule:
    action = {key: {q: Scalar.const(specialize(c, r)) for q, c in row.items()}
              for key, row in M.action.items()}
    return SuperBimodule(A_r, M.basis, action, name=M.name)


def specialize_matrix(M: ExactMatrix, r) -> List[List[Scalar]]:
    return [[Scalar.const(specialize(c, r)) for c in row] for row in M.rows]


def module_is_regular(A: SuperAlgebra, M: SuperBimodule) -> bool:
    R = regular_bimodule(A)
    return M.basis == R.basis and M.action == R.action


def sampled_dimensions(A: SuperAlgebra, M: SuperBimodule, samples: Sequence, k: int,
                       variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD
                       ) -> List[Tuple[object, CohomologyReport]]:
    regular = module_is_regular(A, M)
    out = []
    for r in samples:
        r_val = to_scalar(r).value
        try:
            A_r = specialize_algebra(A, r_val)
            M_r = regular_bimodule(A_r) if regular else specialize_bimodule(M, A_r, r_val)
        except DenominatorVanishes:
            raise ConsistencyError(f"cannot specialize at t = {format_scalar(to_scalar(r))}: "
                                   f"a structure constant has a pole there") from None
        out.append((r, cohomology_group(A_r, M_r, k, variant)))
    return out


def check_sampled_agreement(A: SuperAlgebra, M: SuperBimodule, generic: CohomologyReport,
                            samples: Sequence,
                            variant: CoboundaryVariant = CoboundaryVariant.SIGNED_ODD) -> None:
    """Raise ConsistencyError naming the first sample whose dimensions differ."""
    for r, rep in sampled_dimensions(A, M, samples, generic.parity, variant):
        got = (rep.dim_Z, rep.dim_B, rep.dim_H)
        want = (generic.dim_Z, generic.dim_B, generic.dim_H)
        if got != want:
            raise ConsistencyError(
                f"parity {generic.parity}: dimensions (Z,B,H) = {got} at t = "
                f"{format_scalar(to_scalar(r))} differ from the generic {want}")


# -- cocycle exchange documents ---------------------------------------------------

def cocycle_to_document(h: Cocycle) -> dict:
    """Nonzero values of h on unordered pairs (left index <= right)."""
    an, mn = h.layout.algebra_names, h.layout.module_names
    entries = []
    n = len(an)
    for i in range(n):
        for j in range(i, n):
            val = h.value(i, j)
            if val:
                entries.append({"left": an[i], "right": an[j],
                                "value": {mn[q]: format_scalar(c) for q, c in sorted(val.items())}})
    return {"parity": h.layout.parity, "entries": entries}


def cocycle_from_document(document: Mapping, A: SuperAlgebra, M: SuperBimodule,
                          parity: Optional[int] = None) -> Cocycle:
    """Parse a cocycle document; reversed pairs are filled by h(b,a) = (-1)^{|a||b|} h(a,b)."""
    if not isinstance(document, Mapping):
        raise ParseError("cocycle document must be a JSON object", "$")
    if "parity" not in document:
        raise ParseError("missing key 'parity'", "$")
    k = document["parity"]
    if k not in (0, 1):
        raise ParseError(f"parity must be 0 or 1, got {k!r}", "$.parity")
    if parity is not None and k != parity:
        raise LayoutMismatch(f"document has parity {k}, expected {parity}")
    layout = enumerate_unknowns(A, M, k)
    idx = layout.index
    entries = document.get("entries", [])
    if not isinstance(entries, list):
        raise ParseError("expected a list", "$.entries")
    coeffs = [ZERO] * len(layout)
    stated: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    names = A.basis.names
    par = A.parities
    for n, entry in enumerate(entries):
        where = f"$.entries[{n}]"
        if not isinstance(entry, Mapping):
            raise ParseError("expected an object", where)
        for key in ("left", "right", "value"):
            if key not in entry:
                raise ParseError(f"missing key {key!r}", where)
        if entry["left"] not in names or entry["right"] not in names:
            raise ParseError(f"unknown algebra element in {entry['left']!r}*{entry['right']!r}", where)
        i, j = names.index(entry["left"]), names.index(entry["right"])
        val = parse_combination(entry["value"], M.basis, f"{where}.value")
        for q in val:
            if (i, j, q) not in idx:
                raise LayoutMismatch(
                    f"{where}: h({names[i]},{names[j]}) cannot have a component along "
                    f"{M.basis.names[q]} in parity {k}")
        if (i, j) in stated:
            raise ParseError(f"pair ({names[i]},{names[j]}) stated twice", where)
        s = sign(par[i] * par[j])
        if (j, i) in stated and i != j:
            if {q: s * c for q, c in stated[(j, i)].items()} != val:
                raise ParseError(f"pair ({names[i]},{names[j]}) contradicts the reversed entry", where)
        stated[(i, j)] = val
    for (i, j), val in stated.items():
        s = sign(par[i] * par[j])
        for q, c in val.items():
            coeffs[idx[(i, j, q)]] = c
            if (j, i) not in stated and i != j:
                coeffs[idx[(j, i, q)]] = s * c
    return Cocycle(layout, tuple(coeffs))
