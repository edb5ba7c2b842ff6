"""Jordan superbimodules and split-null extensions.

Only the left action ``b_i . m_p`` is stored.  The right action is always
``m_p . b_i = (-1)^{|i||p|} b_i . m_p``.
"""

from __future__ import annotations

from typing import Dict, Mapping, Optional, Tuple

from .errors import DimensionMismatch, GradingViolation, ParseError
from .field import Scalar, to_scalar
from .superalgebra import (
    GradedBasis,
    IdentityReport,
    SuperAlgebra,
    _name_list,
    _require,
    check_jordan,
    check_supercommutative,
    read_products,
    sign,
)

Action = Dict[Tuple[int, int], Dict[int, Scalar]]


class SuperBimodule:
    """Graded module over ``algebra`` given by its left action."""

    def __init__(self, algebra: SuperAlgebra, basis: GradedBasis,
                 action: Mapping[Tuple[int, int], Mapping[int, Scalar]], name: str = "module"):
        overlap = set(basis.names) & set(algebra.basis.names)
        if overlap:
            raise ParseError(f"module basis names clash with algebra basis: {sorted(overlap)}")
        self.algebra = algebra
        self.basis = basis
        self.name = name
        clean: Action = {}
        n, m = algebra.dim, basis.dim
        for (i, p), row in action.items():
            if not (0 <= i < n and 0 <= p < m):
                raise DimensionMismatch(f"action entry ({i},{p}) out of range")
            kept = {q: to_scalar(c) for q, c in row.items() if to_scalar(c)}
            for q in kept:
                if not 0 <= q < m:
                    raise DimensionMismatch(f"action result index {q} out of range")
                if basis.parity(q) != (algebra.basis.parity(i) + basis.parity(p)) % 2:
                    raise GradingViolation(
                        f"{algebra.basis.names[i]}.{basis.names[p]} has a component along "
                        f"{basis.names[q]} of the wrong parity")
            if kept:
                clean[(i, p)] = kept
        self.action: Action = clean

    @property
    def dim(self) -> int:
        return self.basis.dim

    def left(self, i: int, p: int) -> Dict[int, Scalar]:
        return self.action.get((i, p), {})

    def right(self, p: int, i: int) -> Dict[int, Scalar]:
        s = sign(self.algebra.basis.parity(i) * self.basis.parity(p))
        row = self.action.get((i, p), {})
        return row if s > 0 else {q: -c for q, c in row.items()}

    def __repr__(self):
        return f"SuperBimodule({self.name!r}, dims={self.basis.dims})"


def decorate(name: str) -> str:
    return "~" + name


def regular_bimodule(A: SuperAlgebra) -> SuperBimodule:
    """Reg A: a copy of A's underlying space acted on by multiplication."""
    basis = GradedBasis(tuple(map(decorate, A.basis.even)), tuple(map(decorate, A.basis.odd)))
    return SuperBimodule(A, basis, A.table, name=f"Reg {A.name}")


def zero_bimodule(A: SuperAlgebra, even: int = 0, odd: int = 0) -> SuperBimodule:
    basis = GradedBasis(tuple(f"~m{k}" for k in range(even)),
                        tuple(f"~m{k}" for k in range(even, even + odd)))
    return SuperBimodule(A, basis, {}, name="trivial")


def opposite_bimodule(M: SuperBimodule) -> SuperBimodule:
    """Parity-shifted module with left action ``a . m = (-1)^{|a|} (a . m)``.

    A degree-1 cochain into M is the same data as a degree-0 cochain into this
    module, and its split-null extension is again a genuine superalgebra.
    """
    A = M.algebra
    basis = GradedBasis(M.basis.odd, M.basis.even)
    # module index p in M -> index in the shifted basis
    ne, no = M.basis.dims
    remap = {p: (p + no if p < ne else p - ne) for p in range(M.dim)}
    action: Action = {}
    for (i, p), row in M.action.items():
        s = sign(A.basis.parity(i))
        action[(i, remap[p])] = {remap[q]: s * c for q, c in row.items()}
    shifted = SuperBimodule(A, basis, action, name=f"Pi {M.name}")
    shifted.shift_map = remap
    return shifted


def split_null_extension(A: SuperAlgebra, M: SuperBimodule,
                         extra: Optional[Mapping[Tuple[int, int], Mapping[int, Scalar]]] = None
                         ) -> SuperAlgebra:
    """The algebra A + M with M.M = 0.

    ``extra`` optionally adds ``(i, j) -> {module index: coeff}`` to the
    products of algebra basis vectors (the perturbation by a cochain).
    """
    if M.algebra.dim != A.dim:
        raise DimensionMismatch("module belongs to an algebra of another dimension")
    n = A.dim
    basis = GradedBasis(A.basis.even + M.basis.even, A.basis.odd + M.basis.odd)
    ne_a = len(A.basis.even)
    ne_m = len(M.basis.even)

    def ja(i):  # algebra index -> extension index
        return i if i < ne_a else i + ne_m

    def jm(p):  # module index -> extension index
        return ne_a + p if p < ne_m else n + p

    table: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for (i, j), row in A.table.items():
        table[(ja(i), ja(j))] = {ja(k): c for k, c in row.items()}
    for (i, p), row in M.action.items():
        table[(ja(i), jm(p))] = {jm(q): c for q, c in row.items()}
        table[(jm(p), ja(i))] = {jm(q): c for q, c in M.right(p, i).items()}
    if extra:
        for (i, j), row in extra.items():
            cell = table.setdefault((ja(i), ja(j)), {})
            for q, c in row.items():
                cell[jm(q)] = cell.get(jm(q), to_scalar(0)) + c
    E = SuperAlgebra(basis, table, name=f"{A.name} + {M.name}")
    E.algebra_index = [ja(i) for i in range(n)]
    E.module_index = [jm(p) for p in range(M.dim)]
    return E


def check_bimodule(A: SuperAlgebra, M: SuperBimodule) -> IdentityReport:
    """M is a Jordan superbimodule iff its split-null extension is Jordan."""
    E = split_null_extension(A, M)
    report = check_supercommutative(E)
    if report.passed:
        jordan = check_jordan(E)
        jordan.checked += report.checked
        return jordan
    return report


def load_bimodule(A: SuperAlgebra, document: Mapping) -> SuperBimodule:
    """Read ``{"module_basis": {"even": [...], "odd": [...]}, "actions": [...]}``.

    Each action record ``{"left": <algebra elt>, "right": <module elt>,
    "result": {...}}`` gives a left action ``left . right``.
    """
    if not isinstance(document, Mapping):
        raise ParseError("bimodule document must be a JSON object", "$")
    mb = _require(document, "module_basis", "$")
    basis = GradedBasis(_name_list(_require(mb, "even", "$.module_basis"), "$.module_basis.even"),
                        _name_list(_require(mb, "odd", "$.module_basis"), "$.module_basis.odd"))
    action = read_products(_require(document, "actions", "$"), A.basis, basis, basis,
                           "$.actions", symmetric=False)
    return SuperBimodule(A, basis, action, name=str(document.get("name", "module")))


def bimodule_to_document(M: SuperBimodule) -> dict:
    from .superalgebra import combination_document

    an, mn = M.algebra.basis.names, M.basis.names
    actions = [{"left": an[i], "right": mn[p], "result": combination_document(row, mn)}
               for (i, p), row in sorted(M.action.items())]
    return {"name": M.name, "module_basis": {"even": list(M.basis.even), "odd": list(M.basis.odd)},
            "actions": actions}


__all__ = [
    "SuperBimodule", "regular_bimodule", "zero_bimodule", "opposite_bimodule",
    "split_null_extension", "check_bimodule", "load_bimodule", "bimodule_to_document",
]
