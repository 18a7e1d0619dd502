"""Quotient lattice of quantum formulas under equal pragmatic extension.

Formulas over a chosen atom set are enumerated round by round (one round
per connective-nesting level), but classes rather than raw formulas are
expanded: two formulas whose extensions agree entry-wise within the
merge tolerance fall into one class, so growth is bounded by the class
count instead of being exponential in depth.  A closure pass then makes
the negation/meet/join tables total, synthesizing a representative from
existing ones for any class first produced by an operation.

The resulting structure carries the class order (extension inclusion),
the three operation tables, and bottom/top, and is checked against the
ortholattice laws, the orthomodular law, and order-isomorphism onto its
own projectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ModelError, UnknownNameError
from .formula import (
    AQ,
    Assert,
    AssertiveFormula,
    Atom,
    K,
    N,
    parse_assertive,
    print_formula,
)
from .hilbert import (
    DEFAULT_EPS,
    Projector,
    decode_matrix,
    encode_matrix,
    join,
    leq,
    make_projector,
    meet,
    ortho,
)
from .model import Model

__all__ = [
    "LatticeElement", "QuotientLattice", "LawReport",
    "generate_quotient", "verify_ortholattice", "verify_orthomodular",
    "find_distributivity_violation", "verify_isomorphism",
    "export_lattice", "import_lattice",
]


@dataclass(frozen=True)
class LawReport:
    """One verified law; ``counterexample`` is present exactly when it fails."""

    law: str
    holds: bool
    counterexample: tuple | None = None


@dataclass(frozen=True, eq=False)
class LatticeElement:
    """One equivalence class: canonical formula, projector, and the member
    formulas retained during enumeration.

    Hand-built fixtures may leave ``formula``/``projector`` as None;
    ``synthesized`` marks classes first produced by the closure step
    rather than by the enumeration itself.
    """

    index: int
    formula: AssertiveFormula | None
    projector: Projector | None
    members: tuple[AssertiveFormula, ...] = ()
    synthesized: bool = False

    @property
    def label(self) -> str:
        if self.formula is None:
            return f"#{self.index}"
        return print_formula(self.formula)


@dataclass(eq=False)
class QuotientLattice:
    """Classes with their order matrix and negation/meet/join tables."""

    elements: list[LatticeElement]
    order: np.ndarray       # bool, order[i, j] <=> class i below class j
    neg_table: np.ndarray   # int, involution
    meet_table: np.ndarray  # int, greatest lower bound
    join_table: np.ndarray  # int, least upper bound
    bottom: int
    top: int
    eps: float = DEFAULT_EPS
    class_tol: float = 10 * DEFAULT_EPS  # projector distance that merges classes

    def __len__(self) -> int:
        return len(self.elements)

    def projector(self, index: int) -> Projector:
        p = self.elements[index].projector
        if p is None:
            raise ValueError(f"class {index} carries no projector")
        return p


# ---------------------------------------------------------------------------
# generation


class _ClassTable:
    """Classes discovered so far, deduplicated by projector distance."""

    def __init__(self, tol: float):
        self.tol = tol
        self.projs: list[Projector] = []
        self.members: list[list[AssertiveFormula]] = []
        self.synthesized: list[bool] = []

    def find(self, p: Projector) -> int | None:
        for i, q in enumerate(self.projs):
            if float(np.max(np.abs(q.matrix - p.matrix))) <= self.tol:
                return i
        return None

    def add(self, p: Projector, formula: AssertiveFormula,
            synthesized: bool = False) -> int:
        i = self.find(p)
        if i is None:
            self.projs.append(p)
            self.members.append([formula])
            self.synthesized.append(synthesized)
            return len(self.projs) - 1
        if formula not in self.members[i]:
            self.members[i].append(formula)
        return i


def generate_quotient(model: Model, atoms, depth: int) -> QuotientLattice:
    """Build the quotient lattice generated by ``atoms`` up to ``depth``.

    ``depth`` counts connective nesting: round 1 applies N/K/AQ to the
    elementary assertions, round 2 to everything discovered so far, and
    so on.  Each class's canonical representative is the shortlex-least
    printed formula among its enumerated members.  The closure pass
    afterwards adds any class an operation can still produce, so the
    returned tables are total; with enough depth the closure finds nothing
    new (saturation).
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    atoms = [str(a) for a in atoms]
    if not atoms:
        raise ValueError("need at least one atom")
    for a in atoms:
        if a not in model.atom_map:
            raise UnknownNameError(f"unknown atom {a!r}")

    tol = 10.0 * model.eps
    table = _ClassTable(tol)
    for a in atoms:
        table.add(model.atom_projector(a), Assert(Atom(a)))

    # enumeration: operands come from the snapshot taken at round start,
    # built from each class's first-discovered formula
    for _ in range(depth):
        count = len(table.projs)
        snapshot = [(table.projs[i], table.members[i][0]) for i in range(count)]
        for p, f in snapshot:
            table.add(ortho(p), N(f))
        for p, f in snapshot:
            for q, g in snapshot:
                table.add(meet(p, q, eps=model.eps), K(f, g))
        for p, f in snapshot:
            for q, g in snapshot:
                table.add(join(p, q, eps=model.eps), AQ(f, g))

    # shortlex: plain lexicographic order would favor longer members, since
    # "(" sorts below every other formula character
    def shortlex(f: AssertiveFormula):
        text = print_formula(f)
        return (len(text), text)

    reps: list[AssertiveFormula] = [
        min(members, key=shortlex) for members in table.members
    ]

    # closure: make every operation land on a known class
    changed = True
    while changed:
        changed = False
        count = len(table.projs)
        for i in range(count):
            p = ortho(table.projs[i])
            if table.find(p) is None:
                table.add(p, N(reps[i]), synthesized=True)
                reps.append(N(reps[i]))
                changed = True
        for i in range(count):
            for j in range(count):
                p = meet(table.projs[i], table.projs[j], eps=model.eps)
                if table.find(p) is None:
                    table.add(p, K(reps[i], reps[j]), synthesized=True)
                    reps.append(K(reps[i], reps[j]))
                    changed = True
                p = join(table.projs[i], table.projs[j], eps=model.eps)
                if table.find(p) is None:
                    table.add(p, AQ(reps[i], reps[j]), synthesized=True)
                    reps.append(AQ(reps[i], reps[j]))
                    changed = True

    n = len(table.projs)
    projs = table.projs

    def locate(p: Projector) -> int:
        i = table.find(p)
        if i is None:
            raise RuntimeError("operation escaped the closed class set")
        return i

    order = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            order[i, j] = leq(projs[i], projs[j], model.eps)
    neg_table = np.array([locate(ortho(projs[i])) for i in range(n)], dtype=int)
    meet_table = np.zeros((n, n), dtype=int)
    join_table = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            meet_table[i, j] = locate(meet(projs[i], projs[j], eps=model.eps))
            join_table[i, j] = locate(join(projs[i], projs[j], eps=model.eps))
    bottom = next(i for i in range(n) if projs[i].rank == 0)
    top = next(i for i in range(n) if projs[i].rank == projs[i].dim)

    elements = [
        LatticeElement(i, reps[i], projs[i], tuple(table.members[i]),
                       table.synthesized[i])
        for i in range(n)
    ]
    return QuotientLattice(
        elements=elements,
        order=order,
        neg_table=neg_table,
        meet_table=meet_table,
        join_table=join_table,
        bottom=bottom,
        top=top,
        eps=model.eps,
        class_tol=tol,
    )


# ---------------------------------------------------------------------------
# law verification (pure table checks; fixtures without projectors work too)


def verify_ortholattice(lat: QuotientLattice) -> list[LawReport]:
    """Involution, De Morgan, complement, and absorption, over all classes."""
    n = len(lat)
    neg, mt, jt = lat.neg_table, lat.meet_table, lat.join_table

    def first_failure_unary(pred):
        for x in range(n):
            if not pred(x):
                return (x,)
        return None

    def first_failure_binary(pred):
        for x in range(n):
            for y in range(n):
                if not pred(x, y):
                    return (x, y)
        return None

    checks = [
        ("involution", first_failure_unary(lambda x: neg[neg[x]] == x)),
        ("de-morgan", first_failure_binary(
            lambda x, y: neg[mt[x, y]] == jt[neg[x], neg[y]]
            and neg[jt[x, y]] == mt[neg[x], neg[y]])),
        ("complement", first_failure_unary(
            lambda x: mt[x, neg[x]] == lat.bottom and jt[x, neg[x]] == lat.top)),
        ("absorption", first_failure_binary(
            lambda x, y: mt[x, jt[x, y]] == x and jt[x, mt[x, y]] == x)),
    ]
    return [LawReport(name, failure is None, failure) for name, failure in checks]


def verify_orthomodular(lat: QuotientLattice) -> LawReport:
    """x below y implies y = x join (neg x meet y), over all ordered pairs."""
    n = len(lat)
    for x in range(n):
        for y in range(n):
            if lat.order[x, y]:
                if lat.join_table[x, lat.meet_table[lat.neg_table[x], y]] != y:
                    return LawReport("orthomodular", False, (x, y))
    return LawReport("orthomodular", True)


def find_distributivity_violation(lat: QuotientLattice) -> tuple[int, int, int] | None:
    """First triple, scanning class indices lexicographically, where
    a meet (b join c) differs from (a meet b) join (a meet c)."""
    n = len(lat)
    mt, jt = lat.meet_table, lat.join_table
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mt[a, jt[b, c]] != jt[mt[a, b], mt[a, c]]:
                    return (a, b, c)
    return None


def verify_isomorphism(lat: QuotientLattice) -> LawReport:
    """The class-to-projector map is an order isomorphism.

    Checks injectivity (projectors distinct beyond eps), that the class
    order coincides with subspace inclusion both ways, and that the three
    tables commute with ortho/meet/join on projectors (within the class
    merge tolerance).  The counterexample tuple names the failed aspect.
    """
    n = len(lat)
    projs = [lat.projector(i) for i in range(n)]
    dist = lambda p, q: float(np.max(np.abs(p.matrix - q.matrix)))

    for i in range(n):
        for j in range(i + 1, n):
            if dist(projs[i], projs[j]) <= lat.eps:
                return LawReport("order-isomorphism", False, ("injective", i, j))
    for i in range(n):
        for j in range(n):
            if bool(lat.order[i, j]) != leq(projs[i], projs[j], lat.eps):
                return LawReport("order-isomorphism", False, ("order", i, j))
    for i in range(n):
        if dist(projs[lat.neg_table[i]], ortho(projs[i])) > lat.class_tol:
            return LawReport("order-isomorphism", False, ("negation", i))
    for i in range(n):
        for j in range(n):
            if dist(projs[lat.meet_table[i, j]],
                    meet(projs[i], projs[j], eps=lat.eps)) > lat.class_tol:
                return LawReport("order-isomorphism", False, ("meet", i, j))
            if dist(projs[lat.join_table[i, j]],
                    join(projs[i], projs[j], eps=lat.eps)) > lat.class_tol:
                return LawReport("order-isomorphism", False, ("join", i, j))
    return LawReport("order-isomorphism", True)


# ---------------------------------------------------------------------------
# export / import


def export_lattice(lat: QuotientLattice, format: str = "structured"):
    """Render as a Graphviz Hasse diagram (``"dot"``) or a JSON-shaped
    document (``"structured"``) that ``import_lattice`` reads back."""
    if format == "dot":
        return _to_dot(lat)
    if format == "structured":
        return _to_document(lat)
    raise ValueError(f"unknown export format {format!r}")


def _cover_pairs(lat: QuotientLattice):
    n = len(lat)
    order = lat.order
    for i in range(n):
        for j in range(n):
            if i == j or not order[i, j]:
                continue
            if any(k != i and k != j and order[i, k] and order[k, j]
                   for k in range(n)):
                continue
            yield i, j


def _to_dot(lat: QuotientLattice) -> str:
    def quote(label: str) -> str:
        return label.replace("\\", "\\\\").replace('"', '\\"')

    lines = ["digraph quotient_lattice {", "  rankdir=BT;"]
    for e in lat.elements:
        lines.append(f'  n{e.index} [label="{quote(e.label)}"];')
    for i, j in _cover_pairs(lat):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_document(lat: QuotientLattice) -> dict:
    elements = []
    for e in lat.elements:
        elements.append({
            "index": e.index,
            "formula": None if e.formula is None else print_formula(e.formula),
            "synthesized": bool(e.synthesized),
            "members": [print_formula(m) for m in e.members],
            "rank": None if e.projector is None else int(e.projector.rank),
            "projector": None if e.projector is None
            else encode_matrix(e.projector.matrix),
        })
    return {
        "eps": float(lat.eps),
        "class_tol": float(lat.class_tol),
        "bottom": int(lat.bottom),
        "top": int(lat.top),
        "elements": elements,
        "order": [[bool(v) for v in row] for row in lat.order],
        "neg": [int(v) for v in lat.neg_table],
        "meet": [[int(v) for v in row] for row in lat.meet_table],
        "join": [[int(v) for v in row] for row in lat.join_table],
    }


def import_lattice(document) -> QuotientLattice:
    """Rebuild a lattice from the structured export document."""
    if not isinstance(document, dict):
        raise ModelError("lattice document must be a mapping", code="schema")
    try:
        eps = float(document["eps"])
        class_tol = float(document["class_tol"])
        bottom = int(document["bottom"])
        top = int(document["top"])
        raw_elements = document["elements"]
        order = np.array(document["order"], dtype=bool)
        neg_table = np.array(document["neg"], dtype=int)
        meet_table = np.array(document["meet"], dtype=int)
        join_table = np.array(document["join"], dtype=int)
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed lattice document: {exc}", code="schema") from exc

    n = len(raw_elements)
    if order.shape != (n, n) or meet_table.shape != (n, n) or \
            join_table.shape != (n, n) or neg_table.shape != (n,):
        raise ModelError("lattice tables do not match the element count",
                         code="schema")

    elements = []
    for i, raw in enumerate(raw_elements):
        formula = None
        if raw.get("formula") is not None:
            formula = parse_assertive(raw["formula"])
        projector = None
        if raw.get("projector") is not None:
            projector = make_projector(decode_matrix(raw["projector"]), eps=eps)
        members = tuple(parse_assertive(m) for m in raw.get("members", []))
        elements.append(LatticeElement(
            index=i,
            formula=formula,
            projector=projector,
            members=members,
            synthesized=bool(raw.get("synthesized", False)),
        ))
    return QuotientLattice(
        elements=elements,
        order=order,
        neg_table=neg_table,
        meet_table=meet_table,
        join_table=join_table,
        bottom=bottom,
        top=top,
        eps=eps,
        class_tol=class_tol,
    )
