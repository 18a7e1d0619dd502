"""Model documents: named states, named properties, and the atom map.

A model bundles one physical system: its Hilbert dimension, a finite
sample of named pure states, named properties (projectors), and the atom
interpretation mapping each propositional letter one-to-one onto the
declared properties.  Declared states are only a sample; operations that
quantify over *all* states decide by subspace algebra, never by
enumerating this sample.

Document schema (JSON-shaped)::

    {"dim": int,
     "eps": float?,                       # default 1e-9
     "states": {name: [[re, im], ...]},
     "properties": {name: {"span": [vector, ...]} | {"matrix": [[...]]}},
     "atoms": {atom: property}}

Unknown top-level keys (``name``, ``description``, ...) are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ModelError, ProjectorError, UnknownNameError
from .formula import ATOM_NAME_RE
from .hilbert import (
    DEFAULT_EPS,
    Projector,
    StateVector,
    decode_matrix,
    decode_vector,
    make_projector,
    make_state,
)

__all__ = [
    "Finding", "ValidationReport", "Model",
    "load_model", "load_model_file", "validate_model",
    "bundled_model", "bundled_model_document", "bundled_model_names", "qubit_zx",
]


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" or "warning"
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation pass; ``ok`` means no error-level findings."""

    findings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not any(f.severity == "error" for f in self.findings)

    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "error")


@dataclass(frozen=True, eq=False)
class Model:
    """A validated physical system.

    Immutable after load; the atom map sends each atom name to a property
    name, bijectively onto the declared properties.
    """

    dim: int
    states: dict[str, StateVector]
    properties: dict[str, Projector]
    atom_map: dict[str, str]
    eps: float = DEFAULT_EPS

    def state(self, name: str) -> StateVector:
        try:
            return self.states[name]
        except KeyError:
            raise UnknownNameError(f"unknown state {name!r}") from None

    def projector(self, name: str) -> Projector:
        try:
            return self.properties[name]
        except KeyError:
            raise UnknownNameError(f"unknown property {name!r}") from None

    def atom_projector(self, atom: str) -> Projector:
        try:
            return self.properties[self.atom_map[atom]]
        except KeyError:
            raise UnknownNameError(f"unknown atom {atom!r}") from None


# ---------------------------------------------------------------------------
# loading


def _require(document: dict, key: str, kind, code: str = "schema"):
    if key not in document:
        raise ModelError(f"model document is missing {key!r}", code=code)
    value = document[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ModelError(
            f"model document key {key!r} must be {kind}, got {type(value).__name__}",
            code=code,
        )
    return value


def load_model(document) -> Model:
    """Build a validated :class:`Model` from a JSON-shaped mapping.

    States are normalized on load when their norm is within 1e-6 of 1,
    and rejected otherwise.  Properties given as spanning vectors are
    converted to projectors; matrix-form properties are checked to be
    Hermitian and idempotent within the model tolerance.
    """
    if not isinstance(document, dict):
        raise ModelError("model document must be a mapping", code="schema")
    dim = _require(document, "dim", int)
    if dim < 1:
        raise ModelError(f"dim must be a positive integer, got {dim}", code="schema")
    eps = document.get("eps", DEFAULT_EPS)
    if isinstance(eps, bool) or not isinstance(eps, (int, float)) or eps < 0:
        raise ModelError(f"eps must be a non-negative number, got {eps!r}",
                         code="schema")
    eps = float(eps)

    states_doc = _require(document, "states", dict)
    states: dict[str, StateVector] = {}
    for name, entries in states_doc.items():
        try:
            vec = decode_vector(entries)
        except ProjectorError as exc:
            raise ModelError(f"state {name!r}: {exc}", code=exc.code) from exc
        if vec.shape[0] != dim:
            raise ModelError(
                f"state {name!r} has {vec.shape[0]} amplitudes, expected {dim}",
                code="dimension-mismatch",
            )
        try:
            states[name] = make_state(vec)
        except ProjectorError as exc:
            raise ModelError(f"state {name!r}: {exc}", code=exc.code) from exc

    props_doc = _require(document, "properties", dict)
    properties: dict[str, Projector] = {}
    for name, spec in props_doc.items():
        if not isinstance(spec, dict) or len(spec.keys() & {"span", "matrix"}) != 1:
            raise ModelError(
                f"property {name!r} must give exactly one of 'span' or 'matrix'",
                code="schema",
            )
        try:
            if "span" in spec:
                vectors = spec["span"]
                if not isinstance(vectors, list):
                    raise ModelError(
                        f"property {name!r}: 'span' must be a list of vectors",
                        code="schema",
                    )
                properties[name] = make_projector(
                    [decode_vector(v) for v in vectors], dim=dim, eps=eps
                )
            else:
                properties[name] = make_projector(
                    decode_matrix(spec["matrix"]), dim=dim, eps=eps
                )
        except ProjectorError as exc:
            raise ModelError(f"property {name!r}: {exc}", code=exc.code) from exc

    atoms_doc = _require(document, "atoms", dict)
    atom_map: dict[str, str] = {}
    for atom, target in atoms_doc.items():
        if not isinstance(atom, str) or not ATOM_NAME_RE.match(atom):
            raise ModelError(
                f"atom name {atom!r} is not a valid atom lexeme",
                code="invalid-atom-name",
            )
        if not isinstance(target, str) or target not in properties:
            raise ModelError(
                f"atom {atom!r} maps to unknown property {target!r}",
                code="unknown-property",
            )
        atom_map[atom] = target
    if len(set(atom_map.values())) != len(atom_map) or \
            set(atom_map.values()) != set(properties):
        raise ModelError(
            "atom map must be a bijection onto the declared properties",
            code="non-bijective-atom-map",
        )

    return Model(dim=dim, states=states, properties=properties,
                 atom_map=atom_map, eps=eps)


def load_model_file(path) -> Model:
    """Read a JSON model document from ``path`` and load it."""
    text = Path(path).read_text()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: not valid JSON ({exc})", code="schema") from exc
    return load_model(document)


# ---------------------------------------------------------------------------
# validation


def validate_model(model: Model) -> ValidationReport:
    """Re-run every structural invariant; never raises, never mutates.

    A zero tolerance is reported as a warning and replaced by a 1e-12
    floor for the numeric checks themselves.
    """
    findings: list[Finding] = []
    eff = max(model.eps, 1e-12)
    if model.eps <= 0:
        findings.append(Finding(
            "warning", "degenerate-tolerance",
            f"eps = {model.eps} leaves no room for rounding; using 1e-12 floor",
        ))

    for name, s in model.states.items():
        if s.dim != model.dim:
            findings.append(Finding(
                "error", "dimension-mismatch",
                f"state {name!r} has dim {s.dim}, model dim is {model.dim}",
            ))
            continue
        norm = float(np.linalg.norm(s.amplitudes))
        if abs(norm - 1.0) > eff:
            findings.append(Finding(
                "error", "non-unit-state",
                f"state {name!r} has norm {norm:.9g}",
            ))

    for name, p in model.properties.items():
        if p.dim != model.dim:
            findings.append(Finding(
                "error", "dimension-mismatch",
                f"property {name!r} has dim {p.dim}, model dim is {model.dim}",
            ))
            continue
        m = p.matrix
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > eff:
            findings.append(Finding(
                "error", "not-hermitian",
                f"property {name!r}: max |P - P^dagger| = {herm:.3g}",
            ))
        idem = float(np.max(np.abs(m @ m - m)))
        if idem > eff:
            findings.append(Finding(
                "error", "not-idempotent",
                f"property {name!r}: max |P^2 - P| = {idem:.3g}",
            ))
        trace = float(np.trace(m).real)
        if abs(trace - p.rank) > eff * model.dim or not 0 <= p.rank <= p.dim:
            findings.append(Finding(
                "error", "bad-rank",
                f"property {name!r}: rank {p.rank} vs trace {trace:.9g}",
            ))

    for atom, target in model.atom_map.items():
        if not ATOM_NAME_RE.match(atom):
            findings.append(Finding(
                "error", "invalid-atom-name", f"atom name {atom!r}"))
        if target not in model.properties:
            findings.append(Finding(
                "error", "unknown-property",
                f"atom {atom!r} maps to unknown property {target!r}",
            ))
    targets = list(model.atom_map.values())
    if len(set(targets)) != len(targets) or set(targets) != set(model.properties):
        findings.append(Finding(
            "error", "non-bijective-atom-map",
            "atom map is not a bijection onto the declared properties",
        ))

    return ValidationReport(tuple(findings))


# ---------------------------------------------------------------------------
# bundled reference models


def _data_dir():
    return resources.files(__package__) / "data"


def bundled_model_names() -> list[str]:
    """Names of the reference models that ship with the package."""
    return sorted(
        entry.name[:-5]
        for entry in _data_dir().iterdir()
        if entry.name.endswith(".json")
    )


def bundled_model_document(name: str) -> dict:
    entry = _data_dir() / f"{name}.json"
    if not entry.is_file():
        raise UnknownNameError(
            f"no bundled model {name!r}; available: {', '.join(bundled_model_names())}"
        )
    return json.loads(entry.read_text())


def bundled_model(name: str) -> Model:
    """Load one of the reference models by name (see ``bundled_model_names``)."""
    return load_model(bundled_model_document(name))


def qubit_zx() -> Model:
    """The two-dimensional reference model: z/x eigenstates, Ez and Ex lines."""
    return bundled_model("qubit-zx")
