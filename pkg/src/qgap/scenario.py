"""The two spin-half particle setup: states, observables, verification.

This module wires the abstract machinery to the concrete four-dimensional
pair space. Spin eigenvectors are fixed unnormalized representatives (phase
conventions matter only for golden-output determinism, never for any
predicate), the singlet is built directly from them, and a verification is
an unnormalized projection of the state, which reproduces the separable
post-state without ever introducing irrational normalizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

from .errors import ImpossibleOutcomeError, ShapeError
from .linalg import Matrix, StateVector, inner, state_tensor, tensor_product
from .projectors import Projector
from .propositions import (
    And,
    Atom,
    Axis,
    Direction,
    Particle,
    Population,
    Proposition,
    TruthValueSet,
    Xor,
    classical_solutions,
    compile_proposition,
    population,
    valuate,
)
from .scalars import ONE, GaussianRational, Scalarish, coerce_scalar

if TYPE_CHECKING:
    from .fixtures import AuditSummary

_I = GaussianRational(Fraction(0), Fraction(1))


def pauli(axis: Axis) -> Matrix:
    """The 2x2 spin observable along an axis, entries in {0, +-1, +-i}."""
    if axis is Axis.X:
        return Matrix.from_rows([[0, 1], [1, 0]])
    if axis is Axis.Y:
        return Matrix.from_rows([[0, -_I], [_I, 0]])
    return Matrix.from_rows([[1, 0], [0, -1]])


def pair_observable(axis: Axis) -> Matrix:
    """The two-particle observable: the axis observable on each factor."""
    return tensor_product(pauli(axis), pauli(axis))


@dataclass(frozen=True)
class SpinBasis:
    """Unnormalized +1/-1 eigenvectors of the axis observable, validated on construction."""

    axis: Axis
    up: StateVector
    down: StateVector

    def __post_init__(self) -> None:
        sigma = pauli(self.axis)
        if sigma.apply(self.up) != self.up.entries:
            raise ValueError(f"up vector is not a +1 eigenvector along {self.axis.value}")
        if sigma.apply(self.down) != self.down.scale(-1).entries:
            raise ValueError(f"down vector is not a -1 eigenvector along {self.axis.value}")
        if not inner(self.up, self.down).is_zero:
            raise ValueError(f"spin basis along {self.axis.value} is not orthogonal")

    def vector(self, direction: Direction) -> StateVector:
        return self.up if direction is Direction.UP else self.down


@lru_cache(maxsize=None)
def spin_basis(axis: Axis) -> SpinBasis:
    if axis is Axis.X:
        return SpinBasis(axis, StateVector.of(1, 1), StateVector.of(1, -1))
    if axis is Axis.Y:
        return SpinBasis(axis, StateVector.of(1, _I), StateVector.of(1, -_I))
    return SpinBasis(axis, StateVector.of(1, 0), StateVector.of(0, 1))


def singlet(axis: Axis) -> StateVector:
    """The total-spin-zero pair state, up x down - down x up along the axis.

    Whatever the axis, the result is a nonzero scalar multiple of
    [0, 1, -1, 0]: the singlet is one ray.
    """
    basis = spin_basis(axis)
    a = state_tensor(basis.up, basis.down)
    b = state_tensor(basis.down, basis.up)
    return StateVector(tuple(x - y for x, y in zip(a.entries, b.entries)))


@lru_cache(maxsize=None)
def atom_projector(atom: Atom) -> Projector:
    """The pair-space projector asserting one particle's spin direction.

    The single-particle projector onto the spin eigenvector is tensored
    with the identity on the other factor, giving a rank-2 projector on
    the four-dimensional pair space.
    """
    v = spin_basis(atom.axis).vector(atom.direction)
    outer = (v.as_column() @ v.as_column().conjugate_transpose()).scale(ONE / inner(v, v))
    eye = Matrix.identity(2)
    if atom.particle is Particle.A:
        return Projector(tensor_product(outer, eye))
    return Projector(tensor_product(eye, outer))


def standard_context() -> dict[Atom, Projector]:
    """Projectors for all twelve atoms of the pair space."""
    return {
        Atom(p, ax, d): atom_projector(Atom(p, ax, d))
        for p in Particle
        for ax in Axis
        for d in Direction
    }


def conjunction(axis: Axis, a_dir: Direction, b_dir: Direction) -> Proposition:
    return And(Atom(Particle.A, axis, a_dir), Atom(Particle.B, axis, b_dir))


def different_spins(axis: Axis) -> Proposition:
    """The two particles point opposite ways along the axis (exclusive-or of the two ways)."""
    return Xor(
        conjunction(axis, Direction.UP, Direction.DOWN),
        conjunction(axis, Direction.DOWN, Direction.UP),
    )


def same_spins(axis: Axis) -> Proposition:
    """The two particles point the same way along the axis."""
    return Xor(
        conjunction(axis, Direction.UP, Direction.UP),
        conjunction(axis, Direction.DOWN, Direction.DOWN),
    )


def eigencheck(observable: Matrix, candidate: StateVector, eigenvalue: Scalarish) -> bool:
    """Exact check that observable @ candidate == eigenvalue * candidate."""
    if not observable.is_square:
        raise ShapeError("eigencheck needs a square observable")
    if observable.cols != candidate.dim:
        raise ShapeError(
            f"observable of dim {observable.cols} against vector of dim {candidate.dim}"
        )
    lam = coerce_scalar(eigenvalue)
    return observable.apply(candidate) == tuple(lam * e for e in candidate.entries)


@dataclass(frozen=True)
class TwoParticleSystem:
    """A pair state plus the verifications already applied to it."""

    state: StateVector
    history: tuple[Atom, ...] = ()


def prepare_singlet(axis: Axis = Axis.Z) -> TwoParticleSystem:
    return TwoParticleSystem(singlet(axis))


def verify(system: TwoParticleSystem, atom: Atom) -> TwoParticleSystem:
    """Verification as an unnormalized projection of the state.

    The post-state is the image of the current state under the atom's
    projector; a zero image means the outcome contradicts the state, which
    is an error rather than a state.
    """
    image = atom_projector(atom).matrix.apply(system.state)
    if all(e.is_zero for e in image):
        raise ImpossibleOutcomeError(f"verifying {atom} is impossible in state {system.state}")
    return TwoParticleSystem(StateVector(image), system.history + (atom,))


@dataclass(frozen=True)
class ValuationRecord:
    label: str
    proposition: Proposition
    value: TruthValueSet


@dataclass(frozen=True)
class ScenarioReport:
    """Everything one run produces, reproducible from the recorded states."""

    verify_axis: Axis
    verified_atom: Atom
    query: tuple[Atom, ...]
    prepared_state: StateVector
    post_state: StateVector
    pre_valuations: tuple[ValuationRecord, ...]
    post_valuations: tuple[ValuationRecord, ...]
    classical_population: Population
    super_population: Population
    fixture_summary: "AuditSummary"


_RUN_NOTE = (
    "Populations describe a single run. Verifying another axis happens in a "
    "fresh run on a fresh preparation; per-run populations are not aggregated."
)


def _valuation_records(state: StateVector, entries: Sequence[tuple[str, Proposition]]) -> tuple[ValuationRecord, ...]:
    context = standard_context()
    return tuple(
        ValuationRecord(label, prop, valuate(state, compile_proposition(prop, context)))
        for label, prop in entries
    )


def _classical_query_sets(
    verify_axis: Axis, verified_atom: Atom, query: Sequence[Atom]
) -> list[TruthValueSet]:
    """Admissible value sets per queried atom under bivalent preexisting values.

    The constraints are the ones a singlet preparation justifies along the
    verified axis: the spins differ there, and the verified atom came out
    true. Atoms on other axes float freely over the exclusivity rule, so
    their projections are the indeterminate set.
    """
    pairs = {(a.particle, a.axis) for a in query}
    pairs.add((Particle.A, verify_axis))
    pairs.add((Particle.B, verify_axis))
    atoms = [Atom(p, ax, d) for p, ax in sorted(pairs) for d in Direction]
    constraints: list[tuple[Proposition, int]] = [
        (different_spins(verify_axis), 1),
        (verified_atom, 1),
    ]
    solutions = classical_solutions(constraints, atoms)
    return [
        TruthValueSet.from_values(sorted({sol[a] for sol in solutions}))
        for a in query
    ]


def run_epr(verify_axis: Axis, joint_query: Sequence[Atom]) -> ScenarioReport:
    """One full run: prepare the singlet, verify spin-up for particle A, report.

    The report contrasts the two semantics on the queried atoms: the
    supervaluational populations come from valuating the post-verification
    state, the classical ones from exhaustive enumeration of preexisting
    bivalent values.
    """
    from .fixtures import audit_summary

    query = tuple(joint_query)
    system = prepare_singlet(verify_axis)
    verified_atom = Atom(Particle.A, verify_axis, Direction.UP)
    post = verify(system, verified_atom)

    pre_entries: list[tuple[str, Proposition]] = []
    for ax in Axis:
        pre_entries.append((f"Diff({ax.value})", different_spins(ax)))
        pre_entries.append((f"Same({ax.value})", same_spins(ax)))
        for a_dir, b_dir in (
            (Direction.UP, Direction.DOWN),
            (Direction.DOWN, Direction.UP),
            (Direction.UP, Direction.UP),
            (Direction.DOWN, Direction.DOWN),
        ):
            prop = conjunction(ax, a_dir, b_dir)
            pre_entries.append((str(prop), prop))

    post_entries: list[tuple[str, Proposition]] = [
        (str(Atom(p, ax, d)), Atom(p, ax, d))
        for p in Particle
        for ax in Axis
        for d in Direction
    ]

    super_sets = [
        valuate(post.state, atom_projector(a)) for a in query
    ]
    labels = [str(a) for a in query]

    return ScenarioReport(
        verify_axis=verify_axis,
        verified_atom=verified_atom,
        query=query,
        prepared_state=system.state,
        post_state=post.state,
        pre_valuations=_valuation_records(system.state, pre_entries),
        post_valuations=_valuation_records(post.state, post_entries),
        classical_population=population(
            _classical_query_sets(verify_axis, verified_atom, query), labels
        ),
        super_population=population(super_sets, labels),
        fixture_summary=audit_summary(),
    )


def _population_dict(pop: Population) -> dict:
    return {"labels": list(pop.labels), "tuples": [list(t) for t in pop.tuples]}


def report_to_dict(report: ScenarioReport, semantics: str = "both") -> dict:
    """Plain JSON-ready dictionary; key order is fixed for byte-stable output."""
    populations = {}
    if semantics in ("classical", "both"):
        populations["classical"] = _population_dict(report.classical_population)
    if semantics in ("super", "both"):
        populations["supervaluational"] = _population_dict(report.super_population)
    return {
        "axis": report.verify_axis.value,
        "verified": str(report.verified_atom),
        "query": [str(a) for a in report.query],
        "state": {
            "prepared": [str(e) for e in report.prepared_state.entries],
            "post": [str(e) for e in report.post_state.entries],
        },
        "valuations": {
            "before": {r.label: r.value.value for r in report.pre_valuations},
            "after": {r.label: r.value.value for r in report.post_valuations},
        },
        "populations": populations,
        "fixtures": report.fixture_summary.to_dict(),
        "note": _RUN_NOTE,
    }


def render_report(report: ScenarioReport, semantics: str = "both") -> str:
    """Aligned plain-text view of a run."""
    lines = [
        f"EPR run: singlet pair, verified {report.verified_atom} along axis {report.verify_axis.value}",
        f"  prepared state:          {report.prepared_state}",
        f"  post-verification state: {report.post_state}",
        "",
        "valuations before verification (prepared state)",
    ]
    width = max(len(r.label) for r in report.pre_valuations + report.post_valuations) + 2
    for r in report.pre_valuations:
        lines.append(f"  {r.label.ljust(width)}{r.value}")
    lines.append("")
    lines.append("valuations after verification (post state)")
    for r in report.post_valuations:
        lines.append(f"  {r.label.ljust(width)}{r.value}")
    lines.append("")
    query_text = ", ".join(str(a) for a in report.query)
    lines.append(f"populations for query ({query_text})")
    if semantics in ("classical", "both"):
        lines.append(f"  {'classical'.ljust(width)}{report.classical_population}")
    if semantics in ("super", "both"):
        lines.append(f"  {'supervaluational'.ljust(width)}{report.super_population}")
    summary = report.fixture_summary
    lines.append("")
    lines.append(
        f"fixture audit: {summary.match_count}/{summary.total} transcribed displays match"
        f" the derived values ({len(summary.mismatched)} known discrepancies)"
    )
    lines.append(f"note: {_RUN_NOTE}")
    return "\n".join(lines) + "\n"
