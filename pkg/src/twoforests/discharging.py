"""Exact-rational charge ledgers and the discharging audit.

Vertices start at d(v) - 6, faces at 2 d(f) - 6, banks (one per component
of the auxiliary graph) at zero.  Three rules move charge without creating
any: R1 spreads each face's charge uniformly over its incidences, R2 has
every good vertex pay 2/5 per auxiliary triangle containing it into that
component's bank, and R3 has each bank pay 2/5 per component edge to the
bad vertex realizing it.  All arithmetic is fractions.Fraction, so the
zero / positive distinctions the audit rests on are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .embedding import FaceSet
from .graph import Graph
from .triangles import (
    AuxGraph,
    COMPONENT_CYCLE,
    COMPONENT_TREE,
    bad_vertices,
    classify_components,
    degree_census,
)

PHASES = ("initial", "after_R1", "after_R2", "after_R3")

BANK_SHARE = Fraction(2, 5)


@dataclass(frozen=True)
class ChargeLedger:
    """Exact charges per vertex, face, and bank at one phase."""

    vertex_charge: Mapping[int, Fraction]
    face_charge: Mapping[int, Fraction]
    bank_charge: Mapping[int, Fraction]
    phase: str

    def total(self) -> Fraction:
        return (
            sum(self.vertex_charge.values(), Fraction(0))
            + sum(self.face_charge.values(), Fraction(0))
            + sum(self.bank_charge.values(), Fraction(0))
        )

    def _require_phase(self, phase: str) -> None:
        if self.phase != phase:
            raise ValueError(f"expected phase {phase!r}, ledger is at {self.phase!r}")


def initial_charges(g: Graph, faces: FaceSet, h: AuxGraph) -> ChargeLedger:
    """Vertices at d(v) - 6, faces at 2 d(f) - 6, banks at zero."""
    return ChargeLedger(
        vertex_charge={v: Fraction(g.degree(v) - 6) for v in range(g.n)},
        face_charge={i: Fraction(2 * d - 6) for i, d in enumerate(faces.degrees)},
        bank_charge={i: Fraction(0) for i in range(len(h.components()))},
        phase="initial",
    )


def _face_incidences(faces: FaceSet) -> list[dict[int, int]]:
    """Per face: how many corners each vertex occupies on its walk."""
    out = []
    for walk in faces.faces:
        counts: dict[int, int] = {}
        for tail, _ in walk:
            counts[tail] = counts.get(tail, 0) + 1
        out.append(counts)
    return out


def apply_R1(ledger: ChargeLedger, faces: FaceSet) -> ChargeLedger:
    """Each face distributes its charge uniformly per incidence; a vertex
    with k corners on the walk receives k shares.  Faces end at zero."""
    ledger._require_phase("initial")
    vertex = dict(ledger.vertex_charge)
    face = dict(ledger.face_charge)
    for i, counts in enumerate(_face_incidences(faces)):
        d = faces.degrees[i]
        share = face[i] / d
        for v, k in counts.items():
            vertex[v] += share * k
        face[i] = Fraction(0)
    return ChargeLedger(
        vertex_charge=vertex,
        face_charge=face,
        bank_charge=dict(ledger.bank_charge),
        phase="after_R1",
    )


def _bank_of_triangle(h: AuxGraph) -> dict[int, int]:
    """Map node index -> component (bank) index."""
    out = {}
    for bank, comp in enumerate(h.components()):
        for i in comp:
            out[i] = bank
    return out


def apply_R2(ledger: ChargeLedger, g: Graph, h: AuxGraph) -> ChargeLedger:
    """Each good vertex pays 2/5 to a bank once per auxiliary triangle of
    that bank's component containing it."""
    ledger._require_phase("after_R1")
    vertex = dict(ledger.vertex_charge)
    bank = dict(ledger.bank_charge)
    bad = set(bad_vertices(g))
    bank_of = _bank_of_triangle(h)
    for i, tri in enumerate(h.nodes):
        for v in tri:
            if v in bad:
                continue
            vertex[v] -= BANK_SHARE
            bank[bank_of[i]] += BANK_SHARE
    return ChargeLedger(
        vertex_charge=vertex,
        face_charge=dict(ledger.face_charge),
        bank_charge=bank,
        phase="after_R2",
    )


def apply_R3(ledger: ChargeLedger, g: Graph, h: AuxGraph) -> ChargeLedger:
    """Each bank pays 2/5 per component edge to the bad vertex realizing it."""
    ledger._require_phase("after_R2")
    vertex = dict(ledger.vertex_charge)
    bank = dict(ledger.bank_charge)
    bank_of = _bank_of_triangle(h)
    for i, j, v in h.edges:
        b = bank_of[i]
        assert bank_of[j] == b, "auxiliary edge spans two components"
        bank[b] -= BANK_SHARE
        vertex[v] += BANK_SHARE
    return ChargeLedger(
        vertex_charge=vertex,
        face_charge=dict(ledger.face_charge),
        bank_charge=bank,
        phase="after_R3",
    )


def run_discharging(
    g: Graph, faces: FaceSet, h: AuxGraph
) -> tuple[ChargeLedger, ChargeLedger, ChargeLedger, ChargeLedger]:
    """All four ledger phases in order."""
    l0 = initial_charges(g, faces, h)
    l1 = apply_R1(l0, faces)
    l2 = apply_R2(l1, g, h)
    l3 = apply_R3(l2, g, h)
    return l0, l1, l2, l3


# =====================================================================
# Audit
# =====================================================================


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class AuditReport:
    """Per-claim outcomes plus the elements with positive final charge.

    Claims can legitimately fail on inputs outside the intended domain
    (minimum degree below 4, 4-cycles, high genus); failures carry the
    offending element and its exact charge.
    """

    checks: tuple[CheckResult, ...]
    genus: int
    initial_total: Fraction
    positive_witnesses: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def audit(ledger: ChargeLedger, g: Graph, faces: FaceSet, h: AuxGraph) -> AuditReport:
    """Evaluate every claim on the instance at hand.

    Recomputes the whole pipeline to certify conservation, checks the
    topological total, the per-vertex and per-bank bounds, and the
    tree-bank counting identity.
    """
    ledger._require_phase("after_R3")
    l0, l1, l2, l3 = run_discharging(g, faces, h)
    checks: list[CheckResult] = []

    initial_total = l0.total()
    euler = g.n - g.m + len(faces)
    gen = (2 - euler) // 2
    expected = Fraction(12) * (gen - 1)
    checks.append(
        CheckResult(
            name="euler_total",
            passed=initial_total == expected,
            witness=None
            if initial_total == expected
            else f"initial total {initial_total} != 12(g-1) = {expected}",
        )
    )

    totals = [l.total() for l in (l0, l1, l2, l3)]
    conserved = all(t == totals[0] for t in totals) and all(
        dict(a.vertex_charge) == dict(b.vertex_charge)
        and dict(a.face_charge) == dict(b.face_charge)
        and dict(a.bank_charge) == dict(b.bank_charge)
        for a, b in ((l3, ledger),)
    )
    checks.append(
        CheckResult(
            name="conservation",
            passed=conserved,
            witness=None if conserved else f"phase totals {totals}",
        )
    )

    bad_face = next((i for i, c in l3.face_charge.items() if c != 0), None)
    checks.append(
        CheckResult(
            name="faces_zero",
            passed=bad_face is None,
            witness=None
            if bad_face is None
            else f"face {bad_face} final {l3.face_charge[bad_face]}",
        )
    )

    neg = next(
        (v for v in sorted(l3.vertex_charge) if l3.vertex_charge[v] < 0), None
    )
    checks.append(
        CheckResult(
            name="vertex_nonnegative",
            passed=neg is None,
            witness=None if neg is None else f"vertex {neg} final {l3.vertex_charge[neg]}",
        )
    )

    weak5 = next(
        (
            v
            for v in sorted(l3.vertex_charge)
            if g.degree(v) >= 5 and l3.vertex_charge[v] <= 0
        ),
        None,
    )
    checks.append(
        CheckResult(
            name="degree5_positive",
            passed=weak5 is None,
            witness=None
            if weak5 is None
            else f"vertex {weak5} of degree {g.degree(weak5)} final"
            f" {l3.vertex_charge[weak5]}",
        )
    )

    tags = classify_components(h)
    comps = h.components()
    cycle_fail = None
    tree_fail = None
    identity_fail = None
    for bank, (tag, comp) in enumerate(zip(tags, comps)):
        final = l3.bank_charge[bank]
        if tag == COMPONENT_CYCLE and final < 0:
            cycle_fail = f"cycle bank {bank} final {final}"
        if tag == COMPONENT_TREE:
            if final <= 0:
                tree_fail = f"tree bank {bank} final {final}"
            census = degree_census(h, comp)
            n = len(comp)
            received = l2.bank_charge[bank]
            expected_received = BANK_SHARE * n + Fraction(4, 5)
            if (
                census.z1 != census.z3 + 2
                or received != Fraction(4, 5) * census.z1 + BANK_SHARE * census.z2
                or received != expected_received
            ):
                identity_fail = (
                    f"tree bank {bank}: z=({census.z1},{census.z2},{census.z3}),"
                    f" received {received}, expected {expected_received}"
                )
    checks.append(
        CheckResult(name="cycle_bank_nonnegative", passed=cycle_fail is None, witness=cycle_fail)
    )
    checks.append(
        CheckResult(name="tree_bank_positive", passed=tree_fail is None, witness=tree_fail)
    )
    checks.append(
        CheckResult(name="tree_bank_identity", passed=identity_fail is None, witness=identity_fail)
    )

    positives = []
    for v in sorted(l3.vertex_charge):
        if l3.vertex_charge[v] > 0:
            positives.append(f"vertex {v} {l3.vertex_charge[v]}")
    for b in sorted(l3.bank_charge):
        if l3.bank_charge[b] > 0:
            positives.append(f"bank {b} {l3.bank_charge[b]}")
    return AuditReport(
        checks=tuple(checks),
        genus=gen,
        initial_total=initial_total,
        positive_witnesses=tuple(positives),
    )


def dump_ledger(ledgers: tuple[ChargeLedger, ...], genus: int) -> str:
    """Deterministic text table, one line per element and phase, ending
    with the machine-readable total."""
    lines = []
    for ledger in ledgers:
        for kind, charges in (
            ("vertex", ledger.vertex_charge),
            ("face", ledger.face_charge),
            ("bank", ledger.bank_charge),
        ):
            for i in sorted(charges):
                c = charges[i]
                lines.append(f"{kind} {i} {ledger.phase} {c.numerator}/{c.denominator}")
    total = ledgers[-1].total()
    lines.append(f"TOTAL {total.numerator}/{total.denominator} GENUS {genus}")
    return "\n".join(lines) + "\n"
