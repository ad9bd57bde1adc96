"""Typed upper-ontology schema, relation validation, timeline projection.

A small fixed class lattice (continuants vs occurrents, with the usual
material/quality/disposition/information branches) types the individuals
that a timeline projects to: agents as material agents, sensations as
qualities inhering in their bearers, judgments as acts with a realizing
disposition and an information content entity about the judged target,
and inhibitory control as a disposition of the inhibiting agent.

:func:`validate` checks relation assertions against per-kind domain and
range constraints and reports violations as diagnostics. :func:`export_graph`
renders a graph to a canonical, byte-deterministic text form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .diagnostics import (
    Diagnostic,
    E_ABOUTNESS,
    E_DOMAIN,
    E_DUP_ID,
    E_RANGE,
    E_UNKNOWN_REF,
)
from .intervals import IntervalSet
from .model import Timeline


class BfoClass(Enum):
    CONTINUANT = "Continuant"
    INDEPENDENT_CONTINUANT = "IndependentContinuant"
    SPECIFICALLY_DEPENDENT_CONTINUANT = "SpecificallyDependentContinuant"
    GENERICALLY_DEPENDENT_CONTINUANT = "GenericallyDependentContinuant"
    MATERIAL_ENTITY = "MaterialEntity"
    SPATIAL_REGION = "SpatialRegion"
    AGENT = "Agent"
    QUALITY = "Quality"
    REALIZABLE_ENTITY = "RealizableEntity"
    DISPOSITION = "Disposition"
    OCCURRENT = "Occurrent"
    PROCESS = "Process"
    PROCESS_BOUNDARY = "ProcessBoundary"
    TEMPORAL_INSTANT = "TemporalInstant"
    TEMPORAL_INTERVAL = "TemporalInterval"
    INFORMATION_CONTENT_ENTITY = "InformationContentEntity"


# Fixed single-parent lattice; None marks a root.
_PARENT: dict[BfoClass, BfoClass | None] = {
    BfoClass.CONTINUANT: None,
    BfoClass.OCCURRENT: None,
    BfoClass.INDEPENDENT_CONTINUANT: BfoClass.CONTINUANT,
    BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT: BfoClass.CONTINUANT,
    BfoClass.GENERICALLY_DEPENDENT_CONTINUANT: BfoClass.CONTINUANT,
    BfoClass.MATERIAL_ENTITY: BfoClass.INDEPENDENT_CONTINUANT,
    BfoClass.SPATIAL_REGION: BfoClass.INDEPENDENT_CONTINUANT,
    BfoClass.AGENT: BfoClass.MATERIAL_ENTITY,
    BfoClass.QUALITY: BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT,
    BfoClass.REALIZABLE_ENTITY: BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT,
    BfoClass.DISPOSITION: BfoClass.REALIZABLE_ENTITY,
    BfoClass.INFORMATION_CONTENT_ENTITY: BfoClass.GENERICALLY_DEPENDENT_CONTINUANT,
    BfoClass.PROCESS: BfoClass.OCCURRENT,
    BfoClass.PROCESS_BOUNDARY: BfoClass.OCCURRENT,
    BfoClass.TEMPORAL_INSTANT: BfoClass.OCCURRENT,
    BfoClass.TEMPORAL_INTERVAL: BfoClass.OCCURRENT,
}


def check_subclass(a: BfoClass, b: BfoClass) -> bool:
    """True iff ``a`` is ``b`` or lies below it in the lattice."""
    cursor: BfoClass | None = a
    while cursor is not None:
        if cursor is b:
            return True
        cursor = _PARENT[cursor]
    return False


class RelationKind(Enum):
    INHERES_IN = "inheres_in"
    PARTICIPATES_IN = "participates_in"
    IS_ABOUT = "is_about"
    REALIZED_IN = "realized_in"
    TEMPORAL_PART_OF = "temporal_part_of"
    CONCRETIZED_IN = "concretized_in"
    CAUSALLY_CORRELATED_WITH = "causally_correlated_with"


@dataclass(frozen=True)
class Individual:
    id: str
    cls: BfoClass
    label: str


@dataclass(frozen=True)
class RelationAssertion:
    kind: RelationKind
    subject: str
    object: str
    extent: IntervalSet | None = None

    def render(self) -> str:
        return f"{self.subject} {self.kind.value} {self.object}"


class OntologyGraph(NamedTuple):
    individuals: tuple[Individual, ...]
    relations: tuple[RelationAssertion, ...]


def _not_spatial_independent(cls: BfoClass) -> bool:
    return check_subclass(cls, BfoClass.INDEPENDENT_CONTINUANT) and not check_subclass(
        cls, BfoClass.SPATIAL_REGION
    )


# Per relation kind: (domain predicate, domain description,
#                     range predicate, range description).
_CONSTRAINTS = {
    RelationKind.INHERES_IN: (
        lambda c: check_subclass(c, BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT),
        "a specifically dependent continuant",
        _not_spatial_independent,
        "an independent continuant that is not a spatial region",
    ),
    RelationKind.PARTICIPATES_IN: (
        lambda c: check_subclass(c, BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT)
        or check_subclass(c, BfoClass.GENERICALLY_DEPENDENT_CONTINUANT)
        or _not_spatial_independent(c),
        "a dependent continuant or a non-spatial independent continuant",
        lambda c: check_subclass(c, BfoClass.PROCESS),
        "a process",
    ),
    RelationKind.IS_ABOUT: (
        lambda c: check_subclass(c, BfoClass.INFORMATION_CONTENT_ENTITY),
        "an information content entity",
        lambda c: True,
        "any individual",
    ),
    RelationKind.REALIZED_IN: (
        lambda c: check_subclass(c, BfoClass.REALIZABLE_ENTITY),
        "a realizable entity",
        lambda c: check_subclass(c, BfoClass.PROCESS),
        "a process",
    ),
    RelationKind.TEMPORAL_PART_OF: (
        lambda c: check_subclass(c, BfoClass.OCCURRENT),
        "an occurrent",
        lambda c: check_subclass(c, BfoClass.OCCURRENT),
        "an occurrent",
    ),
    RelationKind.CONCRETIZED_IN: (
        lambda c: check_subclass(c, BfoClass.GENERICALLY_DEPENDENT_CONTINUANT),
        "a generically dependent continuant",
        lambda c: check_subclass(c, BfoClass.SPECIFICALLY_DEPENDENT_CONTINUANT)
        or check_subclass(c, BfoClass.PROCESS),
        "a specifically dependent continuant or a process",
    ),
    RelationKind.CAUSALLY_CORRELATED_WITH: (
        lambda c: check_subclass(c, BfoClass.QUALITY),
        "a quality",
        lambda c: check_subclass(c, BfoClass.MATERIAL_ENTITY),
        "a material entity",
    ),
}


def validate(
    individuals: Sequence[Individual],
    relations: Sequence[RelationAssertion],
) -> list[Diagnostic]:
    """Check domain/range constraints and information-entity aboutness.

    Dangling subject or object ids are reported (E_UNKNOWN_REF) and skip
    the type checks for that assertion. Every individual typed as an
    information content entity must be the subject of at least one
    is_about assertion. The result is order-independent up to ordering.
    """
    diags: list[Diagnostic] = []
    by_id: dict[str, Individual] = {}
    for ind in individuals:
        if ind.id in by_id:
            diags.append(
                Diagnostic(
                    E_DUP_ID,
                    f"duplicate individual id '{ind.id}'",
                    record=ind.id,
                )
            )
        else:
            by_id[ind.id] = ind

    about_subjects = set()
    for rel in relations:
        handle = rel.render()
        missing = False
        for role, ref in (("subject", rel.subject), ("object", rel.object)):
            if ref not in by_id:
                diags.append(
                    Diagnostic(
                        E_UNKNOWN_REF,
                        f"{role} '{ref}' of {rel.kind.value} is not a "
                        f"declared individual",
                        record=handle,
                    )
                )
                missing = True
        if missing:
            continue
        if rel.kind is RelationKind.IS_ABOUT:
            about_subjects.add(rel.subject)
        dom_ok, dom_text, rng_ok, rng_text = _CONSTRAINTS[rel.kind]
        subject_cls = by_id[rel.subject].cls
        object_cls = by_id[rel.object].cls
        if not dom_ok(subject_cls):
            diags.append(
                Diagnostic(
                    E_DOMAIN,
                    f"{rel.kind.value} subject '{rel.subject}' is "
                    f"{subject_cls.value}, expected {dom_text}",
                    record=handle,
                )
            )
        if not rng_ok(object_cls):
            diags.append(
                Diagnostic(
                    E_RANGE,
                    f"{rel.kind.value} object '{rel.object}' is "
                    f"{object_cls.value}, expected {rng_text}",
                    record=handle,
                )
            )

    for ind in by_id.values():
        if (
            check_subclass(ind.cls, BfoClass.INFORMATION_CONTENT_ENTITY)
            and ind.id not in about_subjects
        ):
            diags.append(
                Diagnostic(
                    E_ABOUTNESS,
                    f"information content entity '{ind.id}' has no "
                    f"is_about assertion",
                    record=ind.id,
                )
            )
    return diags


def project_timeline(timeline: Timeline) -> OntologyGraph:
    """Emit the individual/relation graph a timeline describes.

    Agents become Agent individuals. Each sensation becomes a Quality
    inhering in its bearer and causally correlated with its correlate.
    Each judgment becomes an act (Process) with a realizing Disposition
    inhering in the judge, the judge participating in the act, and an
    information content entity about the judged target; when the target
    is a sensation, the content is additionally about that sensation's
    correlate, since judging the sensation valuable reaches the person it
    is correlated with. Agents with inhibition episodes get one
    inhibitory-control Disposition each. The timeline must be valid; the
    emitted graph then validates cleanly.
    """
    individuals: list[Individual] = []
    relations: list[RelationAssertion] = []

    for name in timeline.agents:
        individuals.append(Individual(name, BfoClass.AGENT, name))

    sensations = {ep.id: ep for ep in timeline.sensations}
    for ep in timeline.sensations:
        individuals.append(
            Individual(
                ep.id,
                BfoClass.QUALITY,
                f"{ep.valence.value} sensation of {ep.bearer} "
                f"correlated with {ep.correlate}",
            )
        )
        relations.append(
            RelationAssertion(RelationKind.INHERES_IN, ep.id, ep.bearer)
        )
        relations.append(
            RelationAssertion(
                RelationKind.CAUSALLY_CORRELATED_WITH, ep.id, ep.correlate
            )
        )

    for j in timeline.judgments:
        act_id = f"act_{j.id}"
        disp_id = f"disp_{j.id}"
        ice_id = f"ice_{j.id}"
        individuals.append(
            Individual(act_id, BfoClass.PROCESS, f"act of judgment by {j.agent}")
        )
        individuals.append(
            Individual(
                disp_id, BfoClass.DISPOSITION, f"judgment disposition of {j.agent}"
            )
        )
        individuals.append(
            Individual(
                ice_id,
                BfoClass.INFORMATION_CONTENT_ENTITY,
                f"content of judgment {j.id}",
            )
        )
        relations.append(
            RelationAssertion(RelationKind.INHERES_IN, disp_id, j.agent)
        )
        relations.append(
            RelationAssertion(RelationKind.REALIZED_IN, disp_id, act_id)
        )
        relations.append(
            RelationAssertion(RelationKind.PARTICIPATES_IN, j.agent, act_id)
        )
        relations.append(
            RelationAssertion(RelationKind.IS_ABOUT, ice_id, j.target)
        )
        target = sensations.get(j.target)
        if target is not None:
            relations.append(
                RelationAssertion(RelationKind.IS_ABOUT, ice_id, target.correlate)
            )

    inhibitors: list[str] = []
    for inh in timeline.inhibitions:
        if inh.agent not in inhibitors:
            inhibitors.append(inh.agent)
    for agent in inhibitors:
        disp_id = f"inhib_{agent}"
        individuals.append(
            Individual(
                disp_id, BfoClass.DISPOSITION, f"inhibitory control of {agent}"
            )
        )
        relations.append(RelationAssertion(RelationKind.INHERES_IN, disp_id, agent))

    return OntologyGraph(tuple(individuals), tuple(relations))


def export_graph(graph: OntologyGraph) -> str:
    """Render a graph as canonical text: declarations, then assertions.

    One declaration per line ``individual <id> <class-tag> "<label>"`` and
    one assertion per line ``<subject> <kind> <object>``, each block in
    lexicographic order, so equal graphs export byte-identically.
    """
    lines = sorted(
        f'individual {ind.id} {ind.cls.value} "{ind.label}"'
        for ind in graph.individuals
    )
    lines.extend(sorted(rel.render() for rel in graph.relations))
    return "".join(line + "\n" for line in lines)
