"""Document formats and the analysis orchestrator.

Documents are JSON objects dispatched on a ``kind`` field:

- ``model``: explicit generators/differential/cutoff;
- ``homogeneous`` / ``biquotient``: a group pair with restriction maps
  (polynomial strings over the subgroup's classifying generators, or a
  named standard embedding);
- ``diagram``: a cohomogeneity-one group diagram, with the restriction
  maps written over the principal classifying generators plus the
  sphere classes ``ep``/``em``;
- ``betti``: a bare Betti table (K-theory input).

Polynomials use the grammar ``coef*gen^k*...`` joined by ``+``/``-``
with integer or ``a/b`` coefficients.  Reports echo fully resolved
inputs (groups inline, maps explicit, cutoff fixed), so they are
self-contained and re-runnable; identical inputs give byte-identical
structured reports.
"""

from __future__ import annotations

import json
from dataclasses import asdict

from . import catalog, criteria, ktheory
from . import cohomology as ch
from .cdga import SullivanAlgebra
from .errors import SchemaError
from .models import (
    GroupData,
    GroupDiagram,
    RestrictionMap,
    biquotient_model,
    borel_model_cohomogeneity_one,
    cohomogeneity_one_model,
)

SCHEMA_KINDS = ("model", "homogeneous", "biquotient", "diagram", "betti")


def _require(doc: dict, key: str, kind, path: str):
    if key not in doc:
        raise SchemaError(f"{path}: missing key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"{path}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def load_group(obj, path: str) -> GroupData:
    """A group reference: a catalog name or an inline description."""
    if isinstance(obj, str):
        return catalog.lookup(obj)
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected a catalog name or a group object")
    name = _require(obj, "name", str, path)
    rank = _require(obj, "rank", int, path)
    dim = _require(obj, "dim", int, path)
    degrees = _require(obj, "degrees", list, path)
    flags = obj.get("flags", {})
    if not isinstance(flags, dict):
        raise SchemaError(f"{path}.flags: expected an object")
    return GroupData(
        name,
        rank,
        dim,
        tuple(degrees),
        connected=bool(flags.get("connected", True)),
        pi1_torsion_free=bool(flags.get("pi1_torsion_free", False)),
        steinberg=bool(flags.get("steinberg", False)),
    )


def group_document(g: GroupData) -> dict:
    return {
        "name": g.name,
        "rank": g.rank,
        "dim": g.dimension,
        "degrees": list(g.exterior_degrees),
        "flags": {
            "connected": g.connected,
            "pi1_torsion_free": g.pi1_torsion_free,
            "steinberg": g.steinberg,
        },
    }


def _load_polynomial_map(obj, path: str) -> dict[str, str]:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object of generator -> polynomial")
    out = {}
    for key, value in obj.items():
        if not isinstance(value, str):
            raise SchemaError(f"{path}.{key}: expected a polynomial string")
        out[key] = value
    return out


def _resolve_embedding(doc: dict, g_ref, h_ref, path: str) -> RestrictionMap:
    embedding = doc.get("embedding", None)
    g = load_group(g_ref, f"{path}.G")
    h = load_group(h_ref, f"{path}.H")
    if embedding is None or isinstance(embedding, str):
        if not isinstance(g_ref, str) or not isinstance(h_ref, str):
            raise SchemaError(
                f"{path}.embedding: named embeddings need catalog group names"
            )
        return catalog.standard_restriction(g_ref, h_ref, embedding)
    return RestrictionMap(g, h, _load_polynomial_map(embedding, f"{path}.embedding"))


def load_homogeneous(doc: dict, path: str = "$") -> tuple[GroupData, GroupData, RestrictionMap]:
    g_ref = _require(doc, "G", None, path)
    h_ref = _require(doc, "H", None, path)
    restriction = _resolve_embedding(doc, g_ref, h_ref, path)
    return restriction.source, restriction.target, restriction


def load_biquotient(doc: dict, path: str = "$") -> tuple[GroupData, GroupData, RestrictionMap]:
    g = load_group(_require(doc, "G", None, path), f"{path}.G")
    h = load_group(_require(doc, "H", None, path), f"{path}.H")
    left = _load_polynomial_map(doc.get("left", {}), f"{path}.left")
    right = _load_polynomial_map(doc.get("right", {}), f"{path}.right")
    return g, h, RestrictionMap(g, h, left, right)


def load_diagram(doc: dict, path: str = "$") -> GroupDiagram:
    g = load_group(_require(doc, "G", None, path), f"{path}.G")
    h = load_group(_require(doc, "H", None, path), f"{path}.H")
    k_minus = load_group(_require(doc, "Kminus", None, path), f"{path}.Kminus")
    k_plus = load_group(_require(doc, "Kplus", None, path), f"{path}.Kplus")
    sphere_dims = _require(doc, "sphere_dims", list, path)
    if len(sphere_dims) != 2 or not all(isinstance(x, int) for x in sphere_dims):
        raise SchemaError(f"{path}.sphere_dims: expected two integers [l-, l+]")
    embeddings = _require(doc, "embeddings", dict, path)
    minus = _load_polynomial_map(
        _require(embeddings, "G->Kminus", dict, f"{path}.embeddings"),
        f"{path}.embeddings.G->Kminus",
    )
    plus = _load_polynomial_map(
        _require(embeddings, "G->Kplus", dict, f"{path}.embeddings"),
        f"{path}.embeddings.G->Kplus",
    )
    return GroupDiagram(g, h, k_minus, k_plus, minus, plus, tuple(sphere_dims))


def load_model(doc: dict, path: str = "$") -> SullivanAlgebra:
    generators = _require(doc, "generators", list, path)
    cutoff = _require(doc, "cutoff", int, path)
    gens = []
    for i, spec in enumerate(generators):
        if (
            not isinstance(spec, list)
            or len(spec) != 2
            or not isinstance(spec[0], str)
            or not isinstance(spec[1], int)
        ):
            raise SchemaError(f"{path}.generators[{i}]: expected [name, degree]")
        gens.append((spec[0], spec[1]))
    differential = doc.get("differential", {})
    if not isinstance(differential, dict):
        raise SchemaError(f"{path}.differential: expected an object")
    return SullivanAlgebra.build(gens, differential, cutoff=cutoff)


def model_document(a: SullivanAlgebra) -> dict:
    return {
        "kind": "model",
        "generators": [[g.name, g.degree] for g in a.generators],
        "differential": {
            g.name: a.format_element(img)
            for g, img in zip(a.generators, a.differential)
            if not img.is_zero
        },
        "cutoff": a.cutoff,
    }


def load_document(doc: dict, path: str = "$"):
    if not isinstance(doc, dict) or not doc:
        raise SchemaError(f"{path}: expected a non-empty document object")
    kind = _require(doc, "kind", str, path)
    if kind not in SCHEMA_KINDS:
        raise SchemaError(f"{path}.kind: unknown kind {kind!r}; expected one of {SCHEMA_KINDS}")
    if kind == "model":
        return kind, load_model(doc, path)
    if kind == "homogeneous":
        return kind, load_homogeneous(doc, path)
    if kind == "biquotient":
        return kind, load_biquotient(doc, path)
    if kind == "diagram":
        return kind, load_diagram(doc, path)
    betti = _require(doc, "betti", list, path)
    if not all(isinstance(b, int) and b >= 0 for b in betti):
        raise SchemaError(f"{path}.betti: expected non-negative integers")
    return kind, tuple(betti)


# -- report assembly -----------------------------------------------------


def _pair_input_document(kind: str, g, h, r: RestrictionMap, cutoff: int) -> dict:
    doc = {
        "kind": kind,
        "G": group_document(g),
        "H": group_document(h),
        "cutoff": cutoff,
    }
    if kind == "homogeneous":
        doc["embedding"] = dict(sorted(r.assignment.items()))
    else:
        doc["left"] = dict(sorted(r.assignment.items()))
        doc["right"] = dict(sorted((r.right_assignment or {}).items()))
    return doc


def diagram_document(d: GroupDiagram) -> dict:
    return {
        "kind": "diagram",
        "G": group_document(d.g),
        "H": group_document(d.h),
        "Kminus": group_document(d.k_minus),
        "Kplus": group_document(d.k_plus),
        "sphere_dims": list(d.sphere_dims),
        "embeddings": {
            "G->Kminus": dict(sorted(d.restriction_minus.items())),
            "G->Kplus": dict(sorted(d.restriction_plus.items())),
        },
    }


def _k_report(verdict, flags, betti) -> dict:
    return asdict(ktheory.stabilization_report(verdict, flags, betti))


def _space_summary(a: SullivanAlgebra, betti, table: ch.CohomologyTable | None = None) -> dict:
    table_chi = ch.euler_characteristic(betti)
    fdim = None
    for n in range(len(betti) - 1, -1, -1):
        if betti[n]:
            fdim = n
            break
    summary = {
        "model": model_document(a),
        "betti": list(betti),
        "euler_characteristic": table_chi,
        "chi_pi": a.homotopy_euler_characteristic(),
        "pure": a.is_pure(),
        "formal_dimension": fdim,
    }
    if fdim is not None:
        summary["poincare_duality"] = ch.poincare_duality_holds(betti, fdim)
    if table is None:
        table = ch.cohomology(a)
    summary["representatives"] = {
        str(n): [a.format_element(rep) for rep in table.representatives(n)]
        for n in range(table.cutoff + 1)
        if table.betti[n]
    }
    return summary


def run_analysis(doc: dict, cutoff: int | None = None) -> dict:
    """Run the full analysis for a document and return the structured
    report (a JSON-serializable, deterministically ordered dict)."""
    kind, payload = load_document(doc)
    cutoff = cutoff if cutoff is not None else doc.get("cutoff")
    if kind == "betti":
        k0, k1, ko = ktheory.rational_k_dimensions(payload)
        return {
            "kind": kind,
            "input": {"kind": "betti", "betti": list(payload)},
            "ktheory": {
                "k0_dim": k0,
                "k1_dim": k1,
                "ko_dim": ko,
                "infinite_stable_classes": ktheory.stable_class_infinitude(payload),
                "citations": [ktheory.CITATION_CHERN, ktheory.CITATION_KO],
            },
        }
    if kind == "model":
        if cutoff is not None and cutoff != payload.cutoff:
            payload = SullivanAlgebra(
                payload.generators,
                cutoff,
                {
                    g.name: img
                    for g, img in zip(payload.generators, payload.differential)
                    if not img.is_zero
                },
            )
        return _analyze_model(payload)
    if kind in ("homogeneous", "biquotient"):
        g, h, restriction = payload
        return _analyze_pair(kind, g, h, restriction, cutoff)
    return _analyze_diagram(payload, cutoff, bool(doc.get("allow_disconnected", False)))


def _analyze_model(a: SullivanAlgebra) -> dict:
    betti = ch.betti_numbers(a)
    report = {
        "kind": "model",
        "input": model_document(a),
        "space": _space_summary(a, betti),
        "ktheory": {},
        "citations": [],
    }
    k0, k1, ko = ktheory.rational_k_dimensions(betti)
    report["ktheory"] = {
        "k0_dim": k0,
        "k1_dim": k1,
        "ko_dim": ko,
        "infinite_stable_classes": ktheory.stable_class_infinitude(betti),
    }
    citations = [ktheory.CITATION_CHERN, ktheory.CITATION_KO]
    if a.is_pure():
        lg = ch.lower_grading(a)
        report["space"]["lower_grading"] = [
            {str(i): d for i, d in sorted(lg.dims(n).items())} for n in range(a.cutoff + 1)
        ]
        if ch.top_window_vanishes(a, betti):
            coverage = criteria.pure_h0_equals_heven(a)
            formality = criteria.pure_formality(a, check_elliptic=False)
            report["even_coverage"] = {
                "h0_equals_heven": coverage.h0_equals_heven,
                "chi_pi": coverage.chi_pi,
                "first_uncovered_degree": coverage.first_uncovered_degree,
            }
            report["formality"] = asdict(formality)
            citations.append(coverage.citation)
    report["citations"] = sorted(set(citations))
    return report


def _analyze_pair(kind, g, h, restriction: RestrictionMap, cutoff) -> dict:
    if kind == "homogeneous":
        verdict = criteria.homogeneous_surjectivity(g, h, restriction, cutoff)
    else:
        verdict = criteria.biquotient_surjectivity(g, h, restriction, cutoff)
    space = biquotient_model(g, h, restriction, cutoff)
    betti = ch.betti_numbers(space)
    flags = ktheory.StabilizationFlags.from_homogeneous(g, h)
    report = {
        "kind": kind,
        "input": _pair_input_document(kind, g, h, restriction, space.cutoff),
        "space": _space_summary(space, betti),
        "verdict": asdict(verdict),
        "ktheory": _k_report(verdict, flags, betti),
    }
    report["citations"] = sorted(
        {verdict.citation, *report["ktheory"]["citations"]}
    )
    return report


def _analyze_diagram(diagram: GroupDiagram, cutoff, allow_disconnected: bool) -> dict:
    verdict = criteria.cohomogeneity_one_surjectivity(diagram, cutoff, allow_disconnected)
    space = cohomogeneity_one_model(diagram, cutoff, allow_disconnected)
    package = borel_model_cohomogeneity_one(diagram, cutoff, allow_disconnected)
    betti = ch.betti_numbers(space)
    borel_betti = ch.betti_numbers(package.borel)
    euler = criteria.euler_characteristic_relations(diagram, allow_disconnected)
    applicability = criteria.theorem_a_applicability(diagram)
    flags = ktheory.StabilizationFlags.from_diagram(diagram)
    input_doc = diagram_document(diagram)
    input_doc["cutoff"] = space.cutoff
    if allow_disconnected:
        input_doc["allow_disconnected"] = True
    report = {
        "kind": "diagram",
        "input": input_doc,
        "space": _space_summary(space, betti),
        "borel": {
            "model": model_document(package.borel),
            "betti": list(borel_betti),
        },
        "verdict": asdict(verdict),
        "euler_relations": asdict(euler),
        "theorem_applicability": asdict(applicability),
        "ktheory": _k_report(verdict, flags, betti),
    }
    report["citations"] = sorted(
        {verdict.citation, euler.citation, *report["ktheory"]["citations"]}
    )
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_text(report: dict) -> str:
    """Human-readable rendering; the structured form is the contract."""
    lines = [f"kind: {report['kind']}"]
    space = report.get("space")
    if space:
        lines.append(f"betti: {space['betti']}")
        lines.append(f"euler characteristic: {space['euler_characteristic']}")
        lines.append(f"homotopy euler characteristic: {space['chi_pi']}")
        if space.get("formal_dimension") is not None:
            lines.append(f"formal dimension: {space['formal_dimension']}")
    if "borel" in report:
        lines.append(f"borel betti: {report['borel']['betti']}")
    verdict = report.get("verdict")
    if verdict:
        lines.append(
            "even surjectivity: rank criterion "
            f"{verdict['rank_criterion']}, direct check {verdict['direct_check']}"
            + (
                f", first failing degree {verdict['first_failing_degree']}"
                if verdict["first_failing_degree"] is not None
                else ""
            )
        )
    if "euler_relations" in report:
        er = report["euler_relations"]
        lines.append(
            f"euler identity: chi(M) = {er['chi_m']} = "
            f"{er['chi_orbit_minus']} + {er['chi_orbit_plus']} - {er['chi_principal']}"
        )
    kt = report.get("ktheory")
    if kt:
        lines.append(
            f"rational K-theory: k0 = {kt['k0_dim']}, k1 = {kt['k1_dim']}, "
            f"ko = {kt['ko_dim']}"
        )
        if "stabilization_conclusion" in kt:
            lines.append(f"stabilization: {kt['stabilization_conclusion']}")
    for citation in report.get("citations", []):
        lines.append(f"cites: {citation}")
    return "\n".join(lines) + "\n"
