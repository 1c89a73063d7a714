"""Analysis orchestration and the JSON report (schema v1).

Each section of the report is computed independently; a size guard or an
unmet hypothesis in one section becomes an entry under ``warnings`` and the
remaining sections are still produced.  Every value carries a ``status``:

``exact``
    a finite computation, e.g. ``Ass(I^2)`` or the rank of a matrix;
``certified``
    a statement about all powers backed by a theorem named in
    ``certificate``;
``within horizon K``
    a statement checked for powers ``1..K`` only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .errors import CapabilityError, IdealError, InputError
from .graphs import SimpleGraph
from .homology import QQ, GF2, Field, betti_table, depth_value, has_linear_resolution
from .localization import MonomialPrime
from .monomial import MonomialIdeal, PowerTable, format_monomial, is_equigenerated
from .parsing import ParsedIdeal, default_names
from .persistence import persistence_report
from .polymatroid import (analytic_spread, analytic_spread_via_gamma, graphic_spread,
                          is_polymatroidal, localization_spread_check, strip_principal_factors,
                          transversal_gamma_structure)
from .primes import (DEFAULT_HORIZON, LocalizedPowers, ass_profile, first_constant_tail,
                     stable_primes_polymatroidal)
from .relation_graph import components, depth_upper_bounds, linear_relation_graph, socle_witness

SCHEMA = "ideal-persistence-report/v1"
SECTIONS = ("gamma", "spread", "ass", "depth", "persistence")
POLYMATROIDAL_BOUND = "astab(I), dstab(I) < analytic spread for polymatroidal ideals"


def horizon_tag(K: int) -> str:
    return f"within horizon {K}"


@dataclass
class AnalysisConfig:
    max_power: int | None = None
    field: Field = QQ
    checks: tuple = SECTIONS


@dataclass
class Context:
    """Shared state for one analysis: names, powers and localization cache."""

    parsed: ParsedIdeal
    config: AnalysisConfig
    powers: PowerTable = None
    cache: LocalizedPowers = None
    polymatroidal: bool = False
    spread: int | None = None
    horizon: int = DEFAULT_HORIZON
    warnings: list = dc_field(default_factory=list)

    @property
    def ideal(self) -> MonomialIdeal:
        return self.parsed.ideal

    @property
    def names(self) -> tuple:
        return self.parsed.names

    def mono(self, u) -> str:
        return format_monomial(u, self.names)

    def prime(self, P: MonomialPrime) -> str:
        return P.format(self.names)


def _guarded(ctx: Context, section: str, fn):
    try:
        return fn(ctx)
    except CapabilityError as exc:
        ctx.warnings.append({"section": section, "kind": "capability", "message": str(exc)})
    except InputError as exc:
        ctx.warnings.append({"section": section, "kind": "input", "message": str(exc)})
    return None


def _ideal_section(ctx: Context) -> dict:
    I = ctx.ideal
    return {
        "n": I.n,
        "variables": list(ctx.names),
        "generators": [ctx.mono(u) for u in I.generators],
        "generator_count": len(I),
        "equigenerated_degree": is_equigenerated(I),
        "polymatroidal": ctx.polymatroidal,
        "construction": ctx.parsed.construction,
    }


def _gamma_section(ctx: Context) -> dict:
    I = ctx.ideal
    G = linear_relation_graph(I)
    comps = components(G)
    out = {
        "status": "exact",
        "r": comps.r,
        "s": comps.s,
        "edges": [[ctx.names[a], ctx.names[b]] for a, b in G.sorted_edges()],
        "components": [[ctx.names[v] for v in part] for part in comps.parts],
        "depth_upper_bounds": [
            {"power": t, "bound": b, "status": "certified",
             "certificate": "depth S/I^t <= n - t - 1 for t <= r - s (relation graph bound)"}
            for t, b in depth_upper_bounds(I)],
    }
    try:
        w = socle_witness(I)
        out["socle_witness"] = {
            "monomial": ctx.mono(w.monomial),
            "exponents": list(w.monomial),
            "power": w.power,
            "leftover_variable": ctx.names[w.leftover],
            "tree_edges": [[ctx.names[a], ctx.names[b]] for a, b in w.forest.edges],
            "verified_by_membership": w.verified,
            "status": "exact",
        }
    except CapabilityError as exc:
        out["socle_witness"] = {"status": "not applicable", "reason": str(exc)}
    return out


def _spread_section(ctx: Context) -> dict:
    I = ctx.ideal
    value = analytic_spread(I)
    via_gamma = analytic_spread_via_gamma(I)
    out = {
        "value": value,
        "method": "rank of the exponent matrix",
        "status": "exact",
        "relation_graph_value": via_gamma.value,
        "relation_graph_status": "exact" if via_gamma.exact else "lower bound",
    }
    info = ctx.parsed.construction
    if info.get("kind") == "graphic_matroid":
        G = SimpleGraph(info["graph_vertices"], [(a - 1, b - 1) for a, b in info["graph_edges"]])
        out["graphic_formula_value"] = graphic_spread(G)
    if info.get("kind") == "transversal":
        fams = [[i - 1 for i in F] for F in info["families"]]
        u, rest = strip_principal_factors(fams)
        predicted = transversal_gamma_structure(fams, I.n)
        out["transversal"] = {
            "stripped_factor": ctx.mono(tuple(u.get(i, 0) for i in range(I.n))),
            "remaining_families": [[ctx.names[i] for i in F] for F in rest],
            "predicted_gamma_matches": predicted.edges == linear_relation_graph(I).edges,
        }
    if ctx.polymatroidal:
        table = localization_spread_check(I)
        out["localization_bound"] = {
            "holds": table.holds,
            "status": "exact",
            "max_local_spread": max((v for _, v in table.rows), default=0),
        }
    return out


def _stability(value: int, certified: bool, certificate: str, K: int) -> dict:
    if certified:
        return {"value": value, "status": "certified", "certificate": certificate}
    return {"value": value, "status": horizon_tag(K)}


def _ass_section(ctx: Context) -> dict:
    I, K = ctx.ideal, ctx.horizon
    prof = ass_profile(I, K, cache=ctx.cache)
    out = {
        "per_power": [{"power": k + 1, "primes": [ctx.prime(P) for P in sorted(a)], "status": "exact"}
                      for k, a in enumerate(prof.per_power)],
        "astab": _stability(prof.astab_value, prof.certified, POLYMATROIDAL_BOUND, K),
    }
    if ctx.polymatroidal:
        stable = stable_primes_polymatroidal(I)
        out["stable_primes"] = {
            "primes": [ctx.prime(P) for P in sorted(stable)],
            "status": "certified",
            "certificate": "P is stable iff the analytic spread of I(P) equals |P|",
            "agrees_with_profile": (stable == prof.stable_set()) if prof.certified else None,
        }
    return out


def _depth_section(ctx: Context) -> dict:
    I, K, F = ctx.ideal, ctx.horizon, ctx.config.field
    other = GF2 if F == QQ else QQ
    entries = []
    values = []
    differing = []
    for k in range(1, K + 1):
        try:
            dv = depth_value(ctx.powers[k], F)
        except CapabilityError as exc:
            ctx.warnings.append({"section": "depth", "kind": "capability",
                                 "message": f"power {k}: {exc}"})
            break
        values.append(dv.value)
        entries.append({"power": k, "depth": dv.value, "field": F.name, "method": dv.method,
                        "status": "exact"})
        if dv.method == "betti":
            alt = betti_table(ctx.powers[k], other).depth
            if alt != dv.value:
                differing.append({"power": k, "field": other.name, "depth": alt})
    out = {"field": F.name, "per_power": entries, "other_field_values": differing}
    if values:
        value = first_constant_tail(values)
        certified = False
        if ctx.polymatroidal and len(values) >= ctx.spread - 1:
            at = values[ctx.spread - 2] if ctx.spread >= 2 else None
            certified = ctx.spread < 2 or at == I.n - ctx.spread
        out["dstab"] = _stability(value, certified, POLYMATROIDAL_BOUND, len(values))
        out["dstab"]["field"] = F.name
        out["non_increasing"] = {"value": all(a >= b for a, b in zip(values, values[1:])),
                                 "status": horizon_tag(len(values))}
    try:
        out["linear_resolution"] = {"value": has_linear_resolution(I, F), "field": F.name,
                                    "status": "exact"}
    except CapabilityError as exc:
        ctx.warnings.append({"section": "depth", "kind": "capability",
                             "message": f"linear resolution: {exc}"})
    return out


def _persistence_section(ctx: Context) -> dict:
    K = ctx.horizon
    rep = persistence_report(ctx.ideal, K, ctx.powers, ctx.cache)
    tag = horizon_tag(K)

    def strong(res):
        d = {"holds": res.holds, "status": tag}
        if res.witness is not None:
            w = res.witness
            d["witness"] = {"prime": ctx.prime(w.prime), "power": w.power,
                            "monomial": ctx.mono(w.ambient_monomial),
                            "exponents": list(w.ambient_monomial)}
        return d

    return {
        "ratliff": {"values": [{"power": k + 1, "holds": v} for k, v in enumerate(rep.ratliff)],
                    "status": tag},
        "strong_persistence": strong(rep.strong_persistence),
        "weak_witness_condition": strong(rep.weak_witness_condition),
        "persistence_chain": {"values": [{"power": k + 1, "holds": v}
                                         for k, v in enumerate(rep.persistence_chain)],
                              "status": tag},
        "socle_dimensions": {"values": list(rep.socle_dimensions), "status": "exact"},
    }


_BUILDERS = {
    "gamma": _gamma_section,
    "spread": _spread_section,
    "ass": _ass_section,
    "depth": _depth_section,
    "persistence": _persistence_section,
}


def run_analysis(parsed: ParsedIdeal | MonomialIdeal, config: AnalysisConfig | None = None) -> dict:
    """Build the report dictionary for a nonzero proper ideal."""
    if isinstance(parsed, MonomialIdeal):
        parsed = ParsedIdeal(parsed, default_names(parsed.n), {"kind": "explicit"})
    config = config or AnalysisConfig()
    I = parsed.ideal
    if I.is_unit or I.is_zero:
        raise InputError("analysis needs a nonzero proper ideal")
    unknown = set(config.checks) - set(SECTIONS)
    if unknown:
        raise InputError(f"unknown checks {sorted(unknown)}")
    ctx = Context(parsed, config)
    ctx.powers = PowerTable(I)
    ctx.cache = LocalizedPowers(I, ctx.powers)
    ctx.polymatroidal = is_polymatroidal(I)
    if ctx.polymatroidal:
        ctx.spread = analytic_spread(I)
    if config.max_power is not None:
        if config.max_power < 1:
            raise InputError("--max-power must be at least 1")
        ctx.horizon = config.max_power
    elif ctx.polymatroidal:
        ctx.horizon = max(ctx.spread, 1)
    report = {
        "schema": SCHEMA,
        "field": config.field.name,
        "horizon": ctx.horizon,
        "ideal": _ideal_section(ctx),
    }
    for name in SECTIONS:
        if name in config.checks:
            report[name] = _guarded(ctx, name, _BUILDERS[name])
    report["warnings"] = ctx.warnings
    return report


def to_json(report: dict) -> str:
    """Key-sorted, indented JSON text with a trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def counterexamples(report: dict) -> list:
    """Names of checks in the report that found a counterexample."""
    found = []
    p = report.get("persistence") or {}
    if p:
        if not all(e["holds"] for e in p["ratliff"]["values"]):
            found.append("ratliff")
        if not p["strong_persistence"]["holds"]:
            found.append("strong_persistence")
        if not all(e["holds"] for e in p["persistence_chain"]["values"]):
            found.append("persistence")
    return found
