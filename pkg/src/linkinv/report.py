"""Assemble full analysis reports as plain dictionaries.

The CLI and the HTTP service both render these; keys are stable and all
values are JSON-serializable after passing through json_safe (which
protects integers too large for double-precision consumers).
"""

from __future__ import annotations

from typing import Any

from .alexander import (
    DEGREE_CAP_DEFAULT,
    HomologyProfile,
    alexander_divisor,
    betti_from_divisor,
    betti_subset_formula,
    delta_at_1,
    delta_at_minus1,
    expand_delta,
    milnor_number,
    poly_eval,
    structured_divisor_check,
    uv,
)
from .errors import (
    NonCoprimeError,
    ParameterViolationError,
    WeightExceedsDegreeError,
)
from .obstruct import classify, obstruction_report
from .orlik import orlik_torsion
from .poly import InvertiblePolynomial, decompose, is_atomic
from .transpose import bh_transpose
from .weights import WeightSystem, m2m3_split, solve_weights, suspension_form, well_formed

JSON_INT_LIMIT = 2 ** 53


def json_safe(obj: Any) -> Any:
    """Recursively stringify integers that would lose precision as doubles."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= JSON_INT_LIMIT else obj
    if isinstance(obj, (list, tuple)):
        return [json_safe(x) for x in obj]
    if isinstance(obj, dict):
        return {k: json_safe(v) for k, v in obj.items()}
    return obj


def _block_section(p: InvertiblePolynomial) -> dict[str, Any]:
    atomic = is_atomic(p)
    section: dict[str, Any] = {"atomic": atomic, "blocks": None}
    if atomic:
        dec = decompose(p)
        section["blocks"] = [
            {
                "kind": b.kind,
                "variables": list(b.variables),
                "exponents": list(b.exponents),
                "determinant": b.determinant,
            }
            for b in dec.blocks
        ]
    return section


def homology_section(
    p: InvertiblePolynomial, ws: WeightSystem
) -> tuple[dict[str, Any], HomologyProfile]:
    data = uv(ws)
    divisor = alexander_divisor(data)
    betti = betti_from_divisor(divisor)
    betti_check = betti_subset_formula(data, ws.dim)
    torsion = orlik_torsion(data, ws.dim)
    try:
        milnor: int | None = milnor_number(ws)
    except WeightExceedsDegreeError:
        milnor = None
    d1 = delta_at_1(divisor)
    dm1 = delta_at_minus1(divisor)
    profile = HomologyProfile(
        betti=betti,
        torsion=torsion.nontrivial,
        milnor=milnor if milnor is not None else 0,
        delta_1=d1,
        delta_minus1=dm1,
    )
    section: dict[str, Any] = {
        "u": list(data.u),
        "v": list(data.v),
        "divisor": [[n, c] for n, c in sorted(divisor.int_coeffs().items())],
        "betti": betti,
        "betti_routes_agree": betti == betti_check,
        "milnor": milnor,
        "delta_1": d1,
        "delta_minus1": dm1,
        "torsion": list(torsion.nontrivial),
        "torsion_order": torsion.order,
        # torsion from the graded-root algorithm is only proved for sums
        # of atomic blocks; flag everything else
        "torsion_conjectural": not is_atomic(p),
    }
    split = None
    try:
        split = m2m3_split(ws)
    except NonCoprimeError:
        pass
    if split is not None:
        structured = structured_divisor_check(split)
        section["structured"] = {
            "m2": split.m2,
            "m3": split.m3,
            "alpha": structured.alpha,
            "beta": structured.beta,
            "rational_homology_sphere": structured.is_rational_homology_sphere,
        }
    return section, profile


def obstruction_section(
    p: InvertiblePolynomial, ws: WeightSystem, profile: HomologyProfile
) -> dict[str, Any]:
    link_dim = 2 * ws.dim - 1
    sf = suspension_form(p, ws)
    rep = obstruction_report(sf, ws, profile, link_dim)
    section: dict[str, Any] = {
        "link_dim": link_dim,
        "suspension_form": None,
        "cone_dim": rep.cone_dim,
        "lichnerowicz": {
            "holds": rep.lichnerowicz.holds,
            "lhs": rep.lichnerowicz.lhs,
            "rhs": rep.lichnerowicz.rhs,
        },
        "bvc": {
            "applicable": rep.bvc.applicable,
            "holds": rep.bvc.holds,
            "lhs_scaled": rep.bvc.lhs_scaled,
        },
        "classification": {
            "kind": rep.classification.kind,
            "subtype": rep.classification.subtype,
        },
    }
    if sf is not None:
        section["suspension_form"] = {
            "core": list(sf.core_indices),
            "quadratic": list(sf.quad_indices),
        }
    return section


def full_report(p: InvertiblePolynomial, transpose: bool = False) -> dict[str, Any]:
    """Complete analysis of p, or of its transpose when asked."""
    source = p
    if transpose:
        p = bh_transpose(p)
    ws = solve_weights(p)
    report: dict[str, Any] = {
        "polynomial": str(p),
        "variables": list(p.var_names),
        "matrix": [list(row) for row in p.matrix],
        "determinant": p.determinant,
        "n_vars": p.n_vars,
    }
    if transpose:
        report["transposed_from"] = str(source)
    report.update(_block_section(p))
    report["weights"] = {
        "weights": list(ws.weights),
        "degree": ws.degree,
        "index": ws.index,
        "well_formed": well_formed(ws),
    }
    dual = bh_transpose(p)
    dual_ws = solve_weights(dual)
    report["dual"] = {
        "polynomial": str(dual),
        "weights": list(dual_ws.weights),
        "degree": dual_ws.degree,
        "index": dual_ws.index,
    }
    hsec, profile = homology_section(p, ws)
    report["homology"] = hsec
    report["obstructions"] = obstruction_section(p, ws, profile)
    return report


def oracle_report(
    p: InvertiblePolynomial, max_degree: int = DEGREE_CAP_DEFAULT
) -> dict[str, Any]:
    """Expand the divisor into coefficients and cross-check evaluations.

    Raises DegreeCapError when the expansion would exceed max_degree.
    """
    ws = solve_weights(p)
    data = uv(ws)
    divisor = alexander_divisor(data)
    coeffs = expand_delta(divisor, max_degree=max_degree)
    degree = len(coeffs) - 1
    mu = milnor_number(ws)
    at_1 = poly_eval(coeffs, 1)
    at_m1 = poly_eval(coeffs, -1)
    d1 = delta_at_1(divisor)
    dm1 = delta_at_minus1(divisor)
    return {
        "polynomial": str(p),
        "degree": degree,
        "milnor": mu,
        "degree_matches_milnor": degree == mu,
        "eval_1": at_1,
        "eval_minus1": at_m1,
        "delta_1": d1,
        "delta_minus1": dm1,
        "eval_1_matches": (d1 is None and at_1 != 0) or at_1 == d1,
        "eval_minus1_matches": (dm1 is None and at_m1 != 0) or at_m1 == dm1,
        "leading_coefficients": coeffs[: min(16, len(coeffs))],
    }


def ws_dict(ws: WeightSystem) -> dict[str, Any]:
    return {"weights": list(ws.weights), "degree": ws.degree, "index": ws.index}


def divisor_pairs(divisor) -> list[list[int]]:
    return [[n, c] for n, c in sorted(divisor.int_coeffs().items())]


def chain_cycle_payload(record) -> dict[str, Any]:
    return {
        "shape": "chain-cycle",
        "exponents": list(record.params.exponents),
        "polynomial": record.f.to_text(),
        "transpose": record.f_transpose.to_text(),
        "base": ws_dict(record.base_ws),
        "dual": ws_dict(record.dual_ws),
        "m2": record.m2,
        "m3": record.m3,
        "b3": record.b3,
        "pattern_valid": record.pattern_valid,
        "dual_u_pattern": record.dual_u_pattern,
        "index_closed_form_holds": record.index_closed_form_holds,
        "divisor": divisor_pairs(record.dual_divisor),
    }


def sphere_verdict_payload(verdict) -> dict[str, Any]:
    rep = verdict.report
    return {
        **chain_cycle_payload(verdict.record),
        "squares": verdict.squares,
        "perturbed": verdict.polynomial.to_text(),
        "link": ws_dict(verdict.ws),
        "link_dim": verdict.link_dim,
        "betti": verdict.profile.betti,
        "torsion": list(verdict.profile.torsion),
        "delta_1": verdict.profile.delta_1,
        "delta_minus1": verdict.profile.delta_minus1,
        "cone_dim": rep.cone_dim,
        "no_extremal": rep.bvc.holds,
        "classification": {
            "kind": rep.classification.kind,
            "subtype": rep.classification.subtype,
        },
    }


def tail_payload(record) -> dict[str, Any]:
    from .families import double_tail_obstruction_fast, single_tail_obstruction_fast

    lich, bvc = (
        double_tail_obstruction_fast(*record.exponents)
        if record.kind == "double_tail"
        else single_tail_obstruction_fast(*record.exponents)
    )
    return {
        "shape": record.kind,
        "exponents": list(record.exponents),
        "polynomial": record.f.to_text(),
        "transpose": record.f_transpose.to_text(),
        "bp_companion": record.f_bp_transpose.to_text(),
        "base": ws_dict(record.base_ws),
        "dual": ws_dict(record.dual_ws),
        "milnor": record.milnor,
        "torsion": list(record.torsion),
        "delta_1": record.delta_1,
        "divisor": divisor_pairs(record.dual_divisor),
        "einstein_obstructed": lich,
        "no_extremal": bvc,
    }


FAMILY_SELECTORS = (
    "chain-cycle",
    "lemma45",
    "lemma48",
    "example43",
    "example44",
    "example45",
)


def family_payload(
    selector: str,
    params: tuple[int, ...],
    squares: int = 0,
    k_values: list[int] | None = None,
) -> dict[str, Any]:
    """Build one family member (or a k-indexed batch) as a report dict.

    Raises ParameterViolationError on an unknown selector or a wrong
    parameter count, so both front ends surface it as an input error.
    """
    from . import families

    def need(count: int) -> tuple[int, ...]:
        if len(params) != count:
            raise ParameterViolationError(
                f"{selector} needs {count} integer parameters, got {len(params)}"
            )
        return tuple(params)

    if selector == "chain-cycle":
        cc = families.ChainCycleParams(*need(5))
        if squares >= 1:
            return sphere_verdict_payload(families.sphere_family_verdict(cc, squares))
        return chain_cycle_payload(families.chain_cycle_dual(cc))
    if selector == "lemma45":
        return tail_payload(families.double_tail_dual(*need(3)))
    if selector == "lemma48":
        return tail_payload(families.single_tail_dual(*need(3)))
    if selector in ("example43", "example44"):
        if not k_values:
            raise ParameterViolationError(f"{selector} needs at least one k value")
        maker = (
            families.obstructed_double_tail_params
            if selector == "example43"
            else families.obstructed_single_tail_params
        )
        builder = (
            families.double_tail_dual
            if selector == "example43"
            else families.single_tail_dual
        )
        members = []
        for k in k_values:
            entry = tail_payload(builder(*maker(k)))
            entry["k"] = k
            members.append(entry)
        return {"family": selector, "members": members}
    if selector == "example45":
        p, q, r = need(3)
        power = k_values[0] if k_values else 1
        return tail_payload(
            families.double_tail_dual(*families.prime_power_double_tail_params(p, q, r, power))
        )
    raise ParameterViolationError(f"unknown family selector {selector!r}")
