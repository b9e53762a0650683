"""Curvature obstructions and topological classification labels.

Three exact verdicts about the link of f with weights (w; d):

  * cone_dimension: for f = f'(z_0..z_k) + squares the space of
    compatible Reeb fields has dimension floor((n-k)/2) + 1; without the
    normal form, a single large weight still pins the dimension to 1.
  * lichnerowicz: index I > n min(w) rules out a Sasaki-Einstein metric
    for the natural Reeb field (strict inequality).
  * bvc_no_extremal: sum of core weights - n min(w) + (d/2)(n-k-2) >= 0
    rules out extremal Sasaki metrics in the whole cone (non-strict,
    evaluated over 2x-scaled integers to stay exact).

classify turns a homology profile into a label: homotopy sphere (with
the standard/Kervaire resolution by Delta(-1) mod 8 in dimensions
1 mod 4), rational homology sphere, the b=1 torsion-free 9-dimensional
product profile, or a catch-all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import HomologyProfile
from .errors import NotApplicableError
from .weights import SuspensionForm, WeightSystem, one_dim_cone_test


@dataclass(frozen=True)
class InequalityVerdict:
    """Exact comparison record: holds, with both sides as integers."""

    holds: bool
    lhs: int
    rhs: int


@dataclass(frozen=True)
class BvcVerdict:
    """No-extremal-metric criterion; lhs is the 2x-scaled exact value."""

    applicable: bool
    holds: bool
    lhs_scaled: int


@dataclass(frozen=True)
class LinkClass:
    """Topological label for a link."""

    kind: str  # "homotopy_sphere" | "rational_homology_sphere" | "s4_x_s5" | "other"
    subtype: str | None = None  # for homotopy spheres: "standard" | "kervaire" | "unresolved"
    betti: int = 0
    torsion: tuple[int, ...] = ()


@dataclass(frozen=True)
class ObstructionReport:
    cone_dim: int | None
    lichnerowicz: InequalityVerdict
    bvc: BvcVerdict
    classification: LinkClass


def cone_dimension(sf: SuspensionForm | None, ws: WeightSystem) -> int | None:
    """Sasaki-Reeb cone dimension, or None when undetermined."""
    if sf is not None:
        # each pair of quadratic variables contributes one extra dimension
        return (sf.n - sf.k) // 2 + 1
    if one_dim_cone_test(ws):
        return 1
    return None


def lichnerowicz(ws: WeightSystem, n: int | None = None) -> InequalityVerdict:
    """Sasaki-Einstein obstruction: holds iff I > n min(w), strictly."""
    if n is None:
        n = ws.dim
    lhs = ws.index
    rhs = n * ws.min_weight
    return InequalityVerdict(lhs > rhs, lhs, rhs)


def bvc_no_extremal(sf: SuspensionForm | None, ws: WeightSystem) -> BvcVerdict:
    """Extremal-metric obstruction for a suspension form, exact and 2x-scaled."""
    if sf is None:
        raise NotApplicableError("no suspension normal form: criterion not applicable")
    d = ws.degree
    core_min = min(ws.weights[i] for i in sf.core_indices)
    if core_min != ws.min_weight:
        raise NotApplicableError(
            "minimal weight lies outside the core; quad weights should be d/2"
        )
    core_sum = sum(ws.weights[i] for i in sf.core_indices)
    # quad weights are d/2, so each quad variable beyond the second adds d/2
    lhs = 2 * core_sum - 2 * sf.n * ws.min_weight + d * (sf.n - sf.k - 2)
    return BvcVerdict(True, lhs >= 0, lhs)


def classify(hp: HomologyProfile, link_dim: int) -> LinkClass:
    """Label the link from its homology profile and real dimension."""
    if hp.betti == 0:
        order = abs(hp.delta_1) if hp.delta_1 else 0
        if order == 1:
            subtype = "unresolved"
            if link_dim % 4 == 1 and hp.delta_minus1 is not None:
                residue = hp.delta_minus1 % 8
                if residue in (1, 7):
                    subtype = "standard"
                elif residue in (3, 5):
                    subtype = "kervaire"
            return LinkClass("homotopy_sphere", subtype)
        return LinkClass(
            "rational_homology_sphere", None, 0, hp.torsion
        )
    if link_dim == 9 and hp.betti == 1 and not hp.torsion:
        return LinkClass("s4_x_s5", None, 1, ())
    return LinkClass("other", None, hp.betti, hp.torsion)


def obstruction_report(
    sf: SuspensionForm | None,
    ws: WeightSystem,
    hp: HomologyProfile,
    link_dim: int,
) -> ObstructionReport:
    try:
        bvc = bvc_no_extremal(sf, ws)
    except NotApplicableError:
        bvc = BvcVerdict(False, False, 0)
    return ObstructionReport(
        cone_dim=cone_dimension(sf, ws),
        lichnerowicz=lichnerowicz(ws),
        bvc=bvc,
        classification=classify(hp, link_dim),
    )
