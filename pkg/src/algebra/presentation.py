"""
Defining relations of sl(1|2) and U_qs(sl(1|2)) as data, checked on matrices.

``relations(variant, basis)`` returns the relation table; ``verify_presentation``
evaluates every relation on a representation (a token -> GradedOp map) and
reports the residual of each one. Failures are report cases, not exceptions.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from src.algebra.generators import (
    CARTAN_DISTINGUISHED,
    CARTAN_FERMIONIC,
    Basis,
    context_from_matrices,
    tokens_for,
)
from src.algebra.hopf import E3_DISTINGUISHED, HopfVariant, coproduct_rep, fundamental_rep
from src.algebra.words import (
    CartanExp,
    QNum,
    TensorWord,
    dist_form,
    evaluate_element,
    single,
)
from src.linalg.graded import GradedOp
from src.linalg.poly_matrix import residual_nonzeros
from src.ring.laurent import ParamPoint, Q, S
from src.utils.logging import logger
from src.utils.reports import Report

VARIANTS = ("classical", "quantum", "printed")


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: TensorWord
    rhs: TensorWord


def _gen(token: str) -> TensorWord:
    return single(1, token)


def _comm(a: str, b: str, coeff: object = 1) -> TensorWord:
    """ab - coeff * ba"""
    return single(1, a, b) + single(-1, b, a).scale(coeff)


def _acomm(a: str, b: str) -> TensorWord:
    return single(1, a, b) + single(1, b, a)


ZERO_ELEMENT = TensorWord(())


def _cartan_relations(tokens: Tuple[str, ...], cartan) -> List[Relation]:
    """[h_i, e_j+-] = +-a_ij e_j+-, with e3 carrying the sum of the e1 and e2 weights."""
    h1, h2 = tokens[0], tokens[1]
    letter = tokens[2][0]
    out = [Relation(f"[{h1},{h2}]=0", _comm(h1, h2), ZERO_ELEMENT)]
    for i, h in enumerate((h1, h2)):
        for j in range(2):
            for sign, suffix in ((1, "p"), (-1, "m")):
                e = f"{letter}{j + 1}{suffix}"
                out.append(
                    Relation(f"[{h},{e}]", _comm(h, e), _gen(e).scale(sign * cartan[i][j]))
                )
        for sign, suffix in ((1, "p"), (-1, "m")):
            e = f"{letter}3{suffix}"
            weight = cartan[i][0] + cartan[i][1]
            out.append(Relation(f"[{h},{e}]", _comm(h, e), _gen(e).scale(sign * weight)))
    return out


def _fermionic(variant: str) -> List[Relation]:
    rels = _cartan_relations(tokens_for(Basis.FERMIONIC), CARTAN_FERMIONIC)
    for token in ("E1p", "E1m", "E2p", "E2m"):
        rels.append(Relation(f"{{{token},{token}}}=0", _acomm(token, token), ZERO_ELEMENT))
    rels.append(Relation("{E1p,E2m}=0", _acomm("E1p", "E2m"), ZERO_ELEMENT))
    rels.append(Relation("{E1m,E2p}=0", _acomm("E1m", "E2p"), ZERO_ELEMENT))

    if variant == "classical":
        rels += [
            Relation("{E1p,E1m}", _acomm("E1p", "E1m"), _gen("H1")),
            Relation("{E2p,E2m}", _acomm("E2p", "E2m"), _gen("H2")),
            Relation("[E3p,E3m]", _comm("E3p", "E3m"), _gen("H1") + _gen("H2")),
            Relation("E3p={E1p,E2p}", _gen("E3p"), _acomm("E1p", "E2p")),
            Relation("E3m={E1m,E2m}", _gen("E3m"), _acomm("E1m", "E2m")),
            Relation("[E3p,E1m]", _comm("E3p", "E1m"), _gen("E2p")),
            Relation("[E3p,E2m]", _comm("E3p", "E2m"), _gen("E1p")),
            Relation("[E3m,E1p]", _comm("E3m", "E1p"), _gen("E2m").scale(-1)),
            Relation("[E3m,E2p]", _comm("E3m", "E2p"), _gen("E1m").scale(-1)),
        ]
        for sign in ("p", "m"):
            rels.append(Relation(f"[E1{sign},E3{sign}]=0", _comm(f"E1{sign}", f"E3{sign}"), ZERO_ELEMENT))
            rels.append(Relation(f"[E2{sign},E3{sign}]=0", _comm(f"E2{sign}", f"E3{sign}"), ZERO_ELEMENT))
        return rels

    if variant == "printed":
        s_exponents = ((-1, 0, 0), (0, 1, 0), (-1, 1, 0))
    else:
        s_exponents = ((-1, 0, 1), (0, 1, 1), (-1, 1, 1))
    rels += [
        Relation(
            "{E1p,E1m}",
            _acomm("E1p", "E1m"),
            single(1, QNum((1, 0, 0)), CartanExp(s_form=s_exponents[0])),
        ),
        Relation(
            "{E2p,E2m}",
            _acomm("E2p", "E2m"),
            single(1, QNum((0, 1, 0)), CartanExp(s_form=s_exponents[1])),
        ),
        Relation(
            "[E3p,E3m]",
            _comm("E3p", "E3m"),
            single(1, QNum((1, 1, 0)), CartanExp(s_form=s_exponents[2])),
        ),
        Relation(
            "E3p",
            _gen("E3p"),
            single(Q * S**-1, "E1p", "E2p") + single(1, "E2p", "E1p"),
        ),
        Relation(
            "E3m",
            _gen("E3m"),
            single(1, "E1m", "E2m") + single(Q**-1 * S**-1, "E2m", "E1m"),
        ),
        Relation(
            "[E3p,E1m]",
            _comm("E3p", "E1m"),
            single(Q * S, "E2p", CartanExp((-1, 0, 0), (-1, 0, 0))),
        ),
        Relation(
            "[E3p,E2m]",
            _comm("E3p", "E2m"),
            single(1, "E1p", CartanExp((0, 1, 0), (0, 1, 0))),
        ),
        Relation(
            "[E3m,E1p]",
            _comm("E3m", "E1p"),
            single(-1, "E2m", CartanExp((1, 0, 0), (-1, 0, 0))),
        ),
        Relation(
            "[E3m,E2p]",
            _comm("E3m", "E2p"),
            single(-(Q**-1) * S, "E1m", CartanExp((0, -1, 0), (0, 1, 0))),
        ),
        Relation("serre-E1p-E3p", _comm("E1p", "E3p", Q**-1 * S), ZERO_ELEMENT),
        Relation("serre-E1m-E3m", _comm("E1m", "E3m", Q**-1 * S**-1), ZERO_ELEMENT),
        Relation("serre-E2p-E3p", _comm("E2p", "E3p", Q * S**-1), ZERO_ELEMENT),
        Relation("serre-E2m-E3m", _comm("E2m", "E3m", Q * S), ZERO_ELEMENT),
    ]
    return rels


def _distinguished(variant: str) -> List[Relation]:
    rels = _cartan_relations(tokens_for(Basis.DISTINGUISHED), CARTAN_DISTINGUISHED)
    for token in ("e2p", "e2m", "e3p", "e3m"):
        rels.append(Relation(f"{{{token},{token}}}=0", _acomm(token, token), ZERO_ELEMENT))
    rels.append(Relation("[e1p,e2m]=0", _comm("e1p", "e2m"), ZERO_ELEMENT))
    rels.append(Relation("[e1m,e2p]=0", _comm("e1m", "e2p"), ZERO_ELEMENT))
    flavour = "classical" if variant == "classical" else "quantum"
    for token in ("e3p", "e3m"):
        rels.append(Relation(f"{token}-definition", _gen(token), E3_DISTINGUISHED[flavour][token]))
    if variant == "classical":
        rels += [
            Relation("[e1p,e1m]", _comm("e1p", "e1m"), _gen("h1")),
            Relation("{e2p,e2m}", _acomm("e2p", "e2m"), _gen("h2")),
        ]
    else:
        rels += [
            Relation(
                "[e1p,e1m]",
                _comm("e1p", "e1m"),
                single(1, QNum(dist_form(1, 0)), CartanExp(s_form=dist_form(1, 2))),
            ),
            Relation(
                "{e2p,e2m}",
                _acomm("e2p", "e2m"),
                single(1, QNum(dist_form(0, 1)), CartanExp(s_form=dist_form(0, -1))),
            ),
        ]
    return rels


def relations(variant: str, basis: Basis) -> List[Relation]:
    """
    Relation table.

    Args:
        variant (str): ``"classical"``, ``"quantum"`` (normalized anticommutators)
            or ``"printed"`` (anticommutators as typeset, fermionic basis only).
        basis (Basis): Generator basis.
    """
    if variant not in VARIANTS:
        raise ValueError(f"Unknown relation variant {variant!r}")
    if Basis(basis) is Basis.FERMIONIC:
        return _fermionic(variant)
    if variant == "printed":
        raise ValueError("The printed table exists for the fermionic basis only")
    return _distinguished(variant)


def verify_presentation(
    variant: str,
    basis: Basis,
    rep: Mapping[str, GradedOp],
    at: ParamPoint = None,
) -> Report:
    """
    Evaluate every relation of a table on a representation.

    Args:
        variant (str): Relation table, see ``relations``.
        basis (Basis): Basis of the tokens in ``rep``.
        rep (Mapping[str, GradedOp]): Matrices of all eight generators.
        at (ParamPoint): Compare after specialization; symbolic when omitted.

    Returns:
        Report: One case per relation with the residual's nonzero count.
    """
    basis = Basis(basis)
    missing = [t for t in tokens_for(basis) if t not in rep]
    if missing:
        raise ValueError(f"Representation lacks generators {missing}")
    if basis is Basis.FERMIONIC:
        ctx = context_from_matrices(rep["H1"].matrix, rep["H2"].matrix)
    else:
        h1, h2 = rep["h1"].matrix, rep["h2"].matrix
        ctx = context_from_matrices(-h1 - h2, h2)
    lookup = lambda t: rep[t].matrix  # noqa: E731

    report = Report(f"presentation:{variant}:{basis.value}")
    for relation in relations(variant, basis):
        diff = evaluate_element(relation.lhs, lookup, ctx) - evaluate_element(
            relation.rhs, lookup, ctx
        )
        count = residual_nonzeros(diff, at)
        report.add(relation.name, count == 0, residual_nonzero_entries=count)
        logger.debug("Relation %s: residual %d", relation.name, count)
    for token in tokens_for(basis):
        if not rep[token].is_homogeneous():
            report.add(f"grading-{token}", False, violations=rep[token].violations())
    logger.info("%s", report.summary())
    return report


def fundamental_representation(basis: Basis, classical: bool = False) -> Dict[str, GradedOp]:
    return {t: fundamental_rep(t, classical) for t in tokens_for(Basis(basis))}


def chain_representation(basis: Basis, variant: HopfVariant, sites: int) -> Dict[str, GradedOp]:
    """All eight generators of one basis under an L-fold coproduct."""
    return {t: coproduct_rep(t, variant, sites) for t in tokens_for(Basis(basis))}


def perturb(rep: Mapping[str, GradedOp], token: str, extra) -> Dict[str, GradedOp]:
    """Copy of ``rep`` with ``extra`` added to one generator's matrix."""
    out = dict(rep)
    op = rep[token]
    out[token] = GradedOp(op.matrix + extra, op.degree, op.parities)
    return out


__all__ = [
    "Relation",
    "VARIANTS",
    "chain_representation",
    "fundamental_representation",
    "perturb",
    "relations",
    "verify_presentation",
]
