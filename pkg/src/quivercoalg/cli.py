"""Command-line front end.

Exit codes: 0 on success, 1 when a requested check fails (or a verdict is
negative/unknown), 2 on input errors with line diagnostics.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import suites
from .algebra import (
    bialgebra_check,
    build_cycle_counterexample,
    build_multiarrow_counterexample,
    multiply,
)
from .coalgebra import comultiply, subcoalgebra_closure
from .dual import Functional, convolve, gamma_membership, reflexivity_verdict
from .finite_dual import theta_recovery_check
from .incidence import (
    IncidenceElement,
    PosetFamily,
    hasse_quiver,
    incidence_dual_recovery_check,
    incidence_semiperfect_check,
    phi_embed,
)
from .linalg import SparseVector
from .products import (
    TensorProduct,
    alpha_embed,
    coreflexivity_verdict,
    factor_perp_element,
    product_quiver,
    saturate_subcoalgebra,
)
from .quiver import (
    QuiverFamily,
    check_recovery_clause_equivalence,
    check_semiperfect_condition,
    check_unique_path_condition,
    enumerate_paths,
    family_from_token,
    is_acyclic,
)
from .representation import annihilator_monomial_check, is_locally_nilpotent, module_from_rep
from .scalars import FieldError, field_from_spec
from .textio import (
    ParseError,
    parse_element,
    parse_functional,
    parse_poset_text,
    parse_quiver_text,
    parse_rep_text,
    quiver_to_text,
)


class InputFailure(Exception):
    pass


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputFailure(f"cannot read {path}: {exc}") from exc


def _resolve_quiver_input(token: str):
    """A path to a quiver file, or family:<kind>[:<param>]."""
    if token.startswith("family:"):
        try:
            return None, family_from_token(token[len("family:") :])
        except ValueError as exc:
            raise InputFailure(str(exc)) from exc
    parsed = parse_quiver_text(_read_file(token))
    if parsed.is_family:
        return None, parsed.family
    return parsed.quiver, None


def _resolve_poset_input(token: str, max_len: int):
    if token.startswith("family:"):
        kind = token[len("family:") :]
        try:
            return None, PosetFamily(kind)
        except ValueError as exc:
            raise InputFailure(str(exc)) from exc
    parsed = parse_poset_text(_read_file(token))
    if parsed.is_family:
        return None, parsed.family
    return parsed.poset, None


def _materialize(quiver, family, max_len: int):
    if quiver is not None:
        return quiver
    return family.truncate(max_len)


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, default=str))
        return
    for key, value in report.items():
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        else:
            print(f"{key}: {value}")


def _element_str(element) -> str:
    return str(element)


def cmd_paths(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.input)
    quiver = _materialize(quiver, family, args.max_len)
    enum = enumerate_paths(quiver, args.max_len)
    report = {
        "command": "paths",
        "count": len(enum.paths),
        "exhaustive": enum.exhaustive,
        "paths": [str(p) for p in enum.paths],
    }
    return report, 0


def cmd_delta(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.input)
    quiver = _materialize(quiver, family, args.max_len)
    element = parse_element(args.element, quiver, field)
    tensor = comultiply(element)
    terms = [f"{coeff} * [{a}] (x) [{b}]" for (a, b), coeff in tensor.combo.sorted_items()]
    return {"command": "delta", "element": str(element), "terms": terms}, 0


def cmd_mul(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.input)
    quiver = _materialize(quiver, family, args.max_len)
    left = parse_element(args.left, quiver, field)
    right = parse_element(args.right, quiver, field)
    product = multiply(left, right)
    return {"command": "mul", "left": str(left), "right": str(right), "product": str(product)}, 0


def cmd_conv(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.input)
    concrete = _materialize(quiver, family, args.max_len)
    carrier = family if family is not None else concrete
    f = parse_functional(args.left, carrier, concrete, field)
    g = parse_functional(args.right, carrier, concrete, field)
    enum = enumerate_paths(concrete, args.max_len)
    result = convolve(f, g, enum.paths)
    values = [f"[{p}] -> {coeff}" for p, coeff in result.support.sorted_items()]
    return {
        "command": "conv",
        "left": f.describe(),
        "right": g.describe(),
        "window": args.max_len,
        "values": values,
    }, 0


def cmd_product(args, field) -> tuple[dict, int]:
    left_q, left_f = _resolve_quiver_input(args.left)
    right_q, right_f = _resolve_quiver_input(args.right)
    left = _materialize(left_q, left_f, args.max_len)
    right = _materialize(right_q, right_f, args.max_len)
    product = product_quiver(left, right)
    return {
        "command": "product",
        "vertices": len(product.vertices),
        "arrows": len(product.arrows),
        "text": quiver_to_text(product).splitlines(),
    }, 0


def cmd_alpha(args, field) -> tuple[dict, int]:
    left_q, left_f = _resolve_quiver_input(args.left)
    right_q, right_f = _resolve_quiver_input(args.right)
    left = _materialize(left_q, left_f, args.max_len)
    right = _materialize(right_q, right_f, args.max_len)
    product = product_quiver(left, right)
    el = parse_element(args.left_element, left, field)
    er = parse_element(args.right_element, right, field)
    tensor = SparseVector()
    for p, cp in el.combo.items():
        for q, cq in er.combo.items():
            tensor = tensor + SparseVector({(p, q): cp * cq})
    image = alpha_embed(tensor, product, field)
    return {
        "command": "alpha",
        "tensor_terms": len(tensor.entries),
        "image": str(image),
    }, 0


def cmd_phi(args, field) -> tuple[dict, int]:
    poset, family = _resolve_poset_input(args.input, args.max_len)
    if poset is None:
        poset = family.truncate(args.max_len)
    if (args.lower, args.upper) not in poset.leq:
        raise InputFailure(f"({args.lower},{args.upper}) is not an interval of the poset")
    element = IncidenceElement.from_interval(poset, args.lower, args.upper, field)
    image = phi_embed(element, field)
    return {
        "command": "phi",
        "interval": f"({args.lower},{args.upper})",
        "hasse_arrows": len(hasse_quiver(poset).arrows),
        "image": str(image),
    }, 0


def cmd_factor_perp(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.input)
    quiver = _materialize(quiver, family, args.max_len)
    if not is_acyclic(quiver):
        raise InputFailure("perp factorization needs an acyclic quiver")
    element = parse_element(args.element, quiver, field)
    closure = subcoalgebra_closure([element])
    saturation = saturate_subcoalgebra(closure, quiver)
    max_len = max(0, len(quiver.vertices) - 1)
    enum = enumerate_paths(quiver, max_len)
    rng = random.Random(args.seed)
    values = {}
    for p in enum.paths:
        if not saturation.contains_path(p):
            values[p] = field.of(rng.randint(-5, 5), rng.randint(1, 3))
    eta = Functional(quiver, support=SparseVector(values), field=field)
    witness = factor_perp_element(eta, saturation, max_len, field)
    return {
        "command": "factor-perp",
        "seed_vertices": [str(v) for v in saturation.seed_vertices],
        "saturated_vertices": [str(v) for v in saturation.vertex_set],
        "subcoalgebra_dimension": len(saturation.basis),
        "eta": eta.describe(),
        "identity_checked_on_paths": witness.checked_paths,
        "verified": True,
    }, 0


def cmd_rep_locnilp(args, field) -> tuple[dict, int]:
    quiver, family = _resolve_quiver_input(args.quiver)
    quiver = _materialize(quiver, family, args.max_len)
    rep = parse_rep_text(_read_file(args.rep), quiver, field)
    verdict = is_locally_nilpotent(rep, field)
    report = {
        "command": "rep-locnilp",
        "locally_nilpotent": verdict.locally_nilpotent,
    }
    if verdict.locally_nilpotent:
        report["vanishing_level"] = verdict.vanishing_level
    else:
        report["stable_dims"] = {str(k): v for k, v in (verdict.stable_dims or {}).items()}
        report["witness_path"] = str(verdict.witness_path)
    module = module_from_rep(rep, field)
    bounded_no = 0
    for i in range(module.dimension):
        vector = tuple(field.one if j == i else field.zero for j in range(module.dimension))
        check = annihilator_monomial_check(module, vector, args.codim_bound)
        if not check.found:
            bounded_no += 1
    consistent = (bounded_no > 0) == (not verdict.locally_nilpotent)
    report["annihilator_crosscheck"] = "consistent" if consistent else "inconsistent"
    return report, 0 if consistent else 1


def cmd_counterexample(args, field) -> tuple[dict, int]:
    if args.kind == "cycle":
        if args.input is None:
            raise InputFailure("counterexample cycle needs a quiver input")
        quiver, family = _resolve_quiver_input(args.input)
        quiver = _materialize(quiver, family, args.max_len)
        try:
            ce = build_cycle_counterexample(quiver, args.max_len, field)
        except ValueError as exc:
            raise InputFailure(str(exc)) from exc
    else:
        family = QuiverFamily("multiarrow")
        ce = build_multiarrow_counterexample(family, args.max_len, field)
    return {
        "command": f"counterexample-{ce.kind}",
        "codimension": ce.codimension,
        "difference_generators": len(ce.difference_generators),
        "identities_checked": ce.identities_checked,
        "details": {str(k): str(v) for k, v in ce.details.items()},
    }, 0


def cmd_check(args, field) -> tuple[dict, int]:
    name = args.name
    if name == "thm33":
        quiver, family = _resolve_quiver_input(args.input)
        target = family if family is not None else quiver
        report = theta_recovery_check(target, codim_bound=args.codim_bound, window=args.max_len, field=field)
        payload = {
            "command": "check-thm33",
            "recovered": report.recovered,
            "explanation": report.explanation,
        }
        if report.dimension is not None:
            payload["dimension"] = report.dimension
        if report.witness is not None:
            payload["witness"] = report.witness.describe()
            payload["witness_monomial_verdict"] = report.witness_verdict.status
        return payload, 0 if report.recovered else 1
    if name == "semiperfect":
        quiver, family = _resolve_quiver_input(args.input)
        target = family if family is not None else quiver
        verdict = check_semiperfect_condition(target)
        return (
            {"command": "check-semiperfect", "holds": bool(verdict), "explanation": verdict.explanation},
            0 if verdict else 1,
        )
    if name == "bialgebra":
        quiver, family = _resolve_quiver_input(args.input)
        quiver = _materialize(quiver, family, args.max_len)
        report = bialgebra_check(quiver, field=field)
        payload = {
            "command": "check-bialgebra",
            "compatible": report.compatible,
            "pairs_checked": report.pairs_checked,
        }
        if report.witness:
            payload["witness"] = f"([{report.witness[0]}], [{report.witness[1]}])"
        return payload, 0 if report.compatible else 1
    if name == "prop41":
        poset, family = _resolve_poset_input(args.input, args.max_len)
        if poset is None:
            poset = family.truncate(args.max_len)
        quiver = hasse_quiver(poset)
        unique = check_unique_path_condition(quiver)
        from .linalg import rank

        images = [phi_embed(IncidenceElement.from_interval(poset, x, y, field), field).combo for (x, y) in poset.intervals()]
        injective = rank(images) == len(poset.intervals())
        surjective = rank(images) == len(enumerate_paths(quiver, max(0, len(quiver.vertices) - 1)).paths)
        ok = injective and (surjective == unique)
        return (
            {
                "command": "check-prop41",
                "injective": injective,
                "surjective": surjective,
                "unique_path_condition": unique,
                "agreement": surjective == unique,
            },
            0 if ok else 1,
        )
    if name == "thm42":
        poset, family = _resolve_poset_input(args.input, args.max_len)
        if poset is None:
            poset = family.truncate(args.max_len)
        report = incidence_dual_recovery_check(poset, field)
        return (
            {
                "command": "check-thm42",
                "isomorphism": report.isomorphism,
                "dimension": report.dimension,
                "explanation": report.explanation,
            },
            0 if report.isomorphism else 1,
        )
    if name == "thm43":
        poset, family = _resolve_poset_input(args.input, args.max_len)
        target = family if family is not None else poset
        report = incidence_semiperfect_check(target, field)
        return (
            {
                "command": "check-thm43",
                "holds": report.value,
                "explanation": report.explanation,
                "certificates": len(report.certificates),
            },
            0 if report.value else 1,
        )
    if name == "coreflexive":
        first = _coreflexive_target(args.input, args.max_len)
        if args.second is not None:
            second = _coreflexive_target(args.second, args.max_len)
            verdict = coreflexivity_verdict(TensorProduct(first, second))
        else:
            verdict = coreflexivity_verdict(first)
        return (
            {"command": "check-coreflexive", "status": verdict.status, "chain": verdict.chain},
            0 if verdict.status == "coreflexive" else 1,
        )
    if name == "prop32":
        quiver, family = _resolve_quiver_input(args.input)
        quiver = _materialize(quiver, family, args.max_len)
        verdict = check_recovery_clause_equivalence(quiver)
        return (
            {
                "command": "check-prop32",
                "clauses_agree": True,
                "shared_value": bool(verdict),
                "explanation": verdict.explanation,
            },
            0,
        )
    if name == "thm57":
        quiver, family = _resolve_quiver_input(args.input)
        target = family if family is not None else quiver
        verdict = reflexivity_verdict(target)
        gamma = gamma_membership(target)
        return (
            {
                "command": "check-thm57",
                "status": verdict.status,
                "proper": verdict.proper,
                "explanation": verdict.explanation,
                "gamma_in_image": gamma.in_image,
            },
            0 if verdict.reflexive else 1,
        )
    raise InputFailure(f"unknown check {name!r}")


def _coreflexive_target(token: str, max_len: int):
    if token.startswith("family:"):
        kind = token[len("family:") :]
        if kind.split(":")[0] in ("natchain", "natantichain"):
            return PosetFamily(kind)
        return family_from_token(kind)
    text = _read_file(token)
    head = text.lstrip().split()
    if head and head[0] == "poset":
        return parse_poset_text(text).poset
    parsed = parse_quiver_text(text)
    return parsed.family if parsed.is_family else parsed.quiver


def cmd_suite(args, field) -> tuple[dict, int]:
    try:
        reports = suites.run_suite(args.name, args.seed)
    except ValueError as exc:
        raise InputFailure(str(exc)) from exc
    lines = [r.summary_line() for r in sorted(reports, key=lambda r: r.name)]
    passed = all(r.passed for r in reports)
    return (
        {"command": f"suite-{args.name}", "passed": passed, "seed": args.seed, "reports": lines},
        0 if passed else 1,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercoalg",
        description="Exact computations with quiver algebras, path coalgebras, "
        "incidence (co)algebras, and their duals.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-len", type=int, default=6, help="path-length window / truncation stage")
    common.add_argument("--field", default="q", help="q (rationals) or fp:<prime>")
    common.add_argument("--codim-bound", type=int, default=10, help="bound for monomial-ideal searches")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("paths", help="enumerate paths")
    p.add_argument("input")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("delta", help="comultiply an element")
    p.add_argument("input")
    p.add_argument("element")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("mul", help="multiply two elements in the quiver algebra")
    p.add_argument("input")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("conv", help="convolve two functionals on the window")
    p.add_argument("input")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("product", help="product of two quivers")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("alpha", help="shuffle-embed a tensor of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("left_element")
    p.add_argument("right_element")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("phi", help="embed a poset interval into the Hasse path coalgebra")
    p.add_argument("input")
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("factor-perp", help="saturate and factor a perp functional")
    p.add_argument("input")
    p.add_argument("element")
    p.set_defaults(func=cmd_factor_perp)

    p = sub.add_parser("rep-locnilp", help="local nilpotence of a representation")
    p.add_argument("quiver")
    p.add_argument("rep")
    p.set_defaults(func=cmd_rep_locnilp)

    p = sub.add_parser("counterexample", help="cofinite ideals without monomial subideals")
    p.add_argument("kind", choices=("cycle", "multiarrow"))
    p.add_argument("input", nargs="?", help="quiver input (cycle kind only)")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check", help="run a named criterion on one input")
    p.add_argument(
        "name",
        choices=(
            "thm33",
            "semiperfect",
            "bialgebra",
            "prop41",
            "thm42",
            "thm43",
            "coreflexive",
            "prop32",
            "thm57",
        ),
    )
    p.add_argument("input")
    p.add_argument("second", nargs="?", help="second input for tensor-product coreflexivity")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name")
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = field_from_spec(args.field)
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report, status = args.func(args, field)
    except (InputFailure, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    return status


if __name__ == "__main__":
    sys.exit(main())
