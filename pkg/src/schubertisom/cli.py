"""Command-line interface with deterministic, diff-stable JSON/text output."""

import argparse
import json
import sys

from . import cohomology, equivalence, freealg, weyl
from .reconstruct import reconstruct as _reconstruct_oracle
from .cartan import CartanMatrix, diagram_automorphisms, graph_automorphisms, simple_graph
from .errors import SchubertError


def _load_cartan(path):
    with open(path) as fh:
        data = json.load(fh)
    return CartanMatrix.from_json(data)


def _parse_word(text):
    text = text.strip()
    if text.startswith("["):
        return tuple(json.loads(text))
    return tuple(text.split())


def _parse_pair(value):
    """Parse 'cartan.json:word with spaces' into (CartanMatrix, word)."""
    path, sep, word = value.partition(":")
    if not sep:
        raise SchubertError(f"expected FILE:WORD, got {value!r}")
    return _load_cartan(path), _parse_word(word)


def _emit(args, payload, exit_code=0):
    if args.format == "table":
        text = _render_table(payload)
    else:
        text = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return exit_code


def _render_table(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{str(key).ljust(width)}  {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}- {value}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


def cmd_validate(args):
    A = _load_cartan(args.cartan)
    return _emit(args, {"valid": True, "cartan": A.to_json()})


def cmd_word(args):
    A = _load_cartan(args.cartan)
    w = weyl.element_from_word(A, _parse_word(args.word))
    order = A.index_set.index
    if args.canonical:
        return _emit(args, list(w.canonical_word))
    return _emit(
        args,
        {
            "canonical_word": list(w.canonical_word),
            "length": w.length,
            "support": sorted(weyl.support(w), key=order),
            "left_descents": sorted(w.left_descents(), key=order),
            "right_descents": sorted(w.right_descents(), key=order),
        },
    )


def cmd_bruhat(args):
    A = _load_cartan(args.cartan)
    u = weyl.element_from_word(A, _parse_word(args.lower))
    w = weyl.element_from_word(A, _parse_word(args.upper))
    leq = weyl.bruhat_leq(u, w)
    return _emit(args, {"leq": leq}, 0 if leq or not args.strict else 1)


def cmd_equiv(args):
    A, word_left = _parse_pair(args.left)
    B, word_right = _parse_pair(args.right)
    w = weyl.element_from_word(A, word_left)
    w_prime = weyl.element_from_word(B, word_right)
    witness = equivalence.check_equivalence(w, w_prime)
    payload = {
        "equivalent": witness is not None,
        "witness": witness.to_json() if witness else None,
    }
    return _emit(args, payload, 0 if witness or not args.strict else 1)


def cmd_isom_classes(args):
    A = _load_cartan(args.cartan)
    classes = equivalence.isom_classes(A, args.max_length, args.max_elements)
    payload = {
        "count": len(classes),
        "classes": [
            {
                "representative": list(members[0].canonical_word),
                "members": [list(m.canonical_word) for m in members],
            }
            for members in classes
        ],
    }
    return _emit(args, payload)


def cmd_cohomology(args):
    A = _load_cartan(args.cartan)
    w = weyl.element_from_word(A, _parse_word(args.word))
    itv = weyl.interval(w, args.max_length)
    order = A.index_set.index
    products = {}
    for s in sorted(weyl.support(w), key=order):
        for u in itv:
            F = cohomology.chevalley_product(s, u, itv)
            key = f"{s}|{' '.join(u.canonical_word)}"
            products[key] = [
                {"word": list(v.canonical_word), "coeff": c}
                for v, c in sorted(
                    F.coeffs.items(), key=lambda vc: vc[0].canonical_word
                )
            ]
    return _emit(args, {"interval_size": len(itv), "products": products})


def cmd_export_oracle(args):
    A = _load_cartan(args.cartan)
    w = weyl.element_from_word(A, _parse_word(args.word))
    oracle = cohomology.export_oracle(w, seed=args.seed, length_cap=args.max_length)
    return _emit(args, oracle.to_json())


def cmd_reconstruct(args):
    with open(args.oracle) as fh:
        oracle = cohomology.CohomologyOracle.from_json(json.load(fh))
    presentation = _reconstruct_oracle(oracle)
    return _emit(args, presentation.to_json())


def cmd_normal_form(args):
    tau = freealg.parse(args.expression)
    normal = freealg.eta(tau)
    payload = {"input": str(tau), "normal_form": str(normal)}
    if args.specialize:
        A = _load_cartan(args.specialize)
        payload["specialized"] = str(freealg.specialize(normal, A))
    return _emit(args, payload)


def cmd_automorphisms(args):
    A = _load_cartan(args.cartan)
    if args.graph:
        autos = graph_automorphisms(simple_graph(A))
    else:
        autos = diagram_automorphisms(A)
    payload = {
        "count": len(autos),
        "automorphisms": [
            {s: sigma[s] for s in A.labels} for sigma in autos
        ],
    }
    return _emit(args, payload)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schubertisom",
        description="Exact Schubert variety isomorphism toolkit",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--output", metavar="FILE", default=None)
    parser.add_argument("--strict", action="store_true",
                        help="exit 1 on negative domain results")
    parser.add_argument("--max-length", type=int, default=weyl.DEFAULT_LENGTH_CAP)
    parser.add_argument("--max-elements", type=int, default=weyl.DEFAULT_ELEMENT_CAP)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a Cartan matrix JSON file")
    p.add_argument("cartan")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("word", help="canonical form, length, support, descents")
    p.add_argument("cartan")
    p.add_argument("word")
    p.add_argument("--canonical", action="store_true",
                   help="print only the canonical reduced word")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("bruhat", help="test u <= w in Bruhat order")
    p.add_argument("cartan")
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("equiv", help="decide Cartan equivalence of two pairs")
    p.add_argument("--left", required=True, metavar="FILE:WORD")
    p.add_argument("--right", required=True, metavar="FILE:WORD")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("isom-classes", help="isomorphism classes up to a length")
    p.add_argument("cartan")
    p.set_defaults(func=cmd_isom_classes)

    p = sub.add_parser("cohomology", help="Chevalley products over [e,w]")
    p.add_argument("cartan")
    p.add_argument("word")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("export-oracle", help="anonymized cohomology oracle JSON")
    p.add_argument("cartan")
    p.add_argument("word")
    p.set_defaults(func=cmd_export_oracle)

    p = sub.add_parser("reconstruct", help="rebuild (w', A') from an oracle file")
    p.add_argument("oracle")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("normal-form", help="free-algebra normal form of an expression")
    p.add_argument("expression")
    p.add_argument("--specialize", metavar="CARTAN_FILE", default=None)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("automorphisms", help="diagram or graph automorphisms")
    p.add_argument("cartan")
    p.add_argument("--graph", action="store_true",
                   help="automorphisms of the simple Coxeter graph")
    p.set_defaults(func=cmd_automorphisms)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchubertError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
