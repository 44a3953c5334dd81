import argparse
import json
import logging
import sys
from pathlib import Path

from mpmath import mp

from src.pipeline_components.hyperbolic import CothSeriesSolver, cauchy_closed_form
from src.pipeline_components.lattice_oracle import LatticeOracle
from src.pipeline_components.reducer import MultipleEisensteinReducer
from src.pipeline_components.verifier import OracleVerifier
from src.ring.eisen_ring import hurwitz_value, specialize_i
from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.config_handler import load_configuration
from src.utils.exceptions import ConfigError, DomainError, VerificationError
from src.utils.numerics import cauchy_numeric, eval_closed_form, eval_G, parse_complex
from src.utils.rendering import (render_closed_form_json, render_closed_form_latex, render_closed_form_text,
                                 render_json, render_latex, render_text)

logger = logging.getLogger("run_eisenstein")

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_VERIFICATION = 3


def parse_indices(text):
    """
    "2,4,2" -> [2, 4, 2]; the values are the literal even exponents.
    """

    items = text.split(",")

    if any(not item.strip() for item in items):
        raise DomainError(f"cannot parse indices {text!r}, empty entry in the comma list")

    try:
        values = [int(item) for item in items]

    except ValueError:
        raise DomainError(f"cannot parse indices {text!r}, expected a comma list of even integers")

    return values


def parse_point(text):
    """
    Complex literal "a+bi", or one of the names "i" and "rho" = exp(2 pi i / 3).
    """

    if text == "i":
        return mp.mpc(0, 1)

    if text == "rho":
        return mp.expjpi(mp.mpf(2) / 3)

    return parse_complex(text)


def build_parser():

    common = argparse.ArgumentParser(add_help=False)

    common.add_argument("--config", default="config.yml", help="path of the YAML configuration")

    common.add_argument("--out", default=None, help="also write the rendered result to this file")

    parser = argparse.ArgumentParser(prog="run_eisenstein",
                                     description="Closed forms and lattice checks of multiple Eisenstein-type series")

    verbs = parser.add_subparsers(dest="verb", required=True)

    reduce_parser = verbs.add_parser("reduce", parents=[common], help="closed form of G~_{2p_1,...,2p_r}")
    reduce_parser.add_argument("--indices", required=True)
    reduce_parser.add_argument("--family", choices=["full", "star"], default="full")
    reduce_parser.add_argument("--format", choices=["text", "latex", "json"], default="text")

    value_parser = verbs.add_parser("value", parents=[common], help="exact value at tau = i")
    value_parser.add_argument("--indices", required=True)
    value_parser.add_argument("--at", default="i")
    value_parser.add_argument("--format", choices=["text", "latex", "json"], default="text")

    oracle_parser = verbs.add_parser("oracle", parents=[common], help="compare a closed form with its lattice sum")
    oracle_parser.add_argument("--indices", required=True)
    oracle_parser.add_argument("--tau", required=True)
    oracle_parser.add_argument("--power", type=int, default=None, help="coth power 2k; omit for G~")
    oracle_parser.add_argument("--mmax", type=int, default=None)
    oracle_parser.add_argument("--format", choices=["text", "json"], default="text")

    coth_parser = verbs.add_parser("coth", parents=[common], help="closed form of the coth-weighted series")
    coth_parser.add_argument("--indices", required=True)
    coth_parser.add_argument("--power", type=int, required=True)
    coth_parser.add_argument("--at", default=None, help="'i' for the exact value at tau = i")
    coth_parser.add_argument("--format", choices=["text", "latex", "json"], default="text")

    cauchy_parser = verbs.add_parser("cauchy", parents=[common], help="sum_{m != 0} coth(m pi) / m^(4p+3)")
    cauchy_parser.add_argument("--p", type=int, required=True)
    cauchy_parser.add_argument("--one-sided", action="store_true")
    cauchy_parser.add_argument("--format", choices=["text", "latex", "json"], default="text")

    eisenstein_parser = verbs.add_parser("eisenstein", parents=[common], help="G_{2k}(tau) from its q-series")
    eisenstein_parser.add_argument("--weight", type=int, required=True)
    eisenstein_parser.add_argument("--tau", default="0+1i")
    eisenstein_parser.add_argument("--terms", type=int, default=None)
    eisenstein_parser.add_argument("--exact", action="store_true", help="exact value at tau = i")

    verbs.add_parser("verify", parents=[common], help="sweep every configured case against the lattice oracle")

    return parser


def _even_weight(weight):

    if weight < 2 or weight % 2:
        raise DomainError("the weight must be an even integer >= 2")

    return weight // 2


def _render_ring(x, args, family, indices, power=None):

    if args.format == "latex":
        return render_latex(x)

    if args.format == "json":
        return render_json(x, family, indices, power)

    return render_text(x)


def _render_exact(v, args, label, precision_bits):

    if args.format == "json":
        return render_closed_form_json(v, label)

    exact = render_closed_form_latex(v) if args.format == "latex" else render_closed_form_text(v)

    return f"{exact}\n{mp.nstr(eval_closed_form(v, precision_bits), 30)}"


def cmd_reduce(args, conf):

    family = Family.STAR if args.family == "star" else Family.FULL

    t = IndexTuple.from_exponents(parse_indices(args.indices), family)

    return _render_ring(MultipleEisensteinReducer().reduce_multi(t), args, family.value, t.exponents)


def cmd_value(args, conf):

    if args.at == "rho":
        raise DomainError("rho is a numeric-only point; use oracle")

    if args.at != "i":
        raise DomainError(f"exact values are only available at tau = i, got {args.at!r}")

    t = IndexTuple.from_exponents(parse_indices(args.indices))

    v = specialize_i(MultipleEisensteinReducer().reduce_multi(t))

    return _render_exact(v, args, t.label(), conf["precision_bits"])


def cmd_oracle(args, conf):

    conf = dict(conf)

    if args.mmax is not None:
        conf["mmax"] = args.mmax

    verifier = OracleVerifier(conf, oracle=LatticeOracle(conf))

    tau = parse_point(args.tau)

    if args.power is None:
        row = verifier.compare_tuple(IndexTuple.from_exponents(parse_indices(args.indices)), tau)
    else:
        base = IndexTuple.from_exponents(parse_indices(args.indices), Family.COTH)
        row = verifier.compare_coth(CothIndex(base, _coth_k(args.power)), tau)

    if args.format == "json":
        rendered = json.dumps(row)
    else:
        rendered = "\n".join([
            f"series:              {row['label']}",
            f"tau:                 {row['tau']}",
            f"oracle:              {row['oracle']}",
            f"symbolic:            {row['symbolic']}",
            f"absolute difference: {row['absolute_difference']:.3e}",
            f"relative difference: {row['relative_difference']:.3e}",
            f"tail estimate:       {row['tail_estimate']:.3e} (mmax = {row['truncation']})",
        ])

    print(rendered)

    verifier.check(row)

    return rendered


def _coth_k(power):

    if power < 0 or power % 2:
        raise DomainError("the coth power must be a non-negative even integer")

    return power // 2


def cmd_coth(args, conf):

    base = IndexTuple.from_exponents(parse_indices(args.indices), Family.COTH)

    c = CothIndex(base, _coth_k(args.power))

    x = CothSeriesSolver().coth_reduce(c)

    if args.at is None:
        return _render_ring(x, args, Family.COTH.value, base.exponents, c.power)

    if args.at != "i":
        raise DomainError(f"exact values are only available at tau = i, got {args.at!r}")

    return _render_exact(specialize_i(x), args, c.label(), conf["precision_bits"])


def cmd_cauchy(args, conf):

    v = cauchy_closed_form(args.p, one_sided=args.one_sided)

    rendered = _render_exact(v, args, f"cauchy p={args.p}", conf["precision_bits"])

    with mp.workprec(conf["precision_bits"]):
        logger.info("Direct summation: %s", mp.nstr(cauchy_numeric(args.p, one_sided=args.one_sided), 30))

    return rendered


def cmd_eisenstein(args, conf):

    k = _even_weight(args.weight)

    if args.exact:
        return render_closed_form_text(hurwitz_value(k))

    terms = args.terms if args.terms is not None else conf["q_terms"]

    return mp.nstr(eval_G(k, parse_point(args.tau), terms), 30)


def cmd_verify(args, conf):

    df = OracleVerifier(conf).run()

    return f"{len(df)} points verified, largest relative difference {df['relative_difference'].max():.3e}"


COMMANDS = {
    "reduce": cmd_reduce,
    "value": cmd_value,
    "oracle": cmd_oracle,
    "coth": cmd_coth,
    "cauchy": cmd_cauchy,
    "eisenstein": cmd_eisenstein,
    "verify": cmd_verify,
}


def main(argv=None):

    # ------- Parse command line -------

    args = build_parser().parse_args(argv)

    try:
        # ------- Read configuration -------

        conf = load_configuration(args.config)

        logging.basicConfig(level=getattr(logging, str(conf["log_level"]).upper(), logging.INFO),
                            format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)

        with mp.workprec(conf["precision_bits"]):

            if args.verb == "oracle":
                rendered = cmd_oracle(args, conf)
            else:
                rendered = COMMANDS[args.verb](args, conf)
                print(rendered)

        if args.out:
            Path(args.out).write_text(rendered + "\n", encoding="utf-8")

    except VerificationError as error:

        print(f"verification failed: {error}", file=sys.stderr)

        return EXIT_VERIFICATION

    except (DomainError, ConfigError) as error:

        print(f"error: {error}", file=sys.stderr)

        return EXIT_DOMAIN

    return EXIT_OK


if __name__ == '__main__':

    sys.exit(main())
