"""Command-line front end.

Exit status: 0 when the answer is "identity"/a power was found, 1 for a
negative answer, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import slp
from .alphabet import Alphabet
from .errors import BrittonError, TooLong
from .free_group import compressed_word_problem, free_reduce
from .graph import CycleTypeWord, fundamental_word_problem, load_graph, validate_cycle_type, validate_graph
from .hnn import (
    BrittonSequence,
    ascending_word_problem,
    britton_reduce,
    bs12,
    bs12_ascending,
    make_ascending,
    make_hnn,
)
from .naive import naive_britton
from .power import compressed_power
from .syntax import infer_alphabet, parse_base_word, parse_word

PRESETS = {"bs12": (bs12, bs12_ascending)}


class InputError(Exception):
    pass


def _alphabet(args, text, exclude=()):
    if getattr(args, "alphabet", None):
        return Alphabet(x for x in args.alphabet.replace(",", " ").split())
    return infer_alphabet(text, exclude)


def _explicit(text, alphabet):
    return slp.expand_node(parse_base_word(text, alphabet), slp.EXACT_CHECK_BOUND).tolist()


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _say_identity(answer: bool) -> int:
    print(f"identity: {'true' if answer else 'false'}")
    return 0 if answer else 1


def cmd_wp(args):
    alphabet = _alphabet(args, args.word)
    node = parse_base_word(args.word, alphabet)
    try:
        word = slp.expand_node(node, slp.EXACT_CHECK_BOUND)
    except TooLong:
        return _say_identity(compressed_word_problem(slp.CompositionSystem(alphabet, node)))
    return _say_identity(not free_reduce(word))


def _grammar(args, alphabet=None):
    if args.grammar:
        return slp.load_grammar(args.grammar, alphabet)
    if args.target is None:
        raise InputError("need --grammar or a word")
    alphabet = alphabet or _alphabet(args, args.target)
    return slp.CompositionSystem(alphabet, parse_base_word(args.target, alphabet))


def cmd_cwp(args):
    return _say_identity(compressed_word_problem(_grammar(args)))


def cmd_power(args):
    cs = _grammar(args)
    word = _explicit(args.word, cs.alphabet)
    answer = compressed_power(word, cs)
    print(answer)
    return 0 if answer.found else 1


def _hnn_presentation(args):
    if args.preset:
        return PRESETS[args.preset][0]()
    if not args.group:
        raise InputError("need --group or --preset")
    obj = _load_json(args.group)
    alphabet = Alphabet(obj["alphabet"])
    g = _explicit(obj.get("g", ""), alphabet)
    h = _explicit(obj.get("h", ""), alphabet)
    return make_hnn(alphabet, g, h, obj.get("stable", "t"))


def cmd_hnn(args):
    pres = _hnn_presentation(args)
    items = parse_word(args.word, pres.alphabet, pres.stable)
    seq = BrittonSequence.from_items(pres.alphabet, items)
    trace = (lambda line: print(line)) if args.trace else None
    run = britton_reduce(pres, seq, replacement=args.replacement, order=args.order, trace=trace)
    return _say_identity(run.identity)


def cmd_ascending(args):
    if args.preset:
        asc = PRESETS[args.preset][1]()
    elif args.group:
        obj = _load_json(args.group)
        alphabet = Alphabet(obj["alphabet"])
        asc = make_ascending(alphabet, {k: _explicit(v, alphabet) for k, v in obj["phi"].items()},
                             obj.get("stable", "t"))
    else:
        raise InputError("need --group or --preset")
    items = parse_word(args.word, asc.alphabet, asc.stable)
    return _say_identity(ascending_word_problem(asc, items))


def _read_json_arg(value):
    if os.path.exists(value):
        return _load_json(value)
    return json.loads(value)


def cmd_gog(args):
    graph = load_graph(args.graph)
    word = CycleTypeWord.from_json(graph, _read_json_arg(args.word))
    trace = (lambda line: print(line)) if args.trace else None
    return _say_identity(fundamental_word_problem(graph, word, trace=trace))


def cmd_validate(args):
    problems = []
    if args.grammar:
        obj = _load_json(args.grammar)
        alphabet = Alphabet(obj["alphabet"])
        rules = {str(v): [slp._decode_token(alphabet, t) for t in rhs] for v, rhs in obj["rules"].items()}
        problems += slp.validate(alphabet, str(obj["start"]), rules)
    if args.graph:
        graph = load_graph(args.graph)
        problems += validate_graph(graph)
        if args.word:
            problems += validate_cycle_type(graph, CycleTypeWord.from_json(graph, _read_json_arg(args.word)))
    if not (args.grammar or args.graph):
        raise InputError("need --grammar or --graph")
    for p in problems:
        print(f"violation: {p}")
    if not problems:
        print("ok")
    return 1 if problems else 0


def bs12_instance(n: int) -> str:
    """``t^-n a t^n (a^(2^n))^-1``, trivial in BS(1,2)."""
    return f"t^-{n} a t^{n} ((a)^(2^{n}))^-1"


def _bench_one(job):
    n, backend, replacement, seed, naive_limit = job
    slp.seed_fingerprints(seed)
    pres = bs12()
    seq = BrittonSequence.from_items(pres.alphabet, parse_word(bs12_instance(n), pres.alphabet, pres.stable))
    start = time.perf_counter()
    if backend == "compressed":
        run = britton_reduce(pres, seq, replacement=replacement)
        row = (run.identity, run.initial_size, run.final_size, run.steps)
    else:
        if 2 ** n > naive_limit:
            return n, None
        explicit = seq.expand()
        identity, steps = naive_britton(pres, explicit[0::2], explicit[1::2], naive_limit)
        size = sum(len(w) for w in explicit[0::2]) + seq.m
        row = (identity, size, 0 if identity else None, steps)
    elapsed = (time.perf_counter() - start) * 1000
    return n, (elapsed,) + row


def cmd_bench(args):
    backends = ["compressed", "naive"] if args.backend == "both" else [args.backend]
    jobs = [(n, b, args.replacement, args.seed_value, args.naive_limit)
            for b in backends for n in range(args.min_n, args.max_n + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_bench_one, jobs))
    else:
        results = [_bench_one(job) for job in jobs]
    print("time_ms,s_initial,s_final,steps")
    answers: dict[int, set] = {}
    status = 0
    for (n, row), job in zip(results, jobs):
        if row is None:
            continue
        elapsed, identity, s0, s1, steps = row
        answers.setdefault(n, set()).add(identity)
        print(f"{elapsed:.3f},{s0},{'' if s1 is None else s1},{steps}")
        if not identity:
            status = 1
    if any(len(v) > 1 for v in answers.values()):
        print("backends disagree", file=sys.stderr)
        status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="britton", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="fingerprint seed (env BRITTON_SEED wins)")
    common.add_argument("--exact-bound", type=int, default=None,
                        help="expand and compare exactly below this many letters")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wp", parents=[common], help="word problem in a free group")
    p.add_argument("--word", required=True)
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("cwp", parents=[common], help="compressed word problem in a free group")
    p.add_argument("--grammar")
    p.add_argument("--word", dest="target")
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_cwp)

    p = sub.add_parser("power", parents=[common], help="solve w^z = val(G)")
    p.add_argument("--word", required=True)
    p.add_argument("--grammar")
    p.add_argument("--target")
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_power)

    for name, func in (("hnn", cmd_hnn), ("ascending", cmd_ascending)):
        p = sub.add_parser(name, parents=[common], help=f"word problem in an {name} HNN-extension"
                           if name == "ascending" else "word problem in an HNN-extension")
        p.add_argument("--group")
        p.add_argument("--preset", choices=sorted(PRESETS))
        p.add_argument("--word", required=True)
        if name == "hnn":
            p.add_argument("--trace", action="store_true")
            p.add_argument("--replacement", choices=["pow", "eta"], default="pow")
            p.add_argument("--order", choices=["leftmost", "rightmost"], default="leftmost")
        p.set_defaults(func=func)

    p = sub.add_parser("gog", parents=[common], help="word problem in a graph of groups")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True, help="cycle-type word: JSON file or inline JSON")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_gog)

    p = sub.add_parser("validate", parents=[common], help="check a grammar or graph file")
    p.add_argument("--grammar")
    p.add_argument("--graph")
    p.add_argument("--word")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", parents=[common], help="time the BS(1,2) family")
    p.add_argument("--family", choices=["bs12"], default="bs12")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--backend", choices=["compressed", "naive", "both"], default="compressed")
    p.add_argument("--replacement", choices=["pow", "eta"], default="pow")
    p.add_argument("--naive-limit", type=int, default=10**6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    env = os.environ.get("BRITTON_SEED")
    seed = int(env) if env else args.seed
    args.seed_value = slp.seed_fingerprints(seed)
    print(f"seed={args.seed_value}", file=sys.stderr)
    if args.exact_bound is not None:
        slp.set_exact_check_bound(args.exact_bound)
    try:
        return args.func(args)
    except (BrittonError, InputError, OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
