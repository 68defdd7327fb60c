#!/usr/bin/env python3
# coding=utf-8

"""
The ``phylorep`` command.

Exit codes: ``0`` success or valid, ``1`` an axiom is violated (the report goes to stdout), ``2`` unreadable input
or bad usage.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import TextIO

from phylorep.constants import HARD_MAX_N, PHYLOREP_MAX_N_ENV_VAR
from phylorep.convert import convert, cut_graph, to_tree, tree_to_cuts
from phylorep.core import KINDS, LeafSet, Structure, kind_of, validate, CutSet
from phylorep.enumeration import enumerate_trees, roundtrip
from phylorep.errors import InputError, NotPhylogeneticError
from phylorep.io import parse_newick, write_newick, parse_document, serialize_structure, to_dot
from phylorep.logs import configure_logging
from phylorep.settings import max_n_setting
from phylorep.utils import command_or_file

logger = logging.getLogger(command_or_file('phylorep', __name__))

EXIT_OK = 0
EXIT_NOT_PHYLOGENETIC = 1
EXIT_INPUT_ERROR = 2

NEWICK_SUFFIXES = ('.nwk', '.newick', '.tre')


def read_text(path: str) -> str:
    """
    :param path: file path, or ``-`` for stdin.
    :raise InputError: if the file cannot be read.
    """
    try:
        if path == '-':
            return sys.stdin.read()
        return Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}.") from e
    except UnicodeDecodeError as e:
        raise InputError(f"{'stdin' if path == '-' else path} is not UTF-8 text: {e.reason}.", e.start) from e


def is_newick(path: str, text: str) -> bool:
    """
    Newick by file extension; stdin and unknown extensions are sniffed.

    >>> is_newick('nine-leaf.nwk', ''), is_newick('ex.json', ''), is_newick('-', '  {"kind": "cuts"}')
    (True, False, False)
    """
    suffix = Path(path).suffix.lower()
    if suffix in NEWICK_SUFFIXES:
        return True
    if suffix == '.json':
        return False
    return not text.lstrip().startswith('{')


def load(path: str, kind: str | None = None, strict: bool = False) -> Structure:
    """
    Read a structure. Newick input is a tree; JSON input is of the kind it declares, which must match ``kind`` when
    given.

    :raise InputError: if the input is unreadable or of another kind.
    :raise NotPhylogeneticError: on a strict Newick read of a tree with a vertex of degree 2.
    """
    text = read_text(path)
    if is_newick(path, text):
        if kind not in (None, 'tree'):
            raise InputError(f"Newick input is a tree, expected {kind!r}.")
        return parse_newick(text.strip(), strict)
    return parse_document(text, kind, strict)


def write_output(text: str, out: str | None) -> None:
    if out is None or out == '-':
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding='utf-8')
    except OSError as e:
        raise InputError(f"Cannot write {out}: {e.strerror}.") from e


def emit(x: Structure, out: str | None) -> None:
    """
    Trees are written as Newick, unless ``out`` is a JSON file; everything else as a JSON document.
    """
    if kind_of(x) == 'tree' and not (out and out.lower().endswith('.json')):
        write_output(write_newick(x) + '\n', out)
    else:
        write_output(serialize_structure(x), out)


def cmd_validate(args: argparse.Namespace) -> int:
    x = load(args.file, args.kind, args.strict)
    report = validate(x)
    if report.valid:
        print(report.summary())
        return EXIT_OK
    print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    logger.warning(report.summary())
    return EXIT_NOT_PHYLOGENETIC


def cmd_convert(args: argparse.Namespace) -> int:
    x = load(args.file, args.from_kind)
    emit(convert(x, args.to), args.out)
    return EXIT_OK


def _max_n(args: argparse.Namespace) -> int:
    if args.max_n is None:
        return max_n_setting().value
    if args.max_n > HARD_MAX_N:
        raise InputError(f"--max-n must be at most {HARD_MAX_N}, got {args.max_n}.")
    return args.max_n


def _require_n(args: argparse.Namespace) -> None:
    max_n = _max_n(args)
    if args.n > max_n:
        raise InputError(f"--n {args.n} is above the enumeration cap {max_n}, raise it with --max-n or "
                         f"{PHYLOREP_MAX_N_ENV_VAR}.")


def cmd_roundtrip(args: argparse.Namespace) -> int:
    _require_n(args)
    report = roundtrip(args.n)
    print(report.summary())
    if report.ok:
        return EXIT_OK
    for name, trees in report.failures.items():
        print(f"{name}: {' '.join(trees)}")
    return EXIT_NOT_PHYLOGENETIC


def cmd_enumerate(args: argparse.Namespace) -> int:
    _require_n(args)
    trees = enumerate_trees(LeafSet.range(args.n))
    if args.count_only:
        print(sum(1 for _ in trees))
    else:
        for tree in trees:
            print(write_newick(tree))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    x = load(args.file, args.kind)
    if args.cut_graph is None:
        sys.stdout.write(to_dot(to_tree(x)))
        return EXIT_OK
    cs = x if isinstance(x, CutSet) else tree_to_cuts(to_tree(x))
    if not 0 <= args.cut_graph < len(cs):
        raise InputError(f"Cut index {args.cut_graph} out of range, the cut set has {len(cs)} cut(s).")
    cut = cs.ordered[args.cut_graph]
    sys.stdout.write(to_dot(cut_graph(cs, cut), name=str(cut)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    kinds = list(KINDS)
    parser = argparse.ArgumentParser(prog='phylorep', description='Validate and convert phylogenetic tree '
                                                                  'representations.')
    vq = parser.add_mutually_exclusive_group()
    vq.add_argument('-v', '--verbose', action='count', default=0, help='more log output, repeat up to 3 times.')
    vq.add_argument('-q', '--quiet', action='count', default=0, help='less log output, repeat up to 2 times.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help='check a structure against its axioms.')
    p.add_argument('--kind', choices=kinds, help='expected kind, inferred from the input if omitted.')
    p.add_argument('--strict', action='store_true', help='report a Newick root of degree 2 instead of suppressing it.')
    p.add_argument('file', help="input file, '-' for stdin.")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('convert', help='convert a structure into another representation.')
    p.add_argument('--from', dest='from_kind', choices=kinds, help='input kind, inferred if omitted.')
    p.add_argument('--to', required=True, choices=kinds, help='output kind.')
    p.add_argument('--out', help='output file, stdout if omitted.')
    p.add_argument('file', help="input file, '-' for stdin.")
    p.set_defaults(func=cmd_convert)

    for name, func, help_text in (('roundtrip', cmd_roundtrip, 'check all round trips on every tree of n leaves.'),
                                  ('enumerate', cmd_enumerate, 'list every tree of n leaves as Newick.')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--n', type=int, required=True, help='number of leaves.')
        p.add_argument('--max-n', type=int, help=f"enumeration cap, defaults to {PHYLOREP_MAX_N_ENV_VAR} or 7.")
        if name == 'enumerate':
            p.add_argument('--count-only', action='store_true', help='print the number of trees only.')
        p.set_defaults(func=func)

    p = sub.add_parser('render', help='DOT text of the tree of a structure, or of one of its cut graphs.')
    p.add_argument('--kind', choices=kinds, help='expected kind, inferred from the input if omitted.')
    p.add_argument('--cut-graph', type=int, metavar='CUT_INDEX',
                   help='render the cut graph of this cut, 0-based in canonical cut order.')
    p.add_argument('file', help="input file, '-' for stdin.")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: list[str] | None = None, stream: TextIO | None = None) -> int:
    """
    Run the command line.

    :param argv: arguments without the program name, ``sys.argv[1:]`` if ``None``.
    :param stream: log stream, ``sys.stderr`` if ``None``.
    :return: exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK
    configure_logging(args.verbose, args.quiet, stream)
    try:
        return args.func(args)
    except NotPhylogeneticError as e:
        if e.report is not None:
            print(json.dumps(e.report.to_dict(), sort_keys=True, indent=2))
        print(f"phylorep: {e}", file=sys.stderr)
        return EXIT_NOT_PHYLOGENETIC
    except InputError as e:
        print(f"phylorep: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> int:
    return run()


if __name__ == '__main__':
    sys.exit(main())
