#!/usr/bin/env python3
# coding=utf-8

"""
Tests for the ``phylorep`` command line.
"""
import io
import json
from pathlib import Path

import pytest

from phylorep.cli import run, EXIT_OK, EXIT_NOT_PHYLOGENETIC, EXIT_INPUT_ERROR
from phylorep.core import CutSet
from phylorep.io import parse_newick, write_newick, parse_document

DATA_DIR = Path(__file__).parent.parent / 'data'
NINE_LEAF = str(DATA_DIR / 'nine-leaf.nwk')
NINE_LEAF_CUTS = str(DATA_DIR / 'nine-leaf-cuts.json')
BAD_CUTS = str(DATA_DIR / 'bad-cuts.json')
ROOTED_QUARTET = str(DATA_DIR / 'rooted-quartet.nwk')
NINE_LEAF_NEWICK = '((1,2,3),4,5,((6,7),(8,9)));'


@pytest.fixture
def log_stream() -> io.StringIO:
    return io.StringIO()


@pytest.fixture(autouse=True)
def no_env_cap(monkeypatch):
    monkeypatch.delenv('PHYLOREP_MAX_N', raising=False)
    monkeypatch.delenv('PHYLOREP_LOG', raising=False)


class TestValidate:
    def test_valid_cuts(self, capsys, log_stream):
        assert run(['validate', '--kind', 'cuts', NINE_LEAF_CUTS], log_stream) == EXIT_OK
        assert capsys.readouterr().out == 'cuts: valid\n'

    def test_valid_newick(self, capsys, log_stream):
        assert run(['validate', NINE_LEAF], log_stream) == EXIT_OK
        assert capsys.readouterr().out == 'tree: valid\n'

    def test_incompatible_cuts(self, capsys, log_stream):
        assert run(['validate', BAD_CUTS], log_stream) == EXIT_NOT_PHYLOGENETIC
        report = json.loads(capsys.readouterr().out)
        assert report['valid'] is False
        assert [v['axiom'] for v in report['violations']] == ['C']
        assert 'cuts: 1 violation(s) of C' in log_stream.getvalue()

    def test_kind_mismatch(self, capsys, log_stream):
        assert run(['validate', '--kind', 'crossing', NINE_LEAF_CUTS], log_stream) == EXIT_INPUT_ERROR
        assert "expected 'crossing'" in capsys.readouterr().err

    def test_newick_is_not_cuts(self, capsys, log_stream):
        assert run(['validate', '--kind', 'cuts', NINE_LEAF], log_stream) == EXIT_INPUT_ERROR
        assert 'Newick input is a tree' in capsys.readouterr().err

    def test_strict_rooted(self, capsys, log_stream):
        assert run(['validate', '--strict', ROOTED_QUARTET], log_stream) == EXIT_NOT_PHYLOGENETIC
        captured = capsys.readouterr()
        assert json.loads(captured.out)['violations'][0]['axiom'] == 'tree:degree-2'
        assert captured.err.startswith('phylorep: Not a phylogenetic tree')

    def test_lenient_rooted(self, log_stream):
        assert run(['validate', ROOTED_QUARTET], log_stream) == EXIT_OK

    def test_missing_file(self, capsys, tmp_path, log_stream):
        assert run(['validate', str(tmp_path / 'nope.json')], log_stream) == EXIT_INPUT_ERROR
        assert capsys.readouterr().err.startswith('phylorep: Cannot read')

    def test_stdin(self, capsys, monkeypatch, log_stream):
        monkeypatch.setattr('sys.stdin', io.StringIO('((1,2),3,(4,5));\n'))
        assert run(['validate', '-'], log_stream) == EXIT_OK
        assert capsys.readouterr().out == 'tree: valid\n'

    def test_not_utf8(self, capsys, tmp_path, log_stream):
        path = tmp_path / 'latin1.nwk'
        path.write_bytes(b'(\xff,2,3);')
        assert run(['validate', str(path)], log_stream) == EXIT_INPUT_ERROR
        assert 'is not UTF-8 text' in capsys.readouterr().err

    def test_stdin_not_utf8(self, capsys, monkeypatch, log_stream):
        monkeypatch.setattr('sys.stdin', io.TextIOWrapper(io.BytesIO(b'(\xff,2,3);'), encoding='utf-8'))
        assert run(['validate', '-'], log_stream) == EXIT_INPUT_ERROR
        assert capsys.readouterr().err.startswith('phylorep: stdin is not UTF-8 text')

    @pytest.mark.parametrize('leaves', [['²', '2', '3'], ['a b', 'c', 'd']])
    def test_label_outside_grammar(self, capsys, tmp_path, log_stream, leaves):
        path = tmp_path / 'star.json'
        path.write_text(json.dumps({'kind': 'cuts', 'leaves': leaves, 'cuts': []}), encoding='utf-8')
        assert run(['validate', str(path)], log_stream) == EXIT_INPUT_ERROR
        assert 'outside [A-Za-z0-9_.|-]' in capsys.readouterr().err


class TestConvert:
    def test_tree_to_crossing(self, capsys, log_stream):
        assert run(['convert', '--from', 'tree', '--to', 'crossing', NINE_LEAF], log_stream) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc['kind'] == 'crossing'
        assert len(doc['crosses']) == 108

    def test_tree_to_cuts_matches_file(self, capsys, log_stream):
        assert run(['convert', '--to', 'cuts', NINE_LEAF], log_stream) == EXIT_OK
        assert capsys.readouterr().out == (DATA_DIR / 'nine-leaf-cuts.json').read_text(encoding='utf-8')

    @pytest.mark.parametrize('kind', ['partitions', 'cuts', 'crossing', 'equivalence'])
    def test_there_and_back(self, capsys, tmp_path, log_stream, kind):
        out = tmp_path / f"nine_leaf-{kind}.json"
        assert run(['convert', '--to', kind, '--out', str(out), NINE_LEAF], log_stream) == EXIT_OK
        assert run(['convert', '--from', kind, '--to', 'tree', str(out)], log_stream) == EXIT_OK
        expected = write_newick(parse_newick(NINE_LEAF_NEWICK)) + '\n'
        assert capsys.readouterr().out == expected

    def test_tree_to_json_file(self, tmp_path, log_stream):
        out = tmp_path / 'tree.json'
        assert run(['convert', '--to', 'tree', '--out', str(out), NINE_LEAF], log_stream) == EXIT_OK
        assert json.loads(out.read_text(encoding='utf-8'))['kind'] == 'tree'

    def test_not_phylogenetic(self, capsys, log_stream):
        assert run(['convert', '--to', 'tree', BAD_CUTS], log_stream) == EXIT_NOT_PHYLOGENETIC
        captured = capsys.readouterr()
        assert json.loads(captured.out)['valid'] is False
        assert 'Cut set is not phylogenetic' in captured.err

    def test_bad_target(self, log_stream):
        assert run(['convert', '--to', 'matrix', NINE_LEAF], log_stream) == EXIT_INPUT_ERROR


class TestRoundtrip:
    def test_n5(self, capsys, log_stream):
        assert run(['roundtrip', '--n', '5'], log_stream) == EXIT_OK
        assert capsys.readouterr().out == '26 trees, all 8 round-trip identities hold\n'

    def test_mutation_is_reported(self, capsys, monkeypatch, log_stream):
        monkeypatch.setattr('phylorep.enumeration.roundtrip.tree_to_cuts', lambda t: CutSet.empty(t.leaves))
        assert run(['roundtrip', '--n', '4'], log_stream) == EXIT_NOT_PHYLOGENETIC
        out = capsys.readouterr().out
        assert out.startswith('4 trees, ')
        assert 'tree->cuts->tree: ' in out

    @pytest.mark.parametrize('argv', [['roundtrip', '--n', '8'], ['roundtrip', '--n', '6', '--max-n', '5'],
                                      ['roundtrip', '--n', '5', '--max-n', '9'], ['roundtrip', '--n', '2']])
    def test_out_of_range(self, argv, log_stream):
        assert run(argv, log_stream) == EXIT_INPUT_ERROR

    def test_env_cap(self, capsys, monkeypatch, log_stream):
        monkeypatch.setenv('PHYLOREP_MAX_N', '4')
        assert run(['roundtrip', '--n', '5'], log_stream) == EXIT_INPUT_ERROR
        assert 'PHYLOREP_MAX_N' in capsys.readouterr().err


class TestEnumerate:
    @pytest.mark.parametrize('n, count', [(3, 1), (4, 4), (5, 26), (6, 236)])
    def test_count_only(self, capsys, log_stream, n, count):
        assert run(['enumerate', '--n', str(n), '--count-only'], log_stream) == EXIT_OK
        assert capsys.readouterr().out == f"{count}\n"

    def test_newick_lines(self, capsys, log_stream):
        assert run(['enumerate', '--n', '4'], log_stream) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 4
        assert '(1,2,3,4);' in lines
        assert all(parse_newick(line).leaves.labels == ('1', '2', '3', '4') for line in lines)


class TestRender:
    def test_tree(self, capsys, log_stream):
        assert run(['render', NINE_LEAF], log_stream) == EXIT_OK
        dot = capsys.readouterr().out
        assert dot.startswith('graph "tree" {')
        assert dot.count('[shape=') == 14
        assert dot.count(' -- ') == 13

    def test_tree_of_cuts(self, capsys, log_stream):
        assert run(['render', '--kind', 'cuts', NINE_LEAF_CUTS], log_stream) == EXIT_OK
        assert capsys.readouterr().out.count('shape=box') == 9

    @pytest.mark.parametrize('index', [0, 3])
    def test_cut_graph(self, capsys, log_stream, index):
        cs = parse_document((DATA_DIR / 'nine-leaf-cuts.json').read_text(encoding='utf-8'))
        assert run(['render', '--cut-graph', str(index), NINE_LEAF_CUTS], log_stream) == EXIT_OK
        dot = capsys.readouterr().out
        assert dot.startswith(f'graph "{cs.ordered[index]}" {{')
        assert dot.count('[shape=') == 14
        assert dot.count(' -- ') == 13

    def test_cut_index_out_of_range(self, capsys, log_stream):
        assert run(['render', '--cut-graph', '4', NINE_LEAF], log_stream) == EXIT_INPUT_ERROR
        assert 'out of range' in capsys.readouterr().err


class TestUsage:
    def test_unknown_subcommand(self, log_stream):
        assert run(['frobnicate'], log_stream) == EXIT_INPUT_ERROR

    def test_no_subcommand(self, log_stream):
        assert run([], log_stream) == EXIT_INPUT_ERROR

    def test_help(self, log_stream):
        assert run(['--help'], log_stream) == EXIT_OK

    def test_verbose_and_quiet(self, log_stream):
        assert run(['-v', '-q', 'validate', NINE_LEAF], log_stream) == EXIT_INPUT_ERROR

    def test_verbose_logs(self, log_stream):
        assert run(['-vv', 'convert', '--to', 'crossing', NINE_LEAF], log_stream) == EXIT_OK
        assert 'DEBUG' in log_stream.getvalue()
