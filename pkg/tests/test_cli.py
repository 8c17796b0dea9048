import json

import pytest
from click.testing import CliRunner

from src.cli.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def records(result):
    return [json.loads(line) for line in result.stdout.splitlines() if line.startswith('{')]


class TestSingleInstance:
    def test_check_perm(self, runner):
        result = runner.invoke(cli, ['check-perm', '--field', '3', '--system', '(x, y)'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['is_perm'] is True

    def test_check_perm_collision(self, runner):
        result = runner.invoke(cli, ['check-perm', '-F', 'gf3', '-s', '(x^2, y)'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['is_perm'] is False
        assert len(record['collision']) == 2

    def test_hermite(self, runner):
        result = runner.invoke(cli, ['hermite', '--field', '3', '--system', '(x^2 + y^2, x*y)'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['is_perm'] is False
        assert record['agree'] is True

    def test_parse_error(self, runner):
        result = runner.invoke(cli, ['check-perm', '--field', '3', '--system', '(x +, y)'])
        assert result.exit_code == 1
        assert records(result) == []

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / 'out.jsonl'
        result = runner.invoke(cli, ['check-perm', '--field', '5', '--system', '(y, x)', '--out', str(out)])
        assert result.exit_code == 0
        assert records(result) == []
        (line,) = out.read_text().splitlines()
        assert json.loads(line)['is_perm'] is True

    def test_table_format(self, runner):
        result = runner.invoke(cli, ['check-perm', '--field', '3', '--system', '(x, y)', '--format', 'table'])
        assert result.exit_code == 0
        assert records(result) == []
        assert 'is_perm' in result.stdout


class TestClassifiers:
    def test_classify_quad(self, runner):
        result = runner.invoke(cli, ['classify-quad', '--field', '3', '--coeffs', '0,0,0,0,1,0,0,0,1,0'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['verdict']['case'] == "Odd-i"
        assert record['agree'] is True

    def test_classify_quad_from_system(self, runner):
        result = runner.invoke(cli, ['classify-quad', '--field', '4', '--system', '(y, x^2)'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['verdict']['case'] == "Even-i"

    def test_classify_quad_needs_input(self, runner):
        result = runner.invoke(cli, ['classify-quad', '--field', '3'])
        assert result.exit_code == 2

    def test_classify_homog3(self, runner):
        result = runner.invoke(cli, ['classify-homog3', '--field', '7', '--coeffs', '1,0,1,1,0,1'])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['verdict']['reason'] == "cubing-not-bijective"
        assert record['oracle']['is_perm'] is False

    def test_scan_quad(self, runner):
        result = runner.invoke(cli, ['scan-quad', '--field', '2', '--exhaustive'])
        assert result.exit_code == 0
        rows = records(result)
        assert len(rows) == 1025
        assert rows[-1]['summary'] == 'scan-quad'
        assert rows[-1]['systems'] == 1024

    def test_scan_homog3(self, runner):
        result = runner.invoke(cli, ['scan-homog3', '--field', '2', '--exhaustive'])
        assert result.exit_code == 0
        *rows, summary = records(result)
        assert len(rows) == 16
        assert summary['summary'] == 'scan-homog3'
        assert summary['systems'] == 16


class TestBinomial:
    def test_scan_five_flags_disagreements(self, runner):
        result = runner.invoke(cli, ['scan-binomial', '--field', '5'])
        assert result.exit_code == 1
        *rows, summary = records(result)
        assert len(rows) == 25
        assert (1, 0) in {(r['a1'], r['a2']) for r in rows if not r['agree']}
        assert summary['summary'] == 'scan-binomial'
        assert summary['reading'] == 'literal'
        assert summary['disagreements'] == 3

    def test_even_field_needs_flag(self, runner):
        result = runner.invoke(cli, ['scan-binomial', '--field', '8'])
        assert result.exit_code == 1
        assert records(result) == []

    def test_even_flag_on_odd_field(self, runner):
        result = runner.invoke(cli, ['scan-binomial', '--field', '5', '--even'])
        assert result.exit_code == 1

    def test_even(self, runner):
        result = runner.invoke(cli, ['scan-binomial', '--field', '8', '--even'])
        *rows, summary = records(result)
        assert len(rows) == 64
        assert rows[0]['flags'] == ['disagreement', 'a-zero-cube-not-bijective']
        assert summary['q'] == 8


class TestEquivalence:
    WITNESS = (
        "steps:\n"
        "  - type: relabel\n"
        "    perm: [2, 0, 1]\n"
        "  - type: cs_shift\n"
        "    shifts: [[], [[2, [2, 0, 0]]], [[2, [1, 1, 0]]]]\n"
    )

    def test_verify(self, runner, tmp_path):
        path = tmp_path / 'witness.yml'
        path.write_text(self.WITNESS)
        result = runner.invoke(cli, ['verify-equiv', '--field', '3', '--system', '(z, x + z^2, y + x*z)',
                                     '--target', '(x, y, z)', '--witness', str(path)])
        assert result.exit_code == 0
        (record,) = records(result)
        assert record['verified'] is True
        assert record['agree'] is True

    def test_wrong_target(self, runner, tmp_path):
        path = tmp_path / 'witness.yml'
        path.write_text(self.WITNESS)
        result = runner.invoke(cli, ['verify-equiv', '--field', '3', '--system', '(z, x + z^2, y + x*z)',
                                     '--target', '(y, x, z)', '--witness', str(path)])
        assert result.exit_code == 1
        (record,) = records(result)
        assert record['verified'] is False

    def test_conjecture_summary_line(self, runner):
        result = runner.invoke(cli, ['conjecture-scan', '--field', '3', '--samples', '10', '--seed', '1'])
        assert result.exit_code in (0, 1)
        rows = records(result)
        assert rows[-1]['summary'] == 'conjecture-scan'
        assert rows[-1]['systems'] == 10


def test_show_config(runner):
    result = runner.invoke(cli, ['show-config'])
    assert result.exit_code == 0
    assert 'Configuration:' in result.stdout
