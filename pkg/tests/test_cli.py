"""
CLI tests
اختبارات واجهة سطر الأوامر
"""

import io
import json

import pandas as pd
import pytest
from click.testing import CliRunner

from cli import cli, main
from data.sample_codes import AFILES_DIR
from enumeration.weight_enumerator import count_1p5, union_bound
from utils.serializers import CosetRecordSchema, SpectrumSchema, WeightReportSchema, dump_json, load_json


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


class TestEnumerateCommand:
    """Test `enumerate`"""

    def test_table(self, runner):
        result = runner.invoke(cli, ['enumerate', '--sample', 'polar_128_64'])
        assert result.exit_code == 0
        assert 'w_min = 8    A_wmin = 688' in result.output
        assert '1.5 w_min = 12    A_1.5wmin = 5376' in result.output

    def test_json_round_trip(self, runner, polar_128_64):
        result = runner.invoke(cli, ['--json', 'enumerate', '--sample', 'polar_128_64'])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload['wmin'] == '8'
        assert 'w_min' not in payload
        assert payload['A_wmin'] == '688'
        assert payload['A_1p5wmin'] == '5376'
        assert payload['pairs'][0]['exponent'] == 9
        assert load_json(WeightReportSchema(), result.output) == count_1p5(polar_128_64)

    def test_pairs_csv(self, runner):
        result = runner.invoke(cli, ['--csv', 'enumerate', '--sample', 'polar_128_64', '--pairs'])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].startswith('"f_row, g_row",')
        assert len(lines) == 7

    def test_terms_csv(self, runner):
        result = runner.invoke(cli, ['--csv', 'enumerate', '--rm', '2', '5'])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == 'w,A_w'

    def test_afile_strict(self, runner):
        path = str(AFILES_DIR / 'polar_128_64_snr6_max_degree.txt')
        result = runner.invoke(cli, ['enumerate', '--rows', path, '--m', '7'])
        assert result.exit_code == 2
        assert 'NOT_DECREASING' in result.stderr

    def test_afile_with_closure(self, runner):
        path = str(AFILES_DIR / 'polar_128_64_snr6_max_degree.txt')
        result = runner.invoke(cli, ['--closure', 'enumerate', '--rows', path, '--m', '7'])
        assert result.exit_code == 0
        assert '# closure added rows:' in result.stderr
        assert 'A_wmin = 48' in result.output
        assert 'A_1.5wmin = 0' in result.output

    def test_full_space_code(self, runner):
        result = runner.invoke(cli, ['enumerate', '--rm', '3', '3'])
        assert result.exit_code == 2
        assert 'UNSUPPORTED_CODE' in result.stderr

    def test_rows_without_m(self, runner):
        path = str(AFILES_DIR / 'rm_2_5.txt')
        result = runner.invoke(cli, ['enumerate', '--rows', path])
        assert result.exit_code == 1

    def test_two_sources(self, runner):
        result = runner.invoke(cli, ['enumerate', '--rm', '2', '5', '--sample', 'rm_2_5'])
        assert result.exit_code == 1

    def test_bad_afile(self, runner, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text('12 x7\n', encoding='utf-8')
        result = runner.invoke(cli, ['enumerate', '--rows', str(path), '--m', '5'])
        assert result.exit_code == 1
        assert "Invalid row index 'x7'" in result.stderr


class TestOtherCommands:
    """Test verify, orbit, pairs, bler and oracle"""

    def test_verify(self, runner):
        result = runner.invoke(cli, ['verify', '--rm', '2', '4'])
        assert result.exit_code == 0
        assert 'FAIL' not in result.output
        assert 'PASS  A_wmin' in result.output

    def test_verify_mismatch(self, runner, monkeypatch):
        monkeypatch.setattr('enumeration.oracle.count_min_weight', lambda spec: 0)
        result = runner.invoke(cli, ['verify', '--rm', '2', '4'])
        assert result.exit_code == 3
        assert 'FAIL  A_wmin' in result.output
        assert 'VERIFICATION_MISMATCH' in result.stderr

    def test_verify_json(self, runner):
        result = runner.invoke(cli, ['--json', 'verify', '--rm', '1', '4'])
        assert result.exit_code == 0
        assert all(check['passed'] for check in json.loads(result.output))

    def test_orbit(self, runner):
        result = runner.invoke(cli, ['orbit', '--vars', '0,2', '--m', '3'])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[-1] == '# |orbit(x0x2)| = 2^{2+0+1} = 8'
        assert len(lines) == 9

    def test_orbit_by_row(self, runner):
        result = runner.invoke(cli, ['--json', 'orbit', '--row', '5', '--m', '3'])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload['monomial'] == [1]
        assert payload['cardinality'] == '4'

    def test_orbit_needs_one_monomial(self, runner):
        result = runner.invoke(cli, ['orbit', '--vars', '0', '--row', '1', '--m', '3'])
        assert result.exit_code == 1

    def test_orbit_cap(self, runner):
        # 2^(3 + 18 + 19 + 20) polynomials
        result = runner.invoke(cli, ['orbit', '--vars', '20,21,22', '--m', '23'])
        assert result.exit_code == 1
        assert 'TOO_LARGE' in result.stderr
        assert result.output == ''

    def test_orbit_cap_from_config(self, runner, monkeypatch):
        from config.settings import TestingConfig
        monkeypatch.setattr(TestingConfig, 'ORBIT_CAP', 16)
        assert runner.invoke(cli, ['orbit', '--vars', '3,4', '--m', '5']).exit_code == 1
        assert runner.invoke(cli, ['orbit', '--vars', '0,1', '--m', '5']).exit_code == 0

    def test_orbit_variable_outside_m(self, runner):
        result = runner.invoke(cli, ['orbit', '--vars', '0,4', '--m', '3'])
        assert result.exit_code == 1
        assert 'INDEX_OUT_OF_RANGE' in result.stderr

    def test_pairs(self, runner):
        result = runner.invoke(cli, ['--json', 'pairs', '--rm', '2', '5'])
        assert result.exit_code == 0
        records = load_json(CosetRecordSchema(), result.output, many=True)
        assert len(records) == 15
        record = next(r for r in records if (r.f_row, r.g_row) == (25, 22))
        assert record.K_f == (26, 27, 28, 29)
        assert record.count == 64

    def test_bler(self, runner):
        result = runner.invoke(cli, ['bler', '--rm', '2', '5', '--ebn0', '0:2:1'])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == '# truncated union bound over w < 2 w_min: w in {8, 12}'
        assert lines[1] == 'EbN0_dB,bler_bound'
        assert len(lines) == 5

    def test_bler_bad_rate(self, runner):
        result = runner.invoke(cli, ['bler', '--rm', '2', '5', '--rate', '2'])
        assert result.exit_code == 1

    def test_oracle_csv(self, runner):
        result = runner.invoke(cli, ['--csv', 'oracle', '--rm', '1', '3'])
        assert result.exit_code == 0
        assert result.output == 'weight,count\n0,1\n4,14\n8,1\n'

    def test_oracle_json(self, runner):
        result = runner.invoke(cli, ['--json', 'oracle', '--rm', '1', '3'])
        spectrum = load_json(SpectrumSchema(), result.output)
        assert spectrum.counts == {0: 1, 4: 14, 8: 1}

    def test_oracle_too_large(self, runner):
        result = runner.invoke(cli, ['--k-limit', '10', 'oracle', '--rm', '2', '5'])
        assert result.exit_code == 1
        assert 'TOO_LARGE' in result.stderr


class TestMain:
    """Test the exit codes returned by main"""

    def test_success(self, capsys):
        assert main(['enumerate', '--rm', '2', '5']) == 0
        assert 'A_wmin = 620' in capsys.readouterr().out

    def test_usage_error(self, capsys):
        assert main(['--json', '--csv', 'enumerate', '--rm', '2', '5']) == 1
        assert main(['enumerate', '--no-such-option']) == 1

    def test_invalid_code(self, capsys):
        assert main(['enumerate', '--rm', '3', '3']) == 2


class TestReferenceExamples:
    """CLI runs of the worked examples"""

    def test_reed_muller_3_7(self, runner):
        result = runner.invoke(cli, ['enumerate', '--rm', '3', '7'])
        assert 'A_wmin = 94488' in result.output
        assert 'A_1.5wmin = 74078592' in result.output

    def test_repetition_code(self, runner):
        result = runner.invoke(cli, ['enumerate', '--rm', '0', '5'])
        assert result.exit_code == 0
        assert 'A_1.5wmin = 0' in result.output

    def test_orbit_of_x0x1(self, runner):
        lines = runner.invoke(cli, ['orbit', '--vars', '0,1', '--m', '2']).output.splitlines()
        assert len(lines) == 5
        assert lines[-1] == '# |orbit(x0x1)| = 2^{2+0+0} = 4'

    def test_orbit_of_row_84(self, runner):
        result = runner.invoke(cli, ['orbit', '--row', '84', '--m', '7'])
        assert result.output.splitlines()[-1] == '# |orbit(x0x1x3x5)| = 2^{4+0+0+1+2} = 128'

    def test_orbit_of_constant(self, runner):
        result = runner.invoke(cli, ['orbit', '--vars', '', '--m', '3'])
        assert result.output.splitlines() == ['1', '# |orbit(1)| = 2^{0} = 1']

    def test_verify_k_limit(self, runner):
        result = runner.invoke(cli, ['--k-limit', '8', 'verify', '--rm', '2', '5'])
        assert result.exit_code == 1

    def test_bler_matches_library(self, runner, polar_128_64):
        result = runner.invoke(cli, ['bler', '--sample', 'polar_128_64'])
        frame = pd.read_csv(io.StringIO(result.output), comment='#', float_precision='round_trip')
        assert len(frame) == 11
        expected = union_bound(count_1p5(polar_128_64), polar_128_64.rate, list(range(11)))
        assert frame['bler_bound'].tolist() == expected
        assert frame['bler_bound'].iloc[8] <= frame['bler_bound'].iloc[2]

    def test_json_is_canonical(self, runner):
        result = runner.invoke(cli, ['--json', 'enumerate', '--sample', 'polar_128_64'])
        schema = WeightReportSchema()
        assert dump_json(schema, load_json(schema, result.output)) + '\n' == result.output

    def test_pairs_table_afile(self, runner):
        path = str(AFILES_DIR / 'polar_128_64.txt')
        result = runner.invoke(cli, ['enumerate', '--rows', path, '--m', '7', '--pairs'])
        assert result.exit_code == 0
        assert '2^{2+1+2}' in result.output
        assert 'A_1.5wmin = 5376' in result.output
