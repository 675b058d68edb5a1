# coding=utf-8
import pytest

from subframework_rigidity.bearing import is_idr, is_ibr_rank
from subframework_rigidity.exceptions import SamplingExhausted
from subframework_rigidity.experiment import run_fig1, run_fig2, band_share, \
    sample_rigid_erdos_renyi
from subframework_rigidity.generator import substream
from subframework_rigidity.simulation.montecarlo import MonteCarloParameter
from subframework_rigidity.simulation.parameter import ScenarioParameter

from tests.fixtures.scenario import small_fig1, small_fig2


def test_sample_rigid_erdos_renyi():
    """Test that accepted Erdos-Renyi frameworks are distance and bearing rigid."""
    framework, rejected = sample_rigid_erdos_renyi(
        10, 5 / 9, 3, substream(0, 10, 0), 500, 1e-8)
    assert framework.is_connected()
    assert is_idr(framework)
    assert is_ibr_rank(framework)
    assert set(rejected) == {'disconnected', 'not_idr', 'not_ibr'}


def test_sampling_exhausted():
    """Test that the retry cap raises SamplingExhausted with diagnostics."""
    with pytest.raises(SamplingExhausted) as info:
        sample_rigid_erdos_renyi(10, 1e-9, 3, substream(0, 10, 0), 1, 1e-8, sample=4)
    assert info.value.diagnostics['disconnected'] == 1
    assert info.value.diagnostics['attempts'] == 1
    assert "'sample': 4" in str(info.value)
    assert "'disconnected': 1" in str(info.value)

    scenario = small_fig1()
    scenario.monte_carlo_parameter = MonteCarloParameter(
        [10], 1, average_degree=0.001, retry_cap=1)
    with pytest.raises(SamplingExhausted) as info:
        run_fig1(scenario)
    assert info.value.diagnostics['n'] == 10
    assert info.value.diagnostics['sample'] == 0


def test_fig1():
    """Test a reduced minimal radius campaign."""
    scenario = small_fig1()
    result = run_fig1(scenario)
    str(result)  # test the string representation
    assert result.kind == 'fig1'
    assert result.header[0] == 'n'
    assert 'bearing_r<=2' in result.header and 'distance_r<=3' in result.header
    assert len(result.rows) == 1
    row = dict(zip(result.header, result.rows[0]))
    assert row['n'] == 10
    assert row['samples'] == 3
    assert row['config_hash'] == scenario.config_hash
    for kind in ('bearing', 'distance'):
        levels = [row['{}_r<={}'.format(kind, k)] for k in (1, 2, 3)]
        assert levels == sorted(levels)
        assert all(0 <= v <= 100 for v in levels)
    assert len(result.detail_rows) == 30
    for _, _, _, bearing, distance in result.detail_rows:
        if distance is not None:
            assert bearing is not None and bearing <= distance
    assert run_fig1(scenario, workers=2).rows == result.rows


def test_fig2():
    """Test a reduced protocol cost campaign."""
    scenario = small_fig2()
    result = run_fig2(scenario)
    assert result.kind == 'fig2'
    assert 'h<=0.5&c<=1' in result.header
    assert 'h<=0.5&c<=1.0' not in result.header
    assert 'c<=2' in result.header
    row = dict(zip(result.header, result.rows[0]))
    assert row['h<=1&c<=2'] <= row['h<=1']
    assert row['h<=1&c<=2'] <= row['c<=2']
    assert len(result.detail_rows) == 30
    assert all(h is not None and h > 0 and c >= 1
               for _, _, _, h, c in result.detail_rows)
    assert result.column('n') == [10]
    assert 0 <= band_share(result, 10, 0.5, 1, 2) <= 100
    assert band_share(result, 20, 0, 1, 2) == 0
    assert run_fig2(scenario).rows == result.rows


@pytest.mark.slow
def test_fig1_defaults():
    """Test the minimal radius shares of the full size campaign."""
    result = run_fig1(ScenarioParameter('fig1'), workers=4)
    assert result.column('n') == list(range(10, 55, 5))
    bearing, distance = result.column('bearing_r<=2'), result.column('distance_r<=2')
    assert all(b >= d for b, d in zip(bearing, distance))
    assert bearing[-1] >= 40
    assert all(v >= 90 for v in result.column('distance_r<=3'))


@pytest.mark.slow
def test_fig2_defaults():
    """Test the delay and cost shares of the full size campaign at both ends."""
    scenario = ScenarioParameter('fig2')
    scenario.monte_carlo_parameter = MonteCarloParameter(robot_counts=[10, 15, 100])
    result = run_fig2(scenario, workers=4)
    assert band_share(result, 15, 0.5, 1, 2) >= 60
    row = dict(zip(result.header, result.rows[-1]))
    assert row['n'] == 100
    assert row['h<=0.5'] >= 60
