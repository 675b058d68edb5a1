"""Test the command line interface."""
import os
import json

from click.testing import CliRunner
from honeybee.config import folders as hb_folders
from ladybug.futil import nukedir

from subframework_rigidity.cli import main
from subframework_rigidity.cli.analyze import analyze, decompose
from subframework_rigidity.cli.simulate import simulate
from subframework_rigidity.cli.experiment import experiment
from subframework_rigidity.cli.plot import plot

TEST_FOLDER = os.path.join(hb_folders.default_simulation_folder,
                           'subframework_rigidity', 'cli_test')


def test_main():
    runner = CliRunner()
    result = runner.invoke(main, ['--help'])
    assert result.exit_code == 0
    for command in ('analyze', 'decompose', 'simulate', 'experiment', 'plot'):
        assert command in result.output


def test_analyze():
    runner = CliRunner()
    result = runner.invoke(analyze, ['./tests/json/triangle.json'])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report['ibr_rank']
    assert report['decomposition']['r_star'] == [1, 1, 1]

    result = runner.invoke(analyze, ['./tests/json/bad_framework.json'])
    assert result.exit_code == 1


def test_decompose():
    runner = CliRunner()
    result = runner.invoke(decompose, ['./tests/json/three_path.json'])
    assert result.exit_code == 0
    assert json.loads(result.output)['r_star'] == [1, None, 1]

    result = runner.invoke(
        decompose, ['./tests/json/three_path.json', '--measurement', 'distance'])
    assert result.exit_code == 0
    assert json.loads(result.output)['r_star'] == [1, None, 1]


def test_simulate():
    runner = CliRunner()
    out = os.path.join(TEST_FOLDER, 'mission')
    result = runner.invoke(
        simulate, ['./tests/json/mission_small.json', '--out', out])
    assert result.exit_code == 0
    for name in ('trace.csv', 'events.csv', 'snapshots.json', 'targets.json',
                 'summary.json', 'messages.csv'):
        assert os.path.isfile(os.path.join(out, name))
    with open(os.path.join(out, 'summary.json')) as json_file:
        summary = json.load(json_file)
    assert summary['status'] == 'completed'

    result = runner.invoke(plot, [os.path.join(out, 'trace.csv'),
                                  '--column', 'min_lambda', '--column', 'collected'])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(out, 'trace.png'))
    nukedir(TEST_FOLDER, True)


def test_experiment():
    runner = CliRunner()
    out = os.path.join(TEST_FOLDER, 'fig1')
    result = runner.invoke(
        experiment, ['fig1', './tests/json/fig1_small.json', '--out', out])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(out, 'fig1.csv'))
    assert os.path.isfile(os.path.join(out, 'fig1_samples.csv'))

    result = runner.invoke(plot, [os.path.join(out, 'fig1.csv')])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(out, 'fig1.png'))

    result = runner.invoke(plot, [os.path.join(out, 'fig1.csv'), '-c', 'missing'])
    assert result.exit_code == 1
    nukedir(TEST_FOLDER, True)
