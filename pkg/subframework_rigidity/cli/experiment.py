"""Commands for running the Monte-Carlo campaigns."""
import click
import sys
import logging
import json

from subframework_rigidity.experiment import run_fig1, run_fig2
from subframework_rigidity.writer import output_folder, campaign_to_files
from .simulate import load_scenario

_logger = logging.getLogger(__name__)


@click.group(help='Commands for running the Monte-Carlo campaigns.')
def experiment():
    pass


def _run_campaign(kind, runner, scenario_json, seed, out, workers, log_file):
    try:
        scenario = load_scenario(scenario_json, kind)
        if seed is not None:
            scenario.seed = seed
        result = runner(scenario, workers)
        summary, details = campaign_to_files(result, output_folder(scenario, out))
        log_file.write(json.dumps({'summary': summary, 'samples': details}))
    except Exception as e:
        _logger.exception('The {} campaign failed.\n{}'.format(kind, e))
        sys.exit(1)
    else:
        sys.exit(0)


_scenario_argument = click.argument(
    'scenario-json', required=False, default=None,
    type=click.Path(exists=True, file_okay=True, dir_okay=False, resolve_path=True))
_seed_option = click.option(
    '--seed', '-s', help='Integer seed that overrides the one of the scenario.',
    type=int, default=None)
_out_option = click.option(
    '--out', '-o', help='Folder into which the CSV files will be written. If not '
    'specified, the scenario folder or a subfolder of the honeybee '
    'default_simulation_folder is used.', default=None,
    type=click.Path(file_okay=False, dir_okay=True, resolve_path=True))
_workers_option = click.option(
    '--workers', '-w', help='Number of worker processes for the samples.',
    type=int, default=1, show_default=True, envvar='SUBFRAMEWORK_RIGIDITY_WORKERS')
_log_option = click.option(
    '--log-file', '-log', help='Optional log file to output a dictionary with the '
    'paths of the summary and per-sample CSV files. By default it will be printed '
    'out to stdout.', type=click.File('w'), default='-', show_default=True)


@experiment.command('fig1')
@_scenario_argument
@_seed_option
@_out_option
@_workers_option
@_log_option
def fig1(scenario_json, seed, out, workers, log_file):
    """Get the share of vertices with minimal radius r*_i <= k against team size.

    Bearing and distance minimal radii are computed on Erdos-Renyi frameworks
    that are both distance and bearing rigid.

    \b
    Args:
        scenario_json: Full path to a ScenarioParameter JSON file. If not
            specified, the default campaign settings are used.
    """
    _run_campaign('fig1', run_fig1, scenario_json, seed, out, workers, log_file)


@experiment.command('fig2')
@_scenario_argument
@_seed_option
@_out_option
@_workers_option
@_log_option
def fig2(scenario_json, seed, out, workers, log_file):
    """Get the share of robots with normalized protocol delay and cost under thresholds.

    The metrics are computed on random bearing rigid sensing teams with
    barycenter-facing cameras.

    \b
    Args:
        scenario_json: Full path to a ScenarioParameter JSON file. If not
            specified, the default campaign settings are used.
    """
    _run_campaign('fig2', run_fig2, scenario_json, seed, out, workers, log_file)
