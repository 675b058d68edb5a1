"""Commands for simulating collection missions under rigidity maintenance."""
import click
import sys
import logging
import json

from subframework_rigidity.run import run_mission
from subframework_rigidity.simulation.parameter import ScenarioParameter
from subframework_rigidity.writer import output_folder, mission_to_files

_logger = logging.getLogger(__name__)


def load_scenario(scenario_json, kind=None):
    """Load a ScenarioParameter from a JSON file, optionally forcing its kind."""
    if scenario_json is None:
        scenario = ScenarioParameter()
    else:
        with open(scenario_json) as json_file:
            data = json.load(json_file)
        scenario = ScenarioParameter.from_dict(data)
    if kind is not None:
        scenario.kind = kind
    return scenario


@click.command('simulate')
@click.argument('scenario-json', required=False, default=None, type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--seed', '-s', help='Integer seed that overrides the one of the '
              'scenario.', type=int, default=None)
@click.option('--out', '-o', help='Folder into which the trace, events, snapshots '
              'and summary will be written. If not specified, the scenario folder '
              'is used and, when that is missing too, a subfolder of the honeybee '
              'default_simulation_folder.', default=None,
              type=click.Path(file_okay=False, dir_okay=True, resolve_path=True))
@click.option('--workers', '-w', help='Number of threads for the per-subframework '
              'gradient terms.', type=int, default=1, show_default=True,
              envvar='SUBFRAMEWORK_RIGIDITY_WORKERS')
@click.option('--log-file', '-log', help='Optional log file to output a dictionary '
              'with the paths of the generated files. By default it will be printed '
              'out to stdout.', type=click.File('w'), default='-', show_default=True)
def simulate(scenario_json, seed, out, workers, log_file):
    """Simulate a collection mission from a ScenarioParameter JSON file.

    The exit code is 2 when a collision or a rigidity floor breach ends the
    run early. The partial trace is written in that case too.

    \b
    Args:
        scenario_json: Full path to a ScenarioParameter JSON file. If not
            specified, the default mission scenario is simulated.
    """
    try:
        scenario = load_scenario(scenario_json, 'mission')
        if seed is not None:
            scenario.seed = seed
        result = run_mission(scenario, workers)
        files = mission_to_files(result, output_folder(scenario, out))
        log_file.write(json.dumps(files))
    except Exception as e:
        _logger.exception('Mission simulation failed.\n{}'.format(e))
        sys.exit(1)
    if not result.completed:
        _logger.warning('Mission ended early: {}'.format(result.error))
        sys.exit(2)
    sys.exit(0)
