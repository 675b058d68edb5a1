"""Commands for analyzing the rigidity of framework JSON files."""
import click
import sys
import logging
import json

from subframework_rigidity.framework import Framework
from subframework_rigidity.run import analyze as analyze_framework
from subframework_rigidity.subframework import decompose as decompose_framework

_logger = logging.getLogger(__name__)


def _load_framework(framework_json):
    with open(framework_json) as json_file:
        data = json.load(json_file)
    return Framework.from_dict(data)


@click.command('analyze')
@click.argument('framework-json', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--tol', '-t', help='Relative threshold of the rank and eigenvalue '
              'tests.', type=float, default=1e-8, show_default=True)
@click.option('--log-file', '-log', help='Optional file to output the rigidity report '
              'JSON. By default it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def analyze(framework_json, tol, log_file):
    """Get the rigidity report of a Framework JSON file.

    The report holds the bearing rigidity verdicts of the rank and spectral
    tests, the rigidity eigenvalue, the minimal radii, the inverse memberships
    and the protocol metrics.

    \b
    Args:
        framework_json: Full path to a Framework JSON file.
    """
    try:
        report = analyze_framework(_load_framework(framework_json), tol)
        log_file.write(json.dumps(report, indent=4, sort_keys=True))
    except Exception as e:
        _logger.exception('Framework analysis failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)


@click.command('decompose')
@click.argument('framework-json', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--tol', '-t', help='Relative threshold of the rank tests.',
              type=float, default=1e-8, show_default=True)
@click.option('--measurement', '-m', help='Rigidity notion of the minimal radii.',
              type=click.Choice(['bearing', 'distance']), default='bearing',
              show_default=True)
@click.option('--workers', '-w', help='Number of threads for the per-vertex '
              'searches.', type=int, default=1, show_default=True,
              envvar='SUBFRAMEWORK_RIGIDITY_WORKERS')
@click.option('--log-file', '-log', help='Optional file to output the Decomposition '
              'JSON. By default it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def decompose(framework_json, tol, measurement, workers, log_file):
    """Get the minimal-radius decomposition of a Framework JSON file.

    \b
    Args:
        framework_json: Full path to a Framework JSON file.
    """
    try:
        framework = _load_framework(framework_json)
        result = decompose_framework(framework, tol, measurement, workers)
        log_file.write(json.dumps(result.to_dict(), indent=4, sort_keys=True))
    except Exception as e:
        _logger.exception('Framework decomposition failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
