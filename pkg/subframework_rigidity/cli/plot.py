"""Command for plotting result CSV files."""
import click
import sys
import logging

from subframework_rigidity.plot import plot_csv

_logger = logging.getLogger(__name__)


@click.command('plot')
@click.argument('csv-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--output', '-o', help='Path of the PNG file. If not specified, it is '
              'written next to the CSV file.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--column', '-c', help='Name of a column to draw. Can be repeated. By '
              'default all data columns are drawn.', multiple=True)
@click.option('--log-file', '-log', help='Optional log file to output the path of '
              'the PNG file. By default it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def plot(csv_file, output, column, log_file):
    """Plot the columns of a campaign or trace CSV against its first column.

    \b
    Args:
        csv_file: Full path to a CSV file written by a campaign or a mission.
    """
    try:
        png = plot_csv(csv_file, output, list(column) if column else None)
        log_file.write(png)
    except Exception as e:
        _logger.exception('Plotting failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
