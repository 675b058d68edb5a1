"""subframework-rigidity command line interface."""
import click

from .analyze import analyze, decompose
from .simulate import simulate
from .experiment import experiment
from .plot import plot


@click.group(help='subframework-rigidity commands for bearing rigidity analysis, '
             'decentralized rigidity maintenance and its experiment campaigns.')
def main():
    pass


main.add_command(analyze)
main.add_command(decompose)
main.add_command(simulate)
main.add_command(experiment)
main.add_command(plot)
