# coding=utf-8
"""Plot the CSV files written by the campaigns and the mission runs."""
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from ladybug.futil import csv_to_matrix  # noqa: E402

SKIPPED = ('samples', 'rejected', 'seed', 'config_hash')


def _to_float(text):
    try:
        return float(text)
    except ValueError:
        return float('nan')


def read_columns(csv_path):
    """Get the header and the numeric columns of a CSV file.

    Returns:
        A tuple with the list of column names and a list of columns, each a
        list of floats. Empty or non-numeric cells are NaN.
    """
    matrix = [[cell.strip() for cell in row] for row in csv_to_matrix(csv_path)]
    matrix = [row for row in matrix if any(row)]
    header, body = matrix[0], matrix[1:]
    columns = [[_to_float(row[k]) for row in body] for k in range(len(header))]
    return header, columns


def plot_csv(csv_path, png_path=None, columns=None, title=None):
    """Plot the columns of a CSV file against its first column.

    Args:
        csv_path: Path to a CSV written by a campaign or a mission run.
        png_path: Path of the PNG to write. If None, the CSV path with a .png
            extension is used.
        columns: Optional list of column names to draw. By default every
            column but the first one and the bookkeeping columns is drawn.
        title: Optional plot title. (Default: the CSV file name).

    Returns:
        The path of the written PNG file.
    """
    header, data = read_columns(csv_path)
    if columns is None:
        columns = [name for name in header[1:] if name not in SKIPPED]
    unknown = [name for name in columns if name not in header]
    if unknown:
        raise ValueError('Columns {} are not in {}.'.format(unknown, csv_path))
    png_path = png_path or os.path.splitext(csv_path)[0] + '.png'

    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        x = data[0]
        for name in columns:
            ax.plot(x, data[header.index(name)], marker='.', label=name)
        ax.set_xlabel(header[0])
        ax.set_title(title or os.path.basename(csv_path))
        ax.grid(True)
        if len(columns) <= 12:
            ax.legend(fontsize='small')
        fig.tight_layout()
        fig.savefig(png_path, dpi=120)
    finally:
        plt.close(fig)
    return png_path
