# coding=utf-8
"""Methods to write analysis, campaign and mission results to files."""
import os
import json

from ladybug.futil import preparedir, write_to_file
from honeybee.config import folders as hb_folders


def output_folder(scenario, folder=None):
    """Get the directory into which the results of a scenario are written.

    Args:
        scenario: A ScenarioParameter.
        folder: Optional directory that overrides the scenario folder. If both
            are None, a subfolder of the honeybee default_simulation_folder
            named after the scenario kind and its config hash is used.
    """
    if folder is not None:
        return folder
    if scenario.folder is not None:
        return scenario.folder
    name = '{}_{}'.format(scenario.kind, scenario.config_hash[:10])
    return os.path.join(hb_folders.default_simulation_folder,
                        'subframework_rigidity', name)


def _format(value):
    """Format one CSV cell so that identical inputs give identical text."""
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def rows_to_csv(header, rows):
    """Get CSV text from a header and a list of rows."""
    lines = [','.join(header)]
    lines.extend(','.join(_format(v) for v in row) for row in rows)
    return '\n'.join(lines) + '\n'


def write_csv(file_path, header, rows):
    """Write rows to a CSV file, creating its folder when needed.

    Returns:
        The path of the written file.
    """
    return write_to_file(file_path, rows_to_csv(header, rows), mkdir=True)


def write_json(file_path, data):
    """Write a dictionary to a JSON file with sorted keys.

    Returns:
        The path of the written file.
    """
    text = json.dumps(data, indent=4, sort_keys=True)
    return write_to_file(file_path, text + '\n', mkdir=True)


def campaign_to_files(result, folder):
    """Write the aggregated and per-sample rows of a CampaignResult.

    Args:
        result: A CampaignResult from run_fig1 or run_fig2.
        folder: Directory into which the CSV files are written.

    Returns:
        A tuple with the paths of the aggregated and the per-sample CSV.
    """
    preparedir(folder, remove_content=False)
    summary = write_csv(os.path.join(folder, '{}.csv'.format(result.kind)),
                        result.header, result.rows)
    details = write_csv(os.path.join(folder, '{}_samples.csv'.format(result.kind)),
                        result.detail_header, result.detail_rows)
    return summary, details


def mission_to_files(result, folder):
    """Write the trace, events, snapshots and summary of a MissionResult.

    Args:
        result: A MissionResult from run_mission.
        folder: Directory into which the files are written.

    Returns:
        A dictionary from file role to its path.
    """
    preparedir(folder, remove_content=False)
    trace = result.trace
    files = {
        'trace': write_csv(os.path.join(folder, 'trace.csv'), trace.header, trace.rows),
        'events': write_csv(os.path.join(folder, 'events.csv'),
                            ('t', 'kind', 'a', 'b'), trace.events),
        'snapshots': write_json(
            os.path.join(folder, 'snapshots.json'),
            {'type': 'Snapshots',
             'snapshots': [{'t': t, 'states': s} for t, s in trace.snapshots]}),
        'targets': write_json(os.path.join(folder, 'targets.json'),
                              result.mission.to_dict()),
        'summary': write_json(os.path.join(folder, 'summary.json'), result.summary())
    }
    if result.message_log is not None:
        files['messages'] = write_to_file(
            os.path.join(folder, 'messages.csv'), result.message_log.to_csv(), True)
    return files
