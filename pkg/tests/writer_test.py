# coding=utf-8
import os
import json

import pytest
from honeybee.config import folders as hb_folders
from ladybug.futil import nukedir

from subframework_rigidity.experiment import CampaignResult
from subframework_rigidity.plot import read_columns, plot_csv
from subframework_rigidity.simulation.parameter import ScenarioParameter
from subframework_rigidity.writer import output_folder, rows_to_csv, write_csv, \
    write_json, campaign_to_files

TEST_FOLDER = os.path.join(hb_folders.default_simulation_folder,
                           'subframework_rigidity', 'writer_test')


def test_output_folder():
    """Test the order in which output folders are picked."""
    scenario = ScenarioParameter('fig1')
    default = output_folder(scenario)
    assert os.path.basename(default) == 'fig1_{}'.format(scenario.config_hash[:10])
    scenario.folder = './results'
    assert output_folder(scenario) == './results'
    assert output_folder(scenario, './other') == './other'


def test_rows_to_csv():
    """Test the formatting of CSV cells."""
    text = rows_to_csv(('n', 'h', 'c'), [(10, None, 0.1), (20, 2.5, 1)])
    assert text == 'n,h,c\n10,,0.1\n20,2.5,1\n'


def test_write_files():
    """Test writing CSV and JSON files and plotting them."""
    csv_path = write_csv(os.path.join(TEST_FOLDER, 'sub', 'table.csv'),
                         ('n', 'a', 'b', 'seed'), [(1, 0.5, None, 3), (2, 1.5, 2.0, 3)])
    assert os.path.isfile(csv_path)
    header, columns = read_columns(csv_path)
    assert header == ['n', 'a', 'b', 'seed']
    assert columns[1] == [0.5, 1.5]
    assert columns[2][1] == 2.0

    png = plot_csv(csv_path)
    assert png.endswith('table.png') and os.path.isfile(png)
    with pytest.raises(ValueError):
        plot_csv(csv_path, columns=['missing'])

    json_path = write_json(os.path.join(TEST_FOLDER, 'data.json'), {'b': 1, 'a': [2]})
    with open(json_path) as json_file:
        assert json.load(json_file) == {'a': [2], 'b': 1}
    nukedir(TEST_FOLDER, True)


def test_campaign_to_files():
    """Test writing the two CSV files of a campaign."""
    result = CampaignResult('fig2', ('n', 'c<=1'), [[10, 50.0]],
                            ('n', 'sample', 'robot', 'h', 'c'), [(10, 0, 0, 0.5, 1.0)])
    summary, details = campaign_to_files(result, TEST_FOLDER)
    assert os.path.basename(summary) == 'fig2.csv'
    assert os.path.basename(details) == 'fig2_samples.csv'
    with open(details) as csv_file:
        assert csv_file.read() == 'n,sample,robot,h,c\n10,0,0,0.5,1.0\n'
    nukedir(TEST_FOLDER, True)
