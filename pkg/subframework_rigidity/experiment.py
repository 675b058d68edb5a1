# coding=utf-8
"""Monte-Carlo campaigns over random frameworks and random sensing teams.

Every sample draws from its own substream keyed by (seed, n, sample), so the
results do not depend on the number of workers.
"""
from __future__ import division

import logging
from concurrent.futures import ProcessPoolExecutor

from .bearing import is_idr, is_ibr_rank
from .exceptions import SamplingExhausted
from .generator import substream, gen_erdos_renyi, gen_sensing_framework
from .laplacian import is_ibr_spectral
from .protocol import metrics
from .sensing import comm_graph
from .subframework import decompose

_logger = logging.getLogger(__name__)


class CampaignResult(object):
    """Aggregated and per-sample rows of a Monte-Carlo campaign.

    Args:
        kind: Text for the campaign, "fig1" or "fig2".
        header: Column names of the aggregated rows.
        rows: List of aggregated rows, one per team size.
        detail_header: Column names of the per-sample rows.
        detail_rows: List of per-sample rows.

    Properties:
        * kind
        * header
        * rows
        * detail_header
        * detail_rows
    """
    __slots__ = ('kind', 'header', 'rows', 'detail_header', 'detail_rows')

    def __init__(self, kind, header, rows, detail_header, detail_rows):
        self.kind = kind
        self.header = tuple(header)
        self.rows = rows
        self.detail_header = tuple(detail_header)
        self.detail_rows = detail_rows

    def column(self, name):
        """Get the values of one aggregated column."""
        k = self.header.index(name)
        return [row[k] for row in self.rows]

    def __repr__(self):
        return 'CampaignResult: [{}] [{} rows]'.format(self.kind, len(self.rows))


def _map(function, jobs, workers):
    """Run jobs in order, in a process pool when more than one worker is asked."""
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(function, jobs))
    return [function(job) for job in jobs]


def _percent(count, total):
    return 100.0 * count / total if total else 0.0


def _exhausted(kind, n, sample, retry_cap, rejected):
    diagnostics = dict(rejected)
    diagnostics.update({'n': n, 'sample': sample, 'attempts': retry_cap})
    return SamplingExhausted(
        '{} sampler found no valid framework within {} attempts.'.format(
            kind, retry_cap), diagnostics)


def sample_rigid_erdos_renyi(n, rho, dim, rng, retry_cap, tol, sample=None):
    """Draw Erdos-Renyi frameworks until one is both IDR and IBR.

    Args:
        n: Number of vertices.
        rho: Edge probability.
        dim: Spatial dimension.
        rng: A numpy Generator.
        retry_cap: Number of draws after which sampling gives up.
        tol: Relative threshold of the rank tests.
        sample: Optional index of the sample, reported when sampling fails.

    Returns:
        A tuple with the accepted Framework and a dictionary of rejection counts.

    Raises:
        SamplingExhausted: When retry_cap draws are rejected.
    """
    rejected = {'disconnected': 0, 'not_idr': 0, 'not_ibr': 0}
    for _ in range(retry_cap):
        framework = gen_erdos_renyi(n, rho, dim, rng)
        if not framework.is_connected():
            rejected['disconnected'] += 1
        elif not is_idr(framework, tol):
            rejected['not_idr'] += 1
        elif not is_ibr_rank(framework, tol):
            rejected['not_ibr'] += 1
        else:
            return framework, rejected
    raise _exhausted('Erdos-Renyi', n, sample, retry_cap, rejected)


def sample_ibr_sensing(n, sensing, dim, rng, retry_cap, tol, sample=None):
    """Draw random sensing teams until the undirected sensing framework is IBR.

    Returns:
        A tuple with the accepted Framework, its RobotStates and a dictionary of
        rejection counts.
    """
    rejected = {'disconnected': 0, 'not_ibr': 0}
    for _ in range(retry_cap):
        framework, states = gen_sensing_framework(
            n, sensing.sensing_range, dim, rng, sensing.fov_cos, sensing.comm_range)
        if not framework.is_connected():
            rejected['disconnected'] += 1
        elif not is_ibr_spectral(framework, tol=tol):
            rejected['not_ibr'] += 1
        else:
            return framework, states, rejected
    raise _exhausted('Sensing', n, sample, retry_cap, rejected)


def _fig1_sample(job):
    seed, n, sample, rho, dim, retry_cap, tol = job
    rng = substream(seed, n, sample)
    framework, rejected = sample_rigid_erdos_renyi(
        n, rho, dim, rng, retry_cap, tol, sample)
    bearing = decompose(framework, tol, 'bearing').radii
    distance = decompose(framework, tol, 'distance').radii
    return bearing, distance, sum(rejected.values())


def _level_share(radii, level):
    return sum(1 for r in radii if r is not None and r <= level)


def run_fig1(scenario, workers=None):
    """Get the share of vertices with minimal radius r*_i <= k against n.

    For every team size, sample_count Erdos-Renyi frameworks with edge
    probability average_degree / (n - 1) that are both IDR and IBR are drawn,
    and their bearing and distance minimal radii are computed.

    Args:
        scenario: A ScenarioParameter.
        workers: Optional number of worker processes.

    Returns:
        A CampaignResult with one row per n holding the percentages for each
        radius level and measurement type.
    """
    mc, dim, tol = scenario.monte_carlo_parameter, scenario.dimension, scenario.tolerance
    levels = mc.radius_levels
    header = ['n'] + ['bearing_r<={}'.format(k) for k in levels] + \
        ['distance_r<={}'.format(k) for k in levels] + \
        ['samples', 'rejected', 'seed', 'config_hash']
    detail_header = ('n', 'sample', 'vertex', 'bearing_r', 'distance_r')
    rows, details = [], []
    config_hash = scenario.config_hash
    for n in scenario.robot_counts:
        rho = mc.edge_probability(n)
        jobs = [(scenario.seed, n, s, rho, dim, mc.retry_cap, tol)
                for s in range(mc.sample_count)]
        results = _map(_fig1_sample, jobs, workers)
        bearing_all, distance_all, rejected = [], [], 0
        for s, (bearing, distance, rej) in enumerate(results):
            bearing_all.extend(bearing)
            distance_all.extend(distance)
            rejected += rej
            details.extend((n, s, v, b, d)
                           for v, (b, d) in enumerate(zip(bearing, distance)))
        total = len(bearing_all)
        row = [n]
        row.extend(_percent(_level_share(bearing_all, k), total) for k in levels)
        row.extend(_percent(_level_share(distance_all, k), total) for k in levels)
        row.extend([mc.sample_count, rejected, scenario.seed, config_hash])
        rows.append(row)
        _logger.info('fig1 n=%d done: %s (%d rejected draws)', n, row[1:-4], rejected)
    return CampaignResult('fig1', header, rows, detail_header, details)


def _fig2_sample(job):
    seed, n, sample, sensing, dim, retry_cap, tol, delay_reference = job
    rng = substream(seed, n, sample)
    framework, states, rejected = sample_ibr_sensing(
        n, sensing, dim, rng, retry_cap, tol, sample)
    decomposition = decompose(framework, tol)
    network = comm_graph(framework.positions, sensing.comm_range)
    result = metrics(network, decomposition, delay_reference)
    return result.delays, result.normalized_costs, sum(rejected.values())


def run_fig2(scenario, workers=None):
    """Get the share of robots with normalized delay h_i <= a and cost c_i <= b.

    For every team size, sample_count random teams with barycenter-facing
    cameras whose undirected sensing framework is IBR are drawn, decomposed
    and evaluated with the protocol metrics over the communication graph.

    Args:
        scenario: A ScenarioParameter.
        workers: Optional number of worker processes.

    Returns:
        A CampaignResult with one row per n holding the joint percentages for
        every (a, b) pair and the marginal percentages, plus per-robot rows.
    """
    mc, dim, tol = scenario.monte_carlo_parameter, scenario.dimension, scenario.tolerance
    sensing = scenario.sensing_parameter
    a_values, b_values = mc.delay_thresholds, mc.cost_thresholds
    header = ['n']
    header.extend('h<={:g}&c<={:g}'.format(a, b) for a in a_values for b in b_values)
    header.extend('h<={:g}'.format(a) for a in a_values)
    header.extend('c<={:g}'.format(b) for b in b_values)
    header.extend(['samples', 'rejected', 'seed', 'config_hash'])
    detail_header = ('n', 'sample', 'robot', 'h', 'c')
    rows, details = [], []
    config_hash = scenario.config_hash
    for n in scenario.robot_counts:
        jobs = [(scenario.seed, n, s, sensing, dim, mc.retry_cap, tol,
                 scenario.delay_reference) for s in range(mc.sample_count)]
        results = _map(_fig2_sample, jobs, workers)
        pairs, rejected = [], 0
        for s, (delays, costs, rej) in enumerate(results):
            rejected += rej
            for i, (h, c) in enumerate(zip(delays, costs)):
                pairs.append((h, c))
                details.append((n, s, i, h, c))
        total = len(pairs)
        row = [n]
        row.extend(_percent(sum(1 for h, c in pairs if h <= a and c <= b), total)
                   for a in a_values for b in b_values)
        row.extend(_percent(sum(1 for h, _ in pairs if h <= a), total)
                   for a in a_values)
        row.extend(_percent(sum(1 for _, c in pairs if c <= b), total)
                   for b in b_values)
        row.extend([mc.sample_count, rejected, scenario.seed, config_hash])
        rows.append(row)
        _logger.info('fig2 n=%d done (%d rejected draws)', n, rejected)
    return CampaignResult('fig2', header, rows, detail_header, details)


def band_share(result, n, low, high, max_cost):
    """Get the percentage of robots of a fig2 campaign with low <= h <= high and c <= max_cost.

    Args:
        result: The CampaignResult of run_fig2.
        n: Team size to read.
        low: Lower bound of the delay band.
        high: Upper bound of the delay band.
        max_cost: Upper bound of the normalized cost.
    """
    picked = [(h, c) for m, _, _, h, c in result.detail_rows if m == n]
    hits = sum(1 for h, c in picked if low <= h <= high and c <= max_cost)
    return _percent(hits, len(picked))
