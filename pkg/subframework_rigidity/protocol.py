# coding=utf-8
"""Hop-synchronous simulation of the decentralized rigidity maintenance protocol.

In one round every robot floods its state up to its emission radius q_i. Each
center j computes the gradient terms nu_jl of its ball as soon as it holds
the states of all members, and sends each nu_jl outward until it reaches l.
All messages advance exactly one hop per tick.
"""
from __future__ import division

import logging

import numpy as np

from .controller import subframework_terms
from .exceptions import StaleDecomposition
from .graphutil import graph_distances, diameter
from .simulation.sensing import WeightParameter

_logger = logging.getLogger(__name__)


class Message(object):
    """A message in transit.

    Args:
        key: Origin robot of a state or center robot of a gradient term.
        payload: The carried state or gradient term.
        remaining_hops: Number of hops the message may still travel after the
            current one.
    """
    __slots__ = ('_key', '_payload', '_remaining_hops')
    KIND = None
    size_units = 1

    def __init__(self, key, payload, remaining_hops):
        assert remaining_hops >= 0, 'Message remaining_hops must be non-negative.'
        self._key = key
        self._payload = payload
        self._remaining_hops = remaining_hops

    @property
    def kind(self):
        """Get text for the message kind."""
        return self.KIND

    @property
    def key(self):
        """Get the origin or center robot of the message."""
        return self._key

    @property
    def payload(self):
        """Get the carried data."""
        return self._payload

    @property
    def remaining_hops(self):
        """Get the number of hops left after the current one."""
        return self._remaining_hops

    @property
    def destination(self):
        """Get the destination robot, or -1 for broadcasts."""
        return -1

    def __repr__(self):
        return '{}: [{} -> {}] [{} hops left]'.format(
            self.KIND, self._key, self.destination, self._remaining_hops)


class StateBroadcast(Message):
    """The state x_origin flooded by its origin robot."""
    __slots__ = ()
    KIND = 'state'

    def forwarded(self):
        """Get the copy of this message sent on the next hop."""
        return StateBroadcast(self._key, self._payload, self._remaining_hops - 1)


class NuRoute(Message):
    """The gradient term nu_ji sent by center j to robot i.

    The message is not routed along a single path. Every robot that receives
    it passes it to all neighbors one hop farther from j, each robot taking
    it at most once, until the hop budget runs out. Every robot nearer to j
    than i therefore sends it once and robot i keeps the payload.

    Args:
        key: The center robot j.
        destination: The destination robot i.
        payload: The read-only vector nu_ji.
        remaining_hops: Hops left after the current one.
    """
    __slots__ = ('_destination',)
    KIND = 'nu'

    def __init__(self, key, destination, payload, remaining_hops):
        Message.__init__(self, key, payload, remaining_hops)
        self._destination = destination

    @property
    def destination(self):
        """Get the destination robot i."""
        return self._destination

    def forwarded(self):
        """Get the copy of this message sent on the next hop."""
        return NuRoute(self._key, self._destination, self._payload,
                       self._remaining_hops - 1)


class MessageLog(object):
    """Record of every transmission of a round, one row per sender and message.

    Properties:
        * rows
    """
    __slots__ = ('_rows',)
    HEADER = ('tick', 'sender', 'receiver', 'kind', 'key', 'hops_remaining')

    def __init__(self):
        self._rows = []

    def record(self, tick, sender, message):
        """Add the transmission of a message by a sender at a tick."""
        self._rows.append((tick, sender, message.destination, message.kind,
                           message.key, message.remaining_hops))

    @property
    def rows(self):
        """Get a list of (tick, sender, receiver, kind, key, hops_remaining) rows."""
        return list(self._rows)

    def sent_by(self, robot):
        """Get the number of transmissions made by a robot."""
        return sum(1 for row in self._rows if row[1] == robot)

    def to_csv(self):
        """Get the log as CSV text with a header row."""
        lines = [','.join(self.HEADER)]
        lines.extend(','.join(str(v) for v in row) for row in self._rows)
        return '\n'.join(lines) + '\n'

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return 'MessageLog: [{} transmissions]'.format(len(self._rows))


class RoundResult(object):
    """Data held by the robots at the end of a protocol round.

    Properties:
        * states
        * nu
        * terms
        * log
        * forwarded
        * completion
        * ticks
    """
    __slots__ = ('states', 'nu', 'terms', 'log', 'forwarded', 'completion', 'ticks')

    def __init__(self, states, nu, terms, log, forwarded, completion, ticks):
        self.states = states
        self.nu = nu
        self.terms = terms
        self.log = log
        self.forwarded = forwarded
        self.completion = completion
        self.ticks = ticks

    def __repr__(self):
        return 'RoundResult: [{} ticks] [{} messages]'.format(self.ticks, len(self.log))


def emission_radii(decomposition, distances):
    """Get the emission radius q_i = max over centers j in I_i of delta_ij.

    Args:
        decomposition: A Decomposition giving the inverse memberships I_i.
        distances: All-pairs hop distances of the network graph.
    """
    radii = []
    for i, centers in enumerate(decomposition.membership):
        hops = [distances[i, j] for j in centers if np.isfinite(distances[i, j])]
        radii.append(int(max(hops)) if hops else 0)
    return radii


def run_round(network, decomposition, states, gains, params=None):
    """Simulate one protocol round over a network graph.

    Args:
        network: The Graph over which messages travel, usually the
            communication graph.
        decomposition: A Decomposition whose balls and inverse memberships
            define who needs which state.
        states: A list of RobotState.
        gains: ControlGains with the rigidity floor.
        params: Optional WeightParameter.

    Returns:
        A RoundResult. Its nu entry holds, for every robot i, a dictionary from
        each center j in I_i to nu_ji.
    """
    params = WeightParameter() if params is None else params
    count = network.vertex_count
    assert count == len(states), 'The network and the states must have the same ' \
        'robots. Got {} and {}.'.format(count, len(states))
    distances = graph_distances(network)
    q = emission_radii(decomposition, distances)
    members = {j: ball.vertex_map for j, ball in enumerate(decomposition.balls)
               if ball is not None}

    received = [{i: states[i]} for i in range(count)]
    nu = [{} for _ in range(count)]
    seen_nu = [set() for _ in range(count)]
    log, forwarded = MessageLog(), [0] * count
    terms, completion, pending = {}, {}, {}
    waiting = set(members)
    outbox = [(l, StateBroadcast(l, states[l], q[l] - 1))
              for l in range(count) if q[l] >= 1]

    tick = 0
    while True:
        for j in sorted(waiting):
            if not all(l in received[j] for l in members[j]):
                continue
            waiting.discard(j)
            terms[j] = subframework_terms(j, members[j], received[j], gains, params)
            nu[j][j] = terms[j].nu[j]
            pending[j] = set()
            for l in members[j]:
                if l == j:
                    continue
                payload = terms[j].nu[l].copy()
                payload.setflags(write=False)
                outbox.append((j, NuRoute(j, l, payload, int(distances[j, l]) - 1)))
                pending[j].add(l)
            if not pending[j]:
                completion[j] = tick
        if not outbox:
            break
        tick += 1
        next_box = []
        for sender, message in outbox:
            forwarded[sender] += 1
            log.record(tick, sender, message)
            for k in network.neighbors(sender):
                if message.kind == 'state':
                    if message.key in received[k]:
                        continue
                    received[k][message.key] = message.payload
                else:
                    j, l = message.key, message.destination
                    # outward only, once per (center, destination)
                    if distances[j, k] != distances[j, sender] + 1 or \
                            (j, l) in seen_nu[k]:
                        continue
                    seen_nu[k].add((j, l))
                    if k == l:
                        nu[l][j] = message.payload
                        pending[j].discard(l)
                        if not pending[j]:
                            completion[j] = tick
                if message.remaining_hops > 0:
                    next_box.append((k, message.forwarded()))
        outbox = next_box

    if waiting:
        j = min(waiting)
        missing = [l for l in members[j] if l not in received[j]]
        raise StaleDecomposition(
            'Center {} never received the states of members {} over the '
            'network graph.'.format(j, missing))
    _logger.debug('Protocol round finished in %d ticks with %d messages.',
                  tick, len(log))
    ordered = [terms[j] for j in sorted(terms)]
    return RoundResult(received, nu, ordered, log, forwarded, completion, tick)


def communication_cost(network, decomposition, distances=None):
    """Get the number of messages C_i each robot forwards in one round.

    C_i counts the origins l with delta_li < q_l and the pairs (j, l) with l in
    the ball of j and delta_ji < delta_jl, all hop distances being taken in the
    network graph.

    Args:
        network: The Graph over which messages travel.
        decomposition: A Decomposition.
        distances: Optional all-pairs hop distances of the network graph.

    Returns:
        A list with C_i for each robot.
    """
    distances = graph_distances(network) if distances is None else distances
    q = np.array(emission_radii(decomposition, distances), dtype=float)
    count = network.vertex_count
    cost = []
    for i in range(count):
        states = int(np.sum(distances[:, i] < q))
        terms = 0
        for j, ball in enumerate(decomposition.balls):
            if ball is None:
                continue
            terms += sum(1 for l in ball.vertex_map
                         if l != j and distances[j, i] < distances[j, l])
        cost.append(states + terms)
    return cost


class ProtocolMetrics(object):
    """Delay and message complexity of the protocol on one network.

    Properties:
        * round_trips
        * costs
        * diameter
        * delays
        * normalized_costs
    """
    __slots__ = ('_round_trips', '_costs', '_diameter', '_delays', '_normalized_costs')

    def __init__(self, round_trips, costs, diameter, delays, normalized_costs):
        self._round_trips = tuple(round_trips)
        self._costs = tuple(costs)
        self._diameter = diameter
        self._delays = tuple(delays)
        self._normalized_costs = tuple(normalized_costs)

    @property
    def round_trips(self):
        """Get the round trip hop delay H_j = 2 r*_j of each subframework."""
        return self._round_trips

    @property
    def costs(self):
        """Get the communication cost C_i of each robot."""
        return self._costs

    @property
    def diameter(self):
        """Get the diameter used to normalize the delays."""
        return self._diameter

    @property
    def delays(self):
        """Get the normalized delay h_i = H_i / diameter of each robot."""
        return self._delays

    @property
    def normalized_costs(self):
        """Get the normalized cost c_i = C_i / (1 + |N_i|) of each robot."""
        return self._normalized_costs

    def to_dict(self):
        """Get ProtocolMetrics as a dictionary."""
        return {
            'type': 'ProtocolMetrics',
            'H': list(self._round_trips),
            'C': list(self._costs),
            'diameter': self._diameter,
            'h': list(self._delays),
            'c': list(self._normalized_costs)
        }

    def __repr__(self):
        return 'ProtocolMetrics: [{} robots] [diameter {}]'.format(
            len(self._costs), self._diameter)


def metrics(network, decomposition, delay_reference='sensing'):
    """Get the delay and complexity metrics of the protocol.

    Args:
        network: The Graph over which messages travel.
        decomposition: A Decomposition of the sensing framework. Its graph
            gives the neighbors N_i.
        delay_reference: Text for the graph whose diameter normalizes the
            delays. Either "sensing" (the framework graph) or "comm" (the
            network graph). (Default: sensing).

    Returns:
        A ProtocolMetrics object. Robots with an infinite minimal radius get
        None delays.
    """
    assert delay_reference in ('sensing', 'comm'), \
        'Unknown delay_reference "{}".'.format(delay_reference)
    sensing = decomposition.framework.graph
    reference = sensing if delay_reference == 'sensing' else network
    span = diameter(reference)
    round_trips = [None if r is None else 2 * r for r in decomposition.radii]
    costs = communication_cost(network, decomposition)
    delays = [None if h is None else h / span for h in round_trips]
    normalized = [c / (1 + sensing.degree(i)) for i, c in enumerate(costs)]
    return ProtocolMetrics(round_trips, costs, span, delays, normalized)
