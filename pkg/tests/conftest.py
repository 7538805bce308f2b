"""
Shared fixtures for the betti-bounds test suite
"""

import json
import random

import pytest
from click.testing import CliRunner

from betti_bounds.models.graph import StableGraph


@pytest.fixture(autouse=True)
def testing_env(monkeypatch, tmp_path):
    """Run everything under the testing profile with a private cache dir"""
    monkeypatch.setenv('BETTI_BOUNDS_ENV', 'testing')
    monkeypatch.delenv('BETTI_BOUNDS_CACHE_DIR', raising=False)
    monkeypatch.delenv('BETTI_BOUNDS_WORKERS', raising=False)


@pytest.fixture
def runner():
    """Create CLI test runner"""
    return CliRunner()


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph payload to a JSON file and return its path"""
    counter = {'n': 0}

    def write(payload) -> str:
        counter['n'] += 1
        path = tmp_path / f"graph_{counter['n']}.json"
        path.write_text(json.dumps(payload), encoding='utf-8')
        return str(path)

    return write


@pytest.fixture
def banana_graph():
    """Two genus-0 vertices joined by three edges (genus 2)"""
    return StableGraph.build([0, 0], [(0, 1), (0, 1), (0, 1)])


@pytest.fixture
def two_loop_graph():
    """One genus-0 vertex with two loops"""
    return StableGraph.build([0], [(0, 0), (0, 0)])


def relabel(graph: StableGraph, seed: int) -> StableGraph:
    """Random renumbering of vertices and half-edges; an isomorphic copy"""
    rng = random.Random(seed)
    vperm = list(range(graph.vertex_count))
    hperm = list(range(graph.half_edge_count))
    rng.shuffle(vperm)
    rng.shuffle(hperm)
    vertices = [None] * graph.vertex_count
    for v, data in enumerate(graph.vertices):
        vertices[vperm[v]] = data
    sigma = [0] * graph.half_edge_count
    tau = [0] * graph.half_edge_count
    for h in range(graph.half_edge_count):
        sigma[hperm[h]] = hperm[graph.sigma[h]]
        tau[hperm[h]] = vperm[graph.tau[h]]
    legs = {hperm[h]: label for h, label in graph.leg_labels}
    return StableGraph(tuple(vertices), tuple(sigma), tuple(tau), legs)
