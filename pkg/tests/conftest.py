import pathlib

import pytest

from dowker_complexes.ClosedRelation import ClosedRelation
from dowker_complexes.Document import (
    read_document,
    to_complex,
    to_poset,
    to_relation)


DATA = pathlib.Path(__file__).parent / 'data'


def data_file(name):
    return str(DATA / name)


def load(name):
    return read_document(data_file(name))


@pytest.fixture
def x1():
    return to_poset(load('X1.poset'))


@pytest.fixture
def hexagon():
    return to_poset(load('hexagon.poset'))


@pytest.fixture
def chain2():
    return to_poset(load('chain2.poset'))


@pytest.fixture
def chain3():
    return to_poset(load('chain3.poset'))


@pytest.fixture
def closed_relation(x1, hexagon):
    pairs = to_relation(load('closed.relation')).labelled_pairs()
    return ClosedRelation.from_labels(x1, hexagon, pairs, 'R')


@pytest.fixture
def antitone_relation(chain2, chain3):
    pairs = to_relation(load('antitone.relation')).labelled_pairs()
    return ClosedRelation.from_labels(chain2, chain3, pairs, 'M')


@pytest.fixture
def boundary2():
    return to_complex(load('boundary2.complex'))


@pytest.fixture
def rp2():
    return to_complex(load('rp2.complex'))
