import pytest

from conftest import (
    data_file,
    load)

from dowker_complexes.Collapse import greedy_collapse
from dowker_complexes.Document import (
    Document,
    Kind,
    from_complex,
    from_poset,
    from_relation,
    from_space,
    parse,
    parse_steps,
    read_document,
    read_steps,
    serialize,
    to_complex,
    to_json_value,
    to_poset,
    to_relation,
    to_space,
    write_report)
from dowker_complexes.Homology import homology
from dowker_complexes.Poset import order_to_topology
from dowker_complexes.SimplicialComplex import (
    Universe,
    complex_from_facets)


def parse_error(text):
    with pytest.raises(Document.ParseError) as e:
        parse(text, source='input')
    return e.value


def test_parse_skips_comments_and_blank_lines():
    document = parse('# comment\n\nposet X\n  # indented comment\nelement a\n')
    assert document.kind == Kind.Poset
    assert document.name == 'X'
    assert document.records == (('element', ('a',)),)


def test_parse_facets_of_any_size():
    document = parse('complex\nfacet a b c\nfacet d\n')
    assert document.name is None
    assert document.values('facet') == [('a', 'b', 'c'), ('d',)]


@pytest.mark.parametrize('text, line, column', [
    ('', 1, 1),
    ('graph G\n', 1, 1),
    ('poset P extra\n', 1, 9),
    ('poset\nvertex a\n', 2, 1),
    ('relation\npair 1\n', 2, 1),
    ('poset\nelement a\n  element a\n', 3, 11),
    ('poset P\nelement a\nle a b\n', 3, 6),
    ('relation\nxelement 1\nyelement a\npair a 1\n', 4, 6),
    ('complex\nfacet\n', 2, 1),
])
def test_parse_errors_name_line_and_column(text, line, column):
    error = parse_error(text)
    assert (error.line, error.column) == (line, column)
    assert str(error).startswith('input: line {}, column {}: '.format(line, column))
    assert error.exit_status == 1


def test_serialize_is_canonical():
    with open(data_file('X1.poset'), encoding='utf-8') as f:
        text = ''.join(line for line in f if not line.startswith('#'))
    assert serialize(parse(text)) == text
    assert serialize(parse(serialize(load('rp2.complex')))) == serialize(load('rp2.complex'))


def test_poset_document(x1):
    assert len(x1) == 4
    assert x1.leq('1', '3') and not x1.leq('3', '1')
    assert serialize(from_poset(x1)) == serialize(load('X1.poset'))


def test_relation_document():
    R = to_relation(load('closed.relation'))
    assert len(R.labelled_pairs()) == 10
    assert serialize(from_relation(R)) == serialize(load('closed.relation'))


def test_space_as_membership_relation():
    R = to_relation(load('X1.space'))
    assert list(R.y_universe) == ['{1}', '{2}', '{1,2}', '{1,2,3}', '{1,2,4}', '{1,2,3,4}']
    assert ('3', '{1,2,3}') in R.labelled_pairs()
    assert ('3', '{1,2,4}') not in R.labelled_pairs()


def test_space_document(x1):
    T = to_space(load('X1.space'))
    assert T == order_to_topology(x1)
    assert serialize(from_space(T)) == serialize(load('X1.space'))


def test_complex_universe_keeps_declared_vertices():
    K = to_complex(parse('complex\nvertex z\nfacet a b\n'))
    assert list(K.universe) == ['z', 'a', 'b']
    assert K.describe(K.vertices) == ('a', 'b')
    assert from_complex(K).values('vertex') == [('z',), ('a',), ('b',)]


def test_complex_without_isolated_labels_has_no_vertex_records(boundary2):
    assert from_complex(boundary2).values('vertex') == []


def test_wrong_kind_is_a_parse_error():
    with pytest.raises(Document.ParseError):
        to_poset(load('boundary2.complex'))
    with pytest.raises(Document.ParseError):
        to_complex(load('X1.poset'))


def test_parse_steps():
    K = complex_from_facets(Universe('abc'), [('a', 'b'), ('b', 'c')])
    core, seq = greedy_collapse(K)
    text = write_report(seq)
    assert parse_steps(text, K).steps == seq.steps
    with pytest.raises(Document.ParseError) as e:
        parse_steps('{"steps": [', K)
    assert e.value.line == 1
    with pytest.raises(Document.ParseError):
        parse_steps('{"steps": [["a"]]}', K)
    with pytest.raises(Document.ParseError):
        parse_steps('[]', K)
    with pytest.raises(Document.ParseError) as e:
        parse_steps('{"steps": [[["z"], ["a", "z"]]]}', K)
    assert e.value.exit_status == 1


def test_write_report():
    point = complex_from_facets(Universe('a'), [('a',)])
    assert write_report(homology(point)) == '{"betti":[1],"torsion":[[]]}\n'
    assert write_report({'b': 1, 'a': [True, None]}) == '{"a":[true,null],"b":1}\n'
    assert write_report({'a': 1}, indent=2) == '{\n  "a": 1\n}\n'


def test_json_values(x1, boundary2):
    assert to_json_value(x1) == {'elements': ['1', '2', '3', '4'],
                                 'le': [['1', '3'], ['1', '4'], ['2', '3'], ['2', '4']]}
    assert to_json_value(boundary2) == {'dimension': 1,
                                        'facets': [['a', 'b'], ['a', 'c'], ['b', 'c']],
                                        'vertices': ['a', 'b', 'c']}
    with pytest.raises(TypeError):
        to_json_value(object())


def test_invalid_utf8_is_a_parse_error(tmp_path):
    path = tmp_path / 'bad.complex'
    path.write_bytes(b'complex B\nfacet a \xff\n')
    with pytest.raises(Document.ParseError) as e:
        read_document(str(path))
    assert (e.value.line, e.value.column) == (2, 9)
    assert e.value.exit_status == 1
    with pytest.raises(Document.ParseError) as e:
        read_steps(str(path), complex_from_facets(Universe('a'), [('a',)]))
    assert e.value.line == 2
