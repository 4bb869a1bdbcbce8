from fractions import Fraction

from poissonhopf.linalg import SpanEchelon, rank


def test_rank():
    assert rank([]) == 0
    assert rank([{}, {}]) == 0
    assert rank([{'a': 1, 'b': 2}, {'a': 2, 'b': 4}]) == 1
    assert rank([{'a': 1}, {'b': Fraction(1, 3)}, {'a': 1, 'b': 1}]) == 2


def test_rank_modulo_a_prime():
    vectors = [{'a': 1, 'b': 1}, {'a': 1, 'b': 4}]
    assert rank(vectors) == 2
    assert rank(vectors, 3) == 1
    assert rank([{'a': 3}], 3) == 0


def test_span_echelon():
    span = SpanEchelon()
    assert span.add({'a': 2, 'b': 1})
    assert not span.add({'a': 4, 'b': 2})
    assert span.contains({'a': -1, 'b': Fraction(-1, 2)})
    assert not span.contains({'b': 1})
    assert span.add({'b': 1})
    assert span.contains({'a': 1})
    assert span.rank == 2
    assert len(span) == 2
    assert span.reduce({'c': 5}) == {'c': 5}
