from fractions import Fraction

import pytest

from poissonhopf import catalog
from poissonhopf.errors import ParseError
from poissonhopf.parser import (format_algebra, parse_algebra, parse_polynomial, parse_tensor,
                                parse_word, read_algebra)
from poissonhopf.tensor import tensor
from poissonhopf.uea import UEA

TYPEA = '''\
# pointed example
[generators]
generators = g* x
[bracket]
{x,g} = g*x
[coalgebra]
Delta(g) = g @ g
Delta(x) = x @ 1 + g @ x
'''


def test_parse_file():
    af = parse_algebra(TYPEA, 'mine')
    ring = af.ring
    g, x = ring.gens()
    assert ring.names == ('g', 'x')
    assert ring.invertible == (True, False)
    assert af.algebra(x, g) == g * x
    # eps and S default for group-likes and are derived for x
    assert af.hopf.counit == [1, 0]
    assert af.hopf.antipode[1] == -g ** -1 * x
    assert af.ore is None and af.biproduct is None


def test_format_then_parse_gives_the_same_file(typea, gk3):
    for af in (typea, gk3, catalog.catalog_get('gk3-ore'), catalog.catalog_get('gr-typea')):
        assert parse_algebra(format_algebra(af), af.name) == af


def test_expressions(laurent):
    g, x = laurent.gens()
    assert parse_polynomial(laurent, '(x + 1/2)^2') == x * x + x + Fraction(1, 4)
    assert parse_polynomial(laurent, 'g^-2 * x / 3') == Fraction(1, 3) * g ** -2 * x
    assert parse_polynomial(laurent, '-x - -x') == 0
    one = laurent.one()
    assert parse_tensor(laurent, 'x @ 1 + g ⊗ x') == tensor(x, one) + tensor(g, x)
    assert parse_tensor(laurent, '0') == 0


@pytest.mark.parametrize('text', ['x^-1', 'y + 1', 'x @ 1', '(x + 1', 'x $ 2', '1/(x + 1)'])
def test_bad_expressions(laurent, text):
    with pytest.raises(ParseError):
        parse_polynomial(laurent, text)


def test_words(typea):
    U = UEA(typea.hopf)
    assert str(parse_word(U, 'h(x)*m(g)')) == 'g*h(x) + g*x'
    assert parse_word(U, 'x') == U.m(typea.ring.gen('x'))
    with pytest.raises(ParseError):
        parse_word(U, 'x @ x')


def test_errors_carry_line_numbers():
    cases = [
        ('[generators]\ngenerators = x\n[bracket]\n{x,z} = 1\n', 4),
        ('[generators]\ngenerators = x y\n[bracket]\n{x,y} = 1\n{y,x} = 2\n', 5),
        ('[generators]\ngenerators = x\n[coalgebra]\nDelta(x) = x @ 1 + 1 @ x\nS(x) = x^-1\n', 5),
        ('[generators]\ngenerators = x\n[nonsense]\n', 3),
        ('[generators]\ngenerators = x y\n[grading]\nx = 1\n', None),
    ]
    for text, line in cases:
        with pytest.raises(ParseError) as info:
            parse_algebra(text)
        if line is not None:
            assert info.value.line == line
            assert str(info.value).startswith('line %d' % line)


def test_missing_delta():
    with pytest.raises(ParseError):
        parse_algebra('[generators]\ngenerators = x y\n[coalgebra]\nDelta(x) = x @ 1 + 1 @ x\n')


def test_read_shipped_file():
    af = read_algebra(catalog.catalog_file('gk3'))
    assert af.name == 'gk3'
    assert af.ring.grading == (1, 1, 2)
