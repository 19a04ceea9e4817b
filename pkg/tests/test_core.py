import numpy as np
import pytest

from oracles import points, weight
from pfourier.core import (
    BooleanFunction,
    FunctionSpecError,
    as_mask,
    compose_parities,
    is_symmetric,
    make_family,
    mask,
    members,
    parse_function_spec,
)

RULES = {
    "and": lambda w, n: w == n,
    "or": lambda w, n: w >= 1,
    "xor": lambda w, n: w % 2,
    "cq": lambda w, n: (w // 2) % 2,
    "c3": lambda w, n: (w * (w - 1) * (w - 2) // 6) % 2,
}


@pytest.mark.parametrize("name", sorted(RULES))
@pytest.mark.parametrize("n", range(1, 8))
def test_families_by_weight(name, n):
    f = make_family(name, n)
    for b in points(n):
        assert f(b) == int(bool(RULES[name](weight(b), n)))


@pytest.mark.parametrize("n", [3, 4, 6, 9])
def test_mod_exact_lsb_maj(n):
    mod3 = make_family("mod", n, k=3)
    ex = make_family("exact", n, k=2)
    lsb2 = make_family("lsb", n, k=2)
    for b in points(n):
        w = weight(b)
        assert mod3(b) == int(w % 3 == 0)
        assert ex(b) == int(w == 2)
        assert lsb2(b) == (w >> 1) & 1
    if n % 2:
        assert all(make_family("maj", n)(b) == int(2 * weight(b) > n) for b in points(n))


def test_masks():
    assert mask(1, 3) == 0b101
    assert members(0b101) == (1, 3)
    assert as_mask([2]) == 2 and as_mask(6) == 6
    with pytest.raises(ValueError):
        as_mask(-1)


def test_operators_and_hex():
    a, b = make_family("and", 2), make_family("xor", 2)
    assert (a | b) == make_family("or", 2)
    assert (~a).table.tolist() == [1, 1, 1, 0]
    assert a.to_hex() == "8"
    with pytest.raises(ValueError):
        a & make_family("and", 3)


def test_table_is_read_only():
    f = make_family("or", 3)
    with pytest.raises(ValueError):
        f.table[0] = 1


def test_compose_parities():
    # AND of two block parities
    g = make_family("and", 2)
    f = compose_parities(g, [{1, 2}, {3}], 3)
    for b in points(3):
        assert f(b) == ((b[0] ^ b[1]) & b[2])


def test_is_symmetric():
    assert is_symmetric(make_family("maj", 5)).accept == frozenset({3, 4, 5})
    assert is_symmetric(BooleanFunction(2, [0, 1, 0, 0])) is None


@pytest.mark.parametrize("text,expected", [
    ("maj:3", make_family("maj", 3)),
    ("tt:2:8", make_family("and", 2)),
    ("anf:3:x1x2+x2x3+x1x3", make_family("maj", 3)),
    ("anf:2:x1⊕x2", make_family("xor", 2)),
    ("mod:3:4", make_family("mod", 4, k=3)),
    ("exact:1:3", make_family("exact", 3, k=1)),
    ("sym:3:0,3", make_family("mod", 3, k=3)),
    ("lsb:2:5", make_family("cq", 5)),
])
def test_parse_function_spec(text, expected):
    assert parse_function_spec(text) == expected


@pytest.mark.parametrize("text,pos", [
    ("foo:3", 0),
    ("maj", 3),
    ("mod:x:4", 4),
    ("tt:2:zz", 5),
    ("tt:2:1ff", 5),
    ("anf:2:x1x9", 6),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(FunctionSpecError) as err:
        parse_function_spec(text)
    assert err.value.pos == pos


def test_bad_family_args():
    with pytest.raises(ValueError):
        make_family("maj", 4)
    with pytest.raises(ValueError):
        make_family("exact", 3, k=5)
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 1, 2, 0])
    assert np.array_equal(make_family("sym", 0, accept=[0]).table, [1])
