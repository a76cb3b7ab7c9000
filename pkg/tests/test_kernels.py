import pytest
from hypothesis import given, strategies as st

from handlenum import BACKEND, _kernel_py
from handlenum import _kernels as K

from strategies import letters, raw_words

try:
    from handlenum import _kernel_c
except ImportError:
    _kernel_c = None

needs_ext = pytest.mark.skipif(_kernel_c is None, reason="compiled kernels not built")


def test_backend_name():
    assert BACKEND in ("compiled", "python")


def test_letter_order():
    assert [K.letter_bit(a) for a in (1, -1, 2, -2, 3)] == [0, 1, 2, 3, 4]


def test_free_reduce_cancels():
    assert _kernel_py.free_reduce([1, 2, -2, -1, 3]) == [3]


def test_cyclic_bounds():
    assert _kernel_py.cyclic_bounds([1, 2, 3, -1]) == (1, 3)


def test_whitehead_image_convention():
    # (x1; {x2}) sends x2 to x2 x1
    mask = 1 << K.letter_bit(2)
    assert _kernel_py.whitehead_image([2], 1, mask) == [2, 1]
    assert _kernel_py.whitehead_image([-2], 1, mask) == [-1, -2]


@needs_ext
@given(raw_words(3, 16))
def test_reduce_agrees(w):
    assert list(_kernel_c.free_reduce(w)) == _kernel_py.free_reduce(w)
    r = _kernel_py.free_reduce(w)
    assert tuple(_kernel_c.cyclic_bounds(r)) == _kernel_py.cyclic_bounds(r)
    assert tuple(_kernel_c.least_rotation(r)) == tuple(_kernel_py.least_rotation(r))


@needs_ext
@given(raw_words(3, 12), letters(3), st.integers(0, 63))
def test_image_agrees(w, a, mask):
    mask &= ~((1 << K.letter_bit(a)) | (1 << K.letter_bit(-a)))
    w = _kernel_py.free_reduce(w)
    assert list(_kernel_c.whitehead_image(w, a, mask)) == _kernel_py.whitehead_image(w, a, mask)
    assert _kernel_c.cyclic_image_length(w, a, mask) == _kernel_py.cyclic_image_length(w, a, mask)
    ws = [w, w[::-1]]
    assert _kernel_c.total_image_length(ws, a, mask) == _kernel_py.total_image_length(ws, a, mask)
    assert (_kernel_c.total_cyclic_image_length(ws, a, mask)
            == _kernel_py.total_cyclic_image_length(ws, a, mask))


@given(raw_words(2, 10))
def test_least_rotation_is_min(w):
    w = _kernel_py.free_reduce(w)
    got = tuple(_kernel_py.least_rotation(w))
    rots = [tuple(w[i:] + w[:i]) for i in range(len(w))] or [()]
    assert got == min(rots, key=lambda r: [K.letter_bit(a) for a in r])
