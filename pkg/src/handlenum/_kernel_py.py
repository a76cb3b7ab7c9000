"""Pure-Python word kernels.

Letters are nonzero ints: ``i`` stands for the generator x_i and ``-i`` for
its inverse.  A set of letters is a bitmask indexed by :func:`letter_bit`.
The compiled module ``_kernel_c`` exposes exactly the same functions.
"""


def letter_bit(letter):
    return 2 * (abs(letter) - 1) + (letter < 0)


def free_reduce(letters):
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return out


def cyclic_bounds(letters):
    """Return ``(i, j)`` with ``letters[i:j]`` the cyclic core of a reduced word."""
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return i, j


def whitehead_image(letters, multiplier, mask):
    """Freely reduced image of ``letters`` under the type II automorphism.

    Convention: a letter ``y`` other than the multiplier ``a`` (or its
    inverse) maps to ``[a^-1 if y^-1 in A] y [a if y in A]``.
    """
    out = []
    a = multiplier
    for y in letters:
        if y == a or y == -a:
            pieces = (y,)
        else:
            pre = (mask >> letter_bit(-y)) & 1
            post = (mask >> letter_bit(y)) & 1
            if pre and post:
                pieces = (-a, y, a)
            elif pre:
                pieces = (-a, y)
            elif post:
                pieces = (y, a)
            else:
                pieces = (y,)
        for b in pieces:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return out


def cyclic_image_length(letters, multiplier, mask):
    """Cyclically reduced length of the image of a cyclic word."""
    img = whitehead_image(letters, multiplier, mask)
    i, j = cyclic_bounds(img)
    return j - i


def total_cyclic_image_length(words, multiplier, mask):
    total = 0
    for w in words:
        total += cyclic_image_length(w, multiplier, mask)
    return total


def total_image_length(words, multiplier, mask):
    total = 0
    for w in words:
        total += len(whitehead_image(w, multiplier, mask))
    return total


def least_rotation(letters):
    """Lexicographically least rotation under the order x1 < X1 < x2 < ..."""
    n = len(letters)
    if n == 0:
        return []
    keys = [letter_bit(a) for a in letters]
    best = 0
    for s in range(1, n):
        for k in range(n):
            u = keys[(s + k) % n]
            v = keys[(best + k) % n]
            if u != v:
                if u < v:
                    best = s
                break
    return [letters[(best + k) % n] for k in range(n)]
