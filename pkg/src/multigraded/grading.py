"""Multidegrees and the multigraded sign of a permutation.

A multidegree is a tuple x = (x^1, ..., x^n) in Z^n.  All Koszul-type signs
in the library are driven by the inner product <x,y> = sum_i x^i y^i and by
the multigraded sign s(sigma, x) of a permutation acting on a list of
homogeneous objects of multidegrees x = (x_0, ..., x_{k-1}).

Two definitions of s are implemented:

* ``sign_recursive`` -- the generating-relation form: an adjacent
  transposition (i, i+1) contributes -(-1)^<x_i, x_{i+1}>, evaluated against
  the degree list as currently permuted.  This is the normative one.
* ``sign_direct`` -- ordinary sign(sigma) times, per grading coordinate, the
  sign of the block permutation with block lengths |x_i^j|.

They agree on all inputs; ``compose_signs_check`` verifies the composition
law s(sigma o tau, x) = s(sigma, x) * s(tau, sigma x).
"""

from .errors import DimensionError

Multidegree = tuple


def as_degree(entries):
    """Coerce an iterable of integers to a multidegree tuple."""
    return tuple(int(e) for e in entries)


def zero_degree(n):
    return (0,) * n


def add_degrees(x, y):
    if len(x) != len(y):
        raise DimensionError(f"degree lengths differ: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def sub_degrees(x, y):
    if len(x) != len(y):
        raise DimensionError(f"degree lengths differ: {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def sum_degrees(degrees, n):
    total = zero_degree(n)
    for d in degrees:
        total = add_degrees(total, d)
    return total


def inner_product(x, y):
    """<x,y> = sum_i x^i y^i; requires equal lengths."""
    if len(x) != len(y):
        raise DimensionError(f"degree lengths differ: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


class Permutation:
    """A bijection of {0, ..., k-1}, stored by its list of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images)-1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, k):
        return cls(range(k))

    def __len__(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def compose(self, other):
        """self o other: i -> self(other(i))."""
        if len(self) != len(other):
            raise DimensionError("permutation sizes differ")
        return Permutation(self.images[other.images[i]] for i in range(len(self)))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def apply(self, items):
        """sigma x = (x_{sigma 0}, ..., x_{sigma(k-1)})."""
        items = list(items)
        if len(items) != len(self):
            raise DimensionError("item list does not match permutation size")
        return [items[j] for j in self.images]

    def ordinary_sign(self):
        images = self.images
        inv = sum(
            1
            for p in range(len(images))
            for q in range(p + 1, len(images))
            if images[p] > images[q]
        )
        return -1 if inv % 2 else 1


# s(sigma, x) depends on the degrees only through their coordinate-wise
# parities, which keeps this cache small and hot.
_SIGN_CACHE = {}


def sign_recursive(sigma, degrees):
    """Multigraded sign via adjacent transpositions (normative definition)."""
    degrees = [tuple(d) for d in degrees]
    if len(degrees) != len(sigma):
        raise DimensionError("degree list does not match permutation size")
    parities = tuple(tuple(e & 1 for e in d) for d in degrees)
    key = (sigma.images, parities)
    cached = _SIGN_CACHE.get(key)
    if cached is not None:
        return cached

    # Reduce sigma to the identity by right-multiplying adjacent
    # transpositions; each swap of working[i] > working[i+1] contributes
    # -(-1)^<x_a, x_b> for the degrees sitting at those positions.
    working = list(sigma.images)
    sign = 1
    k = len(working)
    sorted_flag = False
    while not sorted_flag:
        sorted_flag = True
        for i in range(k - 1):
            if working[i] > working[i + 1]:
                ip = inner_product(parities[working[i]], parities[working[i + 1]])
                sign *= -1 if ip % 2 == 0 else 1
                working[i], working[i + 1] = working[i + 1], working[i]
                sorted_flag = False
    _SIGN_CACHE[key] = sign
    return sign


def _block_permutation_sign(sigma, lengths):
    """Sign of the permutation moving blocks of the given lengths by sigma.

    The permuted block sequence is (B_{sigma 0}, B_{sigma 1}, ...); an
    inverted pair of blocks of lengths L, L' contributes (-1)^(L*L').
    """
    images = sigma.images
    exponent = 0
    for p in range(len(images)):
        for q in range(p + 1, len(images)):
            if images[p] > images[q]:
                exponent += lengths[images[p]] * lengths[images[q]]
    return -1 if exponent % 2 else 1


def sign_direct(sigma, degrees):
    """Multigraded sign via the closed block-permutation formula."""
    degrees = [tuple(d) for d in degrees]
    if len(degrees) != len(sigma):
        raise DimensionError("degree list does not match permutation size")
    sign = sigma.ordinary_sign()
    n = len(degrees[0]) if degrees else 0
    for d in degrees:
        if len(d) != n:
            raise DimensionError("inhomogeneous degree lengths in list")
    for j in range(n):
        lengths = [abs(d[j]) for d in degrees]
        sign *= _block_permutation_sign(sigma, lengths)
    return sign


def compose_signs_check(sigma, tau, degrees):
    """s(sigma o tau, x) == s(sigma, x) * s(tau, sigma x); always true."""
    lhs = sign_recursive(sigma.compose(tau), degrees)
    rhs = sign_recursive(sigma, degrees) * sign_recursive(tau, sigma.apply(degrees))
    return lhs == rhs
