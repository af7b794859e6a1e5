"""Sparse homogeneous multilinear maps and the multigraded alternator.

A ``MultiMap`` K of form degree k and weight kappa is a (k+1)-linear map
V x ... x V -> V with K(V^x0 x ... x V^xk) <= V^(x0+...+xk+kappa), stored
sparsely by basis-index tuples.  Form degree -1 components are plain vectors
of V (zero arguments); their weight is the vector's multidegree.

``AltMap`` is the graded-alternating variant with canonical storage: entries
are keyed by non-decreasing index tuples only, values on arbitrary tuples
being recovered through the multigraded sign of the sorting permutation.
Tuples containing a repeated index whose degree x has even <x,x> are forced
to zero and never stored.
"""

import itertools
from fractions import Fraction
from math import factorial

from .errors import (
    AlternationError,
    ArityError,
    HomogeneityError,
    SpaceMismatchError,
)
from .grading import (
    Permutation,
    add_degrees,
    as_degree,
    inner_product,
    sign_recursive,
    sum_degrees,
    zero_degree,
)
from .gspace import ANY_DEGREE, Vector


def _clean(entries):
    out = {}
    for key, val in entries.items():
        val = {i: Fraction(c) for i, c in val.items() if c}
        if val:
            out[tuple(key)] = val
    return out


class MultiMap:
    """Homogeneous (k+1)-linear map stored by basis-index tuples."""

    def __init__(self, space, k, weight, entries, check=True):
        self.space = space
        self.k = int(k)
        self.weight = as_degree(weight)
        if len(self.weight) != space.n:
            raise HomogeneityError(
                f"weight {self.weight} has length {len(self.weight)}, space has n={space.n}"
            )
        self.entries = _clean(entries)
        if self.k < -1 and self.entries:
            raise ArityError(f"form degree {self.k} < -1 admits only the zero map")
        if check:
            self._audit()

    def _audit(self):
        for key, val in self.entries.items():
            if len(key) != self.k + 1:
                raise ArityError(
                    f"entry key {key} has length {len(key)}, expected {self.k + 1}"
                )
            in_deg = sum_degrees(
                (self.space.degrees[i] for i in key), self.space.n
            )
            target = add_degrees(in_deg, self.weight)
            for m in val:
                if self.space.degrees[m] != target:
                    raise HomogeneityError(
                        f"entry {key} -> basis {self.space.names[m]}: output degree "
                        f"{self.space.degrees[m]} != inputs+weight {target}"
                    )

    @property
    def total_degree(self):
        return (self.k, self.weight)

    def is_zero(self):
        return not self.entries

    def value_at(self, key):
        """Output coefficients on a basis-index tuple (dict index -> Fraction)."""
        return self.entries.get(tuple(key), {})

    def items_full(self):
        """All (key, value) pairs with nonzero value, raw storage order."""
        return self.entries.items()

    def full_keys(self):
        return set(self.entries)

    def evaluate(self, args):
        """Multilinear extension of the basis-tuple table."""
        if len(args) != self.k + 1:
            raise ArityError(f"expected {self.k + 1} arguments, got {len(args)}")
        for a in args:
            if a.space != self.space:
                raise SpaceMismatchError("argument from a foreign space")
        out = {}
        supports = [list(a.coords.items()) for a in args]
        for combo in itertools.product(*supports):
            coeff = Fraction(1)
            for _, c in combo:
                coeff *= c
            key = tuple(i for i, _ in combo)
            for m, c in self.value_at(key).items():
                out[m] = out.get(m, Fraction(0)) + coeff * c
        return Vector(self.space, out)

    def as_vector(self):
        if self.k != -1:
            raise ArityError("only form degree -1 components are vectors")
        return Vector(self.space, self.value_at(()))

    # -- linear structure -------------------------------------------------

    def _compatible(self, other):
        if self.space != other.space:
            raise SpaceMismatchError("maps over different spaces")
        if self.k != other.k or self.weight != other.weight:
            raise HomogeneityError(
                f"cannot combine maps of degrees {self.total_degree} and {other.total_degree}"
            )

    def __add__(self, other):
        self._compatible(other)
        if isinstance(self, AltMap) and isinstance(other, AltMap):
            out = {k: dict(v) for k, v in self.entries.items()}
            for key, val in other.entries.items():
                tgt = out.setdefault(key, {})
                for m, c in val.items():
                    tgt[m] = tgt.get(m, Fraction(0)) + c
            return AltMap(self.space, self.k, self.weight, out, check=False)
        out = {k: dict(v) for k, v in self.items_full()}
        for key, val in other.items_full():
            tgt = out.setdefault(key, {})
            for m, c in val.items():
                tgt[m] = tgt.get(m, Fraction(0)) + c
        return MultiMap(self.space, self.k, self.weight, out, check=False)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        out = {
            key: {m: scalar * c for m, c in val.items()}
            for key, val in self.entries.items()
        }
        return type(self)(self.space, self.k, self.weight, out, check=False)

    def __neg__(self):
        return (-1) * self

    def same_map(self, other):
        """Equality as multilinear maps (storage convention agnostic)."""
        if self.space != other.space or self.k != other.k or self.weight != other.weight:
            return False
        keys = self.full_keys() | other.full_keys()
        return all(self.value_at(key) == other.value_at(key) for key in keys)

    def __eq__(self, other):
        return isinstance(other, MultiMap) and self.same_map(other)

    def __hash__(self):
        return hash((self.space, self.k, self.weight, len(self.entries)))

    def __repr__(self):
        return (
            f"{type(self).__name__}(k={self.k}, weight={self.weight}, "
            f"{len(self.entries)} entries)"
        )


class AltMap(MultiMap):
    """Graded-alternating map with canonical sorted-tuple storage."""

    def __init__(self, space, k, weight, entries, check=True):
        canonical = {}
        for key, val in _clean(entries).items():
            if list(key) != sorted(key):
                raise AlternationError(f"non-canonical key {key} in AltMap storage")
            if self._zero_forced(space, key):
                continue
            canonical[key] = val
        super().__init__(space, k, weight, canonical, check=check)

    @staticmethod
    def _zero_forced(space, key):
        for a, b in zip(key, key[1:]):
            if a == b:
                d = space.degrees[a]
                if inner_product(d, d) % 2 == 0:
                    return True
        return False

    def _sorting_sign(self, key):
        """(sorted key, s) with value(key) = s * value(sorted key)."""
        order = sorted(range(len(key)), key=lambda i: key[i])
        sigma = Permutation(order)
        degrees = [self.space.degrees[i] for i in key]
        return tuple(key[i] for i in order), sign_recursive(sigma, degrees)

    def value_at(self, key):
        key = tuple(key)
        if list(key) == sorted(key):
            return self.entries.get(key, {})
        skey, sign = self._sorting_sign(key)
        stored = self.entries.get(skey, {})
        if sign == 1:
            return stored
        return {m: -c for m, c in stored.items()}

    def items_full(self):
        for key, _ in self.entries.items():
            for perm in set(itertools.permutations(key)):
                val = self.value_at(perm)
                if val:
                    yield perm, val

    def full_keys(self):
        keys = set()
        for key in self.entries:
            keys.update(set(itertools.permutations(key)))
        return keys

    def to_multimap(self):
        """Expand the canonical storage to a raw MultiMap table."""
        return MultiMap(
            self.space, self.k, self.weight, dict(self.items_full()), check=False
        )


def alternator(K):
    """(alpha K)(X0..Xk) = 1/(k+1)! sum_sigma s(sigma, x) K(X_sigma0, ..., X_sigmak).

    A projection onto the graded-alternating maps, homogeneous of degree 0.
    """
    k = K.k
    if k <= 0:
        # nothing to average over; re-key canonically
        return AltMap(K.space, k, K.weight, dict(K.items_full()), check=False)
    perms = [Permutation(p) for p in itertools.permutations(range(k + 1))]
    inv_fact = Fraction(1, factorial(k + 1))
    out = {}
    for key, val in K.items_full():
        skey = tuple(sorted(key))
        if AltMap._zero_forced(K.space, skey):
            continue
        degrees = [K.space.degrees[i] for i in skey]
        acc = out.setdefault(skey, {})
        for sigma in perms:
            if tuple(skey[j] for j in sigma.images) != key:
                continue
            s = sign_recursive(sigma, degrees)
            for m, c in val.items():
                acc[m] = acc.get(m, Fraction(0)) + s * inv_fact * c
    return AltMap(K.space, k, K.weight, out, check=False)


def canonicalize(K, check=True):
    """Re-key an alternating map to canonical storage.

    With ``check`` the input is verified to be graded-alternating
    (alpha K == K); otherwise the projection is simply applied.
    """
    A = alternator(K)
    if check and not A.same_map(K):
        raise AlternationError("input map is not graded-alternating")
    return A


def vector_as_map(v, weight=None):
    """Embed a homogeneous vector as its form degree -1 component."""
    deg = v.degree()
    if deg == ANY_DEGREE:
        if weight is None:
            weight = zero_degree(v.space.n)
        deg = as_degree(weight)
    elif deg == "inhomogeneous":
        raise HomogeneityError("only homogeneous vectors embed as components")
    elif weight is not None and as_degree(weight) != deg:
        raise HomogeneityError(f"vector degree {deg} != requested weight {weight}")
    return MultiMap(v.space, -1, deg, {(): dict(v.coords)}, check=False)


def zero_map(space, k, weight):
    return MultiMap(space, k, weight, {})


def zero_alt(space, k, weight):
    return AltMap(space, k, weight, {})


class Cochain:
    """Finite sum of MultiMap components with pairwise distinct (k, weight)."""

    def __init__(self, components=()):
        self.components = {}
        for comp in components:
            self._absorb(comp)

    def _absorb(self, comp):
        key = comp.total_degree
        if key in self.components:
            self.components[key] = self.components[key] + comp
            if self.components[key].is_zero():
                del self.components[key]
        elif not comp.is_zero():
            self.components[key] = comp

    def __iter__(self):
        return iter(self.components.values())

    def component(self, k, weight):
        return self.components.get((k, as_degree(weight)))

    def is_zero(self):
        return not self.components

    def __add__(self, other):
        out = Cochain(self.components.values())
        for comp in other:
            out._absorb(comp)
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return Cochain(scalar * comp for comp in self)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        keys = set(self.components) | set(other.components)
        for key in keys:
            a = self.components.get(key)
            b = other.components.get(key)
            if a is None or b is None:
                return False
            if not a.same_map(b):
                return False
        return True

    def __repr__(self):
        return f"Cochain({sorted(self.components)})"
