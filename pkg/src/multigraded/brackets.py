"""Insertion operators, graded brackets, and the universal morphism.

The two (n+1)-graded Lie brackets live here:

* ``bracket_delta`` on M(V), built from the insertion operator ``j_insert``;
  it detects associative structures ([mu,mu]^Delta = 0).
* ``bracket_wedge`` on A(V), built from ``i_insert`` (the alternated,
  factorially rescaled insertion); it detects graded Lie structures and is
  the multigraded Nijenhuis-Richardson bracket.

``epsilon_morphism`` maps any graded Lie algebra E with E^(-1,*) = V into
A(V) via nested brackets; on M(V) it reduces to (k+1)! alpha.

Sign conventions: a map of total degree (k, kappa) pairs with another of
total degree (l, lam) through <(k,kappa),(l,lam)> = k*l + <kappa,lam>.  The
graded commutator on endomorphisms uses the standard minus sign
D1 D2 - (-1)^<d1,d2> D2 D1 (the anticommutative convention).
"""

import itertools
from fractions import Fraction
from math import factorial

from .errors import ArityError, HomogeneityError, SpaceMismatchError
from .grading import (
    Permutation,
    add_degrees,
    as_degree,
    inner_product,
    sign_recursive,
    sum_degrees,
)
from .gspace import Vector
from .multimap import (
    AltMap,
    MultiMap,
    alternator,
    canonicalize,
    vector_as_map,
    zero_alt,
    zero_map,
)


class GradedEndo:
    """Linear endomorphism D with D(V^x) <= V^(x+degree)."""

    def __init__(self, space, degree, matrix, check=True):
        self.space = space
        self.degree = as_degree(degree)
        self.matrix = {}
        for i, col in matrix.items():
            col = {j: Fraction(c) for j, c in col.items() if c}
            if col:
                self.matrix[i] = col
        if check:
            for i, col in self.matrix.items():
                target = add_degrees(space.degrees[i], self.degree)
                for j in col:
                    if space.degrees[j] != target:
                        raise HomogeneityError(
                            f"D({space.names[i]}) hits {space.names[j]} of degree "
                            f"{space.degrees[j]}, expected {target}"
                        )

    @classmethod
    def zero(cls, space, degree):
        return cls(space, degree, {})

    @classmethod
    def identity(cls, space):
        return cls(
            space,
            (0,) * space.n,
            {i: {i: Fraction(1)} for i in range(space.dim)},
            check=False,
        )

    def apply(self, vec):
        if vec.space != self.space:
            raise SpaceMismatchError("vector from a foreign space")
        out = {}
        for i, c in vec.coords.items():
            for j, d in self.matrix.get(i, {}).items():
                out[j] = out.get(j, Fraction(0)) + c * d
        return Vector(self.space, out)

    def __call__(self, vec):
        return self.apply(vec)

    def compose(self, other):
        """self o other."""
        if self.space != other.space:
            raise SpaceMismatchError("endomorphisms over different spaces")
        out = {}
        for i, col in other.matrix.items():
            acc = {}
            for j, c in col.items():
                for m, d in self.matrix.get(j, {}).items():
                    acc[m] = acc.get(m, Fraction(0)) + c * d
            if acc:
                out[i] = acc
        return GradedEndo(
            self.space, add_degrees(other.degree, self.degree), out, check=False
        )

    def __add__(self, other):
        if self.space != other.space or self.degree != other.degree:
            raise HomogeneityError("cannot add endomorphisms of different degrees")
        out = {i: dict(col) for i, col in self.matrix.items()}
        for i, col in other.matrix.items():
            acc = out.setdefault(i, {})
            for j, c in col.items():
                acc[j] = acc.get(j, Fraction(0)) + c
        return GradedEndo(self.space, self.degree, out, check=False)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return GradedEndo(
            self.space,
            self.degree,
            {i: {j: scalar * c for j, c in col.items()} for i, col in self.matrix.items()},
            check=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, GradedEndo)
            and self.space == other.space
            and self.degree == other.degree
            and self.matrix == other.matrix
        )

    def is_zero(self):
        return not self.matrix

    def as_multimap(self):
        return MultiMap(
            self.space,
            0,
            self.degree,
            {(i,): col for i, col in self.matrix.items()},
            check=False,
        )

    @classmethod
    def from_multimap(cls, K):
        if K.k != 0:
            raise ArityError("only form degree 0 maps are endomorphisms")
        return cls(
            K.space,
            K.weight,
            {key[0]: dict(val) for key, val in K.items_full()},
            check=False,
        )

    def __repr__(self):
        return f"GradedEndo(degree={self.degree}, {len(self.matrix)} columns)"


def graded_commutator(D1, D2):
    """[D1,D2] = D1 o D2 - (-1)^<d1,d2> D2 o D1."""
    if D1.space != D2.space:
        raise SpaceMismatchError("endomorphisms over different spaces")
    sign = -1 if inner_product(D1.degree, D2.degree) % 2 == 0 else 1
    first = D1.compose(D2)
    second = D2.compose(D1)
    return first + sign * second


def is_derivation(D, mu):
    """Leibniz check D(X.Y) = D(X).Y + (-1)^<delta,x> X.D(Y) on basis pairs."""
    space = mu.space
    if D.space != space:
        raise SpaceMismatchError("derivation candidate over a foreign space")
    for i in range(space.dim):
        for j in range(space.dim):
            ei = space.basis_vector(i)
            ej = space.basis_vector(j)
            lhs = D.apply(mu.evaluate([ei, ej]))
            sign = 1 if inner_product(D.degree, space.degrees[i]) % 2 == 0 else -1
            rhs = mu.evaluate([D.apply(ei), ej]) + sign * mu.evaluate([ei, D.apply(ej)])
            if lhs != rhs:
                return False
    return True


def j_insert(K1, K2):
    """(j(K1)K2)(X0..X_{k1+k2}) = sum_i (-1)^(k1*i + <kappa1, kappa2+x0+..+x_{i-1}>)
    K2(X0, ..., K1(Xi, ..., X_{i+k1}), ..., X_{k1+k2})."""
    if K1.space != K2.space:
        raise SpaceMismatchError("maps over different spaces")
    space = K1.space
    k1, k2 = K1.k, K2.k
    weight = add_degrees(K1.weight, K2.weight)
    if k1 + k2 < -1 or k2 < 0:
        return zero_map(space, k1 + k2, weight)
    out = {}
    k1_entries = list(K1.items_full())
    for b, v2 in K2.items_full():
        prefix = K2.weight
        for i in range(k2 + 1):
            sign = 1
            if (k1 * i + inner_product(K1.weight, prefix)) % 2:
                sign = -1
            slot = b[i]
            for a, v1 in k1_entries:
                c1 = v1.get(slot)
                if c1:
                    key = b[:i] + a + b[i + 1 :]
                    acc = out.setdefault(key, {})
                    for m, c2 in v2.items():
                        acc[m] = acc.get(m, Fraction(0)) + sign * c1 * c2
            prefix = add_degrees(prefix, space.degrees[b[i]])
    return MultiMap(space, k1 + k2, weight, out, check=False)


def pairing(deg1, deg2):
    """Inner product of total degrees: k1*k2 + <kappa1, kappa2>."""
    (k1, w1), (k2, w2) = deg1, deg2
    return k1 * k2 + inner_product(w1, w2)


def bracket_delta(K1, K2):
    """[K1,K2]^Delta = j(K1)K2 - (-1)^<(k1,kappa1),(k2,kappa2)> j(K2)K1."""
    sign = 1 if pairing(K1.total_degree, K2.total_degree) % 2 == 0 else -1
    return j_insert(K1, K2) - sign * j_insert(K2, K1)


def i_insert(K1, K2):
    """i(K1)K2 = (k1+k2+1)!/((k1+1)!(k2+1)!) alpha(j(K1)K2)."""
    k1, k2 = K1.k, K2.k
    weight = add_degrees(K1.weight, K2.weight)
    if k1 + k2 < -1 or k2 < 0:
        return zero_alt(K1.space, k1 + k2, weight)
    factor = Fraction(
        factorial(k1 + k2 + 1), factorial(k1 + 1) * factorial(k2 + 1)
    )
    return factor * alternator(j_insert(K1, K2))


def i_insert_explicit(K1, K2):
    """The closed formula for i(K1)K2: a dense sum over S_{k1+k2+1}.

    1/((k1+1)! k2!) sum_sigma s(sigma, x) (-1)^<kappa1,kappa2>
    K2(K1(X_sigma0, ..., X_sigma(k1)), X_sigma(k1+1), ..., X_sigma(k1+k2)).

    Used as a cross-check of ``i_insert``; quadratic in the basis size to the
    power of the arity, so keep it to desk-scale inputs.
    """
    if K1.space != K2.space:
        raise SpaceMismatchError("maps over different spaces")
    space = K1.space
    k1, k2 = K1.k, K2.k
    weight = add_degrees(K1.weight, K2.weight)
    if k1 + k2 < -1 or k2 < 0:
        return zero_alt(space, k1 + k2, weight)
    arity = k1 + k2 + 1
    base_sign = 1 if inner_product(K1.weight, K2.weight) % 2 == 0 else -1
    norm = Fraction(base_sign, factorial(k1 + 1) * factorial(k2))
    perms = [Permutation(p) for p in itertools.permutations(range(arity))]
    out = {}
    for key in itertools.product(range(space.dim), repeat=arity):
        degrees = [space.degrees[i] for i in key]
        acc = {}
        for sigma in perms:
            permuted = [key[sigma(j)] for j in range(arity)]
            v1 = K1.value_at(tuple(permuted[: k1 + 1]))
            if not v1:
                continue
            s = sign_recursive(sigma, degrees)
            tail = tuple(permuted[k1 + 1 :])
            for m, c1 in v1.items():
                for out_idx, c2 in K2.value_at((m,) + tail).items():
                    acc[out_idx] = acc.get(out_idx, Fraction(0)) + s * c1 * c2
        if acc:
            out[key] = {m: norm * c for m, c in acc.items()}
    raw = MultiMap(space, k1 + k2, weight, out, check=False)
    return canonicalize(raw, check=False)


def bracket_wedge(K1, K2):
    """[K1,K2]^wedge = i(K1)K2 - (-1)^<(k1,kappa1),(k2,kappa2)> i(K2)K1."""
    sign = 1 if pairing(K1.total_degree, K2.total_degree) % 2 == 0 else -1
    return i_insert(K1, K2) - sign * i_insert(K2, K1)


class MultiMapLieOracle:
    """The graded Lie algebra M(V) presented through the bracket interface.

    Elements are homogeneous MultiMaps; E^(-1,*) = V via ``embed``.
    """

    def __init__(self, V):
        self.V = V

    def bracket(self, Z1, Z2):
        return bracket_delta(Z1, Z2)

    def embed(self, vec):
        return vector_as_map(vec)

    def as_vector(self, Z):
        return Z.as_vector()

    def degree_of(self, Z):
        return Z.total_degree


def epsilon_morphism(oracle, Z):
    """The unique morphism E -> A(V) on a homogeneous element Z.

    epsilon(Z)(X0, ..., Xk) = (-1)^<z, x0+...+xk> [X0, [X1, ..., [Xk, Z]...]
    evaluated through the oracle's bracket; the result is verified to be
    graded-alternating (any failure indicates the oracle violates the graded
    Lie axioms or the degree contract).
    """
    V = oracle.V
    k, z = oracle.degree_of(Z)
    z = as_degree(z)
    if k < -1:
        raise ArityError("element below form degree -1")
    if k == -1:
        vec = oracle.as_vector(Z)
        if vec.is_zero():
            return zero_alt(V, -1, z)
        return canonicalize(vector_as_map(vec), check=False)
    out = {}
    for key in itertools.product(range(V.dim), repeat=k + 1):
        nested = Z
        for idx in reversed(key):
            nested = oracle.bracket(oracle.embed(V.basis_vector(idx)), nested)
        vec = oracle.as_vector(nested)
        if vec.is_zero():
            continue
        total = sum_degrees((V.degrees[i] for i in key), V.n)
        sign = 1 if inner_product(z, total) % 2 == 0 else -1
        out[key] = {m: sign * c for m, c in vec.coords.items()}
    raw = MultiMap(V, k, z, out, check=True)
    return canonicalize(raw, check=True)
