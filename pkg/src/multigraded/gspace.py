"""Finite-dimensional Z^n-graded vector spaces over exact rationals.

A ``GradedSpace`` is a finite ordered basis, each basis vector carrying a
multidegree.  ``Vector`` holds sparse rational coordinates.  ``suspend``
builds the auxiliary space E used for module recognition: V sits at the new
form coordinate 0 and W at 1, the new coordinate being prepended.
"""

from fractions import Fraction

from .errors import DimensionError, SpaceMismatchError
from .grading import as_degree

#: degree report for the zero vector (it lies in every V^x)
ANY_DEGREE = "any"
#: degree report for a vector supported on several degrees
INHOMOGENEOUS = "inhomogeneous"


class GradedSpace:
    """Finite basis with one multidegree per basis vector."""

    def __init__(self, n, basis):
        self.n = int(n)
        names = []
        degrees = []
        for name, degree in basis:
            degree = as_degree(degree)
            if len(degree) != self.n:
                raise DimensionError(
                    f"basis vector {name!r}: degree {degree} has length "
                    f"{len(degree)}, expected {self.n}"
                )
            if name in names:
                raise ValueError(f"duplicate basis name {name!r}")
            names.append(name)
            degrees.append(degree)
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def dim(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def degree(self, i):
        return self.degrees[i]

    def basis_vector(self, i):
        if isinstance(i, str):
            i = self.index(i)
        return Vector(self, {i: Fraction(1)})

    def zero(self):
        return Vector(self, {})

    def vector(self, coords):
        """Build a vector from a name-or-index -> scalar mapping."""
        out = {}
        for key, c in coords.items():
            i = self.index(key) if isinstance(key, str) else key
            c = Fraction(c)
            if c:
                out[i] = out.get(i, Fraction(0)) + c
        return Vector(self, out)

    def indices_of_degree(self, degree):
        degree = as_degree(degree)
        return [i for i, d in enumerate(self.degrees) if d == degree]

    def __eq__(self, other):
        return (
            isinstance(other, GradedSpace)
            and self.n == other.n
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.n, self.names, self.degrees))

    def __repr__(self):
        return f"GradedSpace(n={self.n}, dim={self.dim})"


def build_space(n, basis_spec):
    """Constructor mirroring the file format: basis_spec = [(name, degree)]."""
    return GradedSpace(n, basis_spec)


class Vector:
    """Sparse element of a GradedSpace with Fraction coordinates."""

    __slots__ = ("space", "coords")

    def __init__(self, space, coords):
        self.space = space
        self.coords = {i: Fraction(c) for i, c in coords.items() if c}

    def is_zero(self):
        return not self.coords

    def __add__(self, other):
        if self.space != other.space:
            raise SpaceMismatchError("cannot add vectors from different spaces")
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = out.get(i, Fraction(0)) + c
        return Vector(self.space, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return Vector(self.space, {i: scalar * c for i, c in self.coords.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.space == other.space
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.space, tuple(sorted(self.coords.items()))))

    def __repr__(self):
        terms = " + ".join(
            f"{c}*{self.space.names[i]}" for i, c in sorted(self.coords.items())
        )
        return f"Vector({terms or '0'})"

    def degree(self):
        """Common degree of the support, ANY_DEGREE for 0, else INHOMOGENEOUS."""
        if not self.coords:
            return ANY_DEGREE
        found = {self.space.degrees[i] for i in self.coords}
        if len(found) == 1:
            return found.pop()
        return INHOMOGENEOUS


def degree_of(v):
    return v.degree()


class Suspension:
    """The space E with V at form coordinate 0 and W at form coordinate 1.

    E is graded over Z^(1+n); the new coordinate is prepended so the
    module-theoretic form degree is always the first slot.
    """

    def __init__(self, V, W):
        if V.n != W.n:
            raise DimensionError("V and W must share the grading dimension")
        self.V = V
        self.W = W
        basis = [(f"v:{name}", (0,) + deg) for name, deg in zip(V.names, V.degrees)]
        basis += [(f"w:{name}", (1,) + deg) for name, deg in zip(W.names, W.degrees)]
        self.space = GradedSpace(V.n + 1, basis)

    def v_index(self, i):
        return i

    def w_index(self, i):
        return self.V.dim + i

    def side(self, e_index):
        """('v', i) or ('w', i) for an E basis index."""
        if e_index < self.V.dim:
            return ("v", e_index)
        return ("w", e_index - self.V.dim)

    def embed_v(self, vec):
        if vec.space != self.V:
            raise SpaceMismatchError("vector not in V")
        return Vector(self.space, {self.v_index(i): c for i, c in vec.coords.items()})

    def embed_w(self, vec):
        if vec.space != self.W:
            raise SpaceMismatchError("vector not in W")
        return Vector(self.space, {self.w_index(i): c for i, c in vec.coords.items()})

    def project_v(self, vec):
        return Vector(
            self.V,
            {i: c for i, c in vec.coords.items() if self.side(i)[0] == "v"},
        )

    def project_w(self, vec):
        return Vector(
            self.W,
            {self.side(i)[1]: c for i, c in vec.coords.items() if self.side(i)[0] == "w"},
        )


def suspend(V, W):
    return Suspension(V, W)
