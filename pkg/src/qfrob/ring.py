"""Exact multivariate polynomial arithmetic over a prime field F_p.

Polynomials live in F_p[x_1, ..., x_n] with the total-degree grading and are
stored sparsely as {exponent tuple: coefficient}; zero coefficients are never
stored, so the zero polynomial has an empty term dict.

The coordinate pairing (x_1, x_2), (x_3, x_4), ... that underlies the quadric
form also induces a torus weight on monomials (one integer per pair, doubled
to stay integral on spinor data); the weight helpers here are what lets the
homomorphism solver split its linear algebra into small independent blocks.
"""

from __future__ import annotations

from .errors import UnsupportedParameters


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The scalar field F_p, restricted to odd primes."""

    __slots__ = ("p",)

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise UnsupportedParameters(f"modulus must be a prime, got {p!r}")
        if p == 2:
            raise UnsupportedParameters("characteristic 2 is not supported")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class MultiPoly:
    """Sparse polynomial in n_vars variables over F_p."""

    __slots__ = ("p", "n_vars", "terms")

    def __init__(self, p, n_vars, terms=None):
        self.p = p
        self.n_vars = n_vars
        clean = {}
        if terms:
            for exps, c in terms.items():
                c %= p
                if c:
                    if len(exps) != n_vars:
                        raise ValueError("exponent tuple length mismatch")
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, p, n_vars):
        return cls(p, n_vars)

    @classmethod
    def constant(cls, p, n_vars, c):
        return cls(p, n_vars, {(0,) * n_vars: c})

    @classmethod
    def variable(cls, p, n_vars, i, coeff=1):
        exps = [0] * n_vars
        exps[i] = 1
        return cls(p, n_vars, {tuple(exps): coeff})

    @classmethod
    def monomial(cls, p, n_vars, exps, coeff=1):
        return cls(p, n_vars, {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def _check_compatible(self, other):
        if self.p != other.p or self.n_vars != other.n_vars:
            raise ValueError("polynomials over different rings")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            new = (terms.get(exps, 0) + c) % self.p
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = MultiPoly(self.p, self.n_vars)
        out.terms = terms
        return out

    def __neg__(self):
        out = MultiPoly(self.p, self.n_vars)
        out.terms = {e: (self.p - c) % self.p for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compatible(other)
        p = self.p
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                new = (terms.get(exps, 0) + ca * cb) % p
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        out = MultiPoly(p, self.n_vars)
        out.terms = terms
        return out

    def scale(self, c):
        c %= self.p
        out = MultiPoly(self.p, self.n_vars)
        if c:
            out.terms = {e: (c * v) % self.p for e, v in self.terms.items()}
        return out

    def __pow__(self, k):
        result = MultiPoly.constant(self.p, self.n_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.p == other.p
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, self.n_vars, tuple(sorted(self.terms.items()))))

    def frobenius_power(self, q):
        """Substitute x_i -> x_i^q; over F_p with q a power of p this equals f^q."""
        out = MultiPoly(self.p, self.n_vars)
        out.terms = {tuple(e * q for e in exps): c for exps, c in self.terms.items()}
        return out

    def substitute_variables(self, perm):
        """Rename variables: new exponent of x_{perm[i]} is the old exponent of x_i."""
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * self.n_vars
            for i, e in enumerate(exps):
                new[perm[i]] += e
            terms[tuple(new)] = (terms.get(tuple(new), 0) + c) % self.p
        return MultiPoly(self.p, self.n_vars, terms)

    def total_degree(self):
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Degree if homogeneous and nonzero, else raise."""
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous nonzero")
        return degs.pop()

    def __repr__(self):
        return f"MultiPoly(p={self.p}, {format_poly(self)})"


def poly_mul(a, b):
    """Exact product of two polynomials over the same ring."""
    return a * b


def quadric_form(p, m):
    """The split quadric form x_1 x_2 + x_3 x_4 + ... in 2m+2 variables."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n_vars = 2 * m + 2
    terms = {}
    for i in range(m + 1):
        exps = [0] * n_vars
        exps[2 * i] = 1
        exps[2 * i + 1] = 1
        terms[tuple(exps)] = 1
    return MultiPoly(p, n_vars, terms)


def normal_form_mod_quadric(poly, m):
    """Canonical representative modulo the quadric form.

    Uses degrevlex with x_1 > x_2 > ... so the leading monomial of the form
    is x_1 x_2; every occurrence of x_1 x_2 is replaced by minus the sum of
    the remaining coordinate products until none is left.
    """
    p = poly.p
    n_vars = 2 * m + 2
    if poly.n_vars != n_vars:
        raise ValueError("variable count does not match m")
    tail = {}
    for i in range(1, m + 1):
        exps = [0] * n_vars
        exps[2 * i] = 1
        exps[2 * i + 1] = 1
        tail[tuple(exps)] = p - 1
    tail_poly = MultiPoly(p, n_vars, tail)

    pending = dict(poly.terms)
    reduced = {}
    while pending:
        exps, c = pending.popitem()
        if exps[0] >= 1 and exps[1] >= 1:
            lowered = list(exps)
            lowered[0] -= 1
            lowered[1] -= 1
            rest = MultiPoly.monomial(p, n_vars, lowered, c) * tail_poly
            for e2, c2 in rest.terms.items():
                new = (pending.get(e2, 0) + reduced.pop(e2, 0) + c2) % p
                if new:
                    pending[e2] = new
        else:
            new = (reduced.get(exps, 0) + c) % p
            if new:
                reduced[exps] = new
            else:
                reduced.pop(exps, None)
    out = MultiPoly(p, n_vars)
    out.terms = reduced
    return out


def variable_weight(i, n_vars):
    """Doubled torus weight of x_{i+1}: +2 on its pair for odd index, -2 for even."""
    pairs = n_vars // 2
    w = [0] * pairs
    w[i // 2] = 2 if i % 2 == 0 else -2
    return tuple(w)


def monomial_weight(exps, n_vars):
    pairs = n_vars // 2
    return tuple(
        2 * (exps[2 * k] - exps[2 * k + 1]) for k in range(pairs)
    )


def add_weights(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg_weight(a):
    return tuple(-x for x in a)


def scale_weight(a, c):
    return tuple(c * x for x in a)


def format_poly(poly, var_names=None):
    """Human-readable rendering, deterministic term order (degrevlex-ish)."""
    if poly.is_zero():
        return "0"
    if var_names is None:
        var_names = [f"x{i + 1}" for i in range(poly.n_vars)]
    items = sorted(poly.terms.items(), key=lambda t: (-sum(t[0]), t[0]))
    parts = []
    for exps, c in items:
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(var_names[i])
            elif e > 1:
                factors.append(f"{var_names[i]}^{e}")
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            parts.append(body)
        else:
            parts.append(f"{c}*{body}" if factors else str(c))
    return " + ".join(parts)
