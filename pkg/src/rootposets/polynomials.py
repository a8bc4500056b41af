"""Exact univariate polynomials in t with rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class IntPolynomial:
    """Coefficients are stored constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) or (Fraction(0),)

    @classmethod
    def from_roots(cls, roots) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def interpolate(cls, points) -> IntPolynomial:
        """Lagrange interpolation through (x, y) pairs, exactly."""
        xs = [Fraction(x) for x, _ in points]
        total = cls([0])
        for i, (xi, yi) in enumerate(points):
            basis = cls([1])
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j != i:
                    basis = basis * cls([-xj, 1])
                    denom *= xs[i] - xj
            total = total + basis.scale(Fraction(yi) / denom)
        return total

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def coefficient_list(self) -> list[int]:
        if not self.is_integral:
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def scale(self, c) -> IntPolynomial:
        return IntPolynomial([c * a for a in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __mul__(self, other):
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return int(acc) if acc.denominator == 1 else acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def shift(self, a) -> IntPolynomial:
        """The polynomial t -> self(t - a)."""
        out = IntPolynomial([0])
        power = IntPolynomial([1])
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * IntPolynomial([-a, 1])
        return out

    def integer_roots(self) -> list[int] | None:
        """All roots with multiplicity when the polynomial splits over Z, else None."""
        if not (self.is_integral and self.is_monic):
            return None
        roots = []
        p = self
        while p.degree > 0:
            c0 = int(p.coeffs[0])
            if c0 == 0:
                r = 0
            else:
                r = next((d for d in _divisors(abs(c0)) for d in (d, -d) if p(d) == 0), None)
                if r is None:
                    return None
            roots.append(r)
            p = p.divide_linear(r)
        return sorted(roots)

    def divide_linear(self, r) -> IntPolynomial:
        """Quotient by (t - r); the remainder must be zero."""
        out = []
        carry = Fraction(0)
        for c in reversed(self.coeffs):
            carry = carry * r + c
            out.append(carry)
        if out.pop() != 0:
            raise ArithmeticError(f"t - {r} does not divide {self}")
        return IntPolynomial(out[::-1])

    def factored(self) -> str:
        roots = self.integer_roots()
        if roots is None:
            return str(self)
        out = []
        for r in sorted(set(roots)):
            n = roots.count(r)
            base = "t" if r == 0 else f"(t{'-' if r > 0 else '+'}{abs(r)})"
            out.append(base + (f"^{n}" if n > 1 else ""))
        return "".join(out) or "1"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            terms.append((sign, body + mono))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s

    def __repr__(self):
        return f"IntPolynomial({[str(c) for c in self.coeffs]})"


def _divisors(n: int):
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def product_of_linear(shifts) -> IntPolynomial:
    """prod (t - a) over the given integers."""
    return IntPolynomial.from_roots(list(shifts))


def zaslavsky_counts(chi: IntPolynomial, p: int) -> dict[str, int]:
    """Regions and bounded regions of an essential arrangement in dimension p."""
    return {"regions": (-1) ** p * chi(-1), "bounded_regions": abs(chi(1))}
