"""Parsing ring descriptors and ring elements from ASCII strings.

Ring strings::

    Z  Q  F5  Z/12  F2[x]  Q[x]  Q[x,y]  Q[x,y;lex]  F2[x]/(x^2+x)
    Q[x,1/x]   Z[1/6]   Z_<3>   Q[x]_<x-1>

Elements use the usual infix syntax with ``^`` or ``**`` for powers, e.g.
``"x^2*y - 3/2*y + 1"``.
"""

import ast
import re

from ..errors import DomainError
from .base import QQ, ZZ, PrimeField


def parse_element(ring, text):
    if not isinstance(text, str):
        raise DomainError(f"expected a string, got {text!r}")
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(ring, tree.body, text)


def _eval(ring, node, text):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return ring.from_int(node.value)
    if isinstance(node, ast.Name):
        return ring.variable(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(ring, node.operand, text)
        return ring.neg(v) if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub) \
                    and isinstance(exp.operand, ast.Constant) and type(exp.operand.value) is int:
                base = _eval(ring, node.left, text)
                return ring.power(_invert(ring, base), exp.operand.value)
            if not (isinstance(exp, ast.Constant) and type(exp.value) is int):
                raise DomainError(f"exponent must be an integer literal in {text!r}")
            return ring.power(_eval(ring, node.left, text), exp.value)
        a = _eval(ring, node.left, text)
        b = _eval(ring, node.right, text)
        if isinstance(node.op, ast.Add):
            return ring.add(a, b)
        if isinstance(node.op, ast.Sub):
            return ring.sub(a, b)
        if isinstance(node.op, ast.Mult):
            return ring.mul(a, b)
        if isinstance(node.op, ast.Div):
            return ring.mul(a, _invert(ring, b))
    raise DomainError(f"unsupported syntax in {text!r}")


def _invert(ring, b):
    try:
        return ring.inverse(b)
    except ArithmeticError:
        raise DomainError(f"{ring.format(b)} is not invertible in {ring}") from None


_POLY = re.compile(r"^(Q|F\d+)\[([A-Za-z_]\w*(?:\s*,\s*[A-Za-z_]\w*)*)(?:;(lex|grevlex))?\]$")


def parse_ring(text):
    """Build a ring descriptor from its string name."""
    from .localization import LocalizedAtPrime, LocalizedAway
    from .multivariate import MultiPoly
    from .univariate import ResidueRing, UniPoly

    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty ring description")
    if s == "Z":
        return ZZ
    if s == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)|GF\((\d+)\)", s)
    if m:
        return PrimeField(int(m.group(1) or m.group(2)))
    m = re.fullmatch(r"Z/\(?(\d+)\)?", s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise DomainError("modulus must be positive")
        return ResidueRing(ZZ, n)
    m = re.fullmatch(r"Z\[1/(\d+)\]", s)
    if m:
        return LocalizedAway(ZZ, int(m.group(1)))
    m = re.fullmatch(r"Z_<(\d+)>", s)
    if m:
        return LocalizedAtPrime(ZZ, _prime_int(int(m.group(1))))
    m = re.fullmatch(r"(Q|F\d+)\[([A-Za-z_]\w*),1/\2\]", s)
    if m:
        r = UniPoly(parse_ring(m.group(1)), m.group(2))
        return LocalizedAway(r, r.x())
    m = re.fullmatch(r"(.+\])/\((.+)\)", s)
    if m:
        base = parse_ring(m.group(1))
        if not isinstance(base, UniPoly):
            raise DomainError(f"quotients are supported for univariate rings only: {text!r}")
        return ResidueRing(base, parse_element(base, m.group(2)))
    m = re.fullmatch(r"(.+\])_<(.+)>", s)
    if m:
        base = parse_ring(m.group(1))
        if not isinstance(base, UniPoly):
            raise DomainError(f"local rings are supported over Z or K[x] only: {text!r}")
        p = parse_element(base, m.group(2))
        if not base.is_irreducible(p):
            raise DomainError(f"{m.group(2)} is not irreducible")
        return LocalizedAtPrime(base, p)
    m = _POLY.fullmatch(s)
    if m:
        coeff = parse_ring(m.group(1))
        names = [v for v in m.group(2).split(",")]
        if len(names) == 1 and m.group(3) is None:
            return UniPoly(coeff, names[0])
        if coeff != QQ:
            raise DomainError("multivariate rings are supported over Q only")
        return MultiPoly(names, m.group(3) or "grevlex")
    raise DomainError(f"unrecognised ring {text!r}")


def _prime_int(p):
    from .base import is_prime
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p
