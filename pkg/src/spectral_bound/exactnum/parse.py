"""Parser for exact scalar expressions, the inverse of format_scalar.

Accepted: integers, decimals, ``+ - * / **`` (``^`` too), parentheses,
``sqrt(r)`` of a nonnegative rational and ``root(poly, [lo,hi])``.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from ..errors import DomainError
from .poly import X, IntPoly, sturm_count
from .scalars import Scalar, as_scalar, demote, sqrt

_IMPLICIT = re.compile(r"(\d)\s*(x|sqrt|\()")


def _prepare(text: str) -> str:
    s = text.strip().replace("^", "**").replace("√", "sqrt")
    return _IMPLICIT.sub(r"\1*\2", s)


def _fraction(node) -> Fraction:
    v = _eval(node, allow_x=False)
    if not isinstance(v, Fraction):
        raise DomainError("root() interval endpoints must be rational")
    return v


def _poly_operand(v):
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise DomainError("polynomial coefficients must be integers")


def _eval(node, allow_x: bool):
    if isinstance(node, ast.Expression):
        return _eval(node.body, allow_x)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return Fraction(str(node.value))
    if isinstance(node, ast.Name) and node.id == "x" and allow_x:
        return X
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, allow_x)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left, allow_x), _eval(node.right, allow_x)
        if isinstance(left, IntPoly) or isinstance(right, IntPoly):
            left, right = _poly_operand(left), _poly_operand(right) if not isinstance(node.op, ast.Pow) else right
        try:
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if isinstance(left, IntPoly) or isinstance(right, IntPoly):
                    raise DomainError("division is not allowed inside a polynomial")
                if right == 0:
                    raise DomainError("division by zero")
                return left / right
            if isinstance(node.op, ast.Pow):
                if not (isinstance(right, Fraction) and right.denominator == 1 and right >= 0):
                    raise DomainError("exponents must be nonnegative integers")
                return left ** int(right)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            # Surd arithmetic rejects sums over different radicands
            raise DomainError(str(exc)) from None
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        if node.func.id == "sqrt" and len(node.args) == 1:
            arg = _eval(node.args[0], allow_x=False)
            if not isinstance(arg, Fraction):
                raise DomainError("sqrt() takes a rational argument; nested radicals are not supported")
            if arg < 0:
                raise DomainError("sqrt of a negative number")
            return sqrt(arg)
        if node.func.id == "root" and len(node.args) == 2 and isinstance(node.args[1], ast.List) and len(node.args[1].elts) == 2:
            poly = _eval(node.args[0], allow_x=True)
            if not isinstance(poly, IntPoly):
                raise DomainError("root() needs a polynomial in x")
            lo, hi = (_fraction(e) for e in node.args[1].elts)
            poly = poly.squarefree_part()
            if poly.degree < 1 or not lo < hi or sturm_count(poly, lo, hi) != 1:
                raise DomainError("root() interval must isolate exactly one root")
            try:
                return demote(poly, lo, hi)
            except ValueError as exc:
                raise DomainError(str(exc)) from None
    raise DomainError(f"unsupported syntax: {ast.unparse(node) if hasattr(ast, 'unparse') else node!r}")


def parse_scalar(text: str) -> Scalar:
    """Exact value of an expression such as "sqrt(5)-1", "19/10" or "(1+sqrt(5))/2"."""
    if not isinstance(text, str) or not text.strip():
        raise DomainError("empty expression")
    try:
        tree = ast.parse(_prepare(text), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse {text!r}: {exc.msg}") from None
    value = _eval(tree, allow_x=False)
    if isinstance(value, IntPoly):
        raise DomainError("expression must not contain x outside root()")
    return as_scalar(value)
