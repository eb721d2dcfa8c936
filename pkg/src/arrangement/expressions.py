"""Safe exact evaluation of parametric plane coefficients like "-D/(1-D)"."""
import ast
import operator
import re
from fractions import Fraction
from typing import Dict, Mapping

from src.errors import ParseError, UnboundParameterError


class CoefficientEvaluator:
    """Evaluates arithmetic over Fractions with single-letter parameters."""

    # Allowed operators for safe evaluation
    ALLOWED_OPERATORS = {
        ast.Add: operator.add,
        ast.Sub: operator.sub,
        ast.Mult: operator.mul,
        ast.Div: operator.truediv,
        ast.Pow: operator.pow,
        ast.USub: operator.neg,
        ast.UAdd: operator.pos,
    }

    PARAMETER = re.compile(r"^[A-Z]$")

    MAX_EXPONENT = 64
    MAX_POWER_BITS = 4096

    def __init__(self, params: Mapping[str, Fraction]):
        for name in params:
            if not self.PARAMETER.match(name):
                raise ParseError(f"Parameter names are single capital letters, got {name!r}")
        self.params: Dict[str, Fraction] = {k: Fraction(v) for k, v in params.items()}

    def evaluate(self, expression: str) -> Fraction:
        """
        Evaluate a coefficient expression.

        Args:
            expression: Arithmetic in integers, + - * / **, parentheses and parameters

        Returns:
            The exact value

        Raises:
            ParseError: If the expression is malformed or divides by zero
            UnboundParameterError: If a parameter has no value
        """
        expression = expression.strip()
        if not expression:
            raise ParseError("Coefficient expression cannot be empty")
        if not re.match(r'^[\dA-Z\s\+\-\*\/\(\)]+$', expression):
            raise ParseError(f"Coefficient contains invalid characters: {expression!r}")
        try:
            node = ast.parse(expression, mode='eval')
        except SyntaxError as e:
            raise ParseError(f"Invalid coefficient syntax {expression!r}: {e}")
        try:
            return self._eval_node(node.body)
        except ZeroDivisionError:
            raise ParseError(f"Division by zero in coefficient {expression!r}")

    def _eval_node(self, node) -> Fraction:
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in self.params:
                raise UnboundParameterError(f"Unbound parameter {node.id!r}")
            return self.params[node.id]
        if isinstance(node, ast.BinOp):
            op_type = type(node.op)
            if op_type not in self.ALLOWED_OPERATORS:
                raise ParseError(f"Operator {op_type.__name__} not allowed")
            left = self._eval_node(node.left)
            right = self._eval_node(node.right)
            if op_type is ast.Pow:
                self._check_power(left, right)
            return Fraction(self.ALLOWED_OPERATORS[op_type](left, right))
        if isinstance(node, ast.UnaryOp):
            op_type = type(node.op)
            if op_type not in self.ALLOWED_OPERATORS:
                raise ParseError(f"Operator {op_type.__name__} not allowed")
            return self.ALLOWED_OPERATORS[op_type](self._eval_node(node.operand))
        raise ParseError(f"Unsupported element in coefficient: {type(node).__name__}")

    def _check_power(self, base: Fraction, exponent: Fraction) -> None:
        if exponent.denominator != 1:
            raise ParseError("Exponents must be integers")
        if abs(exponent) > self.MAX_EXPONENT:
            raise ParseError(f"Exponent {exponent} exceeds {self.MAX_EXPONENT}")
        size = max(base.numerator.bit_length(), base.denominator.bit_length())
        if size * abs(exponent) > self.MAX_POWER_BITS:
            raise ParseError(f"Power of {base} is too large")
