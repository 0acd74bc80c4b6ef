import io
import json

import pytest

from abelian_points.cli import run


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def naive_count(field_elems, add, mul, coeffs):
    """#E over a finite field by checking every (x, y) pair."""
    a1, a2, a3, a4, a6 = coeffs
    n = 1
    for x in field_elems:
        for y in field_elems:
            lhs = add(add(mul(y, y), mul(mul(a1, x), y)), mul(a3, y))
            x2 = mul(x, x)
            rhs = add(add(add(mul(x2, x), mul(a2, x2)), mul(a4, x)), a6)
            n += lhs == rhs
    return n


class CliResult:
    def __init__(self, code, out, err):
        self.code, self.out, self.err = code, out, err

    @property
    def doc(self):
        return json.loads(self.out)


def cli_runner(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return CliResult(code, out.getvalue(), err.getvalue())


@pytest.fixture
def cli():
    return cli_runner


# one representative invocation per subcommand, each expected to exit 0
CLI_COMMANDS = [
    ["certify-cubic", "--a", "1", "--b", "2", "--c", "4", "--p", "2"],
    ["certify-cubic", "--a", "1", "--b", "2", "--c", "3", "--p", "5", "--family"],
    ["certify-cy", "--ell", "5", "--p", "2"],
    ["scan", "--form", "x^3 + 5*y^3 + 25*z^3", "--p-max", "50"],
    ["solve-local", "--form", "3*x^3 + 4*y^3 + 5*z^3", "--p", "7"],
    ["find-ell", "--q", "27"],
    ["thm-ell", "--ell", "4"],
    ["thm-ell", "--ell", "7"],
    ["thm3", "--f", "x^2 - 2"],
    ["cor2", "--f", "x^2 - 2"],
    ["genus-plan", "--g", "9"],
    ["norm-cert", "--f", "x^3 - x - 1"],
    ["tame-symbol", "--a", "(a)", "--b", "t", "--field", "x^2 - 2"],
    ["sn-cert", "--f", "x^5 - x - 1"],
    ["k4"],
    ["catalan", "--s-max", "60", "--t-max", "40"],
]
