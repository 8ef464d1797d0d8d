import pytest

from dintegrals.corpus import BUILTINS, CORPUS, CORPUS_CAP, builtin, integers_mod, chain
from dintegrals.core import FiniteSemiring
from dintegrals.derivations import enumerate_derivations


def truncated_naturals(k):
    """N with every value >= k-1 identified; a semiring of order k."""
    top = k - 1
    return FiniteSemiring.from_ops(
        k, lambda x, y: min(x + y, top), lambda x, y: min(x * y, top), 0, 1 % k, f"N{k}"
    )


def product_semiring(s, t):
    n = t.order

    def add(i, j):
        return s.add(i // n, j // n) * n + t.add(i % n, j % n)

    def mul(i, j):
        return s.mul(i // n, j // n) * n + t.mul(i % n, j % n)

    return FiniteSemiring.from_ops(
        s.order * n, add, mul, s.zero * n + t.zero, s.one * n + t.one, f"{s.name}x{t.name}"
    )


def small_semirings():
    """Every built-in of order <= 5 plus a few extra structures."""
    out = [builtin(n) for n in BUILTINS if builtin(n).order <= 5]
    out += [
        integers_mod(5),
        chain(5),
        truncated_naturals(3),
        truncated_naturals(4),
        truncated_naturals(5),
        product_semiring(builtin("B2"), builtin("Z2")),
    ]
    return out


SMALL = small_semirings()
CORPUS_SEMIRINGS = [e.build() for e in CORPUS]


def all_pairs(semirings, cap=CORPUS_CAP):
    return [(s, d) for s in semirings for d in enumerate_derivations(s, cap=cap)]


SMALL_PAIRS = all_pairs(SMALL)
CORPUS_PAIRS = all_pairs(CORPUS_SEMIRINGS)
ALL_PAIRS = CORPUS_PAIRS + [(s, d) for s, d in SMALL_PAIRS if s.name not in {e.name for e in CORPUS}]


def pair_id(pair):
    s, d = pair
    return f"{s.name}:{''.join(map(str, d.map)) if s.order <= 10 else hash(d.map) % 10000}"


@pytest.fixture
def B2():
    return builtin("B2")


@pytest.fixture
def Z2():
    return builtin("Z2")


@pytest.fixture
def C3():
    return builtin("C3")


ACCEPTANCE_LINES = []


def record_acceptance(number, passed, detail):
    ACCEPTANCE_LINES.append((number, "PASS" if passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number}: {verdict}  {detail}")
