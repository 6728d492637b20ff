import functools

import pytest

from solvrad import catalog

# spec: (order, classes, solvable, nilpotent, fitting height, |F|, |R|)
# computed by the brute-force oracles in oracles.py
CORPUS_FACTS = {
    "sym:3": (6, 3, True, False, 2, 3, 6),
    "sym:4": (24, 5, True, False, 3, 4, 24),
    "sym:5": (120, 7, False, False, None, 1, 1),
    "sym:6": (720, 11, False, False, None, 1, 1),
    "alt:4": (12, 4, True, False, 2, 4, 12),
    "alt:5": (60, 5, False, False, None, 1, 1),
    "alt:6": (360, 7, False, False, None, 1, 1),
    "cyclic:2": (2, 2, True, True, 1, 2, 2),
    "cyclic:3": (3, 3, True, True, 1, 3, 3),
    "cyclic:4": (4, 4, True, True, 1, 4, 4),
    "cyclic:5": (5, 5, True, True, 1, 5, 5),
    "cyclic:6": (6, 6, True, True, 1, 6, 6),
    "cyclic:7": (7, 7, True, True, 1, 7, 7),
    "cyclic:8": (8, 8, True, True, 1, 8, 8),
    "cyclic:9": (9, 9, True, True, 1, 9, 9),
    "cyclic:10": (10, 10, True, True, 1, 10, 10),
    "cyclic:11": (11, 11, True, True, 1, 11, 11),
    "cyclic:12": (12, 12, True, True, 1, 12, 12),
    "dihedral:3": (6, 3, True, False, 2, 3, 6),
    "dihedral:4": (8, 5, True, True, 1, 8, 8),
    "dihedral:5": (10, 4, True, False, 2, 5, 10),
    "dihedral:6": (12, 6, True, False, 2, 6, 12),
    "dihedral:7": (14, 5, True, False, 2, 7, 14),
    "dihedral:8": (16, 7, True, True, 1, 16, 16),
    "frobenius20": (20, 5, True, False, 2, 5, 20),
    "sl23": (24, 7, True, False, 2, 8, 24),
    "gl23": (48, 8, True, False, 3, 8, 48),
    "psl2:5": (60, 5, False, False, None, 1, 1),
    "psl2:7": (168, 6, False, False, None, 1, 1),
    "psl2:11": (660, 8, False, False, None, 1, 1),
    "psl2:13": (1092, 9, False, False, None, 1, 1),
    "direct:sym:3,alt:5": (360, 15, False, False, None, 3, 6),
    "direct:sym:4,sym:3": (144, 15, True, False, 3, 12, 144),
    "wreath:sym:3,cyclic:2": (72, 9, True, False, 2, 9, 72),
}


@functools.lru_cache(maxsize=None)
def corpus_group(spec):
    return catalog.build(spec)


def corpus(max_order=None, solvable=None):
    out = []
    for spec, facts in CORPUS_FACTS.items():
        if max_order is not None and facts[0] > max_order:
            continue
        if solvable is not None and facts[2] != solvable:
            continue
        out.append(spec)
    return out


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                num = int(nodeid.split("test_criterion_")[1].split("_")[0])
                lines.append((num, f"criterion {num:2d}: {'PASS' if rep.passed else 'FAIL'}  "
                                   f"({rep.duration:.1f} s)  {nodeid.split('::')[1]}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture
def S4():
    return corpus_group("sym:4")


@pytest.fixture
def S5():
    return corpus_group("sym:5")
