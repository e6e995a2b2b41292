from importlib import resources

import pytest

from clockwork.diagram import parse_diagram


def corpus_text(name: str) -> str:
    return (resources.files("clockwork") / "corpus" / f"{name}.pd").read_text()


def corpus(name: str):
    return parse_diagram(corpus_text(name))


def all_corpus():
    root = resources.files("clockwork") / "corpus"
    names = sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".pd"))
    return [corpus(n) for n in names]


CONNECTED = ["unknot", "unknot_cw", "curl_unknot", "hopf_pos", "hopf_neg", "trefoil_right",
             "trefoil_left", "figure_eight", "whitehead", "torus_2_4", "borromean"]
SPLIT = ["unlink2", "unlink3", "trefoil_unknot"]


@pytest.fixture
def trefoil():
    return corpus("trefoil_right")


@pytest.fixture
def curl():
    return corpus("curl_unknot")


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
