import ast
import re
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

import pytest

from tests.architecture._source import iter_source_modules

GENERIC_VERBS = (
    "Apply",
    "Build",
    "Check",
    "Compute",
    "Create",
    "Evaluate",
    "Execute",
    "Get",
    "Handle",
    "Load",
    "Make",
    "Perform",
    "Process",
    "Return",
    "Run",
    "Validate",
)
# A generic verb followed by at most two plain words says nothing about the math.
VAGUE_SUMMARY = re.compile(
    rf"^(?:{'|'.join(GENERIC_VERBS)})(?:\s+(?:a|an|the))?(?:\s+[A-Za-z_-]+){{1,2}}\.$",
)
VAGUE_RETURNS = re.compile(r"(?mi)^\s*(?:the\s+)?(?:result|output|value|return value)\.\s*$")
FILLER_TERMS = frozenset(
    {"a", "an", "the", "class", "instance", "method", "object", "service", "use", "case"},
)


@dataclass(frozen=True)
class Docstring:
    location: str
    object_name: str
    text: str

    @property
    def summary(self) -> str:
        return self.text.strip().splitlines()[0].strip()


def test_source_docstrings_describe_behaviour() -> None:
    violations = [
        f"{docstring.location}: {docstring.summary}"
        for module in iter_source_modules()
        for docstring in _iter_docstrings(tree=module.tree, path=module.relative_path)
        if _is_vague(docstring)
    ]

    assert violations == [], (
        "Docstrings must say what is computed or enforced, for example "
        "`Invert one ascending spectrum.` rather than `Run the solver.`"
    )


@pytest.mark.parametrize(
    "source",
    [
        'def execute():\n    """Run the scan."""\n',
        'def f_ms():\n    """Evaluate the entropy potential."""\n',
        'class MomentInversionService:\n    """Moment inversion service."""\n',
        'def audit():\n    """Audit constants.\n\n    Returns:\n        The result.\n    """\n',
    ],
)
def test_vague_docstrings_are_rejected(source: str) -> None:
    docstrings = list(_iter_docstrings(tree=ast.parse(source), path=Path("example.py")))

    assert [_is_vague(docstring) for docstring in docstrings] == [True]


@pytest.mark.parametrize(
    "source",
    [
        'def invert():\n    """Invert one ascending spectrum."""\n',
        'def f_ms():\n    """Evaluate ``T f_ms(Q) - kappa |Q|^2``."""\n',
        'class SphereQuadratureFactory:\n    """Gauss-Legendre times uniform-phi rules."""\n',
    ],
)
def test_specific_docstrings_are_accepted(source: str) -> None:
    docstrings = list(_iter_docstrings(tree=ast.parse(source), path=Path("example.py")))

    assert [_is_vague(docstring) for docstring in docstrings] == [False]


def _iter_docstrings(*, tree: ast.Module, path: Path) -> Iterable[Docstring]:
    for node in ast.walk(tree):
        if not isinstance(node, ast.ClassDef | ast.FunctionDef):
            continue

        text = ast.get_docstring(node, clean=True)
        if text:
            yield Docstring(
                location=f"{path}:{node.body[0].lineno} {node.name}",
                object_name=node.name,
                text=text,
            )


def _is_vague(docstring: Docstring) -> bool:
    return (
        VAGUE_SUMMARY.match(docstring.summary) is not None
        or VAGUE_RETURNS.search(docstring.text) is not None
        or _restates_name(docstring)
    )


def _restates_name(docstring: Docstring) -> bool:
    summary_terms = _terms(docstring.summary)
    return bool(summary_terms) and summary_terms == _terms(docstring.object_name)


def _terms(value: str) -> tuple[str, ...]:
    spaced = re.sub(r"([a-z0-9])([A-Z])", r"\1 \2", value)
    return tuple(
        term
        for term in (word.casefold() for word in re.findall(r"[A-Za-z0-9]+", spaced))
        if term not in FILLER_TERMS
    )
