import ast
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

PACKAGE_NAME = "singular_ldg"
REPO_ROOT = Path(__file__).resolve().parents[2]
SOURCE_ROOT = REPO_ROOT / "src" / PACKAGE_NAME
TESTS_ROOT = REPO_ROOT / "tests"

# core/<domain>/<role>/<module>.py
CORE_ROLE_DEPTH = 4


@dataclass(frozen=True)
class SourceModule:
    path: Path
    tree: ast.Module

    @property
    def relative_path(self) -> Path:
        return self.path.relative_to(REPO_ROOT)

    @property
    def source_parts(self) -> tuple[str, ...]:
        return self.path.relative_to(SOURCE_ROOT).parts

    @property
    def layer(self) -> str:
        return self.source_parts[0]

    @property
    def core_role(self) -> str | None:
        """Role package of a core module, such as ``services`` or ``entities``."""
        parts = self.source_parts
        if parts[0] != "core" or len(parts) != CORE_ROLE_DEPTH:
            return None

        return parts[2]

    @property
    def module_name(self) -> str:
        module_path = self.path.relative_to(SOURCE_ROOT).with_suffix("")
        return ".".join((PACKAGE_NAME, *module_path.parts))


@dataclass(frozen=True)
class ImportReference:
    module_name: str
    line_number: int
    is_type_checking: bool = False


def iter_source_modules(*, core_role: str | None = None) -> Iterable[SourceModule]:
    for source_file in sorted(SOURCE_ROOT.rglob("*.py")):
        module = SourceModule(path=source_file, tree=_parse(source_file))
        if core_role is None or module.core_role == core_role:
            yield module


def iter_project_trees() -> Iterable[tuple[Path, ast.Module]]:
    """Parse every module under ``src`` and ``tests``."""
    for root in (SOURCE_ROOT, TESTS_ROOT):
        for path in sorted(root.rglob("*.py")):
            yield path, _parse(path)


def is_first_party_module(module_name: str) -> bool:
    module_path = SOURCE_ROOT.parent.joinpath(*module_name.split("."))

    return module_path.with_suffix(".py").is_file() or (module_path / "__init__.py").is_file()


def iter_class_definitions(module: SourceModule) -> Iterable[ast.ClassDef]:
    return (node for node in ast.walk(module.tree) if isinstance(node, ast.ClassDef))


def iter_imports(module: SourceModule) -> Iterable[ImportReference]:
    yield from _iter_imports(module.tree, is_type_checking=False)


def has_base(class_node: ast.ClassDef, bases: set[str]) -> bool:
    base_names = {
        base_name
        for base in class_node.bases
        if (base_name := name_for_expression(_unwrap_subscript(base))) is not None
    }
    return not base_names.isdisjoint(bases)


def dataclass_keyword(class_node: ast.ClassDef, *, keyword: str) -> object:
    """Literal value passed for ``keyword`` to ``@dataclass(...)``, or ``None``."""
    for decorator in class_node.decorator_list:
        if not isinstance(decorator, ast.Call) or not _is_dataclass_name(decorator.func):
            continue

        for item in decorator.keywords:
            if item.arg == keyword and isinstance(item.value, ast.Constant):
                return item.value.value

    return None


def is_dataclass(class_node: ast.ClassDef) -> bool:
    return any(
        _is_dataclass_name(decorator.func if isinstance(decorator, ast.Call) else decorator)
        for decorator in class_node.decorator_list
    )


def annotation_names(annotation: ast.expr) -> set[str]:
    return {node.id for node in ast.walk(annotation) if isinstance(node, ast.Name)}


def is_classvar_annotation(annotation: ast.expr) -> bool:
    return name_for_expression(_unwrap_subscript(annotation)) == "ClassVar"


def is_injected_annotation(annotation: ast.expr) -> bool:
    return (
        isinstance(annotation, ast.Subscript)
        and name_for_expression(annotation.value) == "Injected"
    )


def name_for_expression(expression: ast.expr) -> str | None:
    if isinstance(expression, ast.Name):
        return expression.id

    if isinstance(expression, ast.Attribute):
        return expression.attr

    return None


def _is_dataclass_name(expression: ast.expr) -> bool:
    return name_for_expression(expression) == "dataclass"


def _parse(path: Path) -> ast.Module:
    return ast.parse(path.read_text(encoding="utf-8"), filename=str(path))


def _unwrap_subscript(expression: ast.expr) -> ast.expr:
    if isinstance(expression, ast.Subscript):
        return expression.value

    return expression


def _iter_imports(node: ast.AST, *, is_type_checking: bool) -> Iterable[ImportReference]:
    if isinstance(node, ast.ImportFrom) and node.module is not None:
        yield ImportReference(node.module, node.lineno, is_type_checking)
        for alias in node.names:
            yield ImportReference(f"{node.module}.{alias.name}", node.lineno, is_type_checking)
        return

    if isinstance(node, ast.Import):
        for alias in node.names:
            yield ImportReference(alias.name, node.lineno, is_type_checking)
        return

    if isinstance(node, ast.If):
        guarded = is_type_checking or _is_type_checking_test(node.test)
        for child in node.body:
            yield from _iter_imports(child, is_type_checking=guarded)
        for child in node.orelse:
            yield from _iter_imports(child, is_type_checking=is_type_checking)
        return

    for child_node in ast.iter_child_nodes(node):
        yield from _iter_imports(child_node, is_type_checking=is_type_checking)


def _is_type_checking_test(expression: ast.expr) -> bool:
    return name_for_expression(expression) == "TYPE_CHECKING"
