import ast
from collections.abc import Iterable
from pathlib import Path

from tests.architecture._source import (
    PACKAGE_NAME,
    REPO_ROOT,
    SOURCE_ROOT,
    SourceModule,
    is_first_party_module,
    iter_imports,
    iter_project_trees,
)


def test_import_from_records_fully_qualified_alias_modules() -> None:
    module = _source_module("import singular_ldg.core.bulk.dtos.bulk_params\n")

    import_names = {import_reference.module_name for import_reference in iter_imports(module)}

    assert "singular_ldg.core.bulk.dtos.bulk_params" in import_names


def test_import_from_preserves_type_checking_alias_metadata() -> None:
    module = _source_module(
        "from typing import TYPE_CHECKING\n"
        "if TYPE_CHECKING:\n"
        "    from singular_ldg.core.bulk.services.moment_inversion import MomentInversionService\n",
    )

    import_references = {
        import_reference.module_name: import_reference.is_type_checking
        for import_reference in iter_imports(module)
    }

    assert (
        import_references["singular_ldg.core.bulk.services.moment_inversion.MomentInversionService"]
        is True
    )


def test_source_tree_does_not_contain_cache_only_directories() -> None:
    violations = [
        str(path.relative_to(SOURCE_ROOT))
        for path in sorted(SOURCE_ROOT.rglob("*"))
        if path.is_dir()
        if _is_cache_only_directory(path=path)
    ]

    assert violations == []


def test_first_party_imports_resolve_to_modules_on_disk() -> None:
    violations = [
        f"{path.relative_to(REPO_ROOT)}:{line_number} imports missing module {module_name}"
        for path, tree in iter_project_trees()
        for module_name, line_number in _iter_first_party_modules(tree)
        if not is_first_party_module(module_name)
    ]

    assert violations == []


def test_first_party_module_lookup_rejects_missing_private_modules() -> None:
    assert is_first_party_module("singular_ldg.core.bulk.dtos.bulk_params")
    assert is_first_party_module("singular_ldg.core.bulk")
    assert not is_first_party_module("singular_ldg.core.bulk.dtos._bulk_params")


def _source_module(source: str) -> SourceModule:
    return SourceModule(
        path=SOURCE_ROOT / "core" / "example.py",
        tree=ast.parse(source),
    )


def _is_cache_only_directory(*, path: Path) -> bool:
    children = list(path.iterdir())

    return bool(children) and all(child.name == "__pycache__" for child in children)


def _iter_first_party_modules(tree: ast.Module) -> Iterable[tuple[str, int]]:
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom) and node.level == 0 and node.module is not None:
            module_names = [node.module]
        elif isinstance(node, ast.Import):
            module_names = [alias.name for alias in node.names]
        else:
            continue

        for module_name in module_names:
            if module_name.split(".")[0] == PACKAGE_NAME:
                yield module_name, node.lineno
