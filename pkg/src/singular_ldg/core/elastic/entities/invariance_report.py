from dataclasses import dataclass

from singular_ldg.core.shared.arrays import BoolArray, FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class InvarianceReport:
    """Invariants before and after a change of frame.

    ``expected`` equals ``original`` except for ``I5``, whose sign follows ``det R``.
    """

    original: FloatArray
    transformed: FloatArray
    expected: FloatArray
    holds: BoolArray
    proper: bool
