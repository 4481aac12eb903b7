from dataclasses import dataclass

from singular_ldg.core.bulk.entities.potential_sample import PotentialSample
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class BlowupTable:
    """Potential samples ordered toward the boundary end of a uniaxial ray."""

    path: BlowupPath
    samples: tuple[PotentialSample, ...]
    min_growth: float

    @property
    def is_monotone(self) -> bool:
        """Whether ``f_ms`` strictly increases along the ray."""
        values = [sample.f_ms for sample in self.samples]
        return all(earlier < later for earlier, later in zip(values, values[1:], strict=False))

    @property
    def growth(self) -> float:
        """Increase of ``f_ms`` from the first to the last sample."""
        return self.samples[-1].f_ms - self.samples[0].f_ms

    @property
    def passed(self) -> bool:
        """Whether the scan is monotone and grows by at least ``min_growth``."""
        return self.is_monotone and self.growth >= self.min_growth
