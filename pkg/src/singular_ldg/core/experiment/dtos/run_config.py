from pydantic import Field

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.experiment.constraints.log_level import LogLevel
from singular_ldg.core.experiment.dtos.output_paths import OutputPaths
from singular_ldg.core.field.constraints.interior_init import InteriorInit
from singular_ldg.core.field.dtos.boundary_spec import BoundarySpec
from singular_ldg.core.field.dtos.grid_spec import GridSpec
from singular_ldg.core.minimizer.dtos.solver_options import SolverOptions
from singular_ldg.foundation.dto import BaseDTO


class RunConfig(BaseDTO):
    """Everything needed to build, relax and store one field.

    Only ``grid`` is required; every other section falls back to its defaults.
    """

    grid: GridSpec
    boundary: BoundarySpec = Field(default_factory=BoundarySpec)
    bulk: BulkParams = Field(default_factory=BulkParams)
    elastic: ElasticConstants = Field(default_factory=ElasticConstants)
    solver: SolverOptions = Field(default_factory=SolverOptions)
    interior_init: InteriorInit = InteriorInit.BOUNDARY_BLEND
    output: OutputPaths = Field(default_factory=OutputPaths)
    log_level: LogLevel | None = None
