import pytest

from singular_ldg.core.bulk.entities.sphere_quadrature import SphereQuadrature
from singular_ldg.core.bulk.factories.sphere_quadrature import (
    QuadratureSettings,
    SphereQuadratureFactory,
)
from singular_ldg.core.bulk.services.maier_saupe_potential import MaierSaupePotentialService
from singular_ldg.core.bulk.services.moment_inversion import (
    MomentInversionService,
    MomentInversionSettings,
)
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.core.elastic.services.coercivity_audit import CoercivityAuditService
from singular_ldg.core.elastic.services.elastic_invariants import ElasticInvariantsService
from singular_ldg.core.elastic.services.frame_invariance import FrameInvarianceService
from singular_ldg.core.energy.services.energy_assembler import EnergyAssemblerService
from singular_ldg.core.energy.services.equilibrium_residual import EquilibriumResidualService
from singular_ldg.core.field.services.bilinear_element import BilinearElementService
from singular_ldg.core.field.services.field_builder import FieldBuilderService
from singular_ldg.core.field.services.field_csv import FieldCsvService
from singular_ldg.core.minimizer.services.armijo_descent import ArmijoDescentService
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.verification.services.blowup_scan import BlowupScanService
from singular_ldg.core.verification.services.convexity_probe import ConvexityProbeService
from singular_ldg.core.verification.services.margin_profile import MarginProfileService
from singular_ldg.infrastructure.parallel.block_executor import (
    ParallelSettings,
    ThreadPoolBlockExecutor,
)


@pytest.fixture()
def algebra() -> QTensorAlgebraService:
    return QTensorAlgebraService()


@pytest.fixture()
def quadrature_factory() -> SphereQuadratureFactory:
    return SphereQuadratureFactory(_settings=QuadratureSettings())


@pytest.fixture()
def quadrature(quadrature_factory: SphereQuadratureFactory) -> SphereQuadrature:
    return quadrature_factory(order=32)


@pytest.fixture()
def inversion() -> MomentInversionService:
    return MomentInversionService(_settings=MomentInversionSettings())


@pytest.fixture()
def potential(
    algebra: QTensorAlgebraService,
    inversion: MomentInversionService,
    quadrature_factory: SphereQuadratureFactory,
) -> MaierSaupePotentialService:
    return MaierSaupePotentialService(
        _algebra=algebra,
        _inversion=inversion,
        _quadrature_factory=quadrature_factory,
    )


@pytest.fixture()
def profile_service(
    algebra: QTensorAlgebraService,
    inversion: MomentInversionService,
    quadrature_factory: SphereQuadratureFactory,
) -> UniaxialProfileService:
    return UniaxialProfileService(
        _algebra=algebra,
        _inversion=inversion,
        _quadrature_factory=quadrature_factory,
    )


@pytest.fixture()
def invariants(algebra: QTensorAlgebraService) -> ElasticInvariantsService:
    return ElasticInvariantsService(_algebra=algebra)


@pytest.fixture()
def coercivity_audit(
    algebra: QTensorAlgebraService,
    invariants: ElasticInvariantsService,
) -> CoercivityAuditService:
    return CoercivityAuditService(_algebra=algebra, _invariants=invariants)


@pytest.fixture()
def frame_invariance(
    algebra: QTensorAlgebraService,
    invariants: ElasticInvariantsService,
) -> FrameInvarianceService:
    return FrameInvarianceService(_algebra=algebra, _invariants=invariants)


@pytest.fixture()
def bilinear_element() -> BilinearElementService:
    return BilinearElementService()


@pytest.fixture()
def field_builder(algebra: QTensorAlgebraService) -> FieldBuilderService:
    return FieldBuilderService(_algebra=algebra)


@pytest.fixture()
def field_csv() -> FieldCsvService:
    return FieldCsvService()


@pytest.fixture()
def executor() -> ThreadPoolBlockExecutor:
    return ThreadPoolBlockExecutor(_settings=ParallelSettings(threads=1, block_size=16))


@pytest.fixture()
def assembler(
    bilinear_element: BilinearElementService,
    invariants: ElasticInvariantsService,
    potential: MaierSaupePotentialService,
    quadrature_factory: SphereQuadratureFactory,
    executor: ThreadPoolBlockExecutor,
) -> EnergyAssemblerService:
    return EnergyAssemblerService(
        _elements=bilinear_element,
        _invariants=invariants,
        _potential=potential,
        _quadrature_factory=quadrature_factory,
        _executor=executor,
    )


@pytest.fixture()
def residual_service(
    assembler: EnergyAssemblerService,
    invariants: ElasticInvariantsService,
    potential: MaierSaupePotentialService,
    quadrature_factory: SphereQuadratureFactory,
) -> EquilibriumResidualService:
    return EquilibriumResidualService(
        _assembler=assembler,
        _invariants=invariants,
        _potential=potential,
        _quadrature_factory=quadrature_factory,
    )


@pytest.fixture()
def descent(assembler: EnergyAssemblerService) -> ArmijoDescentService:
    return ArmijoDescentService(_assembler=assembler)


@pytest.fixture()
def margin_profile_service(algebra: QTensorAlgebraService) -> MarginProfileService:
    return MarginProfileService(_algebra=algebra)


@pytest.fixture()
def convexity_probe_service(
    algebra: QTensorAlgebraService,
    potential: MaierSaupePotentialService,
    quadrature_factory: SphereQuadratureFactory,
) -> ConvexityProbeService:
    return ConvexityProbeService(
        _algebra=algebra,
        _potential=potential,
        _quadrature_factory=quadrature_factory,
    )


@pytest.fixture()
def blowup_scan_service(profile_service: UniaxialProfileService) -> BlowupScanService:
    return BlowupScanService(_profile_service=profile_service)
