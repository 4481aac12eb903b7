import argparse
import logging

from diwire import Container

from singular_ldg.core.experiment.dtos.run_config import RunConfig
from singular_ldg.core.experiment.services.run_config_parser import RunConfigParserService


def load_run_config(*, args: argparse.Namespace, container: Container) -> RunConfig:
    """Parse ``--config`` and apply ``--seed`` and the configured log level.

    An explicit ``--log-level`` wins over the configuration file.

    Returns:
        The run configuration.
    """
    config = container.resolve(RunConfigParserService).parse_config(path=args.config)
    if args.seed is not None:
        solver = config.solver.model_copy(update={"seed": args.seed})
        config = config.model_copy(update={"solver": solver})

    if config.log_level is not None and args.log_level is None:
        logging.getLogger().setLevel(config.log_level)

    return config
