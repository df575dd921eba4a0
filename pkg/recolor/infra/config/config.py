from dataclasses import dataclass

from .base_config import BaseConfig
from .settings import *


@dataclass
class RunConfig(BaseConfig, RunSettings):
    pass


@dataclass
class RecolorConfig(
    RunSettings,
    OracleSettings,
    SweepSettings,
    BaseConfig,
):
    pass
