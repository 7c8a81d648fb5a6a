from dataclasses import dataclass, field
from pathlib import Path

from omegaconf import OmegaConf

_config_path = Path("~/.config/dualtrees/").expanduser()

_config_name = Path("dualtrees_config.yml")

_config_file = _config_path / _config_name


# Define structure with dataclasses
@dataclass
class LogConsole:

    on: bool = True
    level: str = "WARNING"


@dataclass
class LogFile:

    on: bool = True
    level: str = "INFO"


@dataclass
class Logging:

    debug: bool = False
    console: LogConsole = field(default_factory=LogConsole)
    file: LogFile = field(default_factory=LogFile)


@dataclass
class MultiProcess:

    n_bfs_workers: int = 6
    n_sample_workers: int = 6


@dataclass
class Shelling:

    exact_cap: int = 12
    exact_state_limit: int = 2_000_000


@dataclass
class Verification:

    samples: int = 1000
    seed: int = 7
    exhaustive_edge_limit: int = 14
    short_tree_roots: int = 4


@dataclass
class Export:

    svg_face_alpha: float = 0.35
    svg_figsize: float = 8.0


@dataclass
class DualtreesConfig:

    logging: Logging = field(default_factory=Logging)
    multiprocess: MultiProcess = field(default_factory=MultiProcess)
    shelling: Shelling = field(default_factory=Shelling)
    verification: Verification = field(default_factory=Verification)
    export: Export = field(default_factory=Export)


# Read the default config
dualtrees_config: DualtreesConfig = OmegaConf.structured(DualtreesConfig)

# Merge with local config
if _config_file.is_file():

    _local_config = OmegaConf.load(_config_file)

    dualtrees_config: DualtreesConfig = OmegaConf.merge(
        dualtrees_config, _local_config
    )

# Write defaults
else:

    try:

        # Make directory if needed
        _config_path.mkdir(parents=True, exist_ok=True)

        with _config_file.open("w") as f:

            OmegaConf.save(config=dualtrees_config, f=f.name)

    except OSError:

        # read-only home: run on the defaults
        pass


__all__ = ["dualtrees_config"]
