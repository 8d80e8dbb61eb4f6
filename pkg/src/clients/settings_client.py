"""
SettingsEnvLoader class that loads runtime settings from a `.env` file and the
process environment.
"""
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

DEFAULT_MAX_FRONTIER = 24
DEFAULT_LOG_LEVEL = "ERROR"


class SettingsEnvLoader:
    """
    A class that loads environment variables from a `.env` file
    and provides getters and setters for the package settings.

    Attributes:
    -----------
    cache_dir : Optional[Path]
        Directory of the result cache, from `HOLEY_CACHE_DIR`.
        Caching is off when unset.
    log_level : str
        Logging level name, from `HOLEY_LOG_LEVEL`.
    max_frontier : int
        Widest transfer DP frontier, from `HOLEY_MAX_FRONTIER`.
    workers : Optional[int]
        Thread pool size, from `HOLEY_WORKERS`.

    Every getter returns the value set explicitly through its setter, if any,
    and otherwise reads the environment using `os.environ.get()`.
    """

    def __init__(self):
        self.__cache_dir = None
        self.__log_level = None
        self.__max_frontier = None
        self.__workers = None
        self.__load_env_variables()

    @staticmethod
    def __load_env_variables():
        """
        Loads variables from the `.env` file at the repository root, if any.
        """
        env_path = Path(__file__).resolve().parents[2] / ".env"
        if env_path.is_file():
            load_dotenv(dotenv_path=env_path, override=True)

    @property
    def cache_dir(self) -> Optional[Path]:
        if self.__cache_dir is not None:
            return self.__cache_dir
        value = os.environ.get("HOLEY_CACHE_DIR")
        return Path(value) if value else None

    @cache_dir.setter
    def cache_dir(self, value):
        self.__cache_dir = Path(value) if value is not None else None

    @property
    def log_level(self) -> str:
        if self.__log_level is not None:
            return self.__log_level
        return os.environ.get("HOLEY_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()

    @log_level.setter
    def log_level(self, value: str):
        self.__log_level = value.upper()

    @property
    def max_frontier(self) -> int:
        if self.__max_frontier is not None:
            return self.__max_frontier
        return int(os.environ.get("HOLEY_MAX_FRONTIER", DEFAULT_MAX_FRONTIER))

    @max_frontier.setter
    def max_frontier(self, value: int):
        if value < 1:
            raise ValueError("Frontier width must be positive.")
        self.__max_frontier = value

    @property
    def workers(self) -> Optional[int]:
        if self.__workers is not None:
            return self.__workers
        value = os.environ.get("HOLEY_WORKERS")
        return int(value) if value else None

    @workers.setter
    def workers(self, value: Optional[int]):
        self.__workers = value
