"""
CacheRecord model describing one cached count.
CacheRecordParser class that parses one JSON line into a CacheRecord.
ResultCacheClient class for reading and appending counts in a JSON-lines file.
"""
import json
import logging
import os
from pathlib import Path
from threading import Lock
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_serializer, field_validator

from src.models.validators import Family, Method

CACHE_FILE_NAME = "counts.jsonl"
CACHE_VERSION = 1

Key = Tuple[str, int, int, int, str]


class CacheRecord(BaseModel):
    """
    One cached count. The value is written as a decimal string because counts
    exceed 64 bits.
    """

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int
    b: int
    k: int
    method: Method
    value: int
    version: int = CACHE_VERSION

    @field_validator("value", mode="before")
    @classmethod
    def _read_decimal(cls, value):
        if isinstance(value, str):
            return int(value)
        return value

    @field_serializer("value")
    def _write_decimal(self, value: int) -> str:
        return str(value)

    @property
    def key(self) -> Key:
        return self.family.value, self.n, self.b, self.k, self.method.value


class CacheRecordParser:
    """
    A class that parses a cache line into a CacheRecord.

    Attributes:
        record (Optional[CacheRecord]): The parsed record, or None when the
            line is malformed or written by another cache version.
    """

    def __init__(self, line: str):
        self.record = self.__parse_line(line)

    @staticmethod
    def __parse_line(line: str) -> Optional[CacheRecord]:
        try:
            record = CacheRecord.model_validate(json.loads(line))
        except (json.JSONDecodeError, ValidationError, ValueError) as error:
            logging.warning("Skipping malformed cache line %r: %s", line[:80], error)
            return None
        if record.version != CACHE_VERSION:
            logging.warning("Skipping cache line of version %s.", record.version)
            return None
        return record


class ResultCacheClient:
    """
    A JSON-lines cache of exact counts keyed by (family, n, b, k, method).

    Each record is appended as a single write of one line, so a reader never
    sees a partial record from this process.

    Attributes:
        path (Path): The cache file.
    """

    def __init__(self, cache_dir):
        self.__path = Path(cache_dir) / CACHE_FILE_NAME
        self.__lock = Lock()
        self.__records: Optional[Dict[Key, CacheRecord]] = None

    @property
    def path(self) -> Path:
        return self.__path

    def __load(self) -> Dict[Key, CacheRecord]:
        if self.__records is None:
            records = {}
            if self.__path.is_file():
                with open(self.__path, "r", encoding="utf-8") as handle:
                    for line in handle:
                        if not line.strip():
                            continue
                        record = CacheRecordParser(line).record
                        if record is not None:
                            records[record.key] = record
            logging.info("Loaded %s cached counts from %s.", len(records), self.__path)
            self.__records = records
        return self.__records

    def get(self, family: Family, n: int, b: int, k: int, method: Method) -> Optional[int]:
        """
        Look up a cached count.

        Returns:
            Optional[int]: The count, or None on a miss.
        """
        with self.__lock:
            record = self.__load().get((Family(family).value, n, b, k, Method(method).value))
        return None if record is None else record.value

    def put(self, family: Family, n: int, b: int, k: int, method: Method, value: int):
        """
        Append a count to the cache file.

        Args:
            family (Family): Region family.
            n (int): Side n.
            b (int): Side b.
            k (int): Hole distance.
            method (Method): The route that produced ``value``.
            value (int): The exact count.
        """
        record = CacheRecord(family=family, n=n, b=b, k=k, method=method, value=value)
        line = json.dumps(record.model_dump(mode="json"), sort_keys=True) + "\n"
        with self.__lock:
            self.__path.parent.mkdir(parents=True, exist_ok=True)
            descriptor = os.open(self.__path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
            try:
                os.write(descriptor, line.encode("utf-8"))
            finally:
                os.close(descriptor)
            self.__load()[record.key] = record
