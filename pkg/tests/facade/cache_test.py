"""
    Tests for the JSON-lines result cache.
"""
import json
import logging

from faker import Faker

from src.clients.cache_client import CACHE_VERSION, CacheRecordParser, ResultCacheClient
from src.enumeration.closed_forms import count_holey
from src.lattice.regions import validate_region
from src.models.validators import Family, Method, RegionSpec

fake = Faker()
Faker.seed(99)


class TestResultCacheClient:
    """
    Records survive a fresh client and agree with fresh computations.
    """

    def test_put_then_get_from_a_new_client(self, tmp_path):
        value = fake.random_int(min=2**70, max=2**80)
        ResultCacheClient(tmp_path).put(Family.HOLEY, 6, 6, 4, Method.FORMULA, value)
        assert ResultCacheClient(tmp_path).get(Family.HOLEY, 6, 6, 4, Method.FORMULA) == value

    def test_miss(self, tmp_path):
        client = ResultCacheClient(tmp_path)
        assert client.get(Family.LOWER, 4, 4, 2, Method.MATRIX) is None

    def test_values_are_decimal_strings(self, tmp_path):
        client = ResultCacheClient(tmp_path)
        client.put(Family.VERTICAL, 2, 2, 2, Method.ORACLE, 1)
        record = json.loads(client.path.read_text(encoding="utf-8").splitlines()[0])
        assert record == {
            "b": 2,
            "family": "vertical",
            "k": 2,
            "method": "oracle",
            "n": 2,
            "value": "1",
            "version": CACHE_VERSION,
        }

    def test_malformed_lines_are_skipped(self, tmp_path, caplog):
        client = ResultCacheClient(tmp_path)
        client.put(Family.UPPER, 3, 3, 2, Method.FORMULA, 12)
        with open(client.path, "a", encoding="utf-8") as handle:
            handle.write("{not json\n")
            handle.write('{"family": "nowhere", "n": 1, "b": 1, "k": 0, "method": "formula", "value": "1"}\n')
        with caplog.at_level(logging.WARNING):
            fresh = ResultCacheClient(tmp_path)
            assert fresh.get(Family.UPPER, 3, 3, 2, Method.FORMULA) == 12
        assert sum("malformed cache line" in message for message in caplog.messages) == 2

    def test_other_versions_are_ignored(self):
        line = json.dumps(
            {"family": "lower", "n": 2, "b": 2, "k": 2, "method": "formula", "value": "1", "version": CACHE_VERSION + 1}
        )
        assert CacheRecordParser(line).record is None

    def test_cached_counts_equal_fresh_counts(self, tmp_path):
        client = ResultCacheClient(tmp_path)
        regions = [(Family.HOLEY, 4, 4, 2), (Family.LOWER, 5, 3, 2), (Family.VERTICAL, 3, 3, 0)]
        for family, n, b, k in regions:
            spec = validate_region(RegionSpec(family=family, n=n, b=b, k=k))
            client.put(family, n, b, k, Method.FORMULA, count_holey(spec))
        reread = ResultCacheClient(tmp_path)
        for family, n, b, k in regions:
            spec = validate_region(RegionSpec(family=family, n=n, b=b, k=k))
            assert reread.get(family, n, b, k, Method.FORMULA) == count_holey(spec)
