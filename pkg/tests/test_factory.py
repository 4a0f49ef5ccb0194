import pytest

import factory
from bench import MatrixBench
from core import config
from paraxial import ParaxialBench


def test_bench_models():
    assert factory.BENCH_MODELS == ("matrix", "numeric", "paraxial")
    assert isinstance(factory.bench("matrix"), MatrixBench)
    assert isinstance(factory.bench("numeric"), MatrixBench)
    assert isinstance(factory.bench("paraxial"), ParaxialBench)


def test_bench_names_are_case_insensitive():
    assert factory.bench("PARAXIAL") is factory.bench("paraxial")


def test_default_bench_follows_configuration():
    assert factory.bench() is factory.bench(config.BENCH_MODEL)


def test_unsupported_bench_model():
    with pytest.raises(ValueError, match="Unsupported bench model: optical-table"):
        factory.bench("optical-table")
