"""
Configuration, run settings and the worker pool.
"""

from argparse import Namespace
from pathlib import Path

import pytest
from pydantic import ValidationError

from skewblocks.cli.run_config import RunConfig
from skewblocks.core.config import SkewBlocksConfig, config
from skewblocks.core.exceptions import ConfigurationError
from skewblocks.core.worker_pool import WorkerPool


class TestSkewBlocksConfig:
    def test_defaults_validate(self):
        config.validate()

    def test_resolve_workers(self):
        assert config.resolve_workers(3) == 3
        assert config.resolve_workers("2") == 2
        assert config.resolve_workers("auto") >= 1

    @pytest.mark.parametrize("threads", [0, -1, "x"])
    def test_bad_workers(self, threads):
        with pytest.raises(ConfigurationError):
            config.resolve_workers(threads)

    def test_validate_catches_bad_ceiling(self, monkeypatch):
        monkeypatch.setattr(SkewBlocksConfig, "N_CEILING", 0)
        with pytest.raises(ConfigurationError, match="N_CEILING"):
            config.validate()

    def test_to_dict_lists_settings(self):
        settings = config.to_dict()
        assert "N_CEILING" in settings
        assert "WILF_DEPTH" in settings


class TestRunConfig:
    def test_defaults_follow_config(self, monkeypatch):
        monkeypatch.setattr(SkewBlocksConfig, "N_CEILING", 9)
        run = RunConfig()
        assert run.n_ceiling == 9
        assert run.output_format == "text"
        assert run.output_path is None

    def test_threads(self):
        assert RunConfig(threads="auto").threads == "auto"
        assert RunConfig(threads="4").threads == 4
        assert RunConfig(threads=2).workers == 2

    @pytest.mark.parametrize("threads", [0, "none"])
    def test_bad_threads(self, threads):
        with pytest.raises(ValidationError):
            RunConfig(threads=threads)

    def test_bad_format(self):
        with pytest.raises(ValidationError):
            RunConfig(output_format="xml")

    def test_verbose_means_debug(self):
        assert RunConfig(verbose=True).log_level == "DEBUG"

    def test_from_args_skips_unset_flags(self):
        args = Namespace(ceiling=None, threads="1", format="json", output="out.json", verbose=None)
        run = RunConfig.from_args(args)
        assert run.n_ceiling == config.N_CEILING
        assert run.threads == 1
        assert run.output_format == "json"
        assert run.output_path == Path("out.json")
        assert run.verbose is False

    def test_frozen(self):
        run = RunConfig()
        with pytest.raises(ValidationError):
            run.verbose = True


class TestWorkerPool:
    def test_inline_results_in_submission_order(self):
        with WorkerPool(1) as pool:
            for k in range(5):
                pool.add_task(pow, 2, k, name=f"2^{k}")
            assert pool.gather() == [1, 2, 4, 8, 16]

    def test_process_results_in_submission_order(self):
        with WorkerPool(2) as pool:
            for k in range(8):
                pool.add_task(pow, 3, k, name=f"3^{k}")
            assert pool.gather() == [3 ** k for k in range(8)]

    def test_failure_is_raised(self):
        with WorkerPool(1) as pool:
            pool.add_task(int, "not a number", name="bad")
            with pytest.raises(ValueError):
                pool.gather()

    def test_falls_back_inline_when_pool_unavailable(self, monkeypatch, caplog):
        import skewblocks.core.worker_pool as worker_pool

        def unavailable(*args, **kwargs):
            raise OSError("no semaphores")

        monkeypatch.setattr(worker_pool, "ProcessPoolExecutor", unavailable)
        with caplog.at_level("WARNING", logger="skewblocks.core.worker_pool"):
            with WorkerPool(4) as pool:
                for k in range(4):
                    pool.add_task(pow, 2, k, name=f"2^{k}")
                assert pool.gather() == [1, 2, 4, 8]
        assert "Process pool unavailable" in caplog.text

    def test_enumeration_survives_missing_pool(self, monkeypatch):
        import skewblocks.core.worker_pool as worker_pool
        from skewblocks.enumeration import count_avoiders

        def unavailable(*args, **kwargs):
            raise NotImplementedError("no multiprocessing on this platform")

        monkeypatch.setattr(worker_pool, "ProcessPoolExecutor", unavailable)
        assert count_avoiders(9, "132", workers=2) == 4862
