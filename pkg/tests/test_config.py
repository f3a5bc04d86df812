"""
测试 config 模块：输出与扫描配置
"""
from __future__ import annotations

import logging

import pytest

from rand_cf.config import DEFAULT_CHUNK_SIZE, ENV_NO_COLOR, ENV_WORKERS, OutputOptions, ScanOptions


class TestOutputOptions:
    """测试输出配置"""

    def test_defaults(self):
        """测试默认不着色"""
        assert OutputOptions().to_dict() == {"color": False, "json": False}

    def test_dict_round_trip(self):
        """测试 to_dict / from_dict"""
        options = OutputOptions(color=True, json=True)
        assert OutputOptions.from_dict(options.to_dict()) == options

    def test_color_only_on_tty(self):
        """测试非终端不着色"""
        assert OutputOptions.from_env(is_tty=True, env={}).color is True
        assert OutputOptions.from_env(is_tty=False, env={}).color is False

    def test_no_color_env(self):
        """测试 RAND_CF_NO_COLOR 关闭着色"""
        assert OutputOptions.from_env(is_tty=True, env={ENV_NO_COLOR: "1"}).color is False
        assert OutputOptions.from_env(is_tty=True, env={ENV_NO_COLOR: ""}).color is True

    def test_reads_process_environment(self, monkeypatch):
        """测试默认读取 os.environ"""
        monkeypatch.setenv(ENV_NO_COLOR, "1")
        assert OutputOptions.from_env(is_tty=True).color is False

    def test_json_flag(self):
        """测试 json 开关随配置传递，不受着色影响"""
        options = OutputOptions.from_env(is_tty=True, env={ENV_NO_COLOR: "1"}, json=True)
        assert (options.color, options.json) == (False, True)
        assert OutputOptions.from_env(is_tty=False, env={}).json is False


class TestScanOptions:
    """测试扫描配置"""

    def test_defaults(self):
        """测试默认值"""
        options = ScanOptions()
        assert options.to_dict() == {"workers": 1, "chunk_size": DEFAULT_CHUNK_SIZE, "wide": False}

    def test_dict_round_trip(self):
        """测试 to_dict / from_dict"""
        options = ScanOptions(workers=4, chunk_size=10, wide=True)
        assert ScanOptions.from_dict(options.to_dict()) == options

    @pytest.mark.parametrize("kwargs", [{"workers": 0}, {"chunk_size": 0}])
    def test_rejects_non_positive(self, kwargs):
        """测试非正数"""
        with pytest.raises(ValueError):
            ScanOptions(**kwargs)

    def test_workers_from_env(self):
        """测试 RAND_CF_WORKERS"""
        assert ScanOptions.from_env({ENV_WORKERS: "3"}).workers == 3
        assert ScanOptions.from_env({}).workers == 1
        assert ScanOptions.from_env({ENV_WORKERS: "0"}).workers == 1

    def test_invalid_workers_warns(self, caplog):
        """测试无效值记录警告并回退"""
        caplog.set_level(logging.WARNING, logger="rand_cf.config")
        assert ScanOptions.from_env({ENV_WORKERS: "many"}).workers == 1
        assert any(ENV_WORKERS in record.getMessage() for record in caplog.records)
