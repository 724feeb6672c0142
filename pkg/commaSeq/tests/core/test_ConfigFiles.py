# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import json
from pathlib import Path
import pytest
from commaSeq.core.ConfigFiles import ConfigFileLoader, ENV_CACHE_DIR, ENV_OFFLINE
from commaSeq.core.Exceptions import ConfigError

def test_defaults():
    cfg = ConfigFileLoader.defaults()
    assert cfg == {"cacheDir": None, "offline": False, "format": "plain", "ratioPoints": 4096,
                   "ancestorBudget": 10000000, "workers": 0, "timeout": 30}

def test_load(tmp_path):
    f = tmp_path / "commaSeq.json"
    f.write_text(json.dumps({"format": "json", "workers": 4}), encoding="utf-8")
    cfg = ConfigFileLoader.load(f)
    assert cfg["format"] == "json"
    assert cfg["workers"] == 4
    assert cfg["ratioPoints"] == 4096
    assert ConfigFileLoader.load(str(f)) == cfg

def test_loadErrors(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"colour": "red"}), encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigFileLoader.load(f)
    f.write_text(json.dumps({"format": "xml"}), encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigFileLoader.load(f)
    f.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigFileLoader.load(f)
    with pytest.raises(ConfigError):
        ConfigFileLoader.load(tmp_path / "missing.json")

def test_resolvePrecedence(tmp_path):
    f = tmp_path / "commaSeq.json"
    f.write_text(json.dumps({"cacheDir": "/from/file", "offline": False, "format": "csv"}), encoding="utf-8")
    cfg = ConfigFileLoader.resolve(f, environ={})
    assert (cfg["cacheDir"], cfg["offline"], cfg["format"]) == ("/from/file", False, "csv")
    env = {ENV_CACHE_DIR: "/from/env", ENV_OFFLINE: "yes"}
    cfg = ConfigFileLoader.resolve(f, environ=env)
    assert (cfg["cacheDir"], cfg["offline"]) == ("/from/env", True)
    cfg = ConfigFileLoader.resolve(f, environ=env, overrides={"cacheDir": "/from/flag", "format": None})
    assert (cfg["cacheDir"], cfg["format"]) == ("/from/flag", "csv")
    cfg = ConfigFileLoader.resolve(environ={ENV_OFFLINE: "0"})
    assert cfg["offline"] is False
    assert cfg["cacheDir"] == str(Path.home() / ".cache" / "commaSeq")
    with pytest.raises(ConfigError):
        ConfigFileLoader.resolve(environ={}, overrides={"workers": -1})
