# Copyright (c) 2026, zerogin developers. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import pytest

from zerogin.algebra.monomials import MonomialOrder
from zerogin.utils.config import BaseConfig, YamlConfigFile, dataclass2dict


@dataclass
class SweepConfig(BaseConfig):
    characteristic: int
    label: str
    order: MonomialOrder = MonomialOrder.DEGREVLEX
    trials: int = 2
    modular: bool = False
    window: Optional[Tuple[int, int]] = None
    output_path: Optional[Path] = None


@dataclass
class CorpusConfig(BaseConfig):
    size: int
    characteristics: List[int]


def test_config_from_dict():
    config = SweepConfig.from_dict({"characteristic": 3, "label": "sextics"})
    assert config.order == MonomialOrder.DEGREVLEX
    config = SweepConfig.from_dict({"characteristic": 3, "label": "sextics", "order": "lex", "window": [0, 4]})
    assert config.order == MonomialOrder.LEX
    assert config.window == (0, 4)
    with pytest.raises(TypeError):
        SweepConfig.from_dict({"characteristic": 3})
    with pytest.raises(ValueError):
        SweepConfig.from_dict({"characteristic": 3, "label": "sextics", "seeds": [1]})
    with pytest.raises(ValueError):
        SweepConfig.from_dict({"characteristic": "three", "label": "sextics"})


def test_dataclass2dict_flattens_enums_paths_and_tuples():
    config = SweepConfig(characteristic=2, label="q", order=MonomialOrder.LEX, window=(1, 3), output_path=Path("out"))
    assert dataclass2dict(config) == {
        "characteristic": 2,
        "label": "q",
        "order": "lex",
        "trials": 2,
        "modular": False,
        "window": [1, 3],
        "output_path": "out",
    }


def test_config_save_and_load(tmp_path):
    config = SweepConfig(characteristic=5, label="cubics", window=(-2, 6), output_path=Path("reports"))
    config_path = tmp_path / "configs" / "sweep.yaml"
    with YamlConfigFile(config_path) as config_file:
        config_file.save_config(config)

    with YamlConfigFile(config_path) as config_file:
        assert config_file.load(SweepConfig) == config


def test_config_save_and_load_multiple_configs(tmp_path):
    sweep = SweepConfig(characteristic=0, label="quadrics")
    corpus = CorpusConfig(size=32, characteristics=[0, 2, 3])
    config_path = tmp_path / "config.yaml"
    with YamlConfigFile(config_path) as config_file:
        config_file.save_config(sweep)
    with YamlConfigFile(config_path) as config_file:
        config_file.save_config(corpus)
        assert set(config_file.config_dict) >= {"label", "size"}

    with YamlConfigFile(config_path) as config_file:
        data = config_file.config_dict
    assert SweepConfig.from_dict({k: data[k] for k in data if k in SweepConfig.__dataclass_fields__}) == sweep
    assert CorpusConfig.from_dict({"size": data["size"], "characteristics": data["characteristics"]}) == corpus


def test_missing_file_reads_as_empty(tmp_path):
    with YamlConfigFile(tmp_path / "absent.yaml") as config_file:
        assert config_file.config_dict == {}


def test_non_mapping_file_is_rejected(tmp_path):
    config_path = tmp_path / "list.yaml"
    config_path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        YamlConfigFile(config_path)
