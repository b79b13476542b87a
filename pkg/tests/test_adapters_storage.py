import io
import os

import numpy as np
import pandas as pd

from adapters import LocalStorageAdapter, table_to_csv
from env_loader import load_dotenv_if_present


def test_table_round_trip_keeps_full_precision(tmp_path):
    storage = LocalStorageAdapter(tmp_path)
    frame = pd.DataFrame({"n": [0, 1], "omega": [0.0676543210987654321, 1.0 / 3.0]})
    location = storage.write_table(frame, "out/levels.csv", ["schema=1", "kappa=0.75"])
    assert location == str(tmp_path / "out" / "levels.csv")

    text = (tmp_path / "out" / "levels.csv").read_text(encoding="utf-8")
    assert text == table_to_csv(frame, ["schema=1", "kappa=0.75"])
    assert text.splitlines()[:3] == ["# schema=1", "# kappa=0.75", "n,omega"]
    back = pd.read_csv(io.StringIO(text), comment="#")
    np.testing.assert_array_equal(back["omega"].to_numpy(), frame["omega"].to_numpy())


def test_dotenv_does_not_override(tmp_path, monkeypatch):
    env_file = tmp_path / ".env"
    env_file.write_text(
        "# comment\nMINLEN_THREADS=4\nMINLEN_LOG_LEVEL='DEBUG'\nnot a pair\n", encoding="utf-8"
    )
    monkeypatch.setenv("MINLEN_THREADS", "2")
    monkeypatch.setenv("MINLEN_LOG_LEVEL", "unset")
    monkeypatch.delenv("MINLEN_LOG_LEVEL")
    loaded = load_dotenv_if_present(env_file)
    assert loaded == ["MINLEN_LOG_LEVEL"]
    assert os.environ["MINLEN_THREADS"] == "2"
    assert os.environ["MINLEN_LOG_LEVEL"] == "DEBUG"
    assert load_dotenv_if_present(tmp_path / "absent.env") == []
