import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if (_data / "tiles").is_dir():
    os.environ.setdefault("LAMBDA_LAB_DATA", str(_data))

from ._core import *  # noqa: E402,F401,F403
from ._core import Error, Infeasible, ResourceLimit  # noqa: E402,F401
