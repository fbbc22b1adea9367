# Copyright 2026 The bigonlab Authors
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

"""Geodesic bigons, width statistics and Van Kampen area in Cayley graphs."""

import json
from fractions import Fraction

from ._core import (
    Ball,
    area,
    constants,
    free_reduce,
    normal_form,
    preset_text,
    run_cli,
    small_cancellation_ratio,
)

__all__ = [
    "Ball",
    "area",
    "constants",
    "free_reduce",
    "normal_form",
    "preset_text",
    "run",
    "run_cli",
    "small_cancellation_ratio",
    "to_fraction",
]


def to_fraction(text):
    """Parse a "num/den" string from a report into a Fraction."""
    return Fraction(text)


def run(*args):
    """Run a CLI subcommand and return (exit_code, report dict or None)."""
    code, out, _ = run_cli([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None)
