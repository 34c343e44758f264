# Copyright 2025 The liar-game-lab Authors
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

import pytest

import run_acceptance


@pytest.mark.parametrize("name", list(run_acceptance.CRITERIA))
def test_acceptance_criterion(name: str) -> None:
    """Each criterion reports an empty string when it holds."""
    problem = run_acceptance.CRITERIA[name]()
    assert problem == "", f"{name}: {problem[:500]}"
