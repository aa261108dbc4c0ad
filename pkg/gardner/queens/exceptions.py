# Copyright 2026 Google LLC
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


class PlacementError(Exception):
    pass


class PlacementFormatError(Exception):
    pass


class UnsupportedBoardError(Exception):
    pass


class ThreeInLineError(Exception):
    pass


class SearchBudgetExceeded(Exception):
    pass


class CnfInputError(Exception):
    pass


class CnfFormatError(Exception):
    pass


class ModelDecodeError(Exception):
    pass


class FactorError(Exception):
    pass


class CaseOneError(Exception):
    pass


class CaseTwoError(Exception):
    pass


class ConstructionError(Exception):
    pass
