"""HTTP adapters for external property providers.

Two remote roles exist: an Antoine source (parameter lookup by SMILES) and
an activity model (ln gamma over a requested composition grid).  A remote
that cannot be reached degrades gracefully: the source reports
RemoteUnavailable and the registry walks on to the next provider.  A remote
that answers with data violating the model invariants is a different story;
its output is rejected with ContractViolation, never repaired.
"""

from __future__ import annotations

import math

import httpx

from ..antoine import AntoineParameterSet, PRESSURE_UNITS
from ..errors import ContractViolation, RemoteUnavailable

TIMEOUT_S = 5.0
ENDPOINT_TOL = 1.0e-10


def _post(client, url: str, payload: dict):
    try:
        if client is None:
            with httpx.Client(timeout=TIMEOUT_S) as c:
                response = c.post(url, json=payload)
        else:
            response = client.post(url, json=payload)
    except httpx.HTTPError as exc:
        raise RemoteUnavailable(f"{url}: {exc}") from exc
    if response.status_code != 200:
        raise RemoteUnavailable(f"{url}: HTTP {response.status_code}")
    try:
        return response.json()
    except ValueError as exc:
        raise ContractViolation(f"{url}: response is not JSON") from exc


def _finite_float(value, what: str, url: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ContractViolation(f"{url}: {what} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ContractViolation(f"{url}: {what} must be finite, got {v!r}")
    return v


class AntoineAdapterSource:
    """Remote Antoine table speaking the JSON lookup contract.

    Request:  {"smiles": ["CCO"]}
    Response: {"parameters": [null or {"A","B","C","t_min_K","t_max_K","p_unit"}]}
    aligned with the request list.
    """

    def __init__(self, url: str, client=None):
        self.url = url
        self._client = client
        self._cache: dict[str, AntoineParameterSet | None] = {}

    def resolve(self, canonical: str) -> AntoineParameterSet | None:
        if canonical in self._cache:
            return self._cache[canonical]
        data = _post(self._client, self.url, {"smiles": [canonical]})
        if not isinstance(data, dict) or "parameters" not in data:
            raise ContractViolation(f"{self.url}: missing 'parameters' field")
        plist = data["parameters"]
        if not isinstance(plist, list) or len(plist) != 1:
            raise ContractViolation(
                f"{self.url}: 'parameters' must be a list aligned with the request"
            )
        entry = plist[0]
        if entry is None:
            self._cache[canonical] = None
            return None
        if not isinstance(entry, dict):
            raise ContractViolation(f"{self.url}: parameter entry must be an object")
        unit = entry.get("p_unit")
        if unit not in PRESSURE_UNITS:
            raise ContractViolation(f"{self.url}: unknown pressure unit {unit!r}")
        try:
            params = AntoineParameterSet.from_declared(
                _finite_float(entry.get("A"), "A", self.url),
                _finite_float(entry.get("B"), "B", self.url),
                _finite_float(entry.get("C"), "C", self.url),
                _finite_float(entry.get("t_min_K"), "t_min_K", self.url),
                _finite_float(entry.get("t_max_K"), "t_max_K", self.url),
                unit,
            )
        except ValueError as exc:
            raise ContractViolation(f"{self.url}: {exc}") from exc
        self._cache[canonical] = params
        return params


class ActivityAdapterModel:
    """Remote activity model for one binary pair.

    Request:  {"smiles": [s1, s2], "T_K": 350.0, "x1_grid": [0.0, ...]}
    Response: {"ln_gamma1": [...], "ln_gamma2": [...]} positionally aligned
    with the requested grid.  Responses are cached per (T, grid) so repeated
    evaluations within a session are deterministic even against a flaky
    remote.
    """

    def __init__(self, name: str, url: str, smiles: tuple[str, str], client=None):
        self.name = name
        self.url = url
        self.smiles = smiles
        self._client = client
        self._cache: dict[tuple[float, tuple[float, ...]], tuple[tuple[float, ...], tuple[float, ...]]] = {}

    def curve_arrays(self, T: float, grid: tuple[float, ...]):
        key = (T, tuple(grid))
        if key in self._cache:
            return self._cache[key]
        payload = {"smiles": list(self.smiles), "T_K": T, "x1_grid": list(grid)}
        data = _post(self._client, self.url, payload)
        if not isinstance(data, dict):
            raise ContractViolation(f"{self.url}: response must be an object")
        arrays = []
        for field in ("ln_gamma1", "ln_gamma2"):
            arr = data.get(field)
            if not isinstance(arr, list) or len(arr) != len(grid):
                raise ContractViolation(
                    f"{self.url}: {field} must align with the requested grid "
                    f"({len(grid)} points)"
                )
            arrays.append(
                tuple(_finite_float(v, f"{field}[{i}]", self.url) for i, v in enumerate(arr))
            )
        lg1, lg2 = arrays
        for i, x in enumerate(grid):
            if x == 1.0 and abs(lg1[i]) > ENDPOINT_TOL:
                raise ContractViolation(
                    f"{self.url}: ln_gamma1 must vanish at x1 = 1, got {lg1[i]!r}"
                )
            if x == 0.0 and abs(lg2[i]) > ENDPOINT_TOL:
                raise ContractViolation(
                    f"{self.url}: ln_gamma2 must vanish at x1 = 0, got {lg2[i]!r}"
                )
        self._cache[key] = (lg1, lg2)
        return lg1, lg2

    def ln_gamma(self, x1: float, T: float) -> tuple[float, float]:
        if not 0.0 <= x1 <= 1.0:
            raise ValueError(f"x1 must lie in [0, 1], got {x1}")
        lg1, lg2 = self.curve_arrays(T, (x1,))
        return lg1[0], lg2[0]
