"""Record service payloads for the frontend test suite.

Every fixture under tests/fixtures/ is a byte-for-byte response captured
from the property service over its HTTP interface. Re-run this script
after changing the service to refresh them:

    python3 scripts/capture_fixtures.py
"""

from pathlib import Path

from fastapi.testclient import TestClient
from vlekit.api.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

HEXANE = "CCCCCC"
ETHANOL = "CCO"
PHENOL = "Oc1ccccc1"
AMINE = "CCCc1ccccc1N"


def main() -> None:
    client = TestClient(create_app())
    FIXTURES.mkdir(parents=True, exist_ok=True)

    def save(name: str, response) -> None:
        (FIXTURES / name).write_bytes(response.content)
        print(f"{name}: {response.status_code}, {len(response.content)} bytes")

    save("models.json", client.get("/v1/models"))
    save(
        "validate.json",
        client.post("/v1/validate-smiles", json={"smiles": [HEXANE, "OCC"]}),
    )
    save(
        "parse_error.json",
        client.post("/v1/validate-smiles", json={"smiles": ["CC(C"]}),
    )
    save(
        "psat.json",
        client.post("/v1/vapor-pressure", json={"smiles": ETHANOL, "T_K": 350.0}),
    )
    save(
        "tboil.json",
        client.post("/v1/boiling-temperature", json={"smiles": "O", "p_Pa": 101325.0}),
    )

    vle_iso = {"smiles": [HEXANE, ETHANOL], "model": "nrtl-demo", "T_K": 400.0}
    save("vle_isothermal.json", client.post("/v1/vle", json=vle_iso))
    save(
        "vle_isothermal.csv",
        client.post("/v1/vle", json=vle_iso, headers={"Accept": "text/csv"}),
    )
    activity = {"smiles": [HEXANE, ETHANOL], "model": "nrtl-demo", "T_K": 400.0}
    save("activity_400.json", client.post("/v1/activity", json=activity))

    vle_bar = {"smiles": [PHENOL, AMINE], "model": "unifac", "p_Pa": 60000.0}
    save("vle_isobaric.json", client.post("/v1/vle", json=vle_bar))
    save(
        "vle_isobaric.csv",
        client.post("/v1/vle", json=vle_bar, headers={"Accept": "text/csv"}),
    )
    vle_bar_az = {"smiles": [HEXANE, ETHANOL], "model": "nrtl-demo", "p_Pa": 101325.0}
    save("vle_isobaric_azeotropic.json", client.post("/v1/vle", json=vle_bar_az))

    fit = {"smiles": [HEXANE, ETHANOL], "model": "unifac", "variant": 3, "T_K": 340.0}
    save("fit.json", client.post("/v1/fit-nrtl", json=fit))
    save(
        "fit.csv",
        client.post("/v1/fit-nrtl", json=fit, headers={"Accept": "text/csv"}),
    )


if __name__ == "__main__":
    main()
