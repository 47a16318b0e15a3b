"""Collects one PASS/FAIL line per acceptance criterion."""

RESULTS = {}


def line(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()


def record(criterion: int, ok: bool, detail: str = ""):
    RESULTS[criterion] = (ok, detail)
    print(line(criterion))
