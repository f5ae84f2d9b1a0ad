"""Per-criterion outcomes collected while the acceptance tests run."""
TITLES = {
    1: "family signature formula vs Seifert matrix",
    2: "sigma = 2 - cr among positive 3-braids (cr <= 12)",
    3: "sigma = 1 - cr exactly for T(2,c)",
    4: "|sigma| + n + s <= cr + 1 (B3 len <= 10, 1e5 B4 samples)",
    5: "|delta sigma| <= 1 per letter deletion (B3 len <= 8)",
    6: "conjugate-to-positive vs closed-form predicates",
    7: "2-bridge family formulas vs Goeritz signature",
    8: "geography table up to 12 crossings",
    9: "property suites",
}
RESULTS: dict[int, tuple[bool, str]] = {}
NOTES: dict[int, list[str]] = {}


def note(n: int, text: str) -> None:
    NOTES.setdefault(n, []).append(text)


def record(n: int, ok: bool, detail: str = "") -> None:
    # a criterion made of several tests passes only if all of them do
    prev_ok, prev_detail = RESULTS.get(n, (True, ""))
    detail = "; ".join(x for x in (prev_detail, detail) if x)
    RESULTS[n] = (prev_ok and bool(ok), detail)


def summary_lines() -> list[str]:
    lines = []
    for n, title in TITLES.items():
        ok, detail = RESULTS.get(n, (False, "not run"))
        detail = "; ".join(x for x in [*NOTES.get(n, []), detail] if x)
        lines.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
    return lines
