"""Collects one PASS/FAIL line per acceptance criterion for the run summary."""
LINES = []


def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    LINES.append(line)
    print(line)
    return ok


def sort_key(line: str) -> int:
    return int(line.split("criterion")[1].split(":")[0])
