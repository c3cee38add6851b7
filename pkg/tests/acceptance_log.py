"""Shared record of acceptance outcomes, printed by the terminal summary hook."""

RESULTS = {}


def record(number, title, ok, detail=""):
    RESULTS[number] = (title, ok, detail)
    line = format_line(number)
    print(line)
    return line


def format_line(number):
    title, ok, detail = RESULTS[number]
    status = "PASS" if ok else "FAIL"
    return f"criterion {number:>2} {status}: {title}" + (f" ({detail})" if detail else "")
