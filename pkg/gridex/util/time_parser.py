import re
from datetime import timedelta


class TimeParser:
    """Parses duration strings such as "90s", "1.5m" or "1h30m" into seconds."""

    UNITS = {
        "ms": "milliseconds",
        "s": "seconds",
        "m": "minutes",
        "h": "hours",
    }

    PART = r"(?P<val>\d+(\.\d+)?)(?P<unit>ms|[smh]?)"

    def __init__(self, time_amount: str) -> None:
        amount = time_amount.strip()
        if not re.fullmatch(rf"(?:{self.PART})+", amount, flags=re.I):
            raise ValueError(f"Err. - could not parse duration - {time_amount}")

        parts: dict[str, float] = {}
        for match in re.finditer(self.PART, amount, flags=re.I):
            unit = self.UNITS.get(match.group("unit").lower(), "seconds")
            parts[unit] = parts.get(unit, 0.0) + float(match.group("val"))

        self.time = float(timedelta(**parts).total_seconds())
