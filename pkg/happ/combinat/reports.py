from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """
    Outcome of a verification. A failed report carries a witness that can be
    replayed: the shape, the tableau and the generator index involved.
    """

    check: str
    subject: str
    ok: bool = True
    checked: int = 0
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls, check, subject, checked=0, **details) -> "CheckReport":
        return cls(check=check, subject=str(subject), ok=True, checked=checked, details=details)

    @classmethod
    def failed(cls, check, subject, witness, checked=0, **details) -> "CheckReport":
        return cls(check=check, subject=str(subject), ok=False, checked=checked, witness=witness, details=details)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "witness": self.witness,
            "details": self.details,
        }
