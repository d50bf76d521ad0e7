from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


class Check(BaseModel):
    name: str = Field(..., description="Identity being checked")
    status: str = Field(..., description="pass, fail or skipped")
    lhs: Optional[str] = Field(None, description="Left-hand side as computed")
    rhs: Optional[str] = Field(None, description="Right-hand side as computed")


class Report(BaseModel):
    command: str = Field(..., description="Name of the command that produced the report")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Normalized command inputs")
    results: Dict[str, Any] = Field(default_factory=dict, description="Computed values")
    checks: List[Check] = Field(default_factory=list, description="Identities asserted by the command")
    runtime_ms: Optional[int] = Field(None, description="Wall-clock time, only when timings are requested")
    seed: Optional[int] = Field(None, description="Master seed of randomized checks")

    @property
    def failed(self) -> List[Check]:
        return [check for check in self.checks if check.status == FAIL]

    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def add_check(self, name: str, ok: Optional[bool], lhs: Any = None, rhs: Any = None) -> Check:
        """Record an identity; ok=None marks it skipped."""
        status = SKIPPED if ok is None else (PASS if ok else FAIL)
        check = Check(
            name=name,
            status=status,
            lhs=None if lhs is None else str(lhs),
            rhs=None if rhs is None else str(rhs),
        )
        self.checks.append(check)
        return check

    def add_polynomial(self, name: str, poly: Any) -> None:
        """Polynomials are stored as sorted [exponent, coefficient] pairs under results.polynomials."""
        self.results.setdefault("polynomials", {})[name] = poly.to_pairs()
