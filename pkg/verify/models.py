from dataclasses import asdict, dataclass, field


@dataclass
class VerifyReport:
    """Outcome of a window check.

    ``duplicates``, ``missing`` and ``non_edges`` hold printable descriptions;
    ``tail_status`` maps forward/backward/period to booleans.
    """
    passed: bool = False
    checked_inner_radius: int = 0
    covered: int = 0
    expected: int = 0
    duplicates: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    non_edges: list = field(default_factory=list)
    tail_status: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __str__(self):
        verdict = 'PASS' if self.passed else 'FAIL'
        return (
            f'{verdict}: {self.covered}/{self.expected} covered at inner radius {self.checked_inner_radius}, '
            f'{len(self.duplicates)} duplicates, {len(self.missing)} missing, {len(self.non_edges)} non-edges'
        )

    def settle(self):
        self.passed = (
            not self.duplicates
            and not self.missing
            and not self.non_edges
            and not self.notes
            and all(self.tail_status.values())
        )
        return self

    def to_dict(self):
        return asdict(self)
