from dataclasses import dataclass
from typing import Optional

from cayley.models import GenSet
from gqd.models import GqdGroup
from hamilton.models import GroupDoubleRay, HamCircle


@dataclass(frozen=True)
class JobSpec:
    """One parsed job file: a group, a generating set and run options."""
    group: GqdGroup
    genset: GenSet
    command: str = ''
    radius: Optional[int] = None
    inner_radius: Optional[int] = None
    format: str = 'json'
    seed: int = 0
    ray: Optional[GroupDoubleRay] = None
    circle: Optional[HamCircle] = None

    def __str__(self):
        gens = ', '.join(map(str, self.genset.gens))
        return f'{self.command or "job"} on {self.group} with S = {{{gens}}}'
