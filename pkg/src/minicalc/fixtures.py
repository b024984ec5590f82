"""The bundled example proofs.

Everything ships inside the package so the tool keeps working without any
network access.  Sources live in ``proofs/*.mc``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class Fixture:
    name: str
    title: str
    description: str

    @property
    def source(self) -> str:
        return (
            resources.files("minicalc")
            .joinpath(f"proofs/{self.name}.mc")
            .read_text(encoding="utf-8")
        )


FIXTURES: tuple[Fixture, ...] = (
    Fixture("imp_p_p", "p → p", "the opening example: implication introduction plus Ext"),
    Fixture(
        "default_example",
        "∀ P(0) → (P(a) ∧ P(b))",
        "the default example: duplication, two instantiations (one inferred), a branch",
    ),
    Fixture(
        "drinker",
        "∃ (p(0) → ∀ p(0))",
        "the drinker paradox, duplicating the goal with Extra to instantiate twice",
    ),
    Fixture(
        "drinker_short",
        "∃ (p(0) → ∀ p(0))",
        "the drinker paradox again, compacted by letting Ext duplicate and weaken",
    ),
    Fixture(
        "grandfather",
        "∀ (¬r(0) → r(f(0))) → ∃ (r(0) ∧ r(f(f(0))))",
        "if every non-rich person has a rich father, some rich person has a rich grandfather",
    ),
)


def fixture_names() -> list[str]:
    return [f.name for f in FIXTURES]


def get_fixture(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
