"""Matching and coloring kinds, plus their textual names used by the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameters


@dataclass(frozen=True)
class MatchingKind:
    name: str  # plain | induced | semistrong | degenerate
    r: int | None = None

    def __post_init__(self):
        if self.name not in ("plain", "induced", "semistrong", "degenerate"):
            raise InvalidParameters(f"unknown matching kind {self.name!r}")
        if (self.name == "degenerate") != (self.r is not None):
            raise InvalidParameters("only degenerate matchings carry r")
        if self.r is not None and self.r < 0:
            raise InvalidParameters("r must be >= 0")

    def __str__(self) -> str:
        return f"degenerate:{self.r}" if self.name == "degenerate" else self.name


PLAIN = MatchingKind("plain")
INDUCED = MatchingKind("induced")
SEMISTRONG_MATCHING = MatchingKind("semistrong")


def degenerate_matching(r: int) -> MatchingKind:
    return MatchingKind("degenerate", r)


@dataclass(frozen=True)
class ColoringKind:
    name: str  # proper | strong | semistrong | relaxed | degenerate
    s: int | None = None
    t: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.name not in ("proper", "strong", "semistrong", "relaxed", "degenerate"):
            raise InvalidParameters(f"unknown coloring kind {self.name!r}")
        if self.name == "relaxed":
            if self.s is None or self.t is None or self.s < 0 or self.t < 0:
                raise InvalidParameters("relaxed coloring needs s, t >= 0")
        if self.name == "degenerate" and (self.r is None or self.r < 0):
            raise InvalidParameters("degenerate classes need r >= 0")

    @property
    def class_kind(self) -> MatchingKind | None:
        """The matching kind every color class must satisfy, if the kind is class-based."""
        return {
            "proper": PLAIN,
            "strong": INDUCED,
            "semistrong": SEMISTRONG_MATCHING,
        }.get(self.name) or (degenerate_matching(self.r) if self.name == "degenerate" else None)

    def __str__(self) -> str:
        if self.name == "relaxed":
            return f"relaxed:{self.s},{self.t}"
        if self.name == "degenerate":
            return f"degenerate:{self.r}"
        return self.name


PROPER = ColoringKind("proper")
STRONG = ColoringKind("strong")
SEMISTRONG = ColoringKind("semistrong")


def relaxed(s: int, t: int) -> ColoringKind:
    return ColoringKind("relaxed", s=s, t=t)


def degenerate_classes(r: int) -> ColoringKind:
    return ColoringKind("degenerate", r=r)


def parse_coloring_kind(text: str) -> ColoringKind:
    """Parse ``proper``, ``strong``, ``semistrong``, ``relaxed:S,T`` or ``degenerate:R``."""
    name, _, arg = text.strip().lower().partition(":")
    try:
        if name == "relaxed":
            s, t = (int(x) for x in arg.split(","))
            return relaxed(s, t)
        if name == "degenerate":
            return degenerate_classes(int(arg))
    except ValueError:
        raise InvalidParameters(f"bad kind argument in {text!r}") from None
    if arg:
        raise InvalidParameters(f"{name} takes no argument")
    return ColoringKind(name)


def parse_matching_kind(text: str) -> MatchingKind:
    """Parse ``plain``, ``induced`` (alias ``strong``), ``semistrong`` or ``degenerate:R``."""
    name, _, arg = text.strip().lower().partition(":")
    if name == "strong":
        name = "induced"
    if name == "degenerate":
        try:
            return degenerate_matching(int(arg))
        except ValueError:
            raise InvalidParameters(f"bad r in {text!r}") from None
    if arg:
        raise InvalidParameters(f"{name} takes no argument")
    return MatchingKind(name)
