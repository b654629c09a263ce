"""Double-buffered state cells.

Components write ``next`` during Eval and the kernel publishes it to
``value`` during Commit. Peers only ever read ``value``. Stored values must be
immutable (frozen dataclasses, tuples, enums, ints).
"""

from typing import Any, Generic, List, TypeVar

T = TypeVar("T")


class Cell(Generic[T]):
    """Base for Register and Wire."""

    __slots__ = ("name", "value", "_next", "driven", "_dirty")

    def __init__(self, name: str, value: T, dirty: List["Cell"]):
        self.name = name
        self.value: T = value
        self._next: T = value
        self.driven = False
        self._dirty = dirty

    @property
    def next(self) -> T:
        """Value staged this cycle (the committed value when nothing was staged)."""
        return self._next if self.driven else self.default_next()

    @next.setter
    def next(self, value: T) -> None:
        if not self.driven:
            self.driven = True
            self._dirty.append(self)
        self._next = value

    def default_next(self) -> T:
        raise NotImplementedError

    def discard(self) -> None:
        """Drop anything staged this cycle."""
        self.driven = False

    def commit(self) -> None:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}={self.value!r})"


class Register(Cell[T]):
    """Holds its value until a new one is committed."""

    __slots__ = ()

    def default_next(self) -> T:
        return self.value

    def commit(self) -> None:
        if self.driven:
            self.value = self._next
            self.driven = False


class Wire(Cell[T]):
    """One-cycle pulse: falls back to ``default`` on cycles it is not driven."""

    __slots__ = ("default",)

    def __init__(self, name: str, default: Any, dirty: List[Cell]):
        super().__init__(name, default, dirty)
        self.default = default

    def default_next(self) -> T:
        return self.default

    def commit(self) -> None:
        self.value = self._next if self.driven else self.default
        self.driven = False
