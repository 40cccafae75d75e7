"""Exception types and size guards shared across the package."""

import os


class CocatlabError(Exception):
    pass


class CycleWithoutBound(CocatlabError):
    """Path enumeration on a cyclic graph needs an explicit length bound."""


class OutOfTable(CocatlabError):
    """A composite left the enumerated path set; raise the bound."""


class NonMono(CocatlabError):
    """Graph pushouts are only taken along injective graph maps."""


class BoundaryMismatch(CocatlabError):
    """Two 2-cells were compared that are not parallel."""


class FlavorMismatch(CocatlabError):
    """Sesquicategory and 2-category presentations cannot be mixed."""


class SearchSpaceTooLarge(CocatlabError):
    """An exhaustive search would exceed its declared guard."""


class MixedMonoids(CocatlabError):
    """Coproduct words over different monoid families cannot interact."""


class UnknownName(CocatlabError):
    """No standard instance or catalog entry under that name."""


class NoComparison(CocatlabError):
    """No canonical comparison map between the two tensor kinds."""


class UnknownCheck(CocatlabError):
    """Check id not present in the registry."""


class ManifestError(CocatlabError):
    """Malformed suite manifest."""


GUARD_ENV = "COCAT_GUARD_OVERRIDE"


def guard_enabled():
    return os.environ.get(GUARD_ENV, "") != "1"


def guard(ok, exc, message):
    """Raise `exc(message)` unless `ok` or the guard override env flag is set."""
    if not ok and guard_enabled():
        raise exc(message)
