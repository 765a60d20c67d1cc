"""Exception types raised across the package."""


class ParkingError(Exception):
    """Base class for all domain errors."""


class InvalidLot(ParkingError):
    """Lot description is malformed (bad size or obstruction placement)."""


class InvalidPreference(ParkingError):
    """A car's preference lies outside the lot."""

    def __init__(self, car: int, value: int):
        self.car = car
        self.value = value
        super().__init__(f"car {car} prefers vertex {value}, which is outside the lot")


class NotAParkingFunction(ParkingError):
    """The sequence fails to park under the relevant rule."""


class NotContained(ParkingError):
    """The sequence is not a contained backward-capable parking function."""


class EndpointNotComponentBoundary(ParkingError):
    """A reflection window endpoint is not a component endpoint."""


class WrongTieCase(ParkingError):
    """The re-aiming formula applies only when the last tie change is -1."""


class InvalidFamilyParams(ParkingError):
    """Family parameters are inconsistent (bad m/n/k or obstruction placement)."""


class TooLarge(ParkingError):
    """The candidate space exceeds the enumeration guardrail."""
