"""SI <-> natural-unit conversion (c = 1, times carried as ct in meters)."""

C = 299_792_458.0  # m/s, exact


def seconds_to_ct(t: float) -> float:
    return t * C


def ct_to_seconds(ct: float) -> float:
    return ct / C


def velocity_to_beta(v: float) -> float:
    return v / C


def beta_to_velocity(beta: float) -> float:
    return beta * C


def energy_to_natural(e_joules: float) -> float:
    """Energy in J to E/c in kg m/s, the unit of the momentum components."""
    return e_joules / C


def natural_to_energy(e: float) -> float:
    return e * C
