"""Quadratic pole maps on unit spheres and disks.

For a unit pole p the map x -> 2 (x . p) x - p preserves the sphere and the
disk and doubles angles on every great circle through p.  The package
provides the map and its closed-form preimages, exact rational angle
dynamics, constructive chaos witnesses (sensitivity, accessibility),
non-transitivity certificates, periodic-point enumeration, Lyapunov
estimates, pedal/orthotomic curve companions, and a CLI that exports
orbits, reports, and figures.
"""
from .angles import Angle, angle_orbit, angle_point, angle_step, chord_gap, parse_angle
from .chaos import (
    ChaosReport,
    CircleArc,
    ConfinementCertificate,
    MixingResult,
    OpenBall,
    TransitivityProbe,
    Witness,
    accessibility_witness,
    check_report_consistency,
    circle_chaos_report,
    classify,
    disk_chaos_report,
    disk_sensitivity_witness,
    interval_chaos_report,
    lyapunov_estimate,
    max_gap_turns,
    mixing_probe,
    periodic_angles,
    replay_separations,
    sensitivity_witness,
    slice_confinement_certificate,
    sphere_chaos_report,
    transitivity_probe,
)
from .curves import (
    PlaneCurveSample,
    SphereCurveSample,
    double_about,
    line_samples,
    plane_orthotomic,
    plane_pedal,
    small_circle_pedal_samples,
    sphere_orthotomic,
    unit_circle_samples,
)
from .dynamics import (
    Orbit,
    chebyshev_projection,
    chebyshev_step,
    equivariance_pair,
    interval_conjugacy,
    iterate,
    pole_map,
    pole_map_rows,
    preimage_in_disk,
    preimage_on_sphere,
)
from .errors import (
    BudgetExceeded,
    DegenerateConfiguration,
    DegeneratePair,
    DerivativeSingular,
    DimensionMismatch,
    MixedAngleForms,
    NoPreimage,
    NotInterior,
    PedalDegenerate,
    PolemapError,
)
from .geometry import (
    SliceFrame,
    as_vector,
    chord_distance,
    deterministic_orthogonal,
    disk_point,
    frame_through,
    orthonormal_complement,
    rotate_pole_to_axis,
    rotation_matrix,
    slice_angle,
    slice_embed,
    slice_frame,
    slice_residual,
    sphere_point,
)

__version__ = "0.1.0"
