from .fields import (
    OCCUPANCY_BAND,
    Box,
    Capsule,
    Difference,
    Intersection,
    OccupancyTarget,
    ShapeSpecError,
    SignedField,
    Sphere,
    Torus,
    Union,
    VoxelField,
    analytic_shape,
    load_shape_spec,
    mesh_to_field,
    occupancy_targets,
)
from .mesh import Mesh, icosphere, load_obj, normalize_to_unit_sphere, sample_surface, save_obj, unit_cube
from .points import PointSet, fourier_embed, fourier_features

__all__ = [
    "OCCUPANCY_BAND",
    "Box",
    "Capsule",
    "Difference",
    "Intersection",
    "Mesh",
    "OccupancyTarget",
    "PointSet",
    "ShapeSpecError",
    "SignedField",
    "Sphere",
    "Torus",
    "Union",
    "VoxelField",
    "analytic_shape",
    "fourier_embed",
    "fourier_features",
    "icosphere",
    "load_obj",
    "load_shape_spec",
    "mesh_to_field",
    "normalize_to_unit_sphere",
    "occupancy_targets",
    "sample_surface",
    "save_obj",
    "unit_cube",
]
