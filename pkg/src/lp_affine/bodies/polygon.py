"""
Convex polygon utilities: halfplane clipping, area, centroid, polar
"""
import numpy as np

from ..exceptions import DegenerateBodyError, PreconditionError

MERGE_TOL = 1e-12


def clip_halfplane(vertices: np.ndarray, normal: np.ndarray, offset: float) -> np.ndarray:
    """
    Clip a convex polygon to the halfplane <x, normal> <= offset.

    Parameters
    ----------
    vertices : numpy.ndarray
        Counter-clockwise vertices, shape (V, 2)
    normal : numpy.ndarray
        Outer normal of the halfplane
    offset : float
        Halfplane offset

    Returns
    -------
    numpy.ndarray
        Counter-clockwise vertices of the clipped polygon (possibly empty)
    """
    if len(vertices) == 0:
        return vertices
    d = vertices @ normal - offset
    inside = d <= 0.0
    if inside.all():
        return vertices
    if not inside.any():
        return vertices[:0]

    nxt = np.roll(np.arange(len(vertices)), -1)
    crosses = inside != inside[nxt]
    denom = d - d[nxt]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(crosses, d / np.where(crosses, denom, 1.0), 0.0)
    inter = vertices + t[:, None] * (vertices[nxt] - vertices)

    keep = np.column_stack([inside, crosses]).ravel()
    candidates = np.stack([vertices, inter], axis=1).reshape(-1, 2)
    return candidates[keep]


def merge_close_vertices(vertices: np.ndarray, tol: float = MERGE_TOL) -> np.ndarray:
    """Drop vertices closer than tol to their predecessor (cyclically)."""
    if len(vertices) < 2:
        return vertices
    step = np.linalg.norm(vertices - np.roll(vertices, 1, axis=0), axis=1)
    keep = step > tol
    if not keep.any():
        return vertices[:1]
    return vertices[keep]


def intersect_halfplanes(normals: np.ndarray, offsets: np.ndarray,
                         bound: float = None) -> np.ndarray:
    """
    Intersect halfplanes <x, n_i> <= b_i into a convex polygon.

    Constraints are applied in increasing normal angle, starting from a
    square of half-width ``bound`` (default 4 max b_i).

    Returns
    -------
    numpy.ndarray
        Counter-clockwise vertices

    Raises
    ------
    DegenerateBodyError
        If the intersection is empty or degenerates to fewer than 3 vertices
    """
    normals = np.asarray(normals, dtype=float)
    offsets = np.asarray(offsets, dtype=float)
    if bound is None:
        bound = 4.0 * float(np.max(np.abs(offsets)))
    poly = bound * np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])

    order = np.argsort(np.arctan2(normals[:, 1], normals[:, 0]), kind="stable")
    for i in order:
        poly = clip_halfplane(poly, normals[i], offsets[i])
        if len(poly) == 0:
            raise DegenerateBodyError("Halfplane intersection is empty")
    poly = merge_close_vertices(poly)
    if len(poly) < 3:
        raise DegenerateBodyError("Halfplane intersection has no interior")
    return poly


def polygon_area(vertices: np.ndarray) -> float:
    """Signed shoelace area (positive for counter-clockwise order)."""
    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_centroid(vertices: np.ndarray) -> np.ndarray:
    """Area centroid of a simple polygon."""
    x, y = vertices[:, 0], vertices[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    area = 0.5 * np.sum(cross)
    cx = np.sum((x + xn) * cross) / (6.0 * area)
    cy = np.sum((y + yn) * cross) / (6.0 * area)
    return np.array([cx, cy])


def edge_normals(vertices: np.ndarray):
    """
    Outer unit normals and offsets of the edges of a ccw convex polygon.

    Returns
    -------
    tuple of numpy.ndarray
        normals (V, 2) and offsets (V,) with offset_i = <v_i, n_i>
    """
    edges = np.roll(vertices, -1, axis=0) - vertices
    normals = np.column_stack([edges[:, 1], -edges[:, 0]])
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    offsets = np.einsum("ij,ij->i", vertices, normals)
    return normals, offsets


def polar_polygon(vertices: np.ndarray) -> np.ndarray:
    """
    Polar of a convex polygon containing the origin in its interior.

    Each edge with outer normal n and offset b contributes the polar
    vertex n / b; edge order keeps the result counter-clockwise.
    """
    normals, offsets = edge_normals(vertices)
    if np.any(offsets <= 0.0):
        raise PreconditionError("Polygon does not contain the origin in its interior")
    return normals / offsets[:, None]


def support_of_vertices(vertices: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Support function max_j <v_j, u> of a vertex set at each direction."""
    return np.max(directions @ vertices.T, axis=1)
