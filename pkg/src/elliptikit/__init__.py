"""Triangle geometry in the elliptic plane.

Homogeneous-coordinate kernel plus a catalog of triangle centers, central
lines, conics and cubics, with numeric verification of the incidence,
tangency and harmonic-range theorems they satisfy.
"""

from .centers import (CenterId, VertexCenterId, center, circumradius,
                      dual_triangle_circumradius, euclidean_limit_check,
                      inradius, kimberling_tag, limit_convergence_order,
                      parse_center, vertex_center)
from .cevian import (PointTriple, TriangleSelection, anticevian_triangle,
                     antimedial_triangle, antipedal_triple, cevian_triangle,
                     dual_triple, harmonic_associates, isoconjugate,
                     medial_triangle, pedal_triple, traces, tripolar,
                     tripolar_dual, tripole)
from .conics import (CevianCircle, Conic, ConicClass, Cubic,
                     apollonian_circles, apollonian_common_points,
                     bicevian_conic, bicevian_perspector, circle_conic,
                     circumcevian_conjugates, circumcircle, circumconic,
                     circumconic_center_to_perspector, classify,
                     conic_perspector, cubic_eval, euler_feuerbach_cubic,
                     fit_conic, fit_cubic, incircle, inconic, lemoine_conic,
                     lemoine_points, polar, pole, simson_cubic,
                     simson_locus_cubic, symmetry_points)
from .errors import ElliptikitError, UndefinedCenter
from .frame import (Bary, TriangleFrame, angle_bisectors, bary_distance,
                    bary_dual_line, bary_dual_point, bary_join, bary_meet,
                    bary_midpoints, bary_reflect, build_frame,
                    cosine_rule_angle, cosine_rule_side, excess_of,
                    frame_from_sides, from_bary, sine_rule_ratio,
                    staudtian_of, to_bary)
from .lines import (HarmonicRange, HartCircle, LineId, VigaraSymmetry,
                    central_line, central_line_constructed, hart_circle,
                    harmonic_range_check, parse_line, power_circles, roster,
                    roster_residuals, sharp_cevian_circle_centers,
                    vigara_symmetry)
from .metric import (AmbientCircle, angle_measure, circle_through, distance,
                     line_distance, midpoints, on_circle, par, pedal, perp,
                     perp_bisectors, radical_axes, radical_axis, reflect_point,
                     segment_measure, tangent_length)
from .projective import (ProjLine, ProjPoint, collinear, concurrent,
                         cross_ratio, dual, join, meet)
from .sampling import random_frames

__version__ = "0.1.0"
