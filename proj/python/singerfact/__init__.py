"""Exact reflection-factorization counts for Singer cycles in GL_n(F_q).

Thin re-export of the C++ extension module. Counts are returned as decimal
strings (they outgrow machine integers quickly); polynomial results are
coefficient lists in q, lowest degree first.
"""

try:
    from . import _singerfact as _core  # installed layout
except ImportError:  # in-tree build: extension on PYTHONPATH
    import _singerfact as _core

classical_t = _core.classical_t
count_factorizations = _core.count_factorizations
count_fixed_dets = _core.count_fixed_dets
cyclotomic_orbit_sum = _core.cyclotomic_orbit_sum
field_info = _core.field_info
hurwitz_orbits = _core.hurwitz_orbits
interval_rank_sizes = _core.interval_rank_sizes
jm_commutation_ok = _core.jm_commutation_ok
run_acceptance = _core.run_acceptance
singer_charpoly = _core.singer_charpoly
survey_regular_elliptic = _core.survey_regular_elliptic
tq = _core.tq
tq_at = _core.tq_at
tq_nlm = _core.tq_nlm

__all__ = [
    "classical_t",
    "count_factorizations",
    "count_fixed_dets",
    "cyclotomic_orbit_sum",
    "field_info",
    "hurwitz_orbits",
    "interval_rank_sizes",
    "jm_commutation_ok",
    "run_acceptance",
    "singer_charpoly",
    "survey_regular_elliptic",
    "tq",
    "tq_at",
    "tq_nlm",
]
