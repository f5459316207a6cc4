"""Command lines with golden outputs under tests/golden/<name>.out."""

CASES = {
    "rootsys_g2_all": "rootsys --type G2 --emit all",
    "rootsys_e8_exponents": "rootsys --type E8 --emit exponents",
    "rootsys_a3_csv": "--format csv rootsys --type A --rank 3 --emit exponents",
    "arr_charpoly_a2": "arrangement charpoly --type A2",
    "arr_ep_b2": "arrangement ep --type B2",
    "arr_orbits_a1": "arrangement orbits --type A1 --n 3",
    "arr_whittaker_g2": "arrangement whittaker --type G2 --n 7",
    "arr_whittaker_g2_csv": "--format csv arrangement whittaker --type G2 --n 7",
    "arr_sommers_a2": "arrangement sommers --type A2 --n 5",
    "arr_stable_e8": "arrangement stable --type E8 --n 31",
    "hecke_verify_relations": "hecke verify --r 2 --suite relations",
    "hecke_verify_all": "hecke verify --r 3 --suite all",
    "hecke_module_ps": "hecke module --r 2 --module ps",
    "hecke_module_theta": "hecke module --r 2 --module theta",
    "qaff_eval": "qaff eval --m 2",
    "qaff_eval_weights": "qaff eval --m 3 --emit weights",
    "qaff_verify": "qaff verify --m 3 --r 2",
    "sw_check": "schurweyl check-commuting --m 2 --r 2 --bound 1",
    "sw_fsw_dim": "schurweyl fsw --m 2 --r 2 --module steinberg --emit dim",
    "sw_fsw_match": "schurweyl fsw --m 2 --r 2 --emit match",
    "sw_fsw_matrices": "schurweyl fsw --m 2 --r 2 --module theta --emit matrices",
    "gg_decompose": "gg decompose --p -1 --q 0 --n 3 --r 2",
    "gg_whittaker_theta": "gg whittaker --module theta --n-alpha 2 --r 3",
    "gg_whittaker_compare": "gg whittaker --module ps --n-alpha 2 --r 2 --compare",
    "scatter_rmatrix": "scatter rmatrix --m 2 --r 2 --emit json",
    "scatter_scattering": "scatter rmatrix --m 2 --r 2 --emit scattering",
    "scatter_verify_degeneracy": "scatter verify --suite degeneracy --m 2 --r 2",
    "scatter_verify_equivariance": "scatter verify --suite equivariance --m 2 --r 2",
    "scatter_verify_ybe": "scatter verify --suite ybe --m 2 --r 3",
    "scatter_verify_ybe_point": "scatter verify --suite ybe --m 3 --r 3 --point",
    "verify_all": "verify --suite all --m 2 --r 2",
    "verify_all_threads": "--threads 2 verify --suite all --m 2 --r 2",
}

# (argv, expected exit code) for error paths
ERRORS = {
    "bad_type": ("rootsys --type H3", 2),
    "bad_modulus": ("arrangement whittaker --type A2 --n 3", 2),
    "not_c1": ("gg decompose --p 1 --q 3 --n 2 --r 2", 2),
    "missing_n": ("arrangement orbits --type A2", 2),
    "guard": ("--bound 100 arrangement orbits --type D4 --n 13", 3),
}
