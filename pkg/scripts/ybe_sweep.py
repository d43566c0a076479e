"""Time the exact YBE check for random mixed and quantum families across Weyl types.

Usage: python3 scripts/ybe_sweep.py [--seeds 11 12 13] [--types A3 B3 G2 ...]
"""

import argparse
import random
import time

from weylybe.operators import MultiplicativeFunction, mixed_family, quantum_family, random_params, random_rational
from weylybe.root_system import build_root_system
from weylybe.weyl import weyl_group
from weylybe.ybe import check_ybe

DEFAULT_TYPES = ["A3", "A4", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--types", nargs="*", default=DEFAULT_TYPES)
    ap.add_argument("--seeds", nargs="*", type=int, default=[11, 12, 13])
    args = ap.parse_args()
    print(f"{'type':>4} {'|W|':>6} {'seed':>5} {'family':>8} {'subgroups':>9} {'ok':>3} {'seconds':>8}")
    for name in args.types:
        rs = build_root_system(name[0], int(name[1:]))
        g = weyl_group(rs)
        for seed in args.seeds:
            rng = random.Random(seed)
            families = {
                "mixed": mixed_family(g, random_params(rs, rng)[0]),
                "quantum": quantum_family(g, MultiplicativeFunction(rs, [random_rational(rng) for _ in range(rs.rank)])),
            }
            for fam_name, fam in families.items():
                t0 = time.perf_counter()
                rep = check_ybe(fam, rs)
                dt = time.perf_counter() - t0
                print(f"{rs.name:>4} {g.size:>6} {seed:>5} {fam_name:>8} {rep.subgroup_count:>9} "
                      f"{'yes' if rep.passed else 'NO':>3} {dt:>8.2f}", flush=True)


if __name__ == "__main__":
    main()
