"""Write DOT and JSON renderings of the B2 tilted digraph, two intervals and the order from a.

Usage: python3 scripts/render_b2_pictures.py [OUTDIR]
"""

import sys
from pathlib import Path

from weylybe.root_system import build_root_system
from weylybe.tilted import build_digraph, down_edges, tilted_interval, tilted_order


def main(outdir: str = "b2_pictures") -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    D = build_digraph(build_root_system("B", 2))
    g = D.group
    a, ab = g.from_word([1]), g.from_word([1, 2])
    down = down_edges(D)
    items = {
        "digraph": (D.to_dot("D"), D.to_json()),
        "interval_w0_e": tilted_interval(D, g.longest, 0),
        "interval_ab_a": tilted_interval(D, ab, a),
        "order_from_a": tilted_order(D, a),
    }
    for name, obj in items.items():
        dot, js = obj if isinstance(obj, tuple) else (obj.to_dot(name, down=down), obj.to_json())
        (out / f"{name}.dot").write_text(dot)
        (out / f"{name}.json").write_text(js + "\n")
        print(f"wrote {out / name}.dot and .json")


if __name__ == "__main__":
    main(*sys.argv[1:2])
