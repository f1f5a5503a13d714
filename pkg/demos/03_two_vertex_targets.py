"""Two-vertex targets and the semi-edge collapse.

W(k, m, l, p, q) is two vertices joined by l parallel edges (bars), with
k semi-edges and m loops on one side, q and p on the other.  Bipartite
bar targets fall to regular bipartite decomposition; distinguishable
vertices split the problem per side; the regular symmetric case becomes
a 2-SAT over which fiber each vertex joins.
"""

from semicover import (build_W, cycle, decide_colored, path,
                       type_signature, verify_cover)


def show(name, g, h):
    v = decide_colored(g, h)
    print(f"{name:>22}: {'yes' if v.answer else 'no '}  via {v.method}")
    if v.answer:
        assert verify_cover(g, h, v.witness) == []
    return v


def main():
    bars2 = build_W(0, 0, 2, 0, 0)
    print("W(0,0,2), a double bar, is covered by even cycles only:")
    show("C6", cycle(6), bars2)
    show("C5", cycle(5), bars2)

    print("\nW(1,0,1,0,1) is a bar with a semi-edge at each end.")
    print("An edge of the source")
    print("may collapse onto a semi-edge of the target when both of its")
    print("ends map to the same vertex, so the path on 4 vertices with")
    print("semi-edge tips covers it even though it has 3 real edges:")
    w = build_W(1, 0, 1, 0, 1)
    p4 = path(4, semi_ends=True)
    show("path(4, semi tips)", p4, w)
    show("path(3, semi tips)", path(3, semi_ends=True), w)
    print("  degree sequences match either way; the collapse is what")
    print("  the local bijection permits, not a relaxation.")

    print("\nType signatures are what covers preserve per vertex:")
    sig_g = {type_signature(p4, v) for v in range(p4.n)}
    sig_h = {type_signature(w, v) for v in range(w.n)}
    print(f"  source signatures form a subset of target's: {sig_g <= sig_h}")


if __name__ == "__main__":
    main()
