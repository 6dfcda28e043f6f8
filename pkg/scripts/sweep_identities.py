"""Time every identity sweep at larger bounds than the CLI defaults.

    python scripts/sweep_identities.py --pmax 300 --lmax 5000
"""
import argparse
import time

from qsing.verify import PAIR_CHECKS, sweep_dihedral, sweep_pairs, sweep_table3


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=200)
    ap.add_argument("--lmax", type=int, default=1000)
    args = ap.parse_args()

    failed = 0
    for name in PAIR_CHECKS:
        t0 = time.perf_counter()
        res = sweep_pairs(name, args.pmax)
        dt = time.perf_counter() - t0
        failed += res.failed
        print(f"{name:20s} {res.checked:8d} pairs  {res.failed:3d} failed  {dt:6.2f}s"
              + (f"  e.g. {res.counterexample}" if res.counterexample else ""))
    for res in (sweep_dihedral(), sweep_table3(args.lmax)):
        failed += res.failed
        print(f"{res.name:20s} {res.checked:8d} items  {res.failed:3d} failed")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
