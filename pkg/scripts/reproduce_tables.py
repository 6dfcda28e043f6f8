"""Write Table 1 (cyclic rows up to --pmax, plus bundled row-4 divisors) and
Table 3 as markdown to stdout or a directory."""
import argparse
from pathlib import Path

from qsing.cli import markdown_table, table1_records, table3_records


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=15)
    ap.add_argument("--out", type=Path, default=None, help="directory for table1.md / table3.md")
    args = ap.parse_args()

    t1 = markdown_table(
        ["group", "row", "d", "m", "closed form", "j", "k", "e"],
        ((r["group"], r["row"], r["dGamma"], r["mGamma"], r["mClosedForm"],
          r["jGamma"], r["kGamma"], r["embeddingDim"]) for r in table1_records(args.pmax)),
    )
    t3 = markdown_table(
        ["family", "condition", "m", "smallest l", "m there"],
        ((r["groupName"], r["condition"], r["formula"], r["smallestL"], r["mGamma"])
         for r in table3_records()),
    )
    if args.out is None:
        print("## Table 1\n\n" + t1 + "\n\n## Table 3\n\n" + t3)
        return
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "table1.md").write_text(t1 + "\n")
    (args.out / "table3.md").write_text(t3 + "\n")
    print(f"wrote {args.out / 'table1.md'} and {args.out / 'table3.md'}")


if __name__ == "__main__":
    main()
