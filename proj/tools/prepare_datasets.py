#!/usr/bin/env python3
"""Writes the benchmark datasets as header-bearing CSV files under data/.

Iris and Wine come from the copies bundled with scikit-learn, Penguins from the
palmerpenguins package. HTRU2 is not bundled anywhere; pass the path of the UCI
HTRU_2.csv (no header, 8 features + class) with --htru2 to convert it.
"""
import argparse
import csv
import os


def write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def sklearn_dataset(loader, out):
    ds = loader()
    names = [n.replace(" (cm)", "").replace(" ", "_").replace("/", "_") for n in ds.feature_names]
    rows = [[repr(float(v)) for v in x] + [ds.target_names[t]] for x, t in zip(ds.data, ds.target)]
    write(out, names + ["class"], rows)


def penguins(out):
    import palmerpenguins

    src = os.path.join(os.path.dirname(palmerpenguins.__file__), "data", "penguins.csv")
    numeric = ["bill_length_mm", "bill_depth_mm", "flipper_length_mm", "body_mass_g"]
    rows = []
    with open(src) as fh:
        for rec in csv.DictReader(fh):
            vals = [rec[c] for c in numeric]
            # two birds have no measurements at all
            if any(v in ("", "NA") for v in vals):
                continue
            rows.append(vals + [rec["species"]])
    write(out, numeric + ["species"], rows)


def htru2(src, out):
    names = ["ip_mean", "ip_std", "ip_kurtosis", "ip_skewness",
             "dm_mean", "dm_std", "dm_kurtosis", "dm_skewness"]
    with open(src) as fh:
        rows = [r for r in csv.reader(fh) if r]
    write(out, names + ["class"], rows)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--htru2", help="path to the raw UCI HTRU_2.csv")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    from sklearn import datasets

    sklearn_dataset(datasets.load_iris, os.path.join(args.out, "iris.csv"))
    sklearn_dataset(datasets.load_wine, os.path.join(args.out, "wine.csv"))
    penguins(os.path.join(args.out, "penguins.csv"))
    if args.htru2:
        htru2(args.htru2, os.path.join(args.out, "htru2.csv"))


if __name__ == "__main__":
    main()
