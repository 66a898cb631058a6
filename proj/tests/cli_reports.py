"""Runs the CLI over a fixed command list.

schema mode: every report validates against schema/report.schema.json and
exits with the expected code. determinism mode: reports are byte-identical
across thread counts, in both formats.
"""

import json
import os
import subprocess
import sys

import jsonschema

CASES = [
    (["expand", "--x", "83/200", "--depth", "10"], 0),
    (["expand", "--x", "periodic:[];[1]", "--depth", "5"], 0),
    (["expand", "--x", "0/1"], 0),
    (["expand", "--x", "0.4142135623730950488", "--depth", "30"], 0),
    (["expand", "--x", "interval:[0,1/3]"], 0),
    (["expand", "--x", "3/2"], 2),
    (["expand", "--x", "nonsense"], 2),
    (["audit", "--x", "golden", "--psi", "psi: scaled c=0.9", "--horizon", "50"], 0),
    (["audit", "--x", "golden", "--psi", "psi: scaled c=0.1"], 0),
    (["audit", "--x", "golden", "--psi", "psi: scaled c=1.0"], 2),
    (["audit", "--x", "periodic:[1,2];[3]", "--Psi", "power tau=1", "--phi", "power c=1 e=1", "--horizon", "30"], 0),
    (["audit", "--x", "5/13", "--Psi", "const c=2"], 0),
    (["audit", "--random", "40", "--seed", "11", "--horizon", "30"], 0),
    (["audit", "--x", "golden", "--psi", "psi: scaled c=0.9", "--Psi", "const c=1"], 2),
    (["series", "--kind", "kw", "--Psi", "log beta=2.5 t0=16", "--T", "1e6"], 0),
    (["series", "--kind", "hausdorff", "--f", "power s=0.8", "--Psi", "power tau=1", "--T", "2e5", "--block-size", "50000"], 0),
    (["series", "--kind", "weak", "--Psi", "log beta=1 t0=16", "--T", "1e5"], 0),
    (["series", "--kind", "simmons", "--Psi", "log beta=1 t0=16", "--T", "1e5"], 0),
    (["series", "--kind", "bogus", "--Psi", "power tau=1"], 2),
    (["classify", "--Psi", "power tau=1", "--f", "power s=0.8", "--T", "1e5"], 0),
    (["classify", "--psi", "psi: power a=1 tau=2", "--f", "xlogx", "--T", "1e5"], 0),
    (["dim", "--Psi", "power tau=1", "--Q", "1e5"], 0),
    (["dim", "--Psi", "log beta=2", "--Q", "1e4"], 0),
    (["covers", "--fiber", "2/3"], 0),
    (["covers", "--fiber", "1/1"], 0),
    (["covers", "--fiber", "2/4"], 2),
    (["covers", "--jset", "(2,1)", "--Psi", "const c=1"], 0),
    (["covers", "--pairs", "7", "--qmax", "30"], 0),
    (["covers", "--pair-sum", "--f", "power s=1", "--Psi", "const c=1", "--qmax", "2"], 0),
    (["covers", "--blocks", "--f", "power s=0.5", "--Psi", "power tau=1", "--B", "4", "--qmax", "3000"], 0),
    (["covers", "--blocks", "--f", "power s=0.9", "--Psi", "const c=2", "--q", "1000"], 0),
    (["covers", "--blocks", "--f", "power s=1", "--Psi", "const c=2", "--q", "1000"], 2),
    (["covers", "--cover", "--f", "power s=0.8", "--Psi", "power tau=1", "--n", "5", "--cap", "6", "--n-min", "1"], 0),
    (["covers", "--cover", "--f", "power s=0.5", "--Psi", "const c=1", "--n", "12", "--cap", "10"], 4),
    (["covers", "--certify", "--f", "power s=0.7"], 0),
    (["covers", "--fiber", "2/3", "--pair-sum"], 2),
]


def run(binary, args, threads, fmt="json", timing=False):
    cmd = [binary] + args + ["--threads", str(threads), "--format", fmt]
    if timing:
        cmd.append("--timing")
    env = dict(os.environ)
    env.pop("DIRICHLET_LAB_THREADS", None)
    p = subprocess.run(cmd, capture_output=True, env=env)
    return p.returncode, p.stdout


def main():
    binary, schema_path, mode = sys.argv[1], sys.argv[2], sys.argv[3]
    with open(schema_path) as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))
    failures = []
    for args, expected in CASES:
        label = " ".join(args)
        if mode == "schema":
            for timing in (False, True):
                code, out = run(binary, args, 2, timing=timing)
                if code != expected:
                    failures.append(f"{label}: exit {code}, expected {expected}")
                try:
                    report = json.loads(out)
                except json.JSONDecodeError as e:
                    failures.append(f"{label}: not JSON ({e})")
                    continue
                errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
                for e in errors[:3]:
                    failures.append(f"{label}: {list(e.path)}: {e.message[:200]}")
        else:
            for fmt in ("json", "csv"):
                outputs = {t: run(binary, args, t, fmt) for t in (1, 3, 8)}
                base = outputs[1]
                for t, got in outputs.items():
                    if got != base:
                        failures.append(f"{label} [{fmt}]: threads {t} differs from threads 1")
    for f in failures:
        print("FAIL", f)
    print(f"{mode}: {len(CASES)} commands, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
