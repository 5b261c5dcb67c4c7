"""End-to-end checks of the command line tool: exit-code contract, output
formats, report determinism.  Usage: cli_test.py <path-to-binary>."""

import subprocess
import sys
import tempfile
import os


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary = sys.argv[1]
    failures = []

    def expect(name, cond):
        if not cond:
            failures.append(name)
            print(f"FAIL {name}")
        else:
            print(f"ok   {name}")

    code, out, _ = run(binary, "--help")
    expect("help exits 0", code == 0)
    expect("help lists subcommands", "verify-all" in out and "quadrature-check" in out)

    code, _, err = run(binary, "--bogus-flag")
    expect("unknown flag exits 2", code == 2)

    code, _, err = run(binary, "trace", "--m-max", "2", "--family", "no_such_family")
    expect("unknown family exits 2", code == 2)
    expect("unknown family message", "unknown weight family" in err)

    code, _, _ = run(binary, "trace", "--family", "one")
    expect("missing required --m-max exits 2", code == 2)

    code, out, _ = run(binary, "classify", "--family", "n_plus_1", "--nmax", "2000")
    expect("classify passes", code == 0)
    expect("classify reports affine", "affine" in out)

    code, out, _ = run(binary, "trace", "--family", "one", "--m-max", "3", "--tol", "1e-12")
    expect("hardy trace exits 0", code == 0)

    code, out, _ = run(binary, "trace", "--family", "n_plus_1", "--m-max", "2",
                       "--r", "n_over_n_plus_1", "--tol", "1e-5")
    expect("weighted trace exits 0", code == 0)

    # numeric non-convergence: tiny term cap, tight tolerance
    code, out, _ = run(binary, "trace", "--family", "gamma_log", "--params", "1,2",
                       "--m-max", "1", "--tol", "1e-10", "--nmax", "512")
    expect("non-convergence exits 1", code == 1)
    expect("non-convergence is flagged in rows", "false" in out)

    code, out, _ = run(binary, "bilinear", "--family", "n", "--f", "0,1,0,2", "--g", "0,0,0,1")
    expect("bilinear exits 0", code == 0)

    code, out, _ = run(binary, "kernel", "--family", "n2_nminus1", "--grid", "0.1:0.9:0.2@4")
    expect("kernel exits 0", code == 0)
    expect("kernel prints reconciliation note", "sums from n=2" in out)

    code, out, _ = run(binary, "quadrature-check", "--gamma", "0", "--beta", "1", "--k", "0")
    expect("quadrature-check exits 0", code == 0)
    expect("ratio 2 visible", "ratio" in out)

    # CSV determinism: identical scenario => identical numeric payload
    _, csv1, _ = run(binary, "--csv", "trace", "--family", "inv_n", "--m-max", "3")
    _, csv2, _ = run(binary, "--csv", "trace", "--family", "inv_n", "--m-max", "3")
    expect("csv runs are bit-identical", csv1 == csv2 and len(csv1) > 0)

    with tempfile.TemporaryDirectory() as td:
        path = os.path.join(td, "report.txt")
        code, _, _ = run(binary, "--out", path, "classify", "--family", "inv_n")
        body = open(path).read()
        expect("report file sections", "[report]" in body and "[summary]" in body)
        expect("report echoes scenario", "family = inv_n" in body)

    # verify-all: exit code must agree with the printed summary
    code, out, _ = run(binary, "verify-all")
    summary = [ln for ln in out.splitlines() if ln.strip().startswith("checks:")]
    expect("verify-all prints a summary", len(summary) == 1)
    all_pass = summary and summary[0].strip().endswith(" pass")
    expect("verify-all exit matches summary", code == (0 if all_pass else 1))

    if failures:
        print(f"{len(failures)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
