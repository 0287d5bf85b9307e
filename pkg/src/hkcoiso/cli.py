"""Command-line front end.

    hkcoiso coisotropic --preset u2-m2-e --n 2 --i 2 --mode cle
    hkcoiso harmonic --preset u2-m2 --k 3
    hkcoiso fujiki --preset u-m2 --n 2 --mu 3/2
    hkcoiso gorenstein --preset u2-m2 --n 2
    hkcoiso chow-demo --points 2 --n 2
    hkcoiso verify-all

Exit codes: 0 success, 1 invariant violation, 2 configuration error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, replace
from importlib import resources

from .errors import HKError, ConfigError
from .linalg import frac, frac_str
from .presets import load_preset, load_file, PRESET_NAMES

COMMANDS = ("coisotropic", "harmonic", "fujiki", "gorenstein", "chow-demo", "verify-all")
FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    command: str
    preset: str = None
    gram_file: str = None
    ns: str = None
    n: int = 2
    i: int = 1
    k: int = 2
    mode: str = "cl"
    mu: str = "1"
    seed: int = 0
    points: int = 2
    out: str = None
    format: str = "json"
    allow_large: bool = False
    route: str = "harmonic"

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if self.n < 1:
            raise ConfigError("--n must be >= 1")
        if self.command == "coisotropic" and not 1 <= self.i <= self.n:
            raise ConfigError("--i must satisfy 1 <= i <= n")
        if self.command == "chow-demo" and self.points < 1:
            raise ConfigError("--points must be >= 1")
        if self.command == "harmonic" and self.k < 0:
            raise ConfigError("--k must be >= 0")
        try:
            if frac(self.mu) == 0:
                raise ConfigError("--mu must be nonzero")
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad --mu {self.mu!r}") from exc


def _lattice(cfg):
    if cfg.gram_file and cfg.preset:
        raise ConfigError("use either --preset or --gram-file")
    lat = load_file(cfg.gram_file) if cfg.gram_file else load_preset(cfg.preset or "u2-m2")
    if lat.large and not cfg.allow_large:
        raise ConfigError(f"preset {lat.name} is large; pass --allow-large")
    if cfg.ns is not None:
        try:
            idx = [int(t) for t in cfg.ns.replace(",", " ").split()]
        except ValueError as exc:
            raise ConfigError("--ns takes 1-based basis indices, e.g. 5,6") from exc
        if any(not 1 <= j <= lat.space.dim for j in idx):
            raise ConfigError("--ns index out of range")
        lat = replace(lat, ns_basis=tuple(lat.space.basis_vector(j - 1) for j in idx))
    return lat


# -- commands ---------------------------------------------------------------


def _status(mode, i, rho):
    if mode == "cle" and i == 2 and rho == 2:
        return "asserted by theory: exactly 3"
    return "observed, not asserted"


def cmd_coisotropic(cfg):
    from .coisotropic import make_problem, coisotropic_space, coisotropic_space_via_fujiki

    lat = _lattice(cfg)
    split = lat.split()
    solver = coisotropic_space if cfg.route == "harmonic" else coisotropic_space_via_fujiki

    def one(i, mode):
        sp = solver(make_problem(split, cfg.n, i, mode))
        bound = None if mode == "full" else (1 if mode == "cl" else i + 1)
        return {
            "n": cfg.n, "i": i, "mode": mode, "dimension": sp.dimension,
            "lower_bound": bound, "status": _status(mode, i, split.rho),
            "basis": sp.pretty(), "basis_terms": sp.to_json(),
        }

    if cfg.format == "csv":
        modes = ["cl"] + (["cle"] if split.rho >= 2 else []) + ["full"]
        rows = [[i] + [one(i, m)["dimension"] for m in modes] for i in range(1, cfg.n + 1)]
        return {"header": ["i"] + modes, "rows": rows}, 0
    out = one(cfg.i, cfg.mode)
    out = {"space": lat.name, "rho": split.rho, "tr_dim": split.tr_dim, "route": cfg.route, **out}
    return out, 0


def cmd_harmonic(cfg):
    from .sym_algebra import harmonic_subspace, sym_dim

    lat = _lattice(cfg)
    harm = harmonic_subspace(lat.space, cfg.k)
    return {"space": lat.name, "k": cfg.k, "sym_dim": sym_dim(lat.space.dim, cfg.k),
            "dim": harm.dim, "basis": harm.to_json()}, 0


def cmd_fujiki(cfg):
    from .fujiki import IntegrationFunctional, mu_i

    lat = _lattice(cfg)
    F = IntegrationFunctional(lat.space, cfg.n, frac(cfg.mu))
    consts = [{"i": i, "mu_i": frac_str(mu_i(F, i, seed=cfg.seed))} for i in range(cfg.n + 1)]
    status = 0 if all(c["mu_i"] != "0" for c in consts) else 1
    return {"space": lat.name, "n": cfg.n, "mu": frac_str(F.mu), "constants": consts}, status


def cmd_gorenstein(cfg):
    from .fujiki import IntegrationFunctional, gorenstein_left_kernel, harm_ideal
    from .sym_algebra import sym_dim

    lat = _lattice(cfg)
    space = lat.space
    F = IntegrationFunctional(space, cfg.n, frac(cfg.mu))
    rows = []
    ok = True
    for a in range(2 * cfg.n + 1):
        ker = gorenstein_left_kernel(F, a)
        expected = harm_ideal(space, cfg.n, a)
        match = ker == expected
        ok &= match
        rows.append({"a": a, "sym_dim": sym_dim(space.dim, a), "kernel_dim": ker.dim,
                     "rank": sym_dim(space.dim, a) - ker.dim, "matches_ideal": match})
    return {"space": lat.name, "n": cfg.n, "degrees": rows}, 0 if ok else 1


def cmd_chow(cfg):
    from . import chow_model as chow

    alph = chow.PointAlphabet.standard(cfg.points)
    n = cfg.n
    N = [len(chow.filtration_N(alph, n, k)) for k in range(n + 1)]
    FBB = [len(chow.filtration_FBB(alph, n, i)) for i in range(n + 1)]
    comps = [chow.component_space(alph, n, k) for k in range(n + 1)]
    checks = {
        "commutation": chow.verify_commutation(alph, n) if n >= 2 else True,
        "projectors": chow.projector_laws(alph, n),
        "direct_sum": sum(len(c) for c in comps) == alph.dim(n),
        "opposite": all(chow.opposite(alph, n, i) for i in range(n + 1)),
        "fbb_point_independent": all(
            chow.fbb_marked_point_invariant(alph, n, i, alph.symbols[1]) for i in range(n + 1)),
    }
    components = [
        [chow.ZeroCycle.from_coords(alph, n, row).to_json() for row in c] for c in comps
    ]
    out = {"points": list(alph.symbols), "n": n, "model_dim": alph.dim(n),
           "N_dims": N, "FBB_dims": FBB, "component_dims": [len(c) for c in comps],
           "checks": checks, "components": components}
    return out, 0 if all(checks.values()) else 1


def cmd_verify(cfg):
    from .verify import verify_all

    report = verify_all()
    return report, 0 if report["passed"] else 1


HANDLERS = {
    "coisotropic": cmd_coisotropic, "harmonic": cmd_harmonic, "fujiki": cmd_fujiki,
    "gorenstein": cmd_gorenstein, "chow-demo": cmd_chow, "verify-all": cmd_verify,
}


# -- rendering --------------------------------------------------------------


def _csv(command, result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "coisotropic":
        w.writerow(result["header"])
        w.writerows(result["rows"])
    elif command == "harmonic":
        w.writerow(["k", "sym_dim", "dim"])
        w.writerow([result["k"], result["sym_dim"], result["dim"]])
    elif command == "fujiki":
        w.writerow(["i", "mu_i"])
        w.writerows([c["i"], c["mu_i"]] for c in result["constants"])
    elif command == "gorenstein":
        w.writerow(["a", "sym_dim", "rank", "kernel_dim", "matches_ideal"])
        w.writerows([r["a"], r["sym_dim"], r["rank"], r["kernel_dim"], r["matches_ideal"]]
                    for r in result["degrees"])
    elif command == "chow-demo":
        w.writerow(["k", "N_dim", "FBB_dim", "component_dim"])
        for k in range(result["n"] + 1):
            w.writerow([k, result["N_dims"][k], result["FBB_dims"][k], result["component_dims"][k]])
    else:
        w.writerow(["check", "passed"])
        w.writerows([c["name"], c["passed"]] for c in result["checks"])
    return buf.getvalue()


def _text(command, result):
    lines = []
    if command == "coisotropic":
        lines.append(f"space {result['space']}  rho={result['rho']}  dim V_tr={result['tr_dim']}")
        lines.append(f"n={result['n']} i={result['i']} mode={result['mode']}: "
                     f"dimension {result['dimension']} (lower bound {result['lower_bound']}, "
                     f"{result['status']})")
        lines += ["  " + b for b in result["basis"]]
    elif command == "chow-demo":
        lines.append(f"points {' '.join(result['points'])}   n={result['n']}   "
                     f"model dim {result['model_dim']}")
        lines.append(f"{'k':>3} {'N_k':>6} {'F_BB^k':>7} {'comp_k':>7}")
        for k in range(result["n"] + 1):
            lines.append(f"{k:>3} {result['N_dims'][k]:>6} {result['FBB_dims'][k]:>7} "
                         f"{result['component_dims'][k]:>7}")
        for name, ok in result["checks"].items():
            lines.append(f"{name:<24} {'ok' if ok else 'FAIL'}")
    elif command == "gorenstein":
        lines.append(f"{'a':>3} {'dim S^a':>8} {'rank':>6} {'kernel':>7}  ideal")
        for r in result["degrees"]:
            lines.append(f"{r['a']:>3} {r['sym_dim']:>8} {r['rank']:>6} {r['kernel_dim']:>7}  "
                         f"{'ok' if r['matches_ideal'] else 'MISMATCH'}")
    elif command == "fujiki":
        for c in result["constants"]:
            lines.append(f"mu_{c['i']} = {c['mu_i']}")
    elif command == "harmonic":
        lines.append(f"dim Harm^{result['k']} = {result['dim']} (dim S^k = {result['sym_dim']})")
    else:
        for c in result["checks"]:
            lines.append(f"{c['name']:<24} {'PASS' if c['passed'] else 'FAIL'}")
        lines.append("all passed" if result["passed"] else "FAILURES")
    return "\n".join(lines) + "\n"


def render(command, result, fmt):
    if fmt == "json":
        return json.dumps(result, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv(command, result)
    return _text(command, result)


def load_schema(command):
    text = resources.files("hkcoiso").joinpath("schemas").joinpath(f"{command}.json").read_text()
    return json.loads(text)


def run(cfg):
    """Execute a validated RunConfig; returns (exit status, rendered text)."""
    cfg.validate()
    result, status = HANDLERS[cfg.command](cfg)
    return status, render(cfg.command, result, cfg.format)


def build_parser():
    p = argparse.ArgumentParser(prog="hkcoiso", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, lattice=True):
        if lattice:
            sp.add_argument("--preset", choices=PRESET_NAMES)
            sp.add_argument("--gram-file")
            sp.add_argument("--ns", help="1-based basis indices spanning NS, e.g. 5,6")
            sp.add_argument("--allow-large", action="store_true")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")
        sp.add_argument("--format", choices=FORMATS, default="json")

    sp = sub.add_parser("coisotropic", help="space of coisotropic classes")
    common(sp)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--mode", choices=("cl", "cle", "full"), default="cl")
    sp.add_argument("--route", choices=("harmonic", "fujiki"), default="harmonic")

    sp = sub.add_parser("harmonic", help="harmonic subspace Harm^k")
    common(sp)
    sp.add_argument("--k", type=int, default=2)

    for name, hlp in (("fujiki", "Fujiki constants mu_i"), ("gorenstein", "Gorenstein pairing kernels")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--mu", default="1")

    sp = sub.add_parser("chow-demo", help="filtrations on the free zero-cycle model")
    common(sp, lattice=False)
    sp.add_argument("--points", type=int, default=2)
    sp.add_argument("--n", type=int, default=2)

    sp = sub.add_parser("verify-all", help="run the full invariant suite")
    common(sp, lattice=False)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if v is not None}
    cfg = RunConfig(**fields)
    try:
        status, text = run(cfg)
    except ConfigError as exc:
        print(f"hkcoiso: {exc}", file=sys.stderr)
        return 2
    except (HKError, ValueError) as exc:
        print(f"hkcoiso: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
