"""Command-line driver.

Exit codes: 0 success, 1 mathematical-assertion failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import center, gl2, hecke, kl, spherical, verify, weyl
from .config import WorkbenchConfig
from .errors import GrammarError, HeckeError, UnsupportedDatumError
from .ring import format_laurent
from .rootdata import build_datum

__all__ = ["run_command", "main", "entry"]


def _common(parser):
    parser.add_argument("--datum", default=None, metavar="LABEL",
                        help="root datum label (default A1-sc)")
    parser.add_argument("--cutoff", type=int, default=None, metavar="N",
                        help="length cutoff (default 6)")
    parser.add_argument("--format", dest="output_format", default=None,
                        choices=("text", "json"))
    parser.add_argument("--cache-dir", default=None, metavar="DIR",
                        help="KL table cache directory "
                             "(or set HECKEWB_CACHE_DIR)")
    parser.add_argument("--strict", action="store_true", default=None,
                        help="verify central elements and cached tables")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hecke",
        description="Exact computations in extended affine Hecke algebras.")
    _common(top)
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        p = sub.add_parser(name, **kw)
        _common(p)
        return p

    p = cmd("datum", help="inspect a root datum")
    p.add_argument("action", choices=("describe",))

    p = cmd("mul", help="multiply two algebra elements")
    p.add_argument("left")
    p.add_argument("right")

    p = cmd("inv", help="invert a basis element T[w]")
    p.add_argument("element")

    p = cmd("bar", help="apply the bar involution")
    p.add_argument("element")

    p = cmd("kl", help="Kazhdan-Lusztig polynomials and tables")
    klsub = p.add_subparsers(dest="kl_action", required=True)
    kp = klsub.add_parser("poly")
    _common(kp)
    kp.add_argument("y", help="group element, e.g. 'w[s0.s1]' or 's0.s1'")
    kp.add_argument("w")
    kt = klsub.add_parser("table")
    _common(kt)

    p = cmd("bs", help="Bott-Samelson product of (T_s + 1) factors")
    p.add_argument("--word", required=True, metavar="s0.s1.s0")
    p.add_argument("--decompose", action="store_true")

    p = cmd("center", help="Bernstein center operations")
    csub = p.add_subparsers(dest="center_action", required=True)
    cz = csub.add_parser("zlambda")
    _common(cz)
    cz.add_argument("--lambda", dest="lam", required=True, metavar="COORDS")
    cl = csub.add_parser("lift")
    _common(cl)
    cl.add_argument("--input", required=True,
                    help="spherical element: file path or inline text")
    cc = csub.add_parser("check")
    _common(cc)
    cc.add_argument("element", help="algebra element to test for centrality")

    p = cmd("pi", help="averaging map to the spherical algebra")
    p.add_argument("--input", required=True,
                   help="algebra element: file path or inline text")

    p = cmd("sph", help="spherical convolution")
    ssub = p.add_subparsers(dest="sph_action", required=True)
    sc = ssub.add_parser("conv")
    _common(sc)
    sc.add_argument("--l", dest="l", required=True, metavar="COORDS")
    sc.add_argument("--m", dest="m", required=True, metavar="COORDS")

    cmd("satake", help="Satake matrix of the averaging map on the center")

    p = cmd("verify", help="run a verification suite")
    p.add_argument("target",
                   choices=("centrality", "section", "mult", "sph-comm",
                            "satake", "gl2", "parity", "bs", "kl-oracle",
                            "q1", "all"))

    return top


def _coords(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise GrammarError(f"bad coweight {text!r}: {exc}") from exc


def _load_hecke(datum, source: str):
    path = Path(source)
    if path.exists() and path.is_file():
        obj = json.loads(path.read_text())
        return hecke.hecke_from_obj(datum, obj)
    return hecke.parse_hecke(datum, source)


def _load_spherical(datum, source: str):
    path = Path(source)
    if path.exists() and path.is_file():
        obj = json.loads(path.read_text())
        return spherical.spherical_from_obj(datum, obj)
    return spherical.parse_spherical(datum, source)


def _emit_hecke(cfg, h) -> str:
    if cfg.output_format == "json":
        return json.dumps(hecke.hecke_to_obj(h), sort_keys=True)
    return hecke.format_hecke(h)


def _emit_spherical(cfg, c) -> str:
    if cfg.output_format == "json":
        return json.dumps(spherical.spherical_to_obj(c), sort_keys=True)
    return spherical.format_spherical(c)


def _parse_word_arg(datum, text: str):
    text = text.strip()
    if text.startswith("w["):
        return weyl.parse_weyl(datum, text)
    if text == "e":
        return weyl.identity(datum)
    letters = []
    k = 0
    for tok in text.split("."):
        tok = tok.strip()
        if tok.startswith("omega^"):
            k = int(tok[6:])
        elif tok.startswith("s"):
            letters.append(int(tok[1:]))
        else:
            raise GrammarError(f"bad group element {text!r}")
    return weyl.from_word(datum, k, letters)


def _describe_datum(datum) -> str:
    lines = [f"datum {datum.label}",
             f"  lattice rank {datum.dim}, semisimple rank {datum.rank}"]
    lines.append("  cartan matrix: "
                 + "; ".join(" ".join(f"{x:2d}" for x in row)
                             for row in datum.cartan))
    lines.append(f"  positive roots ({len(datum.positive_roots)}), "
                 "as pairing vectors:")
    for root, coroot in zip(datum.positive_roots, datum.positive_coroots):
        lines.append(f"    root {list(root)}  coroot {list(coroot)}")
    lines.append(f"  highest root {list(datum.highest_root)} with coroot "
                 f"{list(datum.highest_coroot)}")
    if datum.is_gl:
        om = weyl.omega_power(datum, 1)
        lines.append("  fundamental group: infinite cyclic (winding = "
                     "coordinate sum), generator omega with translation "
                     f"{list(om.tr)} and finite word "
                     + (".".join(f"s{i}" for i in om.finite_word()) or "e"))
    else:
        lines.append("  fundamental group: trivial")
    lines.append(f"  fingerprint {datum.fingerprint}")
    return "\n".join(lines)


def run_command(argv) -> tuple[int, str]:
    """Execute one CLI invocation; returns (exit code, report text)."""
    args = build_parser().parse_args(argv)
    cfg = WorkbenchConfig(
        datum_label=args.datum or "A1-sc",
        cutoff=args.cutoff if args.cutoff is not None else 6,
        cache_dir=getattr(args, "cache_dir", None),
        output_format=args.output_format or "text",
        strict=bool(args.strict),
    )
    datum = build_datum(cfg.datum_label)

    if args.command == "datum":
        return 0, _describe_datum(datum)

    if args.command == "mul":
        a = _load_hecke(datum, args.left)
        b = _load_hecke(datum, args.right)
        return 0, _emit_hecke(cfg, a * b)

    if args.command == "inv":
        h = _load_hecke(datum, args.element)
        if len(h.terms) != 1 or next(iter(h.terms.values())) != 1:
            raise GrammarError(
                "inv expects a single basis element like 'T[s0]'")
        w = next(iter(h.terms))
        return 0, _emit_hecke(cfg, hecke.invert_basis(w))

    if args.command == "bar":
        h = _load_hecke(datum, args.element)
        return 0, _emit_hecke(cfg, hecke.bar_element(h))

    if args.command == "kl":
        if args.kl_action == "poly":
            y = _parse_word_arg(datum, args.y)
            w = _parse_word_arg(datum, args.w)
            kl.get_table(datum, w.length(), cache_dir=cfg.cache_dir,
                         verify_cache=cfg.strict)
            p = kl.kl_polynomial(y, w)
            return 0, format_laurent(p)
        table = kl.get_table(datum, cfg.cutoff, cache_dir=cfg.cache_dir,
                             verify_cache=cfg.strict)
        lines = [f"KL table for {datum.label}, cutoff {table.cutoff}"]
        for ykey, wkey, poly in table.records():
            lines.append(f"  P[{ykey}; {wkey}] = {format_laurent(poly)}")
        return 0, "\n".join(lines)

    if args.command == "bs":
        word = []
        for tok in args.word.split("."):
            tok = tok.strip()
            if not tok.startswith("s"):
                raise GrammarError(f"bad letter {tok!r} in --word")
            word.append(int(tok[1:]))
        prod = kl.bott_samelson(datum, word)
        if not args.decompose:
            return 0, _emit_hecke(cfg, prod)
        dec = kl.bs_decompose(datum, word)
        lines = [_emit_hecke(cfg, prod), "decomposition:"]
        for w in sorted(dec, key=weyl.AffineWeylElement.sort_key):
            lines.append(
                f"  C'[{weyl.format_weyl(w)}] * ({format_laurent(dec[w])})")
        return 0, "\n".join(lines)

    if args.command == "center":
        if args.center_action == "zlambda":
            z = center.central_element(datum, _coords(args.lam),
                                       verify=True)
            return 0, _emit_hecke(cfg, z.element)
        if args.center_action == "lift":
            c = _load_spherical(datum, args.input)
            lifted = center.central_lift(c, cutoff=cfg.cutoff)
            return 0, _emit_hecke(cfg, lifted.element)
        h = _load_hecke(datum, args.element)
        ok = center.is_central(h)
        return (0 if ok else 1), ("central" if ok else "not central")

    if args.command == "pi":
        h = _load_hecke(datum, args.input)
        return 0, _emit_spherical(cfg, spherical.pi_map(h))

    if args.command == "sph":
        c1 = spherical.m(datum, _coords(args.l))
        c2 = spherical.m(datum, _coords(args.m))
        return 0, _emit_spherical(
            cfg, spherical.sph_conv(c1, c2, cutoff=cfg.cutoff))

    if args.command == "satake":
        sm = spherical.satake_matrix(datum, cfg.cutoff)
        ok = sm.check_triangular()
        lines = [f"Satake matrix for {datum.label}, cutoff {cfg.cutoff}: "
                 + ("triangular with unit-monomial diagonal"
                    if ok else "TRIANGULARITY FAILURE")]
        for lam in sm.labels:
            row = []
            for mu in sm.labels:
                c = sm.entry(mu, lam)
                if not c.is_zero():
                    row.append(f"m[{','.join(map(str, mu))}]:"
                               f"{format_laurent(c)}")
            lines.append(f"  pi(z[{','.join(map(str, lam))}]) = "
                         + ("  ".join(row) if row else "0"))
        return (0 if ok else 1), "\n".join(lines)

    if args.command == "verify":
        return _run_verify(datum, cfg, args.target)

    raise GrammarError(f"unknown command {args.command!r}")


def _run_verify(datum, cfg, target: str) -> tuple[int, str]:
    results = []
    if target in ("gl2", "all"):
        report = gl2.verify_gl2()
        results.append(verify.VerifyResult(
            "gl2", report.passed,
            "all filtration assertions hold" if report.passed
            else "\n" + report.render()))
    suites = {
        "centrality": lambda: verify.verify_centrality(datum, cfg.cutoff),
        "section": lambda: verify.verify_section(datum, cfg.cutoff),
        "mult": lambda: verify.verify_multiplicativity(datum, cfg.cutoff),
        "sph-comm": lambda: verify.verify_sph_commutativity(
            datum, cfg.cutoff),
        "satake": lambda: verify.verify_satake(datum, cfg.cutoff),
        "parity": lambda: verify.verify_parity(datum, cfg.cutoff),
        "bs": lambda: verify.verify_bott_samelson(
            datum, min(cfg.cutoff + 2, 8) if datum.rank < 2 else cfg.cutoff),
        "kl-oracle": lambda: verify.verify_kl_oracle(
            datum, min(cfg.cutoff + 2, 8) if datum.rank < 2 else
            min(cfg.cutoff, 5)),
        "q1": lambda: verify.verify_q1(datum, cfg.cutoff),
    }
    if target == "all":
        for fn in suites.values():
            results.append(fn())
    elif target != "gl2":
        results.append(suites[target]())
    code = 0 if all(r.ok for r in results) else 1
    return code, "\n".join(r.line() for r in results)


def main(argv=None) -> int:
    try:
        code, report = run_command(
            sys.argv[1:] if argv is None else list(argv))
    except (GrammarError, UnsupportedDatumError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except HeckeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if report:
        print(report)
    return code


def entry():  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
