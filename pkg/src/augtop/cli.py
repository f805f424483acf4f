"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import json
from pathlib import Path
import random
import sys

import click

from . import calculus
from .complex import Complex, Simplex, costar, from_json, is_pure, is_strongly_connected, cone_points
from .complex import join as join_complexes
from .complex import link as link_complex
from .complex import parse_text, product_ordered, simplex, to_json
from .corpus import corpus
from .generators import (
    random_complex, random_join_pair, random_manifold, random_pure_complex, random_subcomplex,
)
from .homology import CoefficientRing, GradedModule, homology, homology_pair, parse_ring
from .kunneth import ez_join_map, kunneth_join_verify, kunneth_product_verify, link_formula_verify
from .manifolds import NotAManifoldError, boundary_detail, classify, verify_boundary_formula
from .ring_props import (
    hilbert_function, is_buchsbaum, is_cohen_macaulay, is_gorenstein, is_two_cm, non_simplices,
)

SCHEMA = 1


class InputError(click.ClickException):
    exit_code = 2


def load_complex(spec: str) -> Complex:
    """Read ``corpus:<name>``, a JSON file, or the plain facet-per-line format."""
    if spec.startswith("corpus:"):
        try:
            return corpus(spec[len("corpus:"):])
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"no such file: {spec}")
    text = path.read_text()
    try:
        if text.lstrip().startswith("{"):
            return from_json(json.loads(text))
        return parse_text(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"{spec}: {exc}") from exc


def parse_face(text: str | None) -> Simplex:
    if text is None or not text.strip():
        return ()
    try:
        return simplex(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"bad face {text!r}") from exc


def _ring(text: str) -> CoefficientRing:
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def emit(payload: dict, out: str) -> None:
    payload = {"schema": SCHEMA, **payload}
    if out == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(_as_text(payload))


def _as_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_as_text(x, indent) if isinstance(x, (dict, list)) else f"{pad}- {json.dumps(x)}"
                         for x in obj)
    return f"{pad}{json.dumps(obj)}"


def _module(m: GradedModule) -> list[dict]:
    return m.to_json()


ring_option = click.option("--ring", "ring_text", default="Z", show_default=True,
                           help="Coefficients: Z, Q, Zp:<p> (or Z<p>).")
out_option = click.option("--out", type=click.Choice(["json", "text"]), default="json", show_default=True)


@click.group()
def main() -> None:
    """Augmented simplicial complexes: homology, boundaries, ring properties."""


@main.command()
@click.argument("complex_spec")
@out_option
def info(complex_spec: str, out: str) -> None:
    """Basic combinatorial data."""
    c = load_complex(complex_spec)
    dim = None if c.is_void else int(c.dim)
    payload = {"command": "info", "complex": to_json(c), "dim": "-inf" if dim is None else dim,
               "f_vector": list(c.f_vector()), "vertices": list(c.vertices)}
    if not c.is_void:
        payload.update(pure=is_pure(c), strongly_connected=is_strongly_connected(c),
                       cone_points=list(cone_points(c)))
    emit(payload, out)


@main.command("homology")
@click.argument("complex_spec")
@click.option("--relative", "relative_spec", default=None, help="Subcomplex for relative homology.")
@ring_option
@out_option
def homology_cmd(complex_spec: str, relative_spec: str | None, ring_text: str, out: str) -> None:
    """Augmented (or relative) homology."""
    c = load_complex(complex_spec)
    ring = _ring(ring_text)
    if relative_spec:
        sub = load_complex(relative_spec)
        try:
            h = homology_pair(c, sub, ring)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    else:
        h = homology(c, ring)
    emit({"command": "homology", "ring": str(ring), "homology": _module(h)}, out)


@main.command("boundary")
@click.argument("complex_spec")
@ring_option
@out_option
def boundary_cmd(complex_spec: str, ring_text: str, out: str) -> None:
    """Faces with vanishing top local homology."""
    c = load_complex(complex_spec)
    if c.is_void:
        raise InputError("boundary of the void complex is undefined")
    ring = _ring(ring_text)
    res = boundary_detail(c, ring)
    emit({"command": "boundary", "ring": str(ring), "boundary": to_json(res.complex),
          "closed_downward": res.closed}, out)


@main.command("classify")
@click.argument("complex_spec")
@ring_option
@out_option
def classify_cmd(complex_spec: str, ring_text: str, out: str) -> None:
    """Manifold classification report."""
    c = load_complex(complex_spec)
    ring = _ring(ring_text)
    try:
        r = classify(c, ring)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    emit({"command": "classify", "ring": str(ring), "pseudomanifold": r.is_pseudo,
          "quasi_manifold": r.is_quasi, "homology_manifold": r.is_homology_manifold,
          "homology_sphere": r.is_homology_sphere, "boundary": to_json(r.boundary),
          "boundary_closed": r.boundary_closed,
          "orientable": "undefined" if r.orientable is None else r.orientable,
          "components": [to_json(x) for x in r.components]}, out)


@main.command("ring")
@click.argument("complex_spec")
@ring_option
@click.option("--truncate", "n", default=10, show_default=True, type=click.IntRange(min=0))
@click.option("--universe", default=None, help="Comma separated vertex ids.")
@out_option
def ring_cmd(complex_spec: str, ring_text: str, n: int, universe: str | None, out: str) -> None:
    """Face ideal generators, Hilbert function and ring properties."""
    c = load_complex(complex_spec)
    ring = _ring(ring_text)
    uni = parse_face(universe) if universe else None
    try:
        gens = non_simplices(c, uni)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    hf = hilbert_function(c, n)
    payload = {"command": "ring", "ring": str(ring), "generators": [list(g) for g in gens],
               "hilbert": list(hf.coefficients), "krull_dim": hf.krull_dim}
    if not c.is_void:
        payload.update(cohen_macaulay=is_cohen_macaulay(c, ring), buchsbaum=is_buchsbaum(c, ring),
                       gorenstein=is_gorenstein(c, ring), two_cm=is_two_cm(c, ring))
    emit(payload, out)


@main.command("join")
@click.argument("a_spec")
@click.argument("b_spec")
@out_option
def join_cmd(a_spec: str, b_spec: str, out: str) -> None:
    c = join_complexes(load_complex(a_spec), load_complex(b_spec))
    emit({"command": "join", "complex": to_json(c)}, out)


@main.command("product")
@click.argument("a_spec")
@click.argument("b_spec")
@out_option
def product_cmd(a_spec: str, b_spec: str, out: str) -> None:
    c = product_ordered(load_complex(a_spec), load_complex(b_spec))
    emit({"command": "product", "complex": to_json(c)}, out)


@main.command("link")
@click.argument("complex_spec")
@click.option("--face", default="", help="Comma separated vertex ids (empty for the empty face).")
@out_option
def link_cmd(complex_spec: str, face: str, out: str) -> None:
    c = link_complex(load_complex(complex_spec), parse_face(face))
    emit({"command": "link", "complex": to_json(c)}, out)


@main.command("cost")
@click.argument("complex_spec")
@click.option("--face", default="", help="Comma separated vertex ids (empty for the empty face).")
@out_option
def cost_cmd(complex_spec: str, face: str, out: str) -> None:
    c = costar(load_complex(complex_spec), parse_face(face))
    emit({"command": "cost", "complex": to_json(c)}, out)


# verification batches

def _instances(specs: tuple[str, ...], count: int | None, seed: int | None, arity: int, make):
    if count is not None:
        if seed is None:
            raise InputError("--random needs --seed")
        rng = random.Random(seed)
        return [make(rng) for _ in range(count)]
    if len(specs) != arity:
        raise InputError(f"expected {arity} inputs or --random N --seed S")
    return [tuple(load_complex(s) for s in specs)]


def _finish(check: str, ring: CoefficientRing | None, results: list[dict], out: str) -> None:
    failures = [r for r in results if not r["passed"]]
    emit({"command": "verify", "check": check, "ring": None if ring is None else str(ring),
          "instances": len(results), "passed": len(results) - len(failures), "failures": failures}, out)
    sys.exit(1 if failures else 0)


def _verify_options(f):
    f = click.option("--random", "count", type=click.IntRange(min=1), default=None)(f)
    f = click.option("--seed", type=int, default=None)(f)
    f = ring_option(f)
    f = out_option(f)
    return click.argument("specs", nargs=-1)(f)


@main.group()
def verify() -> None:
    """Self-checks of the library identities."""


@verify.command("ez-join")
@_verify_options
def verify_ez(specs, count, seed, ring_text, out) -> None:
    insts = _instances(specs, count, seed, 2, lambda rng: random_join_pair(rng, 10))
    results = []
    for i, (a, b) in enumerate(insts):
        if a.is_void or b.is_void:
            raise InputError("join factors must be non-void")
        f = ez_join_map(a, b)
        ok_c, ok_i = f.commutes(), f.is_isomorphism()
        results.append({"index": i, "passed": ok_c and ok_i, "commutes": ok_c, "invertible": ok_i,
                        "a": to_json(a), "b": to_json(b)})
    _finish("ez-join", None, results, out)


@verify.command("kunneth-join")
@click.option("--sub-a", default=None, help="Subcomplex paired with the first input.")
@click.option("--sub-b", default=None, help="Subcomplex paired with the second input.")
@_verify_options
def verify_kjoin(specs, count, seed, ring_text, out, sub_a, sub_b) -> None:
    ring = _ring(ring_text)

    def make(rng):
        a = random_complex(rng, max_vertices=5)
        b = random_complex(rng, max_vertices=5)
        return a, b, random_subcomplex(rng, a), random_subcomplex(rng, b)

    insts = _instances(specs, count, seed, 2, make)
    if count is None:
        a, b = insts[0]
        sa = load_complex(sub_a) if sub_a else Complex.void()
        sb = load_complex(sub_b) if sub_b else Complex.void()
        insts = [(a, b, sa, sb)]
    results = []
    for i, (a, b, sa, sb) in enumerate(insts):
        try:
            rep = kunneth_join_verify((a, sa), (b, sb), ring)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        results.append({"index": i, "passed": rep.holds, **rep.to_json()})
    _finish("kunneth-join", ring, results, out)


@verify.command("kunneth-product")
@click.option("--sub-a", default=None)
@click.option("--sub-b", default=None)
@_verify_options
def verify_kprod(specs, count, seed, ring_text, out, sub_a, sub_b) -> None:
    ring = _ring(ring_text)

    def make(rng):
        a = random_complex(rng, max_vertices=4, max_facets=3, max_size=2)
        b = random_complex(rng, max_vertices=4, max_facets=3, max_size=2)
        return a, b, random_subcomplex(rng, a), random_subcomplex(rng, b)

    insts = _instances(specs, count, seed, 2, make)
    if count is None:
        a, b = insts[0]
        insts = [(a, b, load_complex(sub_a) if sub_a else Complex.void(),
                  load_complex(sub_b) if sub_b else Complex.void())]
    results = []
    for i, (a, b, sa, sb) in enumerate(insts):
        try:
            rep = kunneth_product_verify((a, sa), (b, sb), ring)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        results.append({"index": i, "passed": rep.holds, **rep.to_json()})
    _finish("kunneth-product", ring, results, out)


@verify.command("link-formula")
@click.option("--face-a", default="")
@click.option("--face-b", default="")
@_verify_options
def verify_link(specs, count, seed, ring_text, out, face_a, face_b) -> None:
    ring = _ring(ring_text)

    def make(rng):
        a = random_complex(rng, max_vertices=5, max_size=3, allow_trivial=False)
        b = random_complex(rng, max_vertices=5, max_size=3, allow_trivial=False)
        return a, b, rng.choice(sorted(a.faces)), rng.choice(sorted(b.faces))

    insts = _instances(specs, count, seed, 2, make)
    if count is None:
        a, b = insts[0]
        insts = [(a, b, parse_face(face_a), parse_face(face_b))]
    results = []
    for i, (a, b, s1, s2) in enumerate(insts):
        try:
            rep = link_formula_verify(a, b, s1, s2, ring)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        results.append({"index": i, "passed": rep.holds, "faces": [list(s1), list(s2)], **rep.to_json()})
    _finish("link-formula", ring, results, out)


@verify.command("boundary-formula")
@click.option("--construction", type=click.Choice(["join", "product"]), default="join", show_default=True)
@_verify_options
def verify_bd(specs, count, seed, ring_text, out, construction) -> None:
    ring = _ring(ring_text)
    insts = _instances(specs, count, seed, 2, lambda rng: (random_manifold(rng), random_manifold(rng)))
    results = []
    for i, (a, b) in enumerate(insts):
        try:
            rep = verify_boundary_formula(a, b, ring, construction)
        except (ValueError, NotAManifoldError) as exc:
            raise InputError(str(exc)) from exc
        if not rep.hypotheses_ok:
            raise InputError(f"instance {i}: {rep.message}")
        results.append({"index": i, "passed": rep.holds,
                        "witness": None if rep.witness is None else list(rep.witness),
                        "boundary": to_json(rep.lhs), "predicted": to_json(rep.rhs)})
    _finish("boundary-formula", ring, results, out)


@verify.command("calculus-identities")
@_verify_options
def verify_calc(specs, count, seed, ring_text, out) -> None:
    def make(rng):
        return random_complex(rng), random_complex(rng)

    if count is None and len(specs) == 1:
        c = load_complex(specs[0])
        insts = [(c, c)]
    else:
        insts = _instances(specs, count, seed, 2, make)
    results = []
    for i, (a, b) in enumerate(insts):
        bad = calculus.check_all(a, b)
        results.append({"index": i, "passed": not bad, "witness": bad[:5]})
    _finish("calculus-identities", None, results, out)


if __name__ == "__main__":
    main()
