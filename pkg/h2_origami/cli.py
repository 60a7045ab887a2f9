import argparse, csv, dataclasses, fractions, io, json, logging, pathlib, sys
from . import counting, origami, qseries, surfaces
from .arith import divisors, local_factor, moebius, s_closed, s_direct, sigma, sigma_scaled
from .lattice import lattices_of_index

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "md")
FILTERS = ("all", "primitive", "height_primitive")
QM_TASKS = ("fit-h4", "fit-h2", "e2sq", "corollary", "theorem13")
SERIES = ("a_total", "a_primitive")

def _cell(value):
  if isinstance(value, fractions.Fraction):
    return f"{value.numerator}/{value.denominator}"
  return value

def _json_value(value):
  if isinstance(value, fractions.Fraction):
    if value.denominator == 1: return value.numerator
    return f"{value.numerator}/{value.denominator}"
  return value

def render(records, columns, format):
  """
  records is a list of dicts; the output only depends on records and columns
  """
  if format == "json":
    return json.dumps([{c: _json_value(r[c]) for c in columns} for r in records], separators=(",", ":")) + "\n"
  if format == "csv":
    f = io.StringIO()
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
      writer.writerow([_cell(r[c]) for c in columns])
    return f.getvalue()
  if format == "md":
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    lines += ["| " + " | ".join(str(_cell(r[c])) for c in columns) + " |" for r in records]
    return "\n".join(lines) + "\n"
  raise ValueError(f"Unknown format {format!r}, choices are {FORMATS}")

COUNT_COLUMNS = ("n", "a_primitive", "b_primitive", "a_total", "b_total")

def cmd_count(n_lo, n_hi, format="csv"):
  records = [
    {"n": n, "a_primitive": counting.a_primitive(n), "b_primitive": counting.b_primitive(n), "a_total": counting.a_total(n), "b_total": counting.b_total(n)}
    for n in range(n_lo, n_hi+1, 2)
  ]
  if format == "json" and len(records) == 1:
    #a single row is a bare object
    return json.dumps({c: _json_value(records[0][c]) for c in COUNT_COLUMNS}, separators=(",", ":")) + "\n"
  return render(records, COUNT_COLUMNS, format)

def _filtered(n, filter):
  result = surfaces.enumerate_all(n)
  if filter == "primitive":
    result = [s for s in result if surfaces.is_primitive(s)]
  elif filter == "height_primitive":
    result = [s for s in result if surfaces.is_height_primitive(s)]
  elif filter != "all":
    raise ValueError(f"Unknown filter {filter!r}, choices are {FILTERS}")
  return result

def cmd_enumerate(n, filter="all", format="json"):
  result = _filtered(n, filter)
  if format == "json":
    return "[" + ",".join(surfaces.encode(s) for s in result) + "]\n"
  if format == "csv":
    return surfaces.to_csv(result)
  records = [dict(zip(surfaces.CSV_HEADER, row)) for row in csv.reader(io.StringIO(surfaces.to_csv(result)))][1:]
  return render(records, surfaces.CSV_HEADER, format)

def _expected_orbits(n):
  return sorted(
    [(size, kind) for size, kind in ((counting.a_primitive(n), "A"), (counting.b_primitive(n), "B")) if size],
    key=lambda x: x[1],
  )

def cmd_orbits(n, format="json", max_states=origami.DEFAULT_MAX_STATES, convention="standard"):
  """
  returns the report and the exit code: 1 if the search was cut off or the
  orbits don't have the sizes a_primitive(n), b_primitive(n)
  """
  try:
    report = origami.orbit_decomposition(n, max_states=max_states, convention=convention)
  except origami.OrbitSearchError as e:
    logger.error("%s", e)
    report = e.report
    exit_code = 1
  else:
    found = [(orbit.size, orbit.type) for orbit in report.orbits]
    exit_code = 0 if found == _expected_orbits(n) else 1
    if exit_code:
      logger.error("orbits %s, expected %s", found, _expected_orbits(n))

  if format == "json":
    dct = report.to_json_dict()
    if not report.complete:
      dct["complete"] = False
    return json.dumps(dct, separators=(",", ":")) + "\n", exit_code
  records = [{"size": orbit.size, "type": orbit.type, "representative": surfaces.encode(surfaces.identify(orbit.representative))} for orbit in report.orbits]
  return render(records, ("size", "type", "representative"), format), exit_code

_FITS = {
  #task: (k of the target H_k, level of the basis)
  "fit-h4": (4, 4),
  "fit-h2": (2, 2),
  "e2sq": (1, 1),
}

def _coefficient_check(series, expected, start=1):
  for n in range(start, series.order+1):
    if series[n] != expected(n):
      return n
  return None

def _theorem13_expected(n):
  return counting.a_total(n) if n % 2 else 0

def qm_report(task, order):
  """
  the checks behind the qm subcommand: (records, first failing index or None)
  """
  if task in _FITS:
    k, level = _FITS[task]
    basis = qseries.qm_basis(level, order)
    try:
      result = qseries.fit_in_basis(qseries.h_series(k, order), basis)
    except qseries.NotInSpanError as e:
      return [], e.first_failing_index
    return [{"name": name, "coefficient": x} for name, x in zip(result.names, result.x)], None

  if task == "corollary":
    failing = _coefficient_check(qseries.corollary_series(order), counting.a_total)
    return [{"name": "a_total", "coefficient": "verified" if failing is None else "failed"}], failing

  if task == "theorem13":
    failing = _coefficient_check(qseries.theorem13_series(order), _theorem13_expected)
    twisted = qseries.twist(qseries.corollary_series(order), qseries.principal_character(2))
    try:
      refit = qseries.fit_in_basis(twisted, qseries.qm_basis(4, order))
    except qseries.NotInSpanError as e:
      return [], e.first_failing_index
    if tuple(refit.x) != qseries.THEOREM13_COEFFICIENTS:
      logger.error("refit gives %s", refit.x)
      failing = 0 if failing is None else failing
    return [{"name": name, "coefficient": x} for name, x in zip(refit.names, refit.x)], failing

  raise ValueError(f"Unknown task {task!r}, choices are {QM_TASKS}")

def cmd_qm(task, order=qseries.DEFAULT_ORDER, format="csv"):
  records, failing = qm_report(task, order)
  if failing is not None:
    logger.error("%s fails at q^%d", task, failing)
    records = records + [{"name": "first_failing_index", "coefficient": failing}]
  return render(records, ("name", "coefficient"), format), 0 if failing is None else 1

def cmd_series(which, order=qseries.DEFAULT_ORDER, format="csv"):
  """
  coefficient file: n<TAB>p/q per line, or a JSON array of "p/q" strings
  """
  if which == "a_total":
    series = qseries.corollary_series(order)
  elif which == "a_primitive":
    series = qseries.QSeries([0] + [counting.a_primitive_extended(n) for n in range(1, order+1)])
  else:
    raise ValueError(f"Unknown series {which!r}, choices are {SERIES}")
  if format == "json":
    return qseries.to_json(series) + "\n"
  return qseries.to_tsv(series)

@dataclasses.dataclass
class VerifyOutcome:
  checks: list = dataclasses.field(default_factory=list)

  @property
  def exit_code(self):
    return 0 if all(status == "pass" for _, status, _ in self.checks) else 1

  def add(self, name, passed, detail=""):
    status = "pass" if passed else "fail"
    (logger.info if passed else logger.error)("%s: %s %s", name, status, detail)
    self.checks.append((name, status, detail))

  def run(self, name, function):
    """
    function returns (passed, detail); exceptions count as failures
    """
    try:
      passed, detail = function()
    except (ValueError, RuntimeError, AssertionError) as e:
      passed, detail = False, f"{type(e).__name__}: {e}"
    self.add(name, passed, detail)

  def to_json_dict(self):
    return {
      "checks": [{"name": name, "status": status, "detail": detail} for name, status, detail in self.checks],
      "exit_code": self.exit_code,
    }

@dataclasses.dataclass(frozen=True)
class Census:
  """
  counts of the n-square surfaces by enumeration and the involution
  """
  n: int
  total: int
  primitive: int
  height_primitive: int
  primitive_A: int
  primitive_B: int
  total_A: int
  height_primitive_A: int
  primitive_two_cyl: int

def census(n):
  total = primitive = height_primitive = primitive_A = primitive_B = total_A = height_primitive_A = primitive_two_cyl = 0
  for s in surfaces.enumerate_all(n):
    lam = surfaces.period_lattice(s)
    kind = surfaces.classify_type(s) if n % 2 else None
    total += 1
    total_A += kind == "A"
    if lam.h == 1:
      height_primitive += 1
      height_primitive_A += kind == "A"
    if lam.index == 1:
      primitive += 1
      primitive_A += kind == "A"
      primitive_B += kind == "B"
      primitive_two_cyl += isinstance(s, surfaces.TwoCylSurface)
  return Census(
    n=n, total=total, primitive=primitive, height_primitive=height_primitive,
    primitive_A=primitive_A, primitive_B=primitive_B, total_A=total_A,
    height_primitive_A=height_primitive_A, primitive_two_cyl=primitive_two_cyl,
  )

def _odd(lo, hi):
  return range(lo if lo % 2 else lo+1, hi+1, 2)

def _all_equal(pairs):
  for key, values in pairs:
    if len(set(values)) != 1:
      return False, f"{key}: {values}"
  return True, ""

def cmd_verify(max_n, max_states=origami.DEFAULT_MAX_STATES):
  outcome = VerifyOutcome()
  order = max(20, 2*max_n)
  censuses = {n: census(n) for n in range(3, max_n+1)}

  outcome.run("table_1", lambda: _all_equal(
    (n, (expected, (counting.a_primitive(n), counting.a_total(n))))
    for n, expected in counting.TABLE_1.items()
  ))
  outcome.run("three_routes", lambda: _all_equal(
    (n, (counting.a_primitive(n), counting.a_primitive_assembled(n), counting.a_primitive_from_height_primitive(n)))
    for n in _odd(3, max_n)
  ))
  outcome.run("component_assembly", lambda: _all_equal(
    (n, (counting.breakdown(n).total_primitive_A, counting.a_primitive(n))) for n in _odd(3, max_n)
  ))
  outcome.run("two_cyl_components", lambda: _all_equal(
    (n, (
      counting.component_count("two_cyl_total", n) - counting.component_count("two_cyl_odd_heights_A", n),
      counting.component_count("two_cyl_even_height", n),
    ))
    for n in _odd(3, max_n)
  ))
  outcome.run("a_total_by_convolution", lambda: _all_equal(
    (n, (counting.a_total_by_convolution(n), counting.a_total(n))) for n in range(1, 10*max_n + 1)
  ))
  outcome.run("two_cyl_total_from_sums", lambda: _all_equal(
    (n, (counting.two_cyl_total_from_sums(n), counting.component_count("two_cyl_total", n), censuses[n].primitive_two_cyl))
    for n in _odd(3, max_n)
  ))
  outcome.run("two_cyl_total_erratum", lambda: (
    all(censuses[n].primitive_two_cyl == counting.component_count("two_cyl_total", n) for n in (5, 7) if n <= max_n),
    "; ".join(
      f"n={n}: enumeration {censuses[n].primitive_two_cyl}, formula {counting.component_count('two_cyl_total', n)}, printed sign {counting.component_count('two_cyl_total', n, printed=True)}"
      for n in (5, 7) if n <= max_n
    ),
  ))
  outcome.run("closed_counts", lambda: _all_equal(
    (n, (censuses[n].total, sum(surfaces.closed_counts(n)))) for n in censuses
  ))
  outcome.run("brute_force_classification", lambda: _all_equal(
    (n, pair) for n in _odd(3, max_n) for pair in (
      (censuses[n].primitive_A, counting.a_primitive(n)),
      (censuses[n].primitive_B, counting.b_primitive(n)),
      (censuses[n].total_A, counting.a_total(n)),
      (censuses[n].height_primitive_A, counting.a_height_primitive(n)),
    )
  ))
  outcome.run("lattice_bijections", lambda: _all_equal(
    (n, pair) for n in censuses for pair in (
      (censuses[n].total, sum(sigma(1, d) * _primitive_count(censuses, n//d) for d in divisors(n))),
      (censuses[n].height_primitive, sum(d * _primitive_count(censuses, n//d) for d in divisors(n))),
      (censuses[n].total, sum(_height_primitive_count(censuses, n//d) for d in divisors(n))),
    )
  ))

  def orbits():
    for n in _odd(3, max_n):
      _, exit_code = cmd_orbits(n, max_states=max_states)
      if exit_code:
        return False, f"n={n}"
    return True, ""
  outcome.run("orbits", orbits)

  for task in QM_TASKS:
    outcome.run(f"qm_{task}", lambda task=task: _qm_check(task, order))
  outcome.run("window_6_rank_deficiency", lambda: _rank_deficient(order))
  outcome.run("s_closed", lambda: _all_equal(
    ((k, n), (s_closed(k, n), s_direct(k, n))) for k in (1, 2, 4) for n in range(1, 10*max_n + 1)
  ))
  outcome.run("h_series", lambda: _all_equal(
    ((k, n), (h[n], _h_coefficient(k, n)))
    for k, h in ((k, qseries.h_series(k, order)) for k in (1, 2, 4))
    for n in range(1, order+1)
  ))
  outcome.run("mu_sigma_convolution", lambda: _all_equal(
    ((k, n), _mu_sigma_convolution(k, n)) for k in (1, 2, 3) for n in range(1, 10*max_n + 1)
  ))
  outcome.run("local_factor_convolution", lambda: _all_equal(
    (n, _local_factor_convolution(n)) for n in range(1, 10*max_n + 1)
  ))
  outcome.run("reduce_inflate", lambda: _reduce_inflate(max_n))
  outcome.run("six_weierstrass_points", lambda: _six_weierstrass_points(max_n))
  outcome.run("canonical_form_relabeling", lambda: _relabeling_invariance(max_n))
  return outcome

def _h_coefficient(k, n):
  return -24 * (sigma(1, n) + sigma_scaled(1, n, k)) + 576 * s_direct(k, n)

def _mu_sigma_convolution(k, n):
  """
  sum_{r|n} r mu(r) (mu * sigma_k)(n/r) and its closed form n^k sum_{r|n} mu(r) / r^(k-1)
  """
  lhs = sum(
    r * moebius(r) * sum(moebius(d) * sigma(k, n // (r*d)) for d in divisors(n // r))
    for r in divisors(n)
  )
  return lhs, n**k * sum(fractions.Fraction(moebius(r), r**(k-1)) for r in divisors(n))

def _local_factor_convolution(n):
  lhs = sum(
    moebius(r) * sum(fractions.Fraction(moebius(d), d) * sigma(1, n // (r*d)) for d in divisors(n // r))
    for r in divisors(n)
  )
  return lhs, n * local_factor(n)

def _reduce_inflate(max_n):
  for m in range(3, max_n+1):
    for s in surfaces.enumerate_all(m):
      if not surfaces.is_primitive(s): continue
      for d in (1, 2, 3):
        for lam in lattices_of_index(d):
          inflated = surfaces.inflate(s, lam)
          if surfaces.reduce_primitive(inflated) != (s, lam):
            return False, f"{surfaces.encode(s)} {lam}"
  return True, ""

def _six_weierstrass_points(max_n):
  count = 0
  for n in range(3, max_n+1):
    for s in surfaces.enumerate_all(n):
      if len(surfaces.weierstrass(s).points) != 6:
        return False, surfaces.encode(s)
      count += 1
  return True, f"{count} surfaces"

def _relabeling_invariance(max_n):
  for n in range(3, max_n+1):
    for s in surfaces.enumerate_all(n):
      o = surfaces.to_origami(s)
      code = origami.canonical_form(o)
      for permutation in (list(reversed(range(n))), [(i + 1) % n for i in range(n)]):
        relabeled = o.relabel(permutation)
        if origami.canonical_form(relabeled) != code or surfaces.identify(relabeled) != s:
          return False, surfaces.encode(s)
  return True, ""

def _primitive_count(censuses, m):
  return censuses[m].primitive if m >= 3 else 0

def _height_primitive_count(censuses, m):
  return censuses[m].height_primitive if m >= 3 else 0

_EXPECTED_FITS = {
  "fit-h4": tuple(fractions.Fraction(_) for _ in ("1/20", "3/20", "4/5", "0", "9/2", "3")),
  "fit-h2": tuple(fractions.Fraction(_) for _ in ("1/5", "4/5", "3", "6")),
  "e2sq": (fractions.Fraction(1), fractions.Fraction(12)),
}

def _qm_check(task, order):
  records, failing = qm_report(task, order)
  if failing is not None:
    return False, f"first failing index {failing}"
  if task in _EXPECTED_FITS:
    x = tuple(r["coefficient"] for r in records)
    return x == _EXPECTED_FITS[task], " ".join(str(_) for _ in x)
  return True, f"to order {order}"

def _rank_deficient(order):
  basis = qseries.qm_basis(4, order)
  target = qseries.h_series(4, order)
  for start in range(0, min(21, order-6)):
    try:
      qseries.fit_in_basis(target, basis, window=6, start=start)
    except qseries.RankDeficiencyError:
      continue
    return False, f"window 6 at offset {start} has full rank"
  return True, ""

def _write(text, output):
  if output is None:
    sys.stdout.write(text)
  else:
    output.write_text(text)

def _add_common(parser, default_format):
  parser.add_argument("--format", choices=FORMATS, default=default_format, help="output format")
  parser.add_argument("--output", type=pathlib.Path, help="write to this file instead of stdout")
  parser.add_argument("--verbose", "-v", action="count", default=0, help="more logging, can be repeated")

def make_parser():
  parser = argparse.ArgumentParser(prog="h2origami", description="Count, enumerate and classify square-tiled surfaces in H(2).")
  subparsers = parser.add_subparsers(dest="command", required=True)

  p = subparsers.add_parser("count", help="closed form counts of type A and B surfaces")
  p.add_argument("n_lo", type=int, help="smallest odd number of squares")
  p.add_argument("n_hi", type=int, nargs="?", help="largest odd number of squares (default: n_lo)")
  _add_common(p, "csv")

  p = subparsers.add_parser("enumerate", help="list the surfaces with n squares")
  p.add_argument("n", type=int, help="number of squares")
  p.add_argument("--filter", choices=FILTERS, default="all")
  _add_common(p, "json")

  p = subparsers.add_parser("orbits", help="orbits of the primitive surfaces under SL(2, Z)")
  p.add_argument("n", type=int, help="odd number of squares")
  p.add_argument("--max-states", type=int, default=origami.DEFAULT_MAX_STATES, help="give up after visiting this many origamis")
  p.add_argument("--convention", choices=origami.CONVENTIONS, default="standard", help="how the shears act on the permutations")
  _add_common(p, "json")

  p = subparsers.add_parser("qm", help="quasimodular form identities")
  p.add_argument("task", choices=QM_TASKS)
  p.add_argument("--order", type=int, default=qseries.DEFAULT_ORDER, help="truncation order of the q-series")
  _add_common(p, "csv")

  p = subparsers.add_parser("series", help="write the coefficients of a generating function")
  p.add_argument("--which", choices=SERIES, default="a_total")
  p.add_argument("--order", type=int, default=qseries.DEFAULT_ORDER, help="truncation order of the q-series")
  _add_common(p, "csv")

  p = subparsers.add_parser("verify", help="run all the cross-checks")
  p.add_argument("--max-n", type=int, default=11, help="largest odd number of squares for the enumerations", dest="max_n")
  p.add_argument("--max-states", type=int, default=origami.DEFAULT_MAX_STATES, help="give up the orbit search after visiting this many origamis")
  _add_common(p, "json")

  return parser

def main(argv=None):
  parser = make_parser()
  args = parser.parse_args(argv)
  logging.basicConfig(level=max(logging.WARNING - 10*args.verbose, logging.DEBUG), format="%(levelname)s %(name)s: %(message)s")

  exit_code = 0
  if args.command == "count":
    n_hi = args.n_lo if args.n_hi is None else args.n_hi
    if args.n_lo < 1 or args.n_lo % 2 == 0 or n_hi % 2 == 0 or n_hi < args.n_lo:
      parser.error(f"count needs odd bounds 1 <= n_lo <= n_hi, got {args.n_lo}, {n_hi}")
    text = cmd_count(args.n_lo, n_hi, format=args.format)
  elif args.command == "enumerate":
    if args.n < 3:
      parser.error(f"H(2) surfaces have at least 3 squares, got {args.n}")
    text = cmd_enumerate(args.n, filter=args.filter, format=args.format)
  elif args.command == "orbits":
    if args.n < 3 or args.n % 2 == 0:
      parser.error(f"orbits needs odd n >= 3, got {args.n}")
    text, exit_code = cmd_orbits(args.n, format=args.format, max_states=args.max_states, convention=args.convention)
  elif args.command == "qm":
    if args.order < 7:
      parser.error(f"qm needs --order >= 7, got {args.order}")
    text, exit_code = cmd_qm(args.task, order=args.order, format=args.format)
  elif args.command == "series":
    if args.order < 1:
      parser.error(f"series needs --order >= 1, got {args.order}")
    text = cmd_series(args.which, order=args.order, format="json" if args.format == "json" else "tsv")
  elif args.command == "verify":
    if args.max_n < 5 or args.max_n % 2 == 0:
      parser.error(f"verify needs an odd --max-n >= 5, got {args.max_n}")
    outcome = cmd_verify(args.max_n, max_states=args.max_states)
    text = json.dumps(outcome.to_json_dict(), indent=2) + "\n"
    exit_code = outcome.exit_code
  else:
    assert False, args.command

  _write(text, args.output)
  return exit_code

if __name__ == "__main__":
  sys.exit(main())
