import fractions, json, math, numbers, numpy as np, scipy.optimize, sympy
from . import arith

DEFAULT_ORDER = 200

class OrderMismatchError(ValueError):
  pass

class RankDeficiencyError(ValueError):
  def __init__(self, rank, size, window, start):
    self.rank = rank
    self.size = size
    self.window = window
    self.start = start
    super().__init__(f"coefficients {start}..{start+window-1} only determine a rank {rank} system for {size} basis elements")

class NotInSpanError(ValueError):
  def __init__(self, first_failing_index):
    self.first_failing_index = first_failing_index
    super().__init__(f"target is not in the span of the basis: first disagreement at q^{first_failing_index}")

class QSeries:
  """
  Truncated power series sum c[n] q^n, n = 0..order, with exact rational
  coefficients.  Arithmetic between series of different orders is an error.
  """
  def __init__(self, coefficients):
    self.__coefficients = tuple(fractions.Fraction(c) for c in coefficients)
    if not self.__coefficients:
      raise ValueError("A QSeries needs at least the constant coefficient")

  @classmethod
  def constant(cls, value, order):
    return cls([value] + [0] * order)

  @classmethod
  def zero(cls, order):
    return cls.constant(0, order)

  @property
  def order(self): return len(self.__coefficients) - 1
  @property
  def coefficients(self): return self.__coefficients

  def __getitem__(self, n):
    return self.__coefficients[n]
  def __len__(self):
    return len(self.__coefficients)
  def __iter__(self):
    return iter(self.__coefficients)
  def __eq__(self, other):
    if not isinstance(other, QSeries): return NotImplemented
    return self.__coefficients == other.__coefficients
  def __hash__(self):
    return hash(self.__coefficients)
  def __repr__(self):
    head = ", ".join(str(c) for c in self.__coefficients[:6])
    return f"QSeries(order={self.order}, [{head}{', ...' if self.order >= 6 else ''}])"

  def __add__(self, other):
    if isinstance(other, numbers.Rational):
      other = QSeries.constant(other, self.order)
    if not isinstance(other, QSeries): return NotImplemented
    return series_linear([(1, self), (1, other)])
  def __radd__(self, other):
    return self + other
  def __neg__(self):
    return series_linear([(-1, self)])
  def __sub__(self, other):
    return self + -other
  def __rsub__(self, other):
    return -self + other
  def __mul__(self, other):
    if isinstance(other, numbers.Rational):
      return series_linear([(other, self)])
    if not isinstance(other, QSeries): return NotImplemented
    return series_mul(self, other)
  def __rmul__(self, other):
    return self * other

  def first_difference(self, other):
    """
    index of the first coefficient where the two series differ, or None
    """
    _check_orders([self, other])
    for n, (a, b) in enumerate(zip(self, other)):
      if a != b: return n
    return None

def _check_orders(series):
  orders = {f.order for f in series}
  if len(orders) > 1:
    raise OrderMismatchError(f"Series have different truncation orders: {sorted(orders)}")
  return orders.pop()

def _common_denominator(f):
  denominator = math.lcm(*(c.denominator for c in f))
  numerators = np.array([c.numerator * (denominator // c.denominator) for c in f], dtype=object)
  return numerators, denominator

def series_linear(terms):
  terms = list(terms)
  if not terms:
    raise ValueError("series_linear needs at least one term")
  order = _check_orders([f for _, f in terms])
  result = [fractions.Fraction(0)] * (order+1)
  for coefficient, f in terms:
    coefficient = fractions.Fraction(coefficient)
    if not coefficient: continue
    for n, c in enumerate(f):
      if c: result[n] += coefficient * c
  return QSeries(result)

def series_mul(f, g):
  """
  Cauchy product, truncated to the common order.  The product is done on
  integer numerators over a common denominator.
  """
  order = _check_orders([f, g])
  fnum, fden = _common_denominator(f)
  gnum, gden = _common_denominator(g)
  result = np.zeros(order+1, dtype=object)
  for i in range(order+1):
    if fnum[i]:
      result[i:] += fnum[i] * gnum[:order+1-i]
  denominator = fden * gden
  return QSeries(fractions.Fraction(int(c), denominator) for c in result)

def d_operator(f):
  """
  D = q d/dq
  """
  return QSeries(n*c for n, c in enumerate(f))

def dilate(f, k):
  """
  f(z) -> f(kz), i.e. q -> q^k, at the same truncation order
  """
  if k < 1:
    raise ValueError(f"dilation factor has to be positive, got {k}")
  result = [fractions.Fraction(0)] * (f.order+1)
  for n in range(0, f.order+1, k):
    result[n] = f[n//k]
  return QSeries(result)

def _eisenstein(ell, factor, order):
  sigmas = arith.sigma_array(ell, max(order, 1))
  return QSeries([1] + [factor * int(sigmas[n]) for n in range(1, order+1)])

def eisenstein_e2(order):
  return _eisenstein(1, -24, order)

def eisenstein_e4(order):
  return _eisenstein(3, 240, order)

def phi_form(which, order):
  e2 = eisenstein_e2(order)
  if which == 2:
    return series_linear([(2, dilate(e2, 2)), (-1, e2)])
  if which == 4:
    return series_linear([(fractions.Fraction(4, 3), dilate(e2, 4)), (fractions.Fraction(-1, 3), e2)])
  raise ValueError(f"phi_form is defined for which in (2, 4), got {which}")

def h_series(k, order):
  """
  H_k(z) = E_2(z) E_2(kz)
  """
  if k < 1:
    raise ValueError(f"h_series needs k >= 1, got {k}")
  e2 = eisenstein_e2(order)
  return series_mul(e2, dilate(e2, k))

class DirichletCharacter:
  """
  real valued Dirichlet character, given by its values on residues mod m
  """
  def __init__(self, values):
    self.__values = tuple(int(v) for v in values)
    m = self.modulus
    if m < 1:
      raise ValueError("A Dirichlet character needs a positive modulus")
    for r, v in enumerate(self.__values):
      if v not in (-1, 0, 1):
        raise ValueError(f"character value {v} at {r} is not in {{-1, 0, 1}}")
      if (v == 0) != (math.gcd(r, m) > 1):
        raise ValueError(f"character value at {r} must vanish exactly when gcd({r}, {m}) > 1")
    if self.__values[1 % m] != 1:
      raise ValueError("character has to be 1 at 1")
    for a in range(m):
      for b in range(m):
        if self.__values[a*b % m] != self.__values[a] * self.__values[b]:
          raise ValueError(f"character is not multiplicative at {a}*{b} mod {m}")

  @property
  def modulus(self): return len(self.__values)
  @property
  def values(self): return self.__values

  def __call__(self, n):
    m = self.modulus
    if m == 1: return 1
    return self.__values[n % m]

  def __repr__(self):
    return f"DirichletCharacter({list(self.__values)})"

def principal_character(m):
  return DirichletCharacter(1 if math.gcd(r, m) == 1 else 0 for r in range(m))

def twist(f, chi):
  return QSeries(chi(n) * c for n, c in enumerate(f))

class QMBasis:
  """
  named basis of a space of quasimodular forms, all elements at one order
  """
  def __init__(self, level, weight, elements, dimension=None):
    self.__level = level
    self.__weight = weight
    self.__elements = tuple(elements)
    if weight <= 0 or weight % 2:
      raise ValueError(f"weight has to be even and positive, got {weight}")
    if not self.__elements:
      raise ValueError("A basis needs at least one element")
    _check_orders([f for _, f in self.__elements])
    if dimension is not None and dimension != len(self.__elements):
      raise ValueError(f"Expected {dimension} basis elements, got {len(self.__elements)}")

  @property
  def level(self): return self.__level
  @property
  def weight(self): return self.__weight
  @property
  def names(self): return tuple(name for name, _ in self.__elements)
  @property
  def series(self): return tuple(f for _, f in self.__elements)
  @property
  def order(self): return self.__elements[0][1].order

  def __len__(self):
    return len(self.__elements)

  def combination(self, coefficients):
    return series_linear(zip(coefficients, self.series))

#weight 4, depth 2: dimensions of M_4 + D M_2 + C D E_2 on Gamma_0(N)
_QM_DIMENSIONS = {1: 2, 2: 4, 4: 6}

def qm_basis(level, order):
  """
  the bases of weight 4 and depth 2 quasimodular forms on Gamma_0(level)
  used for H_1 = E_2^2, H_2 and H_4
  """
  if level not in _QM_DIMENSIONS:
    raise ValueError(f"Only levels {sorted(_QM_DIMENSIONS)} are in the basis catalog, got {level}")
  e4 = eisenstein_e4(order)
  de2 = d_operator(eisenstein_e2(order))
  if level == 1:
    elements = [("E4", e4), ("DE2", de2)]
  elif level == 2:
    elements = [("E4", e4), ("E4(2z)", dilate(e4, 2)), ("DPhi2", d_operator(phi_form(2, order))), ("DE2", de2)]
  else:
    elements = [
      ("E4", e4),
      ("E4(2z)", dilate(e4, 2)),
      ("E4(4z)", dilate(e4, 4)),
      ("DPhi2", d_operator(phi_form(2, order))),
      ("DPhi4", d_operator(phi_form(4, order))),
      ("DE2", de2),
    ]
  return QMBasis(level=level, weight=4, elements=elements, dimension=_QM_DIMENSIONS[level])

def _rational(c):
  return sympy.Rational(c.numerator, c.denominator)

def fit_in_basis(target, basis, window=None, start=0):
  """
  Find the exact coefficients x with sum x_i basis_i = target by solving on
  coefficients start..start+window-1, then check the identity on the whole
  truncation order.
  """
  size = len(basis)
  if window is None:
    window = size + 1
  if window < size:
    raise ValueError(f"window={window} is smaller than the basis size {size}")
  if target.order != basis.order:
    raise OrderMismatchError(f"target has order {target.order}, basis has order {basis.order}")
  if start < 0 or start + window - 1 > target.order:
    raise ValueError(f"window {start}..{start+window-1} is outside the truncation order {target.order}")

  rows = range(start, start+window)
  A = sympy.Matrix([[_rational(f[i]) for f in basis.series] for i in rows])
  b = sympy.Matrix([_rational(target[i]) for i in rows])
  rank = A.rank()
  if rank < size:
    raise RankDeficiencyError(rank=rank, size=size, window=window, start=start)

  try:
    solution, params = A.gauss_jordan_solve(b)
  except ValueError as e:
    #inconsistent on the window: find the first row that breaks it
    for stop in range(1, window+1):
      sub = A[:stop, :]
      if sub.row_join(b[:stop, :]).rank() > sub.rank():
        raise NotInSpanError(start + stop - 1) from e
    raise
  assert not params, params

  x = [fractions.Fraction(int(v.p), int(v.q)) for v in solution]
  failing = basis.combination(x).first_difference(target)
  if failing is not None:
    raise NotInSpanError(failing)

  return scipy.optimize.OptimizeResult(
    x=x,
    names=basis.names,
    level=basis.level,
    window=window,
    start=start,
    verified_order=target.order,
    success=True,
  )

def corollary_series(order):
  """
  (E_4 + 10 D E_2) / 1280, whose n-th coefficient counts type A surfaces
  """
  return series_linear([
    (fractions.Fraction(1, 1280), eisenstein_e4(order)),
    (fractions.Fraction(10, 1280), d_operator(eisenstein_e2(order))),
  ])

THEOREM13_COEFFICIENTS = tuple(fractions.Fraction(c, 1280) for c in (1, -9, 8, -15, 15, 0))

def theorem13_series(order):
  """
  the weight 4, depth 1 form on Gamma_0(4) whose coefficients are the odd
  part of corollary_series
  """
  return qm_basis(4, order).combination(THEOREM13_COEFFICIENTS)

def _format(c):
  return f"{c.numerator}/{c.denominator}"

def to_tsv(f):
  return "".join(f"{n}\t{_format(c)}\n" for n, c in enumerate(f))

def to_json(f):
  return json.dumps([_format(c) for c in f])
