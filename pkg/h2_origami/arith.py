import fractions, functools, numpy as np, sympy

class BoundMismatchError(ValueError):
  pass

@functools.lru_cache(maxsize=None)
def factorization(n):
  return {int(p): int(e) for p, e in sympy.factorint(n).items()}

@functools.lru_cache(maxsize=None)
def divisors(n):
  return tuple(int(d) for d in sympy.divisors(n))

def sigma(ell, n):
  """
  sum of d**ell over the positive divisors d of n, and 0 when n is not a
  positive integer, so that sigma(ell, n/k) can be written as in the formulas
  """
  if isinstance(n, fractions.Fraction):
    if n.denominator != 1: return 0
    n = n.numerator
  if n <= 0: return 0
  return _sigma(ell, n)

@functools.lru_cache(maxsize=None)
def _sigma(ell, n):
  result = 1
  for p, e in factorization(n).items():
    result *= sum(p**(ell*i) for i in range(e+1))
  return result

def sigma_scaled(ell, n, d):
  if d < 1:
    raise ValueError(f"d={d} has to be positive")
  if n % d: return 0
  return sigma(ell, n // d)

def moebius(n):
  if n < 1:
    raise ValueError(f"moebius is defined for positive integers, got {n}")
  exponents = factorization(n).values()
  if any(e > 1 for e in exponents): return 0
  return (-1) ** len(exponents)

def euler_phi(n):
  if n < 1:
    raise ValueError(f"euler_phi is defined for positive integers, got {n}")
  return int(sympy.totient(n))

def local_factor(n, k=2):
  """
  sum over r | n of mu(r) / r**k, which is the product over primes p | n
  of (1 - p**-k)
  """
  if n < 1:
    raise ValueError(f"local_factor is defined for positive integers, got {n}")
  result = fractions.Fraction(1)
  for p in factorization(n):
    result *= 1 - fractions.Fraction(1, p**k)
  return result

@functools.lru_cache(maxsize=None)
def sigma_array(ell, bound):
  """
  numpy array of sigma(ell, n) for 0 <= n <= bound, built by a sieve.
  int64 when the values are guaranteed to fit, object (python ints) otherwise.
  """
  dtype = np.int64 if (bound+1) ** (ell+1) < 2**62 else object
  result = np.zeros(bound+1, dtype=dtype)
  for d in range(1, bound+1):
    result[d::d] += d**ell
  return result

def _table_bound(n):
  bound = 64
  while bound <= n:
    bound *= 2
  return bound

class ArithTable:
  """
  exact values of an arithmetic function on 1..bound
  """
  def __init__(self, values):
    self.__values = tuple(fractions.Fraction(v) for v in values)
    if not self.__values:
      raise ValueError("ArithTable needs at least one value")

  @classmethod
  def from_function(cls, function, bound):
    return cls(function(n) for n in range(1, bound+1))

  @property
  def bound(self): return len(self.__values)

  def __getitem__(self, n):
    if not 1 <= n <= self.bound:
      raise IndexError(f"{n} is outside 1..{self.bound}")
    return self.__values[n-1]

  def __iter__(self):
    return iter(self.__values)

  def __eq__(self, other):
    if not isinstance(other, ArithTable): return NotImplemented
    return self.__values == other.__values

  def __hash__(self):
    return hash(self.__values)

  def __repr__(self):
    return f"{type(self).__name__}(bound={self.bound})"

def dirichlet_convolve(f, g):
  if f.bound != g.bound:
    raise BoundMismatchError(f"Can't convolve tables with bounds {f.bound} and {g.bound}")
  bound = f.bound
  values = [fractions.Fraction(0)] * (bound+1)
  for d in range(1, bound+1):
    fd = f[d]
    if not fd: continue
    for m in range(1, bound//d + 1):
      values[d*m] += fd * g[m]
  return ArithTable(values[1:])

def s_direct(k, n):
  """
  sum of sigma_1(a) sigma_1(b) over positive a, b with k a + b = n
  """
  if k < 1 or n < 1:
    raise ValueError(f"s_direct needs k >= 1 and n >= 1, got k={k}, n={n}")
  top = (n-1) // k
  if top < 1: return 0
  table = sigma_array(1, _table_bound(n))
  if table.dtype != object and n > 10**5:
    table = table.astype(object)
  a = np.arange(1, top+1)
  return int(np.dot(table[a], table[n - k*a]))

_S_CLOSED = {
  #k: [(coefficient, ell, times n, divide by)]
  1: [
    (fractions.Fraction(5, 12), 3, False, 1),
    (fractions.Fraction(-1, 2), 1, True, 1),
    (fractions.Fraction(1, 12), 1, False, 1),
  ],
  2: [
    (fractions.Fraction(1, 12), 3, False, 1),
    (fractions.Fraction(1, 3), 3, False, 2),
    (fractions.Fraction(-1, 8), 1, True, 1),
    (fractions.Fraction(-1, 4), 1, True, 2),
    (fractions.Fraction(1, 24), 1, False, 1),
    (fractions.Fraction(1, 24), 1, False, 2),
  ],
  4: [
    (fractions.Fraction(1, 48), 3, False, 1),
    (fractions.Fraction(1, 16), 3, False, 2),
    (fractions.Fraction(1, 3), 3, False, 4),
    (fractions.Fraction(-1, 16), 1, True, 1),
    (fractions.Fraction(-1, 4), 1, True, 4),
    (fractions.Fraction(1, 24), 1, False, 1),
    (fractions.Fraction(1, 24), 1, False, 4),
  ],
}

def s_closed(k, n):
  """
  the linearization of s_direct(k, n) as a combination of sigma_3 and sigma_1,
  available for k in {1, 2, 4}
  """
  try:
    terms = _S_CLOSED[k]
  except KeyError as e:
    raise ValueError(f"s_closed is only available for k in {sorted(_S_CLOSED)}, got {k}") from e
  if n < 1:
    raise ValueError(f"s_closed needs n >= 1, got {n}")
  result = fractions.Fraction(0)
  for coefficient, ell, times_n, d in terms:
    term = coefficient * sigma_scaled(ell, n, d)
    if times_n: term *= n
    result += term
  if result.denominator != 1:
    raise AssertionError(f"s_closed({k}, {n}) = {result} is not an integer")
  return result
