"""
Closed form counts of type A and type B square-tiled surfaces in H(2),
together with the pieces they are assembled from: the component counts by
number of cylinders and parity of heights, and the direct sums over cylinder
data that the Moebius assembly runs on.
"""

import dataclasses, fractions, functools, math
from .arith import divisors, euler_phi, local_factor, moebius, s_direct, sigma

def _as_integer(value, what):
  value = fractions.Fraction(value)
  if value.denominator != 1:
    raise AssertionError(f"{what} = {value} is not an integer")
  return value.numerator

def _check_odd(n, what):
  if n < 1 or n % 2 == 0:
    raise ValueError(f"{what} is only defined for odd positive n, got {n}")

def a_primitive_extended(n):
  #also evaluated at even n, where it has no geometric meaning
  return fractions.Fraction(3, 16) * (n-1) * n**2 * local_factor(n)

def a_primitive(n):
  """
  number of primitive type A surfaces with n squares, i.e. the size of the
  orbit A_n
  """
  _check_odd(n, "a_primitive")
  return _as_integer(a_primitive_extended(n), f"a_primitive({n})")

def b_primitive(n):
  """
  number of primitive type B surfaces with n squares, i.e. the size of the
  orbit B_n (empty for n = 1 and n = 3)
  """
  _check_odd(n, "b_primitive")
  if n == 1: return 0
  return _as_integer(fractions.Fraction(3, 16) * (n-3) * n**2 * local_factor(n), f"b_primitive({n})")

def _integer_if_odd(value, n, what):
  if n % 2: return _as_integer(value, what)
  return fractions.Fraction(value)

def a_total(n):
  """
  number of type A surfaces with n squares, primitive or not.
  For even n this is the formal extension, which is not an integer in general,
  so it is returned as a Fraction.
  """
  if n < 1:
    raise ValueError(f"a_total needs n >= 1, got {n}")
  return _integer_if_odd(fractions.Fraction(3, 16) * (sigma(3, n) - n*sigma(1, n)), n, f"a_total({n})")

def a_total_by_convolution(n):
  if n < 1:
    raise ValueError(f"a_total_by_convolution needs n >= 1, got {n}")
  result = sum(sigma(1, n//d) * a_primitive_extended(d) for d in divisors(n))
  return _integer_if_odd(result, n, f"a_total_by_convolution({n})")

def b_total(n):
  _check_odd(n, "b_total")
  return sum(sigma(1, n//d) * b_primitive(d) for d in divisors(n))

COMPONENT_KINDS = (
  "two_cyl_total",
  "two_cyl_odd_heights_A",
  "two_cyl_mixed_A",
  "one_cyl_A",
  "two_cyl_even_height",
)

def component_count(kind, n, printed=False):
  """
  Closed forms for the pieces of the count of primitive surfaces:

    two_cyl_total          all primitive two-cylinder surfaces
    two_cyl_odd_heights_A  type A, two cylinders, both heights odd
    two_cyl_mixed_A        type A, two cylinders, one even height and one even width
    one_cyl_A              type A, one cylinder
    two_cyl_even_height    two cylinders, one even height, either type

  The (n/2) phi(n) term of two_cyl_total enters with a plus sign, which is
  what direct enumeration gives (17 at n=5, 55 at n=7).  printed=True uses
  the minus sign instead, which gives -3 at n=5.
  """
  if kind not in COMPONENT_KINDS:
    raise ValueError(f"Unknown kind {kind!r}, choices are {COMPONENT_KINDS}")
  if printed and kind != "two_cyl_total":
    raise ValueError("printed=True only changes two_cyl_total")
  _check_odd(n, "component_count")
  if n == 1:
    raise ValueError("component_count needs n >= 3")
  P = local_factor(n)
  n2 = n**2
  if kind == "two_cyl_total":
    sign = -1 if printed else 1
    value = fractions.Fraction(n2 * (5*n-18), 24) * P + sign * fractions.Fraction(n, 2) * euler_phi(n)
  elif kind == "two_cyl_odd_heights_A":
    value = fractions.Fraction(n2 * (n-1), 8) * P
  elif kind == "two_cyl_mixed_A":
    value = fractions.Fraction(n2 * (n-3), 48) * P
  elif kind == "one_cyl_A":
    value = fractions.Fraction(n**3, 24) * P
  elif kind == "two_cyl_even_height":
    value = fractions.Fraction(n2 * (2*n-15), 24) * P + fractions.Fraction(n, 2) * euler_phi(n)
  else:
    assert False, kind
  return _as_integer(value, f"component_count({kind!r}, {n})")

@dataclasses.dataclass(frozen=True)
class CountBreakdown:
  n: int
  one_cyl_A: int
  two_cyl_odd_heights_A: int
  two_cyl_mixed_A: int
  total_primitive_A: int

  def __post_init__(self):
    components = (self.one_cyl_A, self.two_cyl_odd_heights_A, self.two_cyl_mixed_A)
    if any(c < 0 for c in components):
      raise ValueError(f"negative component in {self}")
    if sum(components) != self.total_primitive_A:
      raise ValueError(f"components {components} don't add up to {self.total_primitive_A}")

def breakdown(n):
  _check_odd(n, "breakdown")
  if n == 1:
    return CountBreakdown(n=1, one_cyl_A=0, two_cyl_odd_heights_A=0, two_cyl_mixed_A=0, total_primitive_A=0)
  return CountBreakdown(
    n=n,
    one_cyl_A=component_count("one_cyl_A", n),
    two_cyl_odd_heights_A=component_count("two_cyl_odd_heights_A", n),
    two_cyl_mixed_A=component_count("two_cyl_mixed_A", n),
    total_primitive_A=a_primitive(n),
  )

@functools.lru_cache(maxsize=None)
def _two_cylinder_data(m):
  """
  all (h1, u1, h2, u2) with coprime heights, u1 < u2 and h1 u1 + h2 u2 = m
  """
  result = []
  for h1 in range(1, m+1):
    for u1 in range(1, (m-1)//h1 + 1):
      rest = m - h1*u1
      for h2 in divisors(rest):
        u2 = rest // h2
        if u2 > u1 and math.gcd(h1, h2) == 1:
          result.append((h1, u1, h2, u2))
  return tuple(result)

def _quotient(n, r):
  _check_odd(n, "the alpha sums")
  if r < 1 or n % r:
    raise ValueError(f"r={r} has to be a positive divisor of n={n}")
  return n // r

def alpha_1(n, r):
  """
  sum of u1 u2 over two-cylinder data of area n/r with coprime odd heights
  """
  return sum(
    u1*u2 for h1, u1, h2, u2 in _two_cylinder_data(_quotient(n, r))
    if h1 % 2 and h2 % 2
  )

def alpha_2(n, r):
  """
  half the sum of u1 u2 over two-cylinder data of area n/r with coprime
  heights, one of them even, and at least one even width
  """
  total = sum(
    u1*u2 for h1, u1, h2, u2 in _two_cylinder_data(_quotient(n, r))
    if (h1 % 2 == 0 or h2 % 2 == 0) and (u1 % 2 == 0 or u2 % 2 == 0)
  )
  return fractions.Fraction(total, 2)

def _odd_triples(m):
  #(u1, u2, u3) odd positive with u1 + u2 + u3 = m
  if m < 3 or m % 2 == 0: return 0
  k = (m-3) // 2
  return (k+1) * (k+2) // 2

def alpha_3(n, r):
  return fractions.Fraction(n, 3) * _odd_triples(_quotient(n, r))

def a_primitive_assembled(n):
  _check_odd(n, "a_primitive_assembled")
  result = sum(
    moebius(r) * (r*alpha_1(n, r) + r*alpha_2(n, r) + alpha_3(n, r))
    for r in divisors(n)
  )
  return _as_integer(result, f"a_primitive_assembled({n})")

def a_height_primitive(n):
  """
  number of height-primitive type A surfaces with n squares:
  n/3 per odd triple of saddle connection lengths for one cylinder,
  u1 u2 per set of coprime heights if both are odd, and u1 u2 / 2 if the
  heights and the widths both have mixed parity
  """
  _check_odd(n, "a_height_primitive")
  return _as_integer(alpha_1(n, 1) + alpha_2(n, 1) + alpha_3(n, 1), f"a_height_primitive({n})")

def a_primitive_from_height_primitive(n, printed=False):
  """
  Moebius inversion of the height-primitive counts.  A primitive surface of
  area n/d inflates to d height-primitive surfaces of area n, one for each
  lattice of index d and height 1, so a^ph(n) = sum_{d|n} d a^p(n/d) and
      a^p(n) = sum_{d|n} mu(d) d a^ph(n/d)
  printed=True drops the weight d.  Both agree at primes; they differ at
  n = 9 (108 vs 114).
  """
  _check_odd(n, "a_primitive_from_height_primitive")
  return sum(
    moebius(d) * (1 if printed else d) * a_height_primitive(n//d)
    for d in divisors(n)
  )

#intermediate sums of the count of primitive two-cylinder surfaces,
#all evaluated at odd n and summed over r | n with weight r mu(r)

def _equal_width_sum(m):
  #sum of u^2 over (i1, i2, u) with (i1 + i2) u = m
  return sum(u**2 * (m//u - 1) for u in divisors(m))

def _gamma_11(n, r):
  m = n // r
  return fractions.Fraction(sum(moebius(d) * s_direct(1, m//d) for d in divisors(m)), 2)

def _gamma_12(n, r):
  m = n // r
  return fractions.Fraction(sum(moebius(d) * _equal_width_sum(m//d) for d in divisors(m)), 2)

def _alpha_tilde_11(n, r):
  m = n // r
  return sum(moebius(d) * s_direct(2, m//d) for d in divisors(m))

def _alpha_tilde_12(n, r):
  return _gamma_12(n, r)

def _weighted(n, term):
  return sum(r * moebius(r) * term(n, r) for r in divisors(n))

def two_cyl_total_from_sums(n):
  """
  number of primitive two-cylinder surfaces from the divisor sums:
  half the S_1 sums minus the equal width contributions
  """
  _check_odd(n, "two_cyl_total_from_sums")
  return _as_integer(_weighted(n, _gamma_11) - _weighted(n, _gamma_12), f"two_cyl_total_from_sums({n})")

def two_cyl_even_height_from_sums(n):
  _check_odd(n, "two_cyl_even_height_from_sums")
  return _as_integer(_weighted(n, _alpha_tilde_11) - _weighted(n, _alpha_tilde_12), f"two_cyl_even_height_from_sums({n})")

#n: (a_primitive, a_total)
TABLE_1 = {
  5: (18, 18),
  7: (54, 54),
  9: (108, 120),
  11: (225, 225),
  13: (378, 378),
  15: (504, 594),
  17: (864, 864),
  19: (1215, 1215),
  21: (1440, 1680),
  23: (2178, 2178),
  25: (2700, 2808),
  27: (3159, 3630),
}
